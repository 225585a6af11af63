// Command-line front end: every library operation, plus a built-in
// demonstration suite over the classical worked examples.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stieltjes/certify.hpp"
#include "stieltjes/json_io.hpp"
#include "stieltjes/measure.hpp"
#include "stieltjes/transforms.hpp"

using namespace stieltjes;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::vector<Rat> parse_rat_csv(const std::string& text) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_rat(item));
  return out;
}

std::vector<Rat> parse_rat_lines(const std::string& text) {
  std::vector<Rat> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    out.push_back(parse_rat(line.substr(b, e - b + 1)));
  }
  return out;
}

// Shared input plumbing for subcommands consuming a moment sequence.
struct MomentInput {
  std::string json_path;
  std::string csv_path;

  void attach(CLI::App* cmd) {
    auto* j = cmd->add_option("--moments", json_path, "moment sequence JSON file (or - for stdin)");
    auto* c = cmd->add_option("--csv", csv_path, "moment sequence as one rational per line");
    j->excludes(c);
  }

  MomentSequence read() const {
    if (!csv_path.empty()) return MomentSequence{parse_rat_lines(slurp(csv_path))};
    if (!json_path.empty()) return moment_sequence_from_json(load_json(json_path));
    throw std::invalid_argument("no input: pass --moments or --csv");
  }
};

// S-fraction input: either a JSON file or c + comma-separated alphas.
struct SFracInput {
  std::string json_path;
  std::string alphas_csv;
  std::string c_text = "1";
  bool terminated = false;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--sfrac", json_path, "S-fraction JSON file");
    auto* a = cmd->add_option("--alphas", alphas_csv, "comma-separated coefficients");
    cmd->add_option("--c", c_text, "fraction constant (default 1)");
    cmd->add_flag("--terminated", terminated, "mark the fraction as ending after the list");
    f->excludes(a);
  }

  SCoefficients read() const {
    if (!json_path.empty()) return s_coefficients_from_json(load_json(json_path));
    SCoefficients s;
    s.c = parse_rat(c_text);
    if (!alphas_csv.empty()) s.alphas = parse_rat_csv(alphas_csv);
    s.terminated = terminated;
    return s;
  }
};

void emit(const Json& j) { std::cout << dump_json(j); }

void emit_moments(const MomentSequence& a, const std::string& format) {
  if (format == "csv") {
    for (const Rat& m : a.moments) std::cout << rat_to_string(m) << "\n";
  } else {
    emit(to_json(a));
  }
}

int exit_code_for(const CertVerdict& v) { return v.status == CertStatus::Refuted ? 1 : 0; }

// ---- demonstration suite -------------------------------------------------

std::vector<Rat> catalan_numbers(int count) {
  std::vector<Rat> c{Rat(1)};
  for (int n = 1; n < count; ++n) {
    Rat sum(0);
    for (int i = 0; i < n; ++i) sum += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - 1 - i)];
    c.push_back(sum);
  }
  return c;
}

struct Demo {
  const char* label;
  bool (*run)();
};

bool demo_catalan_sfraction() {
  SCoefficients s = s_extract(MomentSequence{catalan_numbers(9)});
  if (s.c != 1 || s.alphas.size() != 8 || s.terminated) return false;
  for (const Rat& a : s.alphas)
    if (a != 1) return false;
  return true;
}

bool demo_catalan_wall() {
  CertVerdict v = certify_wall(MomentSequence{catalan_numbers(40)}, Rat(4));
  if (v.status != CertStatus::CertifiedPrefix) return false;
  for (int n = 1; n < static_cast<int>(v.witness.g.size()); ++n)
    if (v.witness.g[static_cast<size_t>(n)] != Rat(n, 2 * (n + 1))) return false;
  return certify_wall(MomentSequence{catalan_numbers(40)}, parse_rat("7/2")).status ==
         CertStatus::Refuted;
}

bool demo_catalan_refutation() {
  MomentSequence cat{catalan_numbers(40)};
  for (const char* xi : {"1/10", "1/4", "1/2", "1"}) {
    CertVerdict v = certify_xi_stieltjes(cat, parse_rat(xi));
    if (v.status != CertStatus::Refuted || v.refutation_index < 1) return false;
  }
  return true;
}

bool demo_two_atom_example() {
  std::vector<Rat> a;
  Rat p2(1);
  for (int n = 0; n < 5; ++n) {
    a.push_back((1 + p2) / 2);
    p2 *= 2;
  }
  SCoefficients s = s_extract(MomentSequence{a});
  std::vector<Rat> want{parse_rat("3/2"), parse_rat("1/6"), parse_rat("4/3")};
  if (s.alphas != want || !s.terminated) return false;
  CertVerdict v = certify_xi_stieltjes(MomentSequence{a}, Rat(1));
  std::vector<Rat> witness{Rat(0), parse_rat("1/2"), parse_rat("1/3"), Rat(0)};
  if (v.status != CertStatus::CertifiedPrefix || v.witness.g != witness) return false;
  GZeroInterval iv = g0_max(MomentSequence{a}, Rat(1), parse_rat("1/1000000"));
  return iv.upper_bound_lo == 0 && iv.upper_bound_hi <= parse_rat("1/1000000");
}

bool demo_constructed_g() {
  SCoefficients s = alpha_from_g(GSequence{{Rat(1), Rat(1), Rat(1), Rat(1)}}, Rat(1));
  std::vector<Rat> want{Rat(3), parse_rat("1/2"), Rat(3)};
  if (s.alphas != want) return false;
  MomentSequence a{s_expand(s, 3).coeffs()};
  GZeroInterval iv = g0_max(a, Rat(1), parse_rat("1/1000000"));
  return iv.upper_bound_lo >= 1;
}

int run_demos() {
  const Demo demos[] = {
      {"Catalan S-fraction has all coefficients equal to 1", demo_catalan_sfraction},
      {"Catalan prefix certifies on [0,4] with g_n = n/(2(n+1)), refutes at 7/2",
       demo_catalan_wall},
      {"Catalan prefix refutes for thresholds 1/10, 1/4, 1/2, 1", demo_catalan_refutation},
      {"(1^n+2^n)/2: alphas (3/2,1/6,4/3), witness (0,1/2,1/3,0), g0 max = 0",
       demo_two_atom_example},
      {"g = (1,1,1,1) construction: alphas (3,1/2,3), g0 max >= 1", demo_constructed_g},
  };
  int passed = 0;
  for (const Demo& d : demos) {
    bool ok = false;
    try {
      ok = d.run();
    } catch (const std::exception& e) {
      std::cout << "[fail] " << d.label << " (" << e.what() << ")\n";
      continue;
    }
    std::cout << (ok ? "[ ok ] " : "[fail] ") << d.label << "\n";
    if (ok) ++passed;
  }
  int total = static_cast<int>(std::size(demos));
  std::cout << passed << "/" << total << " demonstrations passed\n";
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continued-fraction toolkit for moment sequences"};
  app.require_subcommand(1);

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "series of an S-fraction");
  SFracInput expand_in;
  expand_in.attach(expand_cmd);
  int expand_order = 0;
  expand_cmd->add_option("--order", expand_order, "truncation order")->required();

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "S-fraction of a moment prefix");
  MomentInput extract_in;
  extract_in.attach(extract_cmd);

  // contract
  auto* contract_cmd = app.add_subcommand("contract", "J-fraction of an S-fraction");
  SFracInput contract_in;
  contract_in.attach(contract_cmd);

  // binomial
  auto* binomial_cmd = app.add_subcommand("binomial", "shift a moment sequence");
  MomentInput binomial_in;
  binomial_in.attach(binomial_cmd);
  std::string binomial_xi;
  std::string binomial_format = "json";
  binomial_cmd->add_option("--xi", binomial_xi, "shift amount (rational)")->required();
  binomial_cmd->add_option("--format", binomial_format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // jshift
  auto* jshift_cmd = app.add_subcommand("jshift", "shift J-fraction diagonal coefficients");
  std::string jshift_path;
  std::string jshift_xi;
  jshift_cmd->add_option("--jfrac", jshift_path, "J-fraction JSON file")->required();
  jshift_cmd->add_option("--xi", jshift_xi, "shift amount (rational)")->required();

  // certify / wall
  auto* certify_cmd = app.add_subcommand("certify", "decide support in [xi, oo)");
  MomentInput certify_in;
  certify_in.attach(certify_cmd);
  std::string certify_xi;
  bool certify_wall_flag = false;
  certify_cmd->add_option("--xi", certify_xi, "support threshold (rational)")->required();
  certify_cmd->add_flag("--wall", certify_wall_flag, "decide support in [0, xi] instead");

  auto* wall_cmd = app.add_subcommand("wall", "decide support in [0, xi]");
  MomentInput wall_in;
  wall_in.attach(wall_cmd);
  std::string wall_xi;
  wall_cmd->add_option("--xi", wall_xi, "support bound (rational)")->required();

  // dualcheck
  auto* dual_cmd = app.add_subcommand("dualcheck", "compare both certification routes");
  MomentInput dual_in;
  dual_in.attach(dual_cmd);
  std::string dual_xi;
  dual_cmd->add_option("--xi", dual_xi, "support threshold (rational, positive)")->required();

  // g0max
  auto* g0max_cmd = app.add_subcommand("g0max", "bracket the largest feasible base entry");
  MomentInput g0max_in;
  g0max_in.attach(g0max_cmd);
  std::string g0max_xi;
  std::string g0max_tol = "1/1000000";
  g0max_cmd->add_option("--xi", g0max_xi, "support threshold (rational, positive)")->required();
  g0max_cmd->add_option("--tol", g0max_tol, "bracket width tolerance");

  // oracle family
  auto* oracle_cmd = app.add_subcommand("oracle", "ground-truth generators and checks");
  oracle_cmd->require_subcommand(1);
  auto* gen_cmd = oracle_cmd->add_subcommand("gen", "deterministic random measure");
  std::uint64_t gen_seed = 0;
  int gen_count = 0;
  std::string gen_min = "0";
  std::string gen_max = "1";
  int gen_denom = 50;
  gen_cmd->add_option("--seed", gen_seed, "generator seed")->required();
  gen_cmd->add_option("--count", gen_count, "number of atoms")->required();
  gen_cmd->add_option("--min", gen_min, "smallest atom position (rational)");
  gen_cmd->add_option("--max", gen_max, "largest atom position (rational)");
  gen_cmd->add_option("--denom-bound", gen_denom, "denominator bound for drawn rationals");

  auto* hankel_cmd = oracle_cmd->add_subcommand("hankel", "Hankel minors of a moment prefix");
  MomentInput hankel_in;
  hankel_in.attach(hankel_cmd);

  auto* omoments_cmd = oracle_cmd->add_subcommand("moments", "power moments of a measure");
  std::string omoments_path;
  int omoments_nmax = 0;
  omoments_cmd->add_option("--measure", omoments_path, "measure JSON file")->required();
  omoments_cmd->add_option("--nmax", omoments_nmax, "highest moment order")->required();

  auto* otranslate_cmd = oracle_cmd->add_subcommand("translate", "translate a measure");
  std::string otranslate_path;
  std::string otranslate_xi;
  otranslate_cmd->add_option("--measure", otranslate_path, "measure JSON file")->required();
  otranslate_cmd->add_option("--xi", otranslate_xi, "translation amount (rational)")->required();

  // demos
  app.add_subcommand("paper-demos", "run the built-in demonstration suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(expand_cmd)) {
      emit(to_json(s_expand(expand_in.read(), expand_order)));
    } else if (app.got_subcommand(extract_cmd)) {
      emit(to_json(s_extract(extract_in.read())));
    } else if (app.got_subcommand(contract_cmd)) {
      emit(to_json(contract(contract_in.read())));
    } else if (app.got_subcommand(binomial_cmd)) {
      emit_moments(binomial_transform(binomial_in.read(), parse_rat(binomial_xi)),
                   binomial_format);
    } else if (app.got_subcommand(jshift_cmd)) {
      emit(to_json(j_shift(j_coefficients_from_json(load_json(jshift_path)),
                           parse_rat(jshift_xi))));
    } else if (app.got_subcommand(certify_cmd)) {
      CertVerdict v = certify_wall_flag
                          ? certify_wall(certify_in.read(), parse_rat(certify_xi))
                          : certify_xi_stieltjes(certify_in.read(), parse_rat(certify_xi));
      emit(to_json(v));
      return exit_code_for(v);
    } else if (app.got_subcommand(wall_cmd)) {
      CertVerdict v = certify_wall(wall_in.read(), parse_rat(wall_xi));
      emit(to_json(v));
      return exit_code_for(v);
    } else if (app.got_subcommand(dual_cmd)) {
      DualRouteResult r = dual_route_check(dual_in.read(), parse_rat(dual_xi));
      Json j = Json::object();
      j["route_transform"] = to_json(r.via_transform);
      j["route_direct"] = to_json(r.via_direct);
      j["agree"] = true;  // dual_route_check throws on disagreement
      emit(j);
    } else if (app.got_subcommand(g0max_cmd)) {
      emit(to_json(g0_max(g0max_in.read(), parse_rat(g0max_xi), parse_rat(g0max_tol))));
    } else if (app.got_subcommand(oracle_cmd)) {
      if (oracle_cmd->got_subcommand(gen_cmd)) {
        emit(to_json(random_measure(gen_seed, gen_count, parse_rat(gen_min), parse_rat(gen_max),
                                    gen_denom)));
      } else if (oracle_cmd->got_subcommand(hankel_cmd)) {
        emit(to_json(hankel_report(hankel_in.read())));
      } else if (oracle_cmd->got_subcommand(omoments_cmd)) {
        emit(to_json(moments(measure_from_json(load_json(omoments_path)), omoments_nmax)));
      } else {
        emit(to_json(translate(measure_from_json(load_json(otranslate_path)),
                               parse_rat(otranslate_xi))));
      }
    } else {
      return run_demos();
    }
  } catch (const RouteMismatch& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
