#include "stieltjes/json_io.hpp"

#include <stdexcept>

namespace stieltjes {

namespace {

Json rat_json(const Rat& r) { return Json(rat_to_string(r)); }

Json rat_array(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const Rat& r : v) arr.push_back(rat_json(r));
  return arr;
}

Rat rat_field(const Json& j, const char* what) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  throw std::invalid_argument(std::string(what) + ": expected a rational string");
}

std::vector<Rat> rat_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rat_field(item, what));
  return out;
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json to_json(const MomentSequence& a) {
  Json j = Json::object();
  j["moments"] = rat_array(a.moments);
  return j;
}

Json to_json(const SCoefficients& s) {
  Json j = Json::object();
  j["c"] = rat_json(s.c);
  j["alphas"] = rat_array(s.alphas);
  j["terminated"] = s.terminated;
  return j;
}

Json to_json(const JCoefficients& jc) {
  Json j = Json::object();
  j["gammas"] = rat_array(jc.gammas);
  j["betas"] = rat_array(jc.betas);
  return j;
}

Json to_json(const TruncatedSeries& f) { return rat_array(f.coeffs()); }

Json to_json(const GSequence& g) { return rat_array(g.g); }

namespace {

const char* status_name(CertStatus s) {
  switch (s) {
    case CertStatus::CertifiedPrefix: return "CertifiedPrefix";
    case CertStatus::Refuted: return "Refuted";
    case CertStatus::Degenerate: return "Degenerate";
  }
  throw std::logic_error("unknown certification status");
}

CertStatus status_from_name(const std::string& name) {
  if (name == "CertifiedPrefix") return CertStatus::CertifiedPrefix;
  if (name == "Refuted") return CertStatus::Refuted;
  if (name == "Degenerate") return CertStatus::Degenerate;
  throw std::invalid_argument("unknown certification status \"" + name + "\"");
}

}  // namespace

Json to_json(const CertVerdict& v) {
  Json j = Json::object();
  j["status"] = status_name(v.status);
  j["witness_g"] = rat_array(v.witness.g);
  j["refutation_index"] = v.refutation_index;
  j["detail"] = v.detail;
  return j;
}

Json to_json(const GZeroInterval& iv) {
  Json j = Json::object();
  j["lower"] = rat_json(iv.lower);
  j["upper_bound_lo"] = rat_json(iv.upper_bound_lo);
  j["upper_bound_hi"] = rat_json(iv.upper_bound_hi);
  j["tolerance"] = rat_json(iv.tolerance);
  return j;
}

Json to_json(const DiscreteMeasure& mu) {
  Json j = Json::object();
  j["atoms"] = rat_array(mu.atoms);
  j["weights"] = rat_array(mu.weights);
  return j;
}

Json to_json(const HankelReport& h) {
  Json j = Json::object();
  j["dets_H"] = rat_array(h.dets_h);
  j["dets_Hshift"] = rat_array(h.dets_h_shift);
  j["psd"] = Json::array({h.psd_h, h.psd_h_shift});
  return j;
}

MomentSequence moment_sequence_from_json(const Json& j) {
  return MomentSequence{rat_vector(field(j, "moments"), "moments")};
}

SCoefficients s_coefficients_from_json(const Json& j) {
  SCoefficients s;
  s.c = rat_field(field(j, "c"), "c");
  s.alphas = rat_vector(field(j, "alphas"), "alphas");
  const Json& t = field(j, "terminated");
  if (!t.is_boolean()) throw std::invalid_argument("terminated: expected a boolean");
  s.terminated = t.get<bool>();
  return s;
}

JCoefficients j_coefficients_from_json(const Json& j) {
  JCoefficients jc;
  jc.gammas = rat_vector(field(j, "gammas"), "gammas");
  jc.betas = rat_vector(field(j, "betas"), "betas");
  if (!jc.gammas.empty() && jc.betas.size() + 1 != jc.gammas.size() && !jc.betas.empty())
    throw std::invalid_argument("betas must be one shorter than gammas (or empty)");
  return jc;
}

TruncatedSeries series_from_json(const Json& j) {
  return TruncatedSeries(rat_vector(j, "series"));
}

GSequence g_sequence_from_json(const Json& j) { return GSequence{rat_vector(j, "g")}; }

CertVerdict verdict_from_json(const Json& j) {
  CertVerdict v;
  const Json& st = field(j, "status");
  if (!st.is_string()) throw std::invalid_argument("status: expected a string");
  v.status = status_from_name(st.get<std::string>());
  v.witness = GSequence{rat_vector(field(j, "witness_g"), "witness_g")};
  const Json& ri = field(j, "refutation_index");
  if (!ri.is_number_integer()) throw std::invalid_argument("refutation_index: expected an integer");
  v.refutation_index = ri.get<int>();
  const Json& d = field(j, "detail");
  if (!d.is_string()) throw std::invalid_argument("detail: expected a string");
  v.detail = d.get<std::string>();
  return v;
}

GZeroInterval interval_from_json(const Json& j) {
  GZeroInterval iv;
  iv.lower = rat_field(field(j, "lower"), "lower");
  iv.upper_bound_lo = rat_field(field(j, "upper_bound_lo"), "upper_bound_lo");
  iv.upper_bound_hi = rat_field(field(j, "upper_bound_hi"), "upper_bound_hi");
  iv.tolerance = rat_field(field(j, "tolerance"), "tolerance");
  return iv;
}

DiscreteMeasure measure_from_json(const Json& j) {
  DiscreteMeasure mu;
  mu.atoms = rat_vector(field(j, "atoms"), "atoms");
  mu.weights = rat_vector(field(j, "weights"), "weights");
  if (mu.atoms.size() != mu.weights.size())
    throw std::invalid_argument("atoms and weights differ in length");
  return mu;
}

HankelReport hankel_from_json(const Json& j) {
  HankelReport h;
  h.dets_h = rat_vector(field(j, "dets_H"), "dets_H");
  h.dets_h_shift = rat_vector(field(j, "dets_Hshift"), "dets_Hshift");
  const Json& psd = field(j, "psd");
  if (!psd.is_array() || psd.size() != 2 || !psd[0].is_boolean() || !psd[1].is_boolean())
    throw std::invalid_argument("psd: expected a pair of booleans");
  h.psd_h = psd[0].get<bool>();
  h.psd_h_shift = psd[1].get<bool>();
  return h;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace stieltjes
