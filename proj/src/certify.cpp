#include "stieltjes/certify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "stieltjes/transforms.hpp"

namespace stieltjes {

namespace {

std::string fmt(const Rat& v) { return rat_to_string(v); }

CertVerdict certified(std::vector<Rat> g, std::string detail) {
  CertVerdict v;
  v.status = CertStatus::CertifiedPrefix;
  v.witness = GSequence{std::move(g)};
  v.refutation_index = -1;
  v.detail = std::move(detail);
  return v;
}

CertVerdict refuted(std::vector<Rat> g, int index, std::string detail) {
  CertVerdict v;
  v.status = CertStatus::Refuted;
  v.witness = GSequence{std::move(g)};
  v.refutation_index = index;
  v.detail = std::move(detail);
  return v;
}

CertVerdict degenerate() {
  CertVerdict v;
  v.status = CertStatus::Degenerate;
  v.refutation_index = -1;
  v.detail = "identically zero prefix; realized by the zero measure";
  return v;
}

// Shared inversion of the g-parametrization over the nonzero coefficient
// prefix alpha_1 .. alpha_m.  Works for xi = 0 as well, where it reduces to a
// sign scan of the coefficients.
CertVerdict run_g_recursion(const std::vector<Rat>& alphas, int m, bool terminated,
                            const Rat& xi, const Rat& g0) {
  std::vector<Rat> g;
  g.reserve(static_cast<size_t>(m) + 2);
  g.push_back(g0);
  for (int i = 1; i <= m; ++i) {
    const Rat& a = alphas[static_cast<size_t>(i) - 1];
    if (i % 2 == 1) {
      // alpha_i = xi (1 + g_{i-1}) + g_i
      Rat gi = a - xi * (1 + g.back());
      if (gi < 0) {
        std::ostringstream why;
        why << "g_" << i << " = " << fmt(gi) << " < 0: alpha_" << i << " = " << fmt(a)
            << " falls short of the threshold term " << fmt(xi * (1 + g.back()));
        g.push_back(std::move(gi));
        return refuted(std::move(g), i, why.str());
      }
      g.push_back(std::move(gi));
    } else {
      // alpha_i = g_{i-1} g_i / (1 + g_{i-2})
      const Rat& prev = g[static_cast<size_t>(i) - 1];
      if (prev == 0) {
        if (a != 0) {
          std::ostringstream why;
          why << "g_" << (i - 1) << " = 0 forces alpha_" << i << " = 0, but alpha_" << i
              << " = " << fmt(a);
          return refuted(std::move(g), i, why.str());
        }
        g.push_back(Rat(0));
      } else {
        Rat gi = a * (1 + g[static_cast<size_t>(i) - 2]) / prev;
        if (gi < 0) {
          std::ostringstream why;
          why << "g_" << i << " = " << fmt(gi) << " < 0 (alpha_" << i << " = " << fmt(a) << ")";
          g.push_back(std::move(gi));
          return refuted(std::move(g), i, why.str());
        }
        g.push_back(std::move(gi));
      }
    }
  }
  if (terminated) {
    if (m % 2 == 1) {
      // The zero tail pins g_{m+1} = 0 (when g_m > 0); always consistent.
      if (g.back() > 0) g.push_back(Rat(0));
      return certified(std::move(g), "terminating fraction, odd nonzero prefix");
    }
    if (xi > 0) {
      // alpha_{m+1} = 0 at an odd position would need g_{m+1} = -xi (1 + g_m).
      Rat forced = -xi * (1 + g.back());
      std::ostringstream why;
      why << "fraction terminates after an even prefix: alpha_" << (m + 1)
          << " = 0 forces g_" << (m + 1) << " = " << fmt(forced) << " < 0";
      g.push_back(std::move(forced));
      return refuted(std::move(g), m + 1, why.str());
    }
    return certified(std::move(g), "terminating fraction, xi = 0");
  }
  return certified(std::move(g), "nonnegative parametrization of the full prefix");
}

// Length of the leading nonzero run (for standard inputs, everything after it
// is zero).
int nonzero_prefix(const std::vector<Rat>& alphas) {
  int m = 0;
  while (m < static_cast<int>(alphas.size()) && alphas[static_cast<size_t>(m)] != 0) ++m;
  return m;
}

}  // namespace

SCoefficients alpha_from_g(const GSequence& g, const Rat& xi, const Rat& c) {
  if (xi < 0) throw std::invalid_argument("alpha_from_g: xi must be >= 0");
  for (const Rat& v : g.g)
    if (v < 0) throw NegativeG("alpha_from_g: negative entry " + fmt(v));
  SCoefficients out;
  out.c = c;
  out.terminated = false;
  if (g.g.empty()) return out;
  const size_t L = g.g.size() - 1;  // entries g_0 .. g_L give alpha_1 .. alpha_L
  out.alphas.reserve(L);
  for (size_t i = 1; i <= L; ++i) {
    if (i % 2 == 1) {
      out.alphas.push_back(xi * (1 + g.g[i - 1]) + g.g[i]);
    } else {
      out.alphas.push_back(g.g[i - 1] * g.g[i] / (1 + g.g[i - 2]));
    }
  }
  return out;
}

CertVerdict g_from_alpha(const SCoefficients& s, const Rat& xi, const Rat& g0) {
  if (xi <= 0) throw std::invalid_argument("g_from_alpha: xi must be > 0");
  if (g0 < 0) throw std::invalid_argument("g_from_alpha: g0 must be >= 0");
  require_standard(s);
  if (s.c == 0) return degenerate();
  return run_g_recursion(s.alphas, nonzero_prefix(s.alphas), s.terminated, xi, g0);
}

CertVerdict certify_xi_stieltjes(const MomentSequence& a, const Rat& xi) {
  if (xi < 0) throw std::invalid_argument("certify_xi_stieltjes: xi must be >= 0");
  SCoefficients s;
  try {
    s = s_extract(a);
  } catch (const NotSFracRepresentable& e) {
    CertVerdict v;
    v.status = CertStatus::Refuted;
    v.refutation_index = -1;
    v.detail = std::string("not representable: ") + e.what();
    return v;
  }
  if (s.c == 0) return degenerate();
  // Extraction never stores zero coefficients, so the whole list is the
  // nonzero prefix.  At xi = 0 the recursion is exactly the classical
  // nonnegativity test on the extracted coefficients.
  return run_g_recursion(s.alphas, static_cast<int>(s.alphas.size()), s.terminated, xi, Rat(0));
}

DualRouteResult dual_route_check(const MomentSequence& a, const Rat& xi) {
  if (xi <= 0) throw std::invalid_argument("dual_route_check: xi must be > 0");
  CertVerdict direct = certify_xi_stieltjes(a, xi);
  if (direct.status == CertStatus::Degenerate) return {GSequence{}, GSequence{}};
  if (direct.status != CertStatus::CertifiedPrefix)
    throw std::invalid_argument("dual_route_check requires a certifiable prefix: " + direct.detail);

  SCoefficients shifted;
  try {
    shifted = s_extract(binomial_transform(a, -xi));
  } catch (const NotSFracRepresentable& e) {
    throw RouteMismatch(std::string("certified prefix failed extraction after the shift: ") +
                        e.what());
  }

  const int want = static_cast<int>(direct.witness.g.size()) - 1;
  const int avail = static_cast<int>(shifted.alphas.size());
  const int steps = shifted.terminated ? std::max(want, avail) : avail;
  std::vector<Rat> g;
  g.reserve(static_cast<size_t>(steps) + 1);
  g.push_back(Rat(0));
  for (int i = 1; i <= steps; ++i) {
    Rat ab = i <= avail ? shifted.alphas[static_cast<size_t>(i) - 1] : Rat(0);
    if (i % 2 == 1) {
      g.push_back(std::move(ab));
    } else {
      // denominator = alpha_{i-1} of the unshifted fraction, positive here
      Rat denom = xi * (1 + g[static_cast<size_t>(i) - 2]) + g[static_cast<size_t>(i) - 1];
      g.push_back(ab * (1 + g[static_cast<size_t>(i) - 2]) / denom);
    }
  }

  const size_t common = std::min(g.size(), direct.witness.g.size());
  for (size_t i = 0; i < common; ++i) {
    if (g[i] != direct.witness.g[i]) {
      std::ostringstream why;
      why << "routes disagree at g_" << i << ": transform gives " << fmt(g[i])
          << ", direct gives " << fmt(direct.witness.g[i]);
      throw RouteMismatch(why.str());
    }
  }
  return {GSequence{std::move(g)}, std::move(direct.witness)};
}

CertVerdict rebase_g0(const GSequence& gin, const Rat& xi, const Rat& g0_new) {
  if (xi <= 0) throw std::invalid_argument("rebase_g0: xi must be > 0");
  if (g0_new < 0) throw std::invalid_argument("rebase_g0: g0_new must be >= 0");
  if (gin.g.empty()) throw std::invalid_argument("rebase_g0: empty witness");
  for (const Rat& v : gin.g)
    if (v < 0) throw std::invalid_argument("rebase_g0: witness entry " + fmt(v) + " is negative");

  const auto& g = gin.g;
  if (g0_new == g[0])
    return certified(g, "identity rebase");

  const int L = static_cast<int>(g.size()) - 1;
  std::vector<Rat> gp;
  gp.reserve(g.size());
  gp.push_back(g0_new);
  for (int i = 1; i <= L; ++i) {
    const size_t ui = static_cast<size_t>(i);
    if (i % 2 == 1) {
      Rat v = g[ui] + xi * (g[ui - 1] - gp[ui - 1]);
      if (v < 0) {
        std::ostringstream why;
        why << "rebased g_" << i << " = " << fmt(v) << " < 0: base " << fmt(g0_new)
            << " is infeasible";
        gp.push_back(std::move(v));
        return refuted(std::move(gp), i, why.str());
      }
      gp.push_back(std::move(v));
    } else {
      if (gp[ui - 1] == 0) {
        if (g[ui - 1] > 0 && g[ui] > 0) {
          std::ostringstream why;
          why << "rebased g_" << (i - 1) << " vanished but alpha_" << i
              << " > 0 requires a positive product";
          return refuted(std::move(gp), i, why.str());
        }
        gp.push_back(Rat(0));
      } else {
        gp.push_back(g[ui] * (g[ui - 1] / gp[ui - 1]) * ((1 + gp[ui - 2]) / (1 + g[ui - 2])));
      }
    }
  }

  // The rebase must reproduce the same coefficient image; anything else is a
  // bug in the recurrence, not a property of the input.
  if (alpha_from_g(GSequence{gp}, xi).alphas != alpha_from_g(gin, xi).alphas)
    throw std::logic_error("rebase_g0: coefficient image changed");
  return certified(std::move(gp), "rebased witness");
}

GZeroInterval g0_max(const MomentSequence& a, const Rat& xi, const Rat& tol) {
  if (xi <= 0) throw std::invalid_argument("g0_max: xi must be > 0");
  if (tol <= 0) throw std::invalid_argument("g0_max: tolerance must be > 0");
  CertVerdict base = certify_xi_stieltjes(a, xi);
  if (base.status == CertStatus::Degenerate)
    throw InfeasibleBase("g0_max: degenerate (zero) prefix has no base parametrization");
  if (base.status != CertStatus::CertifiedPrefix)
    throw InfeasibleBase("g0_max: prefix is not certified at this xi: " + base.detail);

  SCoefficients s = s_extract(a);
  if (s.alphas.empty())
    throw UnboundedFeasibleSet("g0_max: a bare mass constrains nothing; every g0 is feasible");

  auto feasible = [&](const Rat& x) {
    return g_from_alpha(s, xi, x).status == CertStatus::CertifiedPrefix;
  };

  // Feasibility of g0 requires alpha_1 = xi (1 + g0) + g1 with g1 >= 0.
  Rat hi = s.alphas[0] / xi - 1;
  if (feasible(hi)) return {Rat(0), hi, hi, tol};  // supremum attained at the a-priori bound
  Rat lo(0);
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {Rat(0), lo, hi, tol};
}

CertVerdict certify_wall(const MomentSequence& a, const Rat& xi) {
  if (xi <= 0) throw std::invalid_argument("certify_wall: xi must be > 0");
  SCoefficients s;
  try {
    s = s_extract(a);
  } catch (const NotSFracRepresentable& e) {
    CertVerdict v;
    v.status = CertStatus::Refuted;
    v.refutation_index = -1;
    v.detail = std::string("not representable: ") + e.what();
    return v;
  }
  if (s.c == 0) return degenerate();

  // alpha_n = xi (1 - g_{n-1}) g_n with every g_n in [0, 1]; all extracted
  // coefficients are nonzero, so a saturated g_{n-1} = 1 leaves no room.
  const int m = static_cast<int>(s.alphas.size());
  std::vector<Rat> g;
  g.reserve(static_cast<size_t>(m) + 1);
  g.push_back(Rat(0));
  for (int n = 1; n <= m; ++n) {
    const Rat& an = s.alphas[static_cast<size_t>(n) - 1];
    if (g.back() == 1) {
      std::ostringstream why;
      why << "g_" << (n - 1) << " = 1 forces alpha_" << n << " = 0, but alpha_" << n << " = "
          << fmt(an);
      return refuted(std::move(g), n, why.str());
    }
    Rat gn = an / (xi * (1 - g.back()));
    if (gn < 0 || gn > 1) {
      std::ostringstream why;
      why << "g_" << n << " = " << fmt(gn) << " lies outside [0, 1]";
      g.push_back(std::move(gn));
      return refuted(std::move(g), n, why.str());
    }
    g.push_back(std::move(gn));
  }
  // A zero tail (terminated fraction) continues with g = 0 forever; an open
  // prefix certifies as-is.
  return certified(std::move(g), "chain-sequence parametrization within [0, 1]");
}

}  // namespace stieltjes
