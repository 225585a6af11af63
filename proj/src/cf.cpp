#include "stieltjes/cf.hpp"

#include <algorithm>
#include <stdexcept>

namespace stieltjes {

bool is_standard(const SCoefficients& s) {
  if (s.c < 0) return false;
  if (s.c == 0) return s.alphas.empty();
  auto first_zero = std::find(s.alphas.begin(), s.alphas.end(), Rat(0));
  if (first_zero == s.alphas.end()) return true;
  bool tail_zero = std::all_of(first_zero, s.alphas.end(), [](const Rat& a) { return a == 0; });
  return tail_zero && s.terminated;
}

void require_standard(const SCoefficients& s) {
  if (!is_standard(s))
    throw NonStandardInput(
        "coefficients are not in standard form (zero entries must form a "
        "terminated tail and c = 0 forces an empty list)");
}

namespace {

// Dense polynomial (coefficient of t^i at index i), capped at `cap` terms;
// the continued-fraction recurrences below only ever shift degrees upward, so
// discarding terms beyond the cap cannot disturb lower-order output.
using Poly = std::vector<Rat>;

Rat poly_at(const Poly& p, size_t i) { return i < p.size() ? p[i] : Rat(0); }

TruncatedSeries poly_to_series(const Poly& p, int order) {
  std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = poly_at(p, i);
  return TruncatedSeries(std::move(c));
}

}  // namespace

TruncatedSeries s_expand(const SCoefficients& s, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (s.c == 0) return TruncatedSeries::zero(order);
  const size_t cap = static_cast<size_t>(order) + 1;
  // Walk the fraction bottom-up as a quotient of polynomials: with the tail
  // below depth D replaced by 1,  T_k = N_k / D_k  satisfies
  //   N_k = D_{k+1},  D_k = D_{k+1} - alpha_k t N_{k+1}.
  // Depth D = min(order, #alphas) suffices: level k first touches t^k.
  const int depth = std::min<int>(order, static_cast<int>(s.alphas.size()));
  Poly num{Rat(1)};
  Poly den{Rat(1)};
  for (int k = depth; k >= 1; --k) {
    const Rat& a = s.alphas[static_cast<size_t>(k) - 1];
    Poly next = den;
    if (a != 0) {
      size_t top = std::min(cap, num.size() + 1);
      if (next.size() < top) next.resize(top, Rat(0));
      for (size_t i = 0; i + 1 < top; ++i) next[i + 1] -= a * num[i];
    }
    num = std::move(den);
    den = std::move(next);
  }
  TruncatedSeries f = poly_to_series(num, order) * reciprocal(poly_to_series(den, order));
  return s.c * f;
}

SCoefficients s_extract(const MomentSequence& a) {
  if (a.moments.empty()) throw std::invalid_argument("empty moment sequence");
  bool all_zero = std::all_of(a.moments.begin(), a.moments.end(),
                              [](const Rat& m) { return m == 0; });
  if (all_zero) return SCoefficients{Rat(0), {}, true};
  if (a.moments[0] == 0)
    throw NotSFracRepresentable("a_0 = 0 but the prefix is not identically zero");
  if (a.moments[0] < 0) throw NotSFracRepresentable("a_0 < 0");

  SCoefficients out;
  out.c = a.moments[0];
  out.terminated = false;

  // Peel one level per step: with f_k the current tail (f_0 = the series),
  // r = 1 - c_k / f_k vanishes at order 0; its t-coefficient is alpha_{k+1}
  // and the next tail is r / (alpha_{k+1} t).  Each step costs one order of
  // truncation.
  TruncatedSeries f(a.moments);
  Rat head = out.c;
  while (f.order() >= 1) {
    TruncatedSeries r = TruncatedSeries::one(f.order()) - head * reciprocal(f);
    if (r.is_zero()) {
      out.terminated = true;
      break;
    }
    Rat alpha = r[1];
    if (alpha == 0)
      throw NotSFracRepresentable(
          "vanishing coefficient with a nonzero residual at position " +
          std::to_string(out.alphas.size() + 1));
    out.alphas.push_back(alpha);
    f = (Rat(1) / alpha) * div_by_t(r);
    head = 1;
  }
  return out;
}

JCoefficients contract(const SCoefficients& s) {
  const int m = static_cast<int>(s.alphas.size());
  auto alpha = [&](int i) { return (i >= 1 && i <= m) ? s.alphas[static_cast<size_t>(i) - 1] : Rat(0); };
  const int pairs = m / 2;
  JCoefficients j;
  j.gammas.reserve(static_cast<size_t>(pairs) + 1);
  j.betas.reserve(static_cast<size_t>(pairs));
  j.gammas.push_back(alpha(1));
  for (int n = 1; n <= pairs; ++n) {
    j.gammas.push_back(alpha(2 * n) + alpha(2 * n + 1));
    j.betas.push_back(alpha(2 * n - 1) * alpha(2 * n));
  }
  return j;
}

TruncatedSeries j_expand(const JCoefficients& j, const Rat& c, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (c == 0) return TruncatedSeries::zero(order);
  const size_t cap = static_cast<size_t>(order) + 1;
  auto gamma = [&](int k) {
    return k < static_cast<int>(j.gammas.size()) ? j.gammas[static_cast<size_t>(k)] : Rat(0);
  };
  auto beta = [&](int k) {
    return (k >= 1 && k <= static_cast<int>(j.betas.size())) ? j.betas[static_cast<size_t>(k) - 1]
                                                             : Rat(0);
  };
  // Same quotient walk, two orders per level:
  //   N_k = D_{k+1},  D_k = (1 - gamma_k t) D_{k+1} - beta_{k+1} t^2 N_{k+1}.
  const int depth = (order + 1) / 2;  // level k first touches t^(2k)
  Poly num{Rat(1)};
  Poly den{Rat(1)};
  for (int k = depth; k >= 0; --k) {
    const Rat gk = gamma(k);
    const Rat bk = beta(k + 1);
    Poly next = den;
    size_t top = std::min(cap, std::max(den.size() + 1, num.size() + 2));
    if (next.size() < top) next.resize(top, Rat(0));
    if (gk != 0)
      for (size_t i = 0; i < den.size() && i + 1 < top; ++i) next[i + 1] -= gk * den[i];
    if (bk != 0)
      for (size_t i = 0; i < num.size() && i + 2 < top; ++i) next[i + 2] -= bk * num[i];
    num = std::move(den);
    den = std::move(next);
  }
  TruncatedSeries f = poly_to_series(num, order) * reciprocal(poly_to_series(den, order));
  return c * f;
}

}  // namespace stieltjes
