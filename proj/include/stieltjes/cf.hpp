#pragma once

#include <vector>

#include "stieltjes/errors.hpp"
#include "stieltjes/series.hpp"

namespace stieltjes {

// A finite prefix a_0 .. a_N of a (putative) moment sequence.
struct MomentSequence {
  std::vector<Rat> moments;

  bool operator==(const MomentSequence&) const = default;
};

// Stieltjes-type continued fraction
//
//   f(t) = c / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))
//
// `terminated` asserts that every coefficient past the stored prefix is zero,
// i.e. the fraction ends.  Standard form additionally requires that a zero
// entry inside `alphas` is followed only by zeros (and that the fraction is
// then marked terminated), and that c = 0 forces `alphas` empty; see
// is_standard().
struct SCoefficients {
  Rat c;
  std::vector<Rat> alphas;
  bool terminated = false;

  bool operator==(const SCoefficients&) const = default;
};

// Jacobi-type continued fraction
//
//   f(t) = c / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - beta_2 t^2 / ...))
//
// gammas holds gamma_0 .. gamma_n, betas holds beta_1 .. beta_n.
struct JCoefficients {
  std::vector<Rat> gammas;
  std::vector<Rat> betas;

  bool operator==(const JCoefficients&) const = default;
};

bool is_standard(const SCoefficients& s);

// Throws NonStandardInput when is_standard(s) fails.
void require_standard(const SCoefficients& s);

// Coefficients of the fraction through t^order.  Levels deeper than `order`
// cannot influence the result and are never consulted, so the expansion of a
// terminated fraction equals the expansion of its zero-padded extension.
TruncatedSeries s_expand(const SCoefficients& s, int order);

// Inverse of s_expand on moment prefixes: recovers c and alpha_1 .. alpha_k
// by iterated inversion of the truncated series.  Each step consumes one
// order of truncation, so N + 1 moments yield at most N coefficients.  The
// result never stores a zero coefficient: a vanishing residual terminates the
// fraction, and a vanishing coefficient with a nonzero residual throws
// NotSFracRepresentable (no standard-form fraction can generate such a
// prefix).  Negative coefficients are returned as-is; representability does
// not require positivity.
SCoefficients s_extract(const MomentSequence& a);

// Even contraction: folds consecutive levels pairwise,
//
//   gamma_0 = alpha_1,  gamma_n = alpha_2n + alpha_2n+1,
//   beta_n  = alpha_2n-1 * alpha_2n,
//
// reading absent coefficients as zero.  With M stored alphas the result has
// 1 + floor(M/2) gammas and floor(M/2) betas; both fractions expand to the
// same series at every order.
JCoefficients contract(const SCoefficients& s);

// Coefficients of c / (1 - gamma_0 t - beta_1 t^2 / (...)) through t^order,
// with absent gammas/betas read as zero.
TruncatedSeries j_expand(const JCoefficients& j, const Rat& c, int order);

}  // namespace stieltjes
