#pragma once

#include <string>

#include "stieltjes/cf.hpp"

namespace stieltjes {

// Chain-sequence style parametrization g_0, g_1, ... of a continued fraction
// relative to a support threshold xi.  Nonnegative entries certify that the
// underlying coefficient sequence is realizable by a measure supported in
// [xi, oo); see alpha_from_g for the exact correspondence.
struct GSequence {
  std::vector<Rat> g;

  bool operator==(const GSequence&) const = default;
};

enum class CertStatus {
  CertifiedPrefix,  // the prefix extends to some measure supported in [xi, oo)
  Refuted,          // no such measure exists for any extension of the prefix
  Degenerate,       // identically zero prefix (the zero measure)
};

// Outcome of a certification question on a finite prefix.  On
// CertifiedPrefix, `witness.g` is a complete nonnegative parametrization
// whose image reproduces the input coefficients.  On Refuted, `witness.g`
// holds the partial parametrization up to and including the entry that went
// wrong and `refutation_index` names the first coefficient index that cannot
// be matched by any admissible continuation.  `detail` is a human-readable
// explanation in every case.
struct CertVerdict {
  CertStatus status = CertStatus::Degenerate;
  GSequence witness;
  int refutation_index = -1;
  std::string detail;

  bool operator==(const CertVerdict&) const = default;
};

// Bracket for the supremum of the feasible base-parameter interval.  The
// feasible set is [0, g0_max]; `lower` is always 0, and the supremum lies in
// [upper_bound_lo, upper_bound_hi] with upper_bound_hi - upper_bound_lo <=
// tolerance (zero width when the supremum was located exactly).
struct GZeroInterval {
  Rat lower;
  Rat upper_bound_lo;
  Rat upper_bound_hi;
  Rat tolerance;

  bool operator==(const GZeroInterval&) const = default;
};

// The same parametrization computed along two independent pipelines; see
// dual_route_check.
struct DualRouteResult {
  GSequence via_transform;
  GSequence via_direct;

  bool operator==(const DualRouteResult&) const = default;
};

// Forward map of the parametrization: with g_0 .. g_L (all >= 0, else
// NegativeG) and xi >= 0 produce alpha_1 .. alpha_L by
//
//   alpha_2k-1 = xi (1 + g_2k-2) + g_2k-1,
//   alpha_2k   = g_2k-1 g_2k / (1 + g_2k-2).
//
// The fraction constant c is the caller's to choose (default 1).  The result
// carries terminated = false: nothing is claimed about coefficients beyond
// the image of the given entries.
SCoefficients alpha_from_g(const GSequence& g, const Rat& xi, const Rat& c = Rat(1));

// Inverse map with chosen base entry: reconstructs g_1, g_2, ... from a
// standard-form coefficient sequence, starting at g_0 = g0.  Requires xi > 0
// and g0 >= 0.  Succeeds with a full nonnegative witness (CertifiedPrefix) or
// stops at the first index where every continuation forces a negative entry
// (Refuted).  A terminated fraction whose nonzero prefix has even length is
// refutable outright for xi > 0: the forced zero coefficient at the next odd
// position would need g_m+1 = -xi (1 + g_m) < 0.  For odd length the zero
// tail pins g_m+1 = 0 and certifies.
CertVerdict g_from_alpha(const SCoefficients& s, const Rat& xi, const Rat& g0);

// Decides whether a moment prefix a_0 .. a_N extends to a measure supported
// in [xi, oo), xi >= 0.  Pipeline: s_extract, then the g-parametrization at
// g_0 = 0 (for xi = 0 this degenerates to nonnegativity of the extracted
// coefficients).  An inextensible prefix reports Refuted with the offending
// index; an identically zero prefix reports Degenerate.  Extraction failures
// (NotSFracRepresentable) are absorbed as Refuted with refutation_index = -1
// and the reason in `detail`.
CertVerdict certify_xi_stieltjes(const MomentSequence& a, const Rat& xi);

// Cross-checks certification along two routes that are equal on paper but
// share no code: (i) shift the moments by -xi via binomial_transform, extract
// coefficients there, and map them through the translation identities
//
//   g_2k-1 = alpha^b_2k-1,
//   g_2k   = alpha^b_2k (1 + g_2k-2) / (xi (1 + g_2k-2) + g_2k-1);
//
// (ii) run g_from_alpha on the coefficients of the original moments.
// Requires xi > 0 and a certifiable (or degenerate) prefix.  Returns both
// sequences; they must agree on the common prefix, else RouteMismatch is
// thrown (which would indicate a bug, not bad input).
DualRouteResult dual_route_check(const MomentSequence& a, const Rat& xi);

// Rewrites a feasible witness to a different base entry without changing the
// coefficient image:
//
//   g'_2k+1 = g_2k+1 + xi (g_2k - g'_2k),
//   g'_2k+2 = g_2k+2 (g_2k+1 / g'_2k+1) ((1 + g'_2k) / (1 + g_2k)),
//
// with g'_2k+2 = 0 when g'_2k+1 = 0 and the image stays consistent (Refuted
// at that index otherwise, e.g. when a vanishing g'_2k+1 meets a genuinely
// positive alpha).  On success the reproduced alphas are verified identical
// before returning.  Raising the base drives odd entries down — the first
// negative one refutes g0_new as a base — and lowering it drives them up.
CertVerdict rebase_g0(const GSequence& g, const Rat& xi, const Rat& g0_new);

// Supremum of the feasible base interval I = { g0 >= 0 : rebasing the
// witness of `a` to g0 stays nonnegative }, bracketed to `tol` by exact
// rational bisection.  The a-priori bound g0 <= alpha_1/xi - 1 seeds the
// search; when that bound is itself feasible the supremum is returned as a
// zero-width bracket.  Requires a certified prefix with at least one
// extracted coefficient: throws InfeasibleBase when g0 = 0 already fails
// (or the prefix is degenerate) and UnboundedFeasibleSet when nothing
// constrains g0.
GZeroInterval g0_max(const MomentSequence& a, const Rat& xi, const Rat& tol);

// Bounded-support counterpart: decides extension to a measure supported in
// [0, xi], xi > 0, via the classical parametrization
//
//   alpha_n = xi (1 - g_n-1) g_n,   g_0 = 0,  g_n in [0, 1].
//
// Entries leaving [0, 1] refute; a vanishing residual or exhausted prefix
// certifies.  Returns the same verdict shape as certify_xi_stieltjes.
CertVerdict certify_wall(const MomentSequence& a, const Rat& xi);

}  // namespace stieltjes
