#pragma once

#include "stieltjes/cf.hpp"

namespace stieltjes {

// b_n = sum_k binom(n, k) a_k xi^(n-k).  Length-preserving; the family
// composes as B_xi . B_eta = B_(xi+eta), with B_0 the identity.  This is
// exactly the effect of translating the representing measure by xi.
MomentSequence binomial_transform(const MomentSequence& a, const Rat& xi);

// gamma_i -> gamma_i + xi with betas unchanged: the Jacobi-side image of the
// binomial transform.
JCoefficients j_shift(const JCoefficients& j, const Rat& xi);

}  // namespace stieltjes
