#pragma once

#include <cstdint>

#include "stieltjes/cf.hpp"

namespace stieltjes {

// Finitely supported positive measure: pairwise distinct atom positions with
// strictly positive weights.
struct DiscreteMeasure {
  std::vector<Rat> atoms;
  std::vector<Rat> weights;

  bool operator==(const DiscreteMeasure&) const = default;
};

// Leading principal minors of the two Hankel matrices H = (a_i+j) and
// H' = (a_i+j+1) built from a moment prefix, plus the induced positive-
// semidefiniteness verdicts.
struct HankelReport {
  std::vector<Rat> dets_h;        // sizes 1 .. floor(N/2) + 1
  std::vector<Rat> dets_h_shift;  // sizes 1 .. floor((N+1)/2)
  bool psd_h = false;
  bool psd_h_shift = false;

  bool operator==(const HankelReport&) const = default;
};

// 64-bit linear congruential generator with a fixed, documented recurrence so
// that other implementations can reproduce the exact streams:
//
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//
// next() advances once and returns the top 31 bits (state >> 33).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // next() reduced mod bound; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Power moments a_n = sum_i w_i x_i^n for n = 0 .. n_max (a_0 is the total
// mass; the empty measure yields all zeros).
MomentSequence moments(const DiscreteMeasure& mu, int n_max);

// Pushforward under x -> x + xi.
DiscreteMeasure translate(const DiscreteMeasure& mu, const Rat& xi);

// Exact leading principal minors of both Hankel matrices, with the classical
// semidefiniteness reading: every minor >= 0, and no zero minor may be
// followed by a nonzero one.
HankelReport hankel_report(const MomentSequence& a);

// Deterministic pseudo-random measure with `count` distinct atoms in
// [min_atom, max_atom] and positive weights, all with denominators bounded by
// denom_bound.  Draw order (one Lcg64 seeded with `seed`): for each atom, a
// denominator d = 1 + below(denom_bound) then a numerator n = below(d + 1),
// giving min_atom + (max_atom - min_atom) * n/d; colliding atoms are redrawn
// (bounded retries, std::runtime_error on exhaustion).  Then for each weight,
// a denominator and a numerator 1 + below(denom_bound) each.
DiscreteMeasure random_measure(std::uint64_t seed, int count, const Rat& min_atom,
                               const Rat& max_atom, int denom_bound);

}  // namespace stieltjes
