#pragma once

#include <vector>

#include "stieltjes/rational.hpp"

namespace stieltjes {

// Formal power series truncated at a fixed order: the coefficients of
// t^0 .. t^order, exact rationals throughout.  Values are immutable; every
// operation returns a fresh series.  Binary operations between series of
// different orders truncate to the shorter one.
class TruncatedSeries {
 public:
  // coeffs[i] is the coefficient of t^i; must be nonempty.
  explicit TruncatedSeries(std::vector<Rat> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Rat> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
// Cauchy product, truncated to min(order(f), order(g)).
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const Rat& s, const TruncatedSeries& f);

// Multiplicative inverse to the order of f.  Throws ZeroConstantTerm when
// f(0) = 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);

// t * f, truncated back to the order of f (the top coefficient falls off).
TruncatedSeries mul_by_t(const TruncatedSeries& f);

// f / t for a series with f[0] = 0; the order drops by one.  Requires
// order(f) >= 1.
TruncatedSeries div_by_t(const TruncatedSeries& f);

}  // namespace stieltjes
