#include "stieltjes/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "stieltjes/errors.hpp"

namespace stieltjes {

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncatedSeries needs at least a constant term");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  return TruncatedSeries(std::vector<Rat>(static_cast<size_t>(order) + 1, Rat(0)));
}

TruncatedSeries TruncatedSeries::one(int order) {
  std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

namespace {

size_t common_size(const TruncatedSeries& f, const TruncatedSeries& g) {
  return std::min(f.coeffs().size(), g.coeffs().size());
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  size_t n = common_size(f, g);
  std::vector<Rat> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = f.coeffs()[i] + g.coeffs()[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  size_t n = common_size(f, g);
  std::vector<Rat> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = f.coeffs()[i] - g.coeffs()[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  size_t n = common_size(f, g);
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (f.coeffs()[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (g.coeffs()[j] == 0) continue;
      out[i + j] += f.coeffs()[i] * g.coeffs()[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const Rat& s, const TruncatedSeries& f) {
  std::vector<Rat> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = s * f.coeffs()[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const auto& a = f.coeffs();
  if (a[0] == 0) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
  std::vector<Rat> b(a.size());
  Rat inv0 = Rat(1) / a[0];
  b[0] = inv0;
  // b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}
  for (size_t n = 1; n < a.size(); ++n) {
    Rat acc(0);
    for (size_t k = 1; k <= n; ++k) {
      if (a[k] == 0) continue;
      acc += a[k] * b[n - k];
    }
    b[n] = -inv0 * acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries mul_by_t(const TruncatedSeries& f) {
  std::vector<Rat> out(f.coeffs().size(), Rat(0));
  for (size_t i = 1; i < out.size(); ++i) out[i] = f.coeffs()[i - 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries div_by_t(const TruncatedSeries& f) {
  if (f.order() < 1) throw std::invalid_argument("div_by_t needs order >= 1");
  if (f[0] != 0) throw std::invalid_argument("div_by_t requires a vanishing constant term");
  std::vector<Rat> out(f.coeffs().begin() + 1, f.coeffs().end());
  return TruncatedSeries(std::move(out));
}

}  // namespace stieltjes
