#include "stieltjes/transforms.hpp"

namespace stieltjes {

MomentSequence binomial_transform(const MomentSequence& a, const Rat& xi) {
  const auto& m = a.moments;
  MomentSequence out;
  out.moments.resize(m.size());
  if (m.empty()) return out;
  std::vector<Rat> xp(m.size());
  xp[0] = 1;
  for (size_t j = 1; j < xp.size(); ++j) xp[j] = xp[j - 1] * xi;
  std::vector<Int> row{Int(1)};  // Pascal row, updated in place
  out.moments[0] = m[0];
  for (size_t n = 1; n < m.size(); ++n) {
    row.push_back(Int(1));
    for (size_t k = n - 1; k >= 1; --k) row[k] += row[k - 1];
    Rat sum(0);
    for (size_t k = 0; k <= n; ++k) sum += Rat(row[k]) * m[k] * xp[n - k];
    out.moments[n] = sum;
  }
  return out;
}

JCoefficients j_shift(const JCoefficients& j, const Rat& xi) {
  JCoefficients out = j;
  for (Rat& gamma : out.gammas) gamma += xi;
  return out;
}

}  // namespace stieltjes
