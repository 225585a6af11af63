#include "stieltjes/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace stieltjes {

namespace {

void validate(const DiscreteMeasure& mu) {
  if (mu.atoms.size() != mu.weights.size())
    throw std::invalid_argument("measure: atoms and weights differ in length");
  for (const Rat& w : mu.weights)
    if (w <= 0) throw std::invalid_argument("measure: weights must be strictly positive");
  for (size_t i = 0; i < mu.atoms.size(); ++i)
    for (size_t j = i + 1; j < mu.atoms.size(); ++j)
      if (mu.atoms[i] == mu.atoms[j])
        throw std::invalid_argument("measure: atom positions must be pairwise distinct");
}

// Exact determinant by fraction-free-enough Gaussian elimination with row
// pivoting (sign tracked).
Rat det(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  Rat result(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    Rat inv = Rat(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return result;
}

// All minors nonnegative, and once a minor hits zero the rest must stay zero.
bool psd_from_minors(const std::vector<Rat>& dets) {
  bool seen_zero = false;
  for (const Rat& d : dets) {
    if (d < 0) return false;
    if (d == 0)
      seen_zero = true;
    else if (seen_zero)
      return false;
  }
  return true;
}

}  // namespace

std::uint64_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_ >> 33;
}

std::uint64_t Lcg64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Lcg64::below: bound must be >= 1");
  return next() % bound;
}

MomentSequence moments(const DiscreteMeasure& mu, int n_max) {
  if (n_max < 0) throw std::invalid_argument("moments: n_max must be >= 0");
  validate(mu);
  MomentSequence a;
  a.moments.assign(static_cast<size_t>(n_max) + 1, Rat(0));
  std::vector<Rat> pw(mu.atoms.size(), Rat(1));
  for (int n = 0; n <= n_max; ++n) {
    Rat sum(0);
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
      sum += mu.weights[i] * pw[i];
      pw[i] *= mu.atoms[i];
    }
    a.moments[static_cast<size_t>(n)] = sum;
  }
  return a;
}

DiscreteMeasure translate(const DiscreteMeasure& mu, const Rat& xi) {
  validate(mu);
  DiscreteMeasure out = mu;
  for (Rat& x : out.atoms) x += xi;
  return out;
}

HankelReport hankel_report(const MomentSequence& a) {
  const int n = static_cast<int>(a.moments.size()) - 1;
  HankelReport rep;
  if (n < 0) return rep;  // vacuous
  auto minors = [&](int shift, int count) {
    std::vector<Rat> dets;
    dets.reserve(static_cast<size_t>(count));
    for (int k = 1; k <= count; ++k) {
      std::vector<std::vector<Rat>> m(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              a.moments[static_cast<size_t>(i + j + shift)];
      dets.push_back(det(std::move(m)));
    }
    return dets;
  };
  rep.dets_h = minors(0, n / 2 + 1);
  rep.dets_h_shift = minors(1, (n + 1) / 2);
  rep.psd_h = psd_from_minors(rep.dets_h);
  rep.psd_h_shift = psd_from_minors(rep.dets_h_shift);
  return rep;
}

DiscreteMeasure random_measure(std::uint64_t seed, int count, const Rat& min_atom,
                               const Rat& max_atom, int denom_bound) {
  if (count < 0) throw std::invalid_argument("random_measure: count must be >= 0");
  if (denom_bound < 1) throw std::invalid_argument("random_measure: denom_bound must be >= 1");
  if (min_atom > max_atom) throw std::invalid_argument("random_measure: empty atom range");
  if (count >= 2 && min_atom == max_atom)
    throw std::invalid_argument("random_measure: cannot place distinct atoms in a point range");

  Lcg64 rng(seed);
  const Rat span = max_atom - min_atom;
  const std::uint64_t db = static_cast<std::uint64_t>(denom_bound);
  DiscreteMeasure mu;
  mu.atoms.reserve(static_cast<size_t>(count));
  mu.weights.reserve(static_cast<size_t>(count));

  int retries = 0;
  while (static_cast<int>(mu.atoms.size()) < count) {
    std::uint64_t den = 1 + rng.below(db);
    std::uint64_t num = rng.below(den + 1);
    Rat x = min_atom + span * Rat(num, den);
    if (std::find(mu.atoms.begin(), mu.atoms.end(), x) == mu.atoms.end()) {
      mu.atoms.push_back(std::move(x));
    } else if (++retries > 64 * (count + 1)) {
      throw std::runtime_error("random_measure: atom range too coarse for distinct draws");
    }
  }
  for (int i = 0; i < count; ++i) {
    std::uint64_t den = 1 + rng.below(db);
    std::uint64_t num = 1 + rng.below(db);
    mu.weights.emplace_back(Rat(num, den));
  }
  return mu;
}

}  // namespace stieltjes
