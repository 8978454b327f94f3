#include "jordanlab/random.hpp"

#include "jordanlab/commutation.hpp"
#include "jordanlab/spectral.hpp"

#include <vector>

namespace jordanlab {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  const std::uint64_t base = seed ^ trial;
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Element random_element(const Algebra& alg, Rng& rng) {
  std::normal_distribution<double> normal;
  Vector v(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) v(i) = normal(rng);
  return alg.element(std::move(v));
}

Element random_positive(const Algebra& alg, Rng& rng) {
  const Element x = random_element(alg, rng);
  return jordan_mul(x, x);
}

Element to_effect(const Element& positive) { return positive * (1.0 / (positive.norm() + 1.0)); }

Element random_effect(const Algebra& alg, Rng& rng) { return to_effect(random_positive(alg, rng)); }

Element random_polynomial(const Element& a, Rng& rng) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> degree(1, 3);
  const int d = degree(rng);
  Element out = normal(rng) * a.algebra()->unit();
  Element pw = a.algebra()->unit();
  for (int k = 1; k <= d; ++k) {
    pw = jordan_mul(a, pw);
    out = out + normal(rng) * pw;
  }
  return out;
}

Element random_idempotent(const Algebra& alg, Rng& rng) {
  const SpectralDecomposition sd = spectral_decompose(random_element(alg, rng));
  const auto k = sd.idempotents.size();
  if (k < 2) return alg.unit();
  // Random non-empty proper subset of the primitive idempotents.
  std::uniform_int_distribution<unsigned long long> mask_dist(1, (1ULL << k) - 2);
  const auto mask = mask_dist(rng);
  Element p = alg.zero();
  for (std::size_t i = 0; i < k; ++i) {
    if (mask & (1ULL << i)) p = p + sd.idempotents[i];
  }
  return p;
}

namespace {

std::vector<Element> jordan_frame(const Algebra& alg) {
  std::vector<Element> frame;
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.basis_labels()[static_cast<std::size_t>(i)].front() == 'E') frame.push_back(alg.basis(i));
  }
  if (!frame.empty()) return frame;
  // Spin factor: (1 +- v1) / 2.
  const Element v1 = alg.basis(1);
  return {0.5 * (alg.unit() + v1), 0.5 * (alg.unit() - v1)};
}

Element random_combination(const std::vector<Element>& basis, Rng& rng) {
  std::normal_distribution<double> normal;
  Element out = basis.front().algebra()->zero();
  for (const auto& b : basis) out = out + normal(rng) * b;
  return out;
}

}  // namespace

std::pair<Element, Element> commuting_pair(const Algebra& alg, Rng& rng, CommutingKind kind) {
  switch (kind) {
    case CommutingKind::Polynomial: {
      const Element x = random_element(alg, rng);
      Element p = random_polynomial(x, rng);
      Element q = random_polynomial(x, rng);
      return {p, q};
    }
    case CommutingKind::Commutant: {
      const SubalgebraBasis c = commutant({random_element(alg, rng)});
      Element p = random_combination(c.basis, rng);
      Element q = random_combination(c.basis, rng);
      return {p, q};
    }
    case CommutingKind::Diagonal:
      break;
  }
  const auto frame = jordan_frame(alg);
  Element p = random_combination(frame, rng);
  Element q = random_combination(frame, rng);
  return {p, q};
}

}  // namespace jordanlab
