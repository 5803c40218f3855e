#pragma once

// Seeded random instances shared by the tests and the acceptance suite.

#include <random>

#include "hyperbfs/verify.hpp"

namespace gen {

// Nonzero values to sample from; symbolic sets use a small fixed range.
inline std::vector<hyperbfs::Value> nonzero_pool(const hyperbfs::ValueSet& vs) {
  if (vs.is_finite()) return vs.nonzero_elements();
  std::vector<hyperbfs::Value> pool;
  for (hyperbfs::Value v = -5; v <= 5; ++v)
    if (!vs.is_zero(v) && (vs.id() != "tropical" || v >= 0)) pool.push_back(v);
  return pool;
}

inline hyperbfs::KeySpace keys(const std::string& prefix, std::size_t n) {
  std::vector<hyperbfs::Key> k;
  for (std::size_t i = 0; i < n; ++i) k.push_back(prefix + std::to_string(i));
  return hyperbfs::KeySpace(k);
}

// Entries present with probability `density`; stored values may include
// explicit zeros.
inline hyperbfs::AssociativeArray random_array(const hyperbfs::ValueSet& vs,
                                               const hyperbfs::KeySpace& rows,
                                               const hyperbfs::KeySpace& cols, double density,
                                               std::mt19937_64& rng, bool stored_zeros = false) {
  const auto pool = nonzero_pool(vs);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  hyperbfs::AssociativeArray a(rows, cols, vs.zero());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (coin(rng) < density)
        a.set(r, c, stored_zeros && coin(rng) < 0.2 ? vs.zero() : pool[pick(rng)]);
  return a;
}

// A random contraction-compatible pair with dimensions in [1, max_dim].
inline std::pair<hyperbfs::AssociativeArray, hyperbfs::AssociativeArray> random_pair(
    const hyperbfs::ValueSet& vs, std::mt19937_64& rng, std::size_t max_dim = 5) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  auto k1 = keys("r", dim(rng)), k2 = keys("m", dim(rng)), k3 = keys("c", dim(rng));
  auto a = random_array(vs, k1, k2, density(rng), rng, true);
  auto b = random_array(vs, k2, k3, density(rng), rng, true);
  return {a, b};
}

// Source set: each vertex independently with probability one half.
inline std::vector<hyperbfs::Key> random_sources(const hyperbfs::DirectedHypergraph& g,
                                                 std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<hyperbfs::Key> s;
  for (const auto& v : g.vertices())
    if (coin(rng)) s.push_back(v);
  return s;
}

}  // namespace gen
