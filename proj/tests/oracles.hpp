#pragma once

// Reference computations for the tests. They work on raw tables and plain
// containers and share no code with the library paths they are compared to.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperbfs/hypergraph.hpp"

namespace oracle {

using Table = std::vector<int>;  // row-major n x n, row = left operand
using Tuple = std::vector<int>;

struct Raw {
  int n = 0;
  Table plus, times;
  int zero = 0, one = 1;
  int p(int a, int b) const { return plus[a * n + b]; }
  int t(int a, int b) const { return times[a * n + b]; }
};

inline Raw raw(const hyperbfs::ValueSet& vs) {
  Raw r;
  r.n = static_cast<int>(vs.size());
  for (auto v : vs.plus_table()) r.plus.push_back(static_cast<int>(v));
  for (auto v : vs.times_table()) r.times.push_back(static_cast<int>(v));
  r.zero = static_cast<int>(vs.zero());
  r.one = static_cast<int>(vs.one());
  return r;
}

inline std::optional<Tuple> zero_sum_witness(const Raw& r) {
  for (int v = 0; v < r.n; ++v)
    for (int w = 0; w < r.n; ++w)
      if (r.p(v, w) == r.zero && (v != r.zero || w != r.zero)) return Tuple{v, w};
  return std::nullopt;
}

inline std::optional<Tuple> zero_divisor_witness(const Raw& r) {
  for (int v = 0; v < r.n; ++v)
    for (int w = 0; w < r.n; ++w)
      if (r.t(v, w) == r.zero && v != r.zero && w != r.zero) return Tuple{v, w};
  return std::nullopt;
}

inline std::optional<Tuple> annihilator_witness(const Raw& r) {
  for (int v = 0; v < r.n; ++v)
    if (r.t(v, r.zero) != r.zero || r.t(r.zero, v) != r.zero) return Tuple{v};
  return std::nullopt;
}

inline std::optional<Tuple> assoc_witness(int n, const Table& op) {
  auto f = [&](int a, int b) { return op[a * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f(f(a, b), c) != f(a, f(b, c))) return Tuple{a, b, c};
  return std::nullopt;
}

inline std::optional<Tuple> comm_witness(int n, const Table& op) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (op[a * n + b] != op[b * n + a]) return Tuple{a, b};
  return std::nullopt;
}

inline bool distributive(const Raw& r) {
  for (int a = 0; a < r.n; ++a)
    for (int x = 0; x < r.n; ++x)
      for (int y = 0; y < r.n; ++y) {
        if (r.t(a, r.p(x, y)) != r.p(r.t(a, x), r.t(a, y))) return false;
        if (r.t(r.p(x, y), a) != r.p(r.t(x, a), r.t(y, a))) return false;
      }
  return true;
}

// Every n x n table over {0..n-1} for which `identity` is a two-sided
// identity, found by scanning all n^(n*n) tables.
inline std::vector<Table> tables_with_identity(int n, int identity) {
  std::vector<Table> out;
  const int cells = n * n;
  Table t(cells, 0);
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      ok = t[identity * n + v] == v && t[v * n + identity] == v;
    if (ok) out.push_back(t);
    int i = cells - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) return out;
  }
}

// Vertices reached in one step from `sources`: terminal vertices of every
// hyperedge with an initial vertex among the sources.
inline std::set<std::string> frontier(const hyperbfs::DirectedHypergraph& g,
                                      const std::set<std::string>& sources) {
  std::set<std::string> out;
  for (const auto& e : g.edges())
    if (std::any_of(e.out.begin(), e.out.end(), [&](const auto& a) { return sources.count(a); }))
      out.insert(e.in.begin(), e.in.end());
  return out;
}

inline std::set<std::string> edge_frontier(const hyperbfs::DirectedHypergraph& g,
                                           const std::set<std::string>& sources) {
  std::set<std::string> out;
  for (const auto& e : g.edges())
    if (std::any_of(e.out.begin(), e.out.end(), [&](const auto& a) { return sources.count(a); }))
      out.insert(e.key);
  return out;
}

// Boolean matrix product by triple loop on 0/1 matrices.
inline std::vector<std::vector<int>> bool_matmul(const std::vector<std::vector<int>>& a,
                                                 const std::vector<std::vector<int>>& b) {
  std::vector<std::vector<int>> c(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < c[i].size(); ++k)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (a[i][j] && b[j][k]) c[i][k] = 1;
  return c;
}

}  // namespace oracle
