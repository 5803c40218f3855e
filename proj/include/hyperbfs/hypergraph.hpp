#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "hyperbfs/array.hpp"

namespace hyperbfs {

struct Hyperedge {
  Key key;
  std::vector<Key> out;  // initial vertices, in vertex order
  std::vector<Key> in;   // terminal vertices, in vertex order
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// Directed hypergraph with fixed vertex and hyperedge orderings. Every
// hyperedge has nonempty out and in sets.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;
  // Throws IncidenceError on unknown vertices, empty sides or duplicate edge
  // keys. Out/in lists are normalised to vertex order.
  DirectedHypergraph(KeySpace vertices, std::vector<Hyperedge> edges);

  const KeySpace& vertices() const { return vertices_; }
  const KeySpace& edge_keys() const { return edge_keys_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }

  bool is_initial(std::size_t edge, std::size_t vertex) const;
  bool is_terminal(std::size_t edge, std::size_t vertex) const;

  friend bool operator==(const DirectedHypergraph& a, const DirectedHypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  KeySpace vertices_;
  KeySpace edge_keys_;
  std::vector<Hyperedge> edges_;
  // Row-major edge x vertex incidence flags.
  std::vector<bool> out_;
  std::vector<bool> in_;
};

enum class Side { Out, In };

struct IncidencePair {
  AssociativeArray e_out;  // rows = hyperedges, cols = vertices
  AssociativeArray e_in;
};

// (edge key, vertex key, side) -> nonzero weight; unlisted incidences get one.
using IncidenceWeights = std::map<std::tuple<Key, Key, Side>, Value>;

IncidencePair build_incidence(const ValueSet& vs, const DirectedHypergraph& g,
                              const IncidenceWeights& weights = {});

struct IncidenceViolation {
  Side side;
  Key edge;
  Key vertex;
};

struct IncidenceValidation {
  bool valid = true;
  std::optional<IncidenceViolation> violation;
};

// Nonzero patterns of the pair against the incidence relation of g.
// Throws KeyError when the key spaces do not match g.
IncidenceValidation validate_incidence(const ValueSet& vs, const DirectedHypergraph& g,
                                       const IncidencePair& pair);

// Edges with an initial vertex in `sources`, in edge order.
std::vector<Key> oracle_edge_frontier(const DirectedHypergraph& g,
                                      const std::vector<Key>& sources);
// Terminal vertices of those edges, in vertex order.
std::vector<Key> oracle_vertex_frontier(const DirectedHypergraph& g,
                                        const std::vector<Key>& sources);

// Vertex names a, b, c, ... and edge names k1, k2, ...
KeySpace default_vertices(std::size_t n);
KeySpace default_edge_keys(std::size_t n);

// Every hypergraph on exactly nv vertices with exactly ne hyperedges, edges
// taken as an ordered list of (out, in) pairs of nonempty subsets. Order:
// the first edge varies slowest; subsets by increasing bitmask.
std::vector<DirectedHypergraph> hypergraphs_of_size(std::size_t nv, std::size_t ne);

// All hypergraphs with 1..max_vertices vertices and 1..max_edges edges,
// vertex count major. Guarded to max_vertices <= 3, max_edges <= 2.
std::vector<DirectedHypergraph> enumerate_hypergraphs(std::size_t max_vertices,
                                                      std::size_t max_edges);

// Uniform vertex count in [1, max_vertices], edge count in [1, max_edges],
// each side a uniform nonempty subset.
DirectedHypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices,
                                     std::size_t max_edges);

// Random nonzero weight on every incidence, drawn from `vs.nonzero_elements()`.
IncidenceWeights random_weights(const ValueSet& vs, const DirectedHypergraph& g,
                                std::mt19937_64& rng);

}  // namespace hyperbfs
