#include "hyperbfs/hypergraph.hpp"

#include <algorithm>

#include "hyperbfs/errors.hpp"

namespace hyperbfs {

DirectedHypergraph::DirectedHypergraph(KeySpace vertices, std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t nv = vertices_.size();
  std::vector<Key> keys;
  out_.assign(edges_.size() * nv, false);
  in_.assign(edges_.size() * nv, false);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto& e = edges_[k];
    keys.push_back(e.key);
    auto normalise = [&](std::vector<Key>& side, std::vector<bool>& flags, const char* what) {
      if (side.empty())
        throw IncidenceError("hyperedge '" + e.key + "' has an empty " + what + " set");
      for (const auto& v : side) {
        auto i = vertices_.find(v);
        if (!i) throw IncidenceError("hyperedge '" + e.key + "' names unknown vertex '" + v + "'");
        flags[k * nv + *i] = true;
      }
      side.clear();
      for (std::size_t i = 0; i < nv; ++i)
        if (flags[k * nv + i]) side.push_back(vertices_[i]);
    };
    normalise(e.out, out_, "out");
    normalise(e.in, in_, "in");
  }
  try {
    edge_keys_ = KeySpace(std::move(keys));
  } catch (const KeyError& err) {
    throw IncidenceError(err.what());
  }
}

bool DirectedHypergraph::is_initial(std::size_t edge, std::size_t vertex) const {
  return out_[edge * vertices_.size() + vertex];
}

bool DirectedHypergraph::is_terminal(std::size_t edge, std::size_t vertex) const {
  return in_[edge * vertices_.size() + vertex];
}

IncidencePair build_incidence(const ValueSet& vs, const DirectedHypergraph& g,
                              const IncidenceWeights& weights) {
  const auto& V = g.vertices();
  const auto& K = g.edge_keys();
  IncidencePair pair{AssociativeArray(K, V, vs.zero()), AssociativeArray(K, V, vs.zero())};
  for (std::size_t k = 0; k < K.size(); ++k)
    for (std::size_t a = 0; a < V.size(); ++a) {
      if (g.is_initial(k, a)) pair.e_out.set(k, a, vs.one());
      if (g.is_terminal(k, a)) pair.e_in.set(k, a, vs.one());
    }
  for (const auto& [where, value] : weights) {
    const auto& [edge, vertex, side] = where;
    const auto k = K.find(edge);
    const auto a = V.find(vertex);
    const bool incident =
        k && a && (side == Side::Out ? g.is_initial(*k, *a) : g.is_terminal(*k, *a));
    const std::string label = "(" + edge + ", " + vertex + (side == Side::Out ? ", out)" : ", in)");
    if (!incident) throw IncidenceError("weight " + label + " is not on an incidence");
    if (vs.is_zero(value)) throw IncidenceError("weight " + label + " is zero");
    (side == Side::Out ? pair.e_out : pair.e_in).set(*k, *a, value);
  }
  return pair;
}

IncidenceValidation validate_incidence(const ValueSet& vs, const DirectedHypergraph& g,
                                       const IncidencePair& pair) {
  for (const auto* arr : {&pair.e_out, &pair.e_in})
    if (!(arr->rows() == g.edge_keys()) || !(arr->cols() == g.vertices()))
      throw KeyError("incidence arrays must be indexed by the graph's edges x vertices");
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    for (std::size_t a = 0; a < g.vertices().size(); ++a) {
      if (vs.is_zero(pair.e_out.at(k, a)) == g.is_initial(k, a))
        return {false, IncidenceViolation{Side::Out, g.edge_keys()[k], g.vertices()[a]}};
      if (vs.is_zero(pair.e_in.at(k, a)) == g.is_terminal(k, a))
        return {false, IncidenceViolation{Side::In, g.edge_keys()[k], g.vertices()[a]}};
    }
  return {};
}

namespace {

std::vector<bool> source_mask(const DirectedHypergraph& g, const std::vector<Key>& sources) {
  std::vector<bool> mask(g.vertices().size(), false);
  for (const auto& s : sources) mask[g.vertices().index_of(s)] = true;
  return mask;
}

std::vector<bool> reached_edges(const DirectedHypergraph& g, const std::vector<bool>& src) {
  std::vector<bool> reached(g.edges().size(), false);
  for (std::size_t k = 0; k < reached.size(); ++k)
    for (std::size_t a = 0; a < src.size(); ++a)
      if (src[a] && g.is_initial(k, a)) reached[k] = true;
  return reached;
}

}  // namespace

std::vector<Key> oracle_edge_frontier(const DirectedHypergraph& g,
                                      const std::vector<Key>& sources) {
  const auto reached = reached_edges(g, source_mask(g, sources));
  std::vector<Key> out;
  for (std::size_t k = 0; k < reached.size(); ++k)
    if (reached[k]) out.push_back(g.edge_keys()[k]);
  return out;
}

std::vector<Key> oracle_vertex_frontier(const DirectedHypergraph& g,
                                        const std::vector<Key>& sources) {
  const auto reached = reached_edges(g, source_mask(g, sources));
  std::vector<Key> out;
  for (std::size_t a = 0; a < g.vertices().size(); ++a)
    for (std::size_t k = 0; k < reached.size(); ++k)
      if (reached[k] && g.is_terminal(k, a)) {
        out.push_back(g.vertices()[a]);
        break;
      }
  return out;
}

KeySpace default_vertices(std::size_t n) {
  if (n > 26) throw BoundsError("at most 26 default vertex names");
  std::vector<Key> keys;
  for (std::size_t i = 0; i < n; ++i) keys.emplace_back(1, static_cast<char>('a' + i));
  return KeySpace(std::move(keys));
}

KeySpace default_edge_keys(std::size_t n) {
  std::vector<Key> keys;
  for (std::size_t i = 1; i <= n; ++i) keys.push_back("k" + std::to_string(i));
  return KeySpace(std::move(keys));
}

namespace {

std::vector<Key> subset(const KeySpace& vertices, unsigned mask) {
  std::vector<Key> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (mask & (1u << i)) out.push_back(vertices[i]);
  return out;
}

}  // namespace

std::vector<DirectedHypergraph> hypergraphs_of_size(std::size_t nv, std::size_t ne) {
  if (nv == 0 || nv > 4 || ne > 3) throw BoundsError("hypergraphs_of_size: nv in 1..4, ne <= 3");
  const auto V = default_vertices(nv);
  const auto K = default_edge_keys(ne);
  const unsigned subsets = (1u << nv) - 1;  // nonempty subsets: masks 1..subsets
  const std::uint64_t per_edge = std::uint64_t{subsets} * subsets;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ne; ++i) total *= per_edge;

  std::vector<DirectedHypergraph> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Hyperedge> edges(ne);
    std::uint64_t c = code;
    for (std::size_t k = ne; k-- > 0;) {
      const std::uint64_t pick = c % per_edge;
      c /= per_edge;
      edges[k] = Hyperedge{K[k], subset(V, static_cast<unsigned>(pick / subsets) + 1),
                           subset(V, static_cast<unsigned>(pick % subsets) + 1)};
    }
    out.emplace_back(V, std::move(edges));
  }
  return out;
}

std::vector<DirectedHypergraph> enumerate_hypergraphs(std::size_t max_vertices,
                                                      std::size_t max_edges) {
  if (max_vertices > 3 || max_edges > 2)
    throw BoundsError("exhaustive hypergraph enumeration is limited to 3 vertices, 2 edges");
  std::vector<DirectedHypergraph> out;
  for (std::size_t nv = 1; nv <= max_vertices; ++nv)
    for (std::size_t ne = 1; ne <= max_edges; ++ne) {
      auto part = hypergraphs_of_size(nv, ne);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  return out;
}

DirectedHypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices,
                                     std::size_t max_edges) {
  if (max_vertices == 0 || max_vertices > 26 || max_edges == 0)
    throw BoundsError("random_hypergraph: need 1..26 vertices and at least one edge");
  const std::size_t nv = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t ne = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
  const auto V = default_vertices(nv);
  const auto K = default_edge_keys(ne);
  auto random_side = [&] {
    std::vector<Key> side;
    while (side.empty())
      for (const auto& v : V)
        if (rng() & 1u) side.push_back(v);
    return side;
  };
  std::vector<Hyperedge> edges;
  for (const auto& k : K) {
    auto out = random_side();
    edges.push_back(Hyperedge{k, std::move(out), random_side()});
  }
  return DirectedHypergraph(V, std::move(edges));
}

IncidenceWeights random_weights(const ValueSet& vs, const DirectedHypergraph& g,
                                std::mt19937_64& rng) {
  const auto nonzero = vs.nonzero_elements();
  if (nonzero.empty()) throw Error("value set '" + vs.id() + "' has no nonzero element");
  std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
  IncidenceWeights w;
  for (const auto& e : g.edges()) {
    for (const auto& v : e.out) w[{e.key, v, Side::Out}] = nonzero[pick(rng)];
    for (const auto& v : e.in) w[{e.key, v, Side::In}] = nonzero[pick(rng)];
  }
  return w;
}

}  // namespace hyperbfs
