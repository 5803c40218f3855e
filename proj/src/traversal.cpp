#include "hyperbfs/traversal.hpp"

#include "hyperbfs/errors.hpp"

namespace hyperbfs {

namespace {

void require_row_vector(const AssociativeArray& v, const char* what) {
  if (v.rows().size() != 1)
    throw KeyError(std::string(what) + " must be a 1-row array");
}

}  // namespace

FrontierVector indicator(const ValueSet& vs, const KeySpace& space,
                         const std::vector<Key>& members) {
  FrontierVector v(KeySpace{kVectorRow}, space, vs.zero());
  for (const auto& k : members) v.set(0, space.index_of(k), vs.one());
  return v;
}

FrontierVector bfs_edge_step(const ValueSet& vs, const FrontierVector& v,
                             const AssociativeArray& e_out) {
  require_row_vector(v, "source vector");
  return array_product_strict(vs, v, transpose(e_out));
}

FrontierVector bfs_vertex_step(const ValueSet& vs, const FrontierVector& e,
                               const AssociativeArray& e_in) {
  require_row_vector(e, "edge vector");
  return array_product_strict(vs, e, e_in);
}

FrontierVector linalg_bfs(const ValueSet& vs, const FrontierVector& v, const IncidencePair& pair) {
  return bfs_vertex_step(vs, bfs_edge_step(vs, v, pair.e_out), pair.e_in);
}

FrontierVector linalg_bfs_sparse(const ValueSet& vs, const AnnihilatorCertificate& cert,
                                 const FrontierVector& v, const IncidencePair& pair) {
  require_row_vector(v, "source vector");
  auto e = array_product_sparse(vs, cert, v, transpose(pair.e_out));
  return array_product_sparse(vs, cert, e, pair.e_in);
}

AssociativeArray adjacency_array(const ValueSet& vs, const IncidencePair& pair) {
  return array_product_strict(vs, transpose(pair.e_out), pair.e_in);
}

FrontierVector linalg_bfs_via_adjacency(const ValueSet& vs, const FrontierVector& v,
                                        const IncidencePair& pair) {
  require_row_vector(v, "source vector");
  return array_product_strict(vs, v, adjacency_array(vs, pair));
}

FrontierVector linalg_bfs_transposed(const ValueSet& vs, const FrontierVector& v,
                                     const IncidencePair& pair) {
  require_row_vector(v, "source vector");
  auto edge_column = array_product_strict(vs, pair.e_out, transpose(v));
  return transpose(array_product_strict(vs, transpose(pair.e_in), edge_column));
}

namespace {

// Shared body of (*) and (+): `vec` indexes the contracted key space, and
// arr_at(c, r) reads the array entry pairing contracted key c with result key r.
template <class ArrAt>
ConditionCheck check_pattern(const ValueSet& vs, const FrontierVector& vec,
                             const KeySpace& result_keys, std::size_t contracted, ArrAt arr_at) {
  std::vector<Value> terms(contracted);
  for (std::size_t r = 0; r < result_keys.size(); ++r) {
    bool all_zero_pairs = true;
    for (std::size_t c = 0; c < contracted; ++c) {
      const Value x = vec.at(0, c);
      const Value y = arr_at(c, r);
      terms[c] = vs.times(x, y);
      if (!vs.is_zero(x) && !vs.is_zero(y)) all_zero_pairs = false;
    }
    const Value fold = fold_plus(vs, terms);
    if (vs.is_zero(fold) != all_zero_pairs) return {false, result_keys[r], fold};
  }
  return {};
}

}  // namespace

ConditionCheck check_condition_star(const ValueSet& vs, const FrontierVector& v,
                                    const AssociativeArray& e_out) {
  require_row_vector(v, "source vector");
  if (!(v.cols() == e_out.cols()))
    throw ContractionError("condition (*): vector and E_out vertex orderings differ");
  return check_pattern(vs, v, e_out.rows(), v.cols().size(),
                       [&](std::size_t a, std::size_t k) { return e_out.at(k, a); });
}

ConditionCheck check_condition_dagger(const ValueSet& vs, const FrontierVector& e,
                                      const AssociativeArray& e_in) {
  require_row_vector(e, "edge vector");
  if (!(e.cols() == e_in.rows()))
    throw ContractionError("condition (+): vector and E_in edge orderings differ");
  return check_pattern(vs, e, e_in.cols(), e.cols().size(),
                       [&](std::size_t k, std::size_t a) { return e_in.at(k, a); });
}

}  // namespace hyperbfs
