#pragma once

#include <optional>
#include <vector>

#include "hyperbfs/hypergraph.hpp"

namespace hyperbfs {

// A 1-row associative array: v and w over vertex keys, e over edge keys.
using FrontierVector = AssociativeArray;

// One at the keys of `members`, zero elsewhere. Throws KeyError.
FrontierVector indicator(const ValueSet& vs, const KeySpace& space,
                         const std::vector<Key>& members);

// e = v (+).(x) E_out^T
FrontierVector bfs_edge_step(const ValueSet& vs, const FrontierVector& v,
                             const AssociativeArray& e_out);
// w = e (+).(x) E_in
FrontierVector bfs_vertex_step(const ValueSet& vs, const FrontierVector& e,
                               const AssociativeArray& e_in);
// w = (v (+).(x) E_out^T) (+).(x) E_in
FrontierVector linalg_bfs(const ValueSet& vs, const FrontierVector& v, const IncidencePair& pair);

// The same computation through the sparse product; requires a certificate.
FrontierVector linalg_bfs_sparse(const ValueSet& vs, const AnnihilatorCertificate& cert,
                                 const FrontierVector& v, const IncidencePair& pair);

// A = E_out^T (+).(x) E_in, vertices x vertices.
AssociativeArray adjacency_array(const ValueSet& vs, const IncidencePair& pair);
// v (+).(x) (E_out^T (+).(x) E_in)
FrontierVector linalg_bfs_via_adjacency(const ValueSet& vs, const FrontierVector& v,
                                        const IncidencePair& pair);
// (E_in^T (+).(x) (E_out (+).(x) v^T))^T, the column-vector convention.
FrontierVector linalg_bfs_transposed(const ValueSet& vs, const FrontierVector& v,
                                     const IncidencePair& pair);

struct ConditionCheck {
  bool holds = true;
  std::optional<Key> violation;  // first edge (star) or vertex (dagger) that fails
  Value fold{};                  // fold value at the violation
};

// For each edge k: fold over vertices a of v(a) * E_out(k, a) is zero exactly
// when every a has v(a) = 0 or E_out(k, a) = 0.
ConditionCheck check_condition_star(const ValueSet& vs, const FrontierVector& v,
                                    const AssociativeArray& e_out);
// For each vertex a: fold over edges k of e(k) * E_in(k, a) is zero exactly
// when every k has e(k) = 0 or E_in(k, a) = 0.
ConditionCheck check_condition_dagger(const ValueSet& vs, const FrontierVector& e,
                                      const AssociativeArray& e_in);

}  // namespace hyperbfs
