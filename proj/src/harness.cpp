#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "hyperbfs/errors.hpp"
#include "hyperbfs/verify.hpp"

namespace hyperbfs {

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Star: return "star";
    case CheckKind::Dagger: return "dagger";
    case CheckKind::Traversal: return "traversal";
    case CheckKind::VertexOrder: return "vertex-order";
    case CheckKind::EdgeOrder: return "edge-order";
    case CheckKind::FoldDirection: return "fold-direction";
    case CheckKind::RowColumn: return "row-column";
    case CheckKind::Regrouping: return "regrouping";
  }
  return "?";
}

std::optional<CheckKind> check_kind_from_string(std::string_view s) {
  for (auto k : {CheckKind::Star, CheckKind::Dagger, CheckKind::Traversal, CheckKind::VertexOrder,
                 CheckKind::EdgeOrder, CheckKind::FoldDirection, CheckKind::RowColumn,
                 CheckKind::Regrouping})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool VerificationReport::all_agree() const {
  return std::all_of(records.begin(), records.end(),
                     [](const ConditionRecord& r) { return !r.asserted || r.agreement(); });
}

AssociativeArray array_product_left_fold(const ValueSet& vs, const AssociativeArray& a,
                                         const AssociativeArray& b) {
  if (!(a.cols() == b.rows())) throw ContractionError("array product: contracted key spaces differ");
  const std::size_t n1 = a.rows().size(), n2 = a.cols().size(), n3 = b.cols().size();
  const auto da = a.dense();
  const auto db = b.dense();
  AssociativeArray c(a.rows(), b.cols(), vs.zero());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n3; ++k) {
      Value acc = vs.zero();
      for (std::size_t j = 0; j < n2; ++j) {
        Value term = vs.times(da[i * n2 + j], db[j * n3 + k]);
        acc = j == 0 ? term : vs.plus(acc, term);
      }
      if (!vs.is_zero(acc)) c.set(i, k, acc);
    }
  return c;
}

namespace {

FrontierVector left_fold_bfs(const ValueSet& vs, const FrontierVector& v, const IncidencePair& p) {
  auto e = array_product_left_fold(vs, v, transpose(p.e_out));
  return array_product_left_fold(vs, e, p.e_in);
}

IncidencePair with_vertex_order(const IncidencePair& p, const KeySpace& order) {
  return {reorder(p.e_out, p.e_out.rows(), order), reorder(p.e_in, p.e_in.rows(), order)};
}

IncidencePair with_edge_order(const IncidencePair& p, const KeySpace& order) {
  return {reorder(p.e_out, order, p.e_out.cols()), reorder(p.e_in, order, p.e_in.cols())};
}

std::vector<Key> support_keys(const ValueSet& vs, const FrontierVector& v) {
  std::vector<Key> out;
  for (std::size_t c = 0; c < v.cols().size(); ++c)
    if (!vs.is_zero(v.at(0, c))) out.push_back(v.cols()[c]);
  return out;
}

bool traversal_fails(const ValueSet& vs, const DirectedHypergraph& g, const FrontierVector& v,
                     const IncidencePair& p) {
  return support_keys(vs, linalg_bfs(vs, v, p)) !=
         oracle_vertex_frontier(g, support_keys(vs, v));
}

}  // namespace

bool violates(const ValueSet& vs, CheckKind kind, const Counterexample& cx) {
  switch (kind) {
    case CheckKind::Star:
      return !check_condition_star(vs, cx.vector, cx.incidence.e_out).holds;
    case CheckKind::Dagger:
      return !check_condition_dagger(vs, cx.vector, cx.incidence.e_in).holds;
    case CheckKind::Traversal:
      return traversal_fails(vs, cx.graph, cx.vector, cx.incidence);
    case CheckKind::VertexOrder: {
      if (!cx.vertex_order) throw Error("vertex-order counterexample without an ordering");
      const auto& order = *cx.vertex_order;
      return !equal_as_map(linalg_bfs(vs, cx.vector, cx.incidence),
                           linalg_bfs(vs, reorder(cx.vector, cx.vector.rows(), order),
                                      with_vertex_order(cx.incidence, order)));
    }
    case CheckKind::EdgeOrder: {
      if (!cx.edge_order) throw Error("edge-order counterexample without an ordering");
      return !equal_as_map(linalg_bfs(vs, cx.vector, cx.incidence),
                           linalg_bfs(vs, cx.vector, with_edge_order(cx.incidence, *cx.edge_order)));
    }
    case CheckKind::FoldDirection:
      return !equal_as_map(linalg_bfs(vs, cx.vector, cx.incidence),
                           left_fold_bfs(vs, cx.vector, cx.incidence));
    case CheckKind::RowColumn:
      return !equal_as_map(linalg_bfs(vs, cx.vector, cx.incidence),
                           linalg_bfs_transposed(vs, cx.vector, cx.incidence));
    case CheckKind::Regrouping:
      return !equal_as_map(linalg_bfs(vs, cx.vector, cx.incidence),
                           linalg_bfs_via_adjacency(vs, cx.vector, cx.incidence));
  }
  return false;
}

// ---- instance generation -----------------------------------------------------

namespace {

// Star and dagger sides see only one incidence array; enumerate all weights
// up to this many assignments per graph.
constexpr std::size_t kSingleSideWeightCap = 4096;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t salt) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(salt), hi(salt)};
  return std::mt19937_64(seq);
}

// Calls fn on every tuple in values^n (first position slowest) until fn
// returns false. Returns false when stopped early.
template <class Fn>
bool for_each_tuple(const std::vector<Value>& values, std::size_t n, Fn fn) {
  std::vector<std::size_t> digit(n, 0);
  std::vector<Value> tuple(n, values.empty() ? Value{} : values[0]);
  if (values.empty() && n > 0) return true;
  while (true) {
    if (!fn(tuple)) return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digit[i] < values.size()) {
        tuple[i] = values[digit[i]];
        break;
      }
      digit[i] = 0;
      tuple[i] = values[0];
      if (i == 0) return true;
    }
    if (n == 0) return true;
  }
}

struct Slot {
  std::size_t edge;
  std::size_t vertex;
  Side side;
};

std::vector<Slot> incidence_slots(const DirectedHypergraph& g, bool out, bool in) {
  std::vector<Slot> slots;
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    for (std::size_t a = 0; a < g.vertices().size(); ++a) {
      if (out && g.is_initial(k, a)) slots.push_back({k, a, Side::Out});
      if (in && g.is_terminal(k, a)) slots.push_back({k, a, Side::In});
    }
  return slots;
}

IncidencePair weighted(const IncidencePair& ones, const std::vector<Slot>& slots,
                       const std::vector<Value>& values) {
  IncidencePair p = ones;
  for (std::size_t i = 0; i < slots.size(); ++i)
    (slots[i].side == Side::Out ? p.e_out : p.e_in).set(slots[i].edge, slots[i].vertex, values[i]);
  return p;
}

// Every assignment of nonzero weights to `slots` when there are at most `cap`
// of them; otherwise each uniform assignment followed by seeded random ones,
// `cap` in total. Stops when fn returns false.
template <class Fn>
bool for_each_weighting(const IncidencePair& ones, const std::vector<Slot>& slots,
                        const std::vector<Value>& nonzero, std::size_t cap, std::mt19937_64& rng,
                        Fn fn) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots.size() && total <= cap; ++i) total *= nonzero.size();
  if (total <= cap)
    return for_each_tuple(nonzero, slots.size(), [&](const std::vector<Value>& values) {
      return fn(weighted(ones, slots, values));
    });
  std::size_t produced = 0;
  for (Value v : nonzero) {
    if (produced++ == cap) return true;
    if (!fn(weighted(ones, slots, std::vector<Value>(slots.size(), v)))) return false;
  }
  std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
  std::vector<Value> values(slots.size());
  for (; produced < cap; ++produced) {
    for (auto& v : values) v = nonzero[pick(rng)];
    if (!fn(weighted(ones, slots, values))) return false;
  }
  return true;
}

// Every subset of the vertices as an indicator vector, by increasing bitmask.
std::vector<FrontierVector> indicator_sources(const ValueSet& vs, const KeySpace& vertices) {
  std::vector<FrontierVector> out;
  for (unsigned mask = 0; mask < (1u << vertices.size()); ++mask) {
    std::vector<Key> members;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (mask & (1u << i)) members.push_back(vertices[i]);
    out.push_back(indicator(vs, vertices, members));
  }
  return out;
}

std::vector<FrontierVector> all_vectors(const ValueSet& vs, const KeySpace& space) {
  std::vector<FrontierVector> out;
  for_each_tuple(vs.elements(), space.size(), [&](const std::vector<Value>& values) {
    out.push_back(row_vector(vs, space, values));
    return true;
  });
  return out;
}

Counterexample make_cx(CheckKind kind, std::string origin, const DirectedHypergraph& g,
                       const FrontierVector& v, const IncidencePair& p) {
  return Counterexample{kind, std::move(origin), g, v, p, std::nullopt, std::nullopt};
}

Counterexample make_cx(CheckKind kind, const ConstructionInstance& inst) {
  return make_cx(kind, inst.name, inst.graph, inst.vector, inst.incidence);
}

bool is_star_relation(Relation r) {
  return r == Relation::StarZeroSum || r == Relation::StarZeroDivisor ||
         r == Relation::StarAnnihilator;
}

std::vector<ConstructionInstance> all_fig1(const ValueSet& vs) {
  std::vector<ConstructionInstance> out;
  const auto nonzero = vs.nonzero_elements();
  for (Value v : nonzero)
    for (Value w : nonzero) {
      auto part = fig1_constructions(vs, v, w);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  return out;
}

std::vector<DirectedHypergraph> with_fixed_side(const std::vector<DirectedHypergraph>& graphs,
                                                bool fix_in) {
  std::vector<DirectedHypergraph> out;
  for (const auto& g : graphs) {
    const std::vector<Key> first{g.vertices()[0]};
    bool keep = std::all_of(g.edges().begin(), g.edges().end(), [&](const Hyperedge& e) {
      return (fix_in ? e.in : e.out) == first;
    });
    if (keep) out.push_back(g);
  }
  return out;
}

void require_checkable(const ValueSet& vs) {
  if (!vs.is_finite())
    throw NotCheckableError("value set '" + vs.id() + "' is evaluation-only");
}

std::optional<ProfileWitness> first_failure(
    std::initializer_list<std::pair<const char*, const CheckResult*>> checks) {
  for (const auto& [name, r] : checks)
    if (!r->holds) return ProfileWitness{name, *r->witness};
  return std::nullopt;
}

}  // namespace

// ---- Verifier ------------------------------------------------------------------

Verifier::Verifier(HarnessBounds bounds) : bounds_(bounds) {
  graphs_ = enumerate_hypergraphs(bounds_.max_vertices, bounds_.max_edges);
  // In-sets do not influence condition (*) and out-sets do not influence the
  // dagger condition, so one representative per pattern suffices.
  star_graphs_ = with_fixed_side(graphs_, true);
  dagger_graphs_ = with_fixed_side(graphs_, false);
}

EmpiricalResult Verifier::star_validity(const ValueSet& vs) const {
  require_checkable(vs);
  for (const auto& inst : all_fig1(vs))
    if (is_star_relation(inst.relation) &&
        !check_condition_star(vs, inst.vector, inst.incidence.e_out).holds)
      return {false, make_cx(CheckKind::Star, inst)};

  const auto nonzero = vs.nonzero_elements();
  auto rng = make_rng(bounds_.seed, 0, 1);
  std::optional<Counterexample> found;
  for (const auto& g : star_graphs_) {
    const auto ones = build_incidence(vs, g);
    const auto vectors = all_vectors(vs, g.vertices());
    for_each_weighting(ones, incidence_slots(g, true, false), nonzero, kSingleSideWeightCap, rng,
                       [&](const IncidencePair& p) {
                         for (const auto& v : vectors)
                           if (!check_condition_star(vs, v, p.e_out).holds) {
                             found = make_cx(CheckKind::Star, "enumerated", g, v, p);
                             return false;
                           }
                         return true;
                       });
    if (found) return {false, std::move(found)};
  }
  return {};
}

EmpiricalResult Verifier::dagger_validity(const ValueSet& vs) const {
  require_checkable(vs);
  for (const auto& inst : all_fig1(vs))
    if (inst.is_dagger() && !check_condition_dagger(vs, inst.vector, inst.incidence.e_in).holds)
      return {false, make_cx(CheckKind::Dagger, inst)};

  const auto nonzero = vs.nonzero_elements();
  auto rng = make_rng(bounds_.seed, 0, 2);
  std::optional<Counterexample> found;
  for (const auto& g : dagger_graphs_) {
    const auto ones = build_incidence(vs, g);
    const auto vectors = all_vectors(vs, g.edge_keys());
    for_each_weighting(ones, incidence_slots(g, false, true), nonzero, kSingleSideWeightCap, rng,
                       [&](const IncidencePair& p) {
                         for (const auto& e : vectors)
                           if (!check_condition_dagger(vs, e, p.e_in).holds) {
                             found = make_cx(CheckKind::Dagger, "enumerated", g, e, p);
                             return false;
                           }
                         return true;
                       });
    if (found) return {false, std::move(found)};
  }
  return {};
}

EmpiricalResult Verifier::traversal_validity(const ValueSet& vs, std::uint64_t stream) const {
  require_checkable(vs);
  for (const auto& inst : all_fig1(vs))
    if (is_star_relation(inst.relation) &&
        traversal_fails(vs, inst.graph, inst.vector, inst.incidence))
      return {false, make_cx(CheckKind::Traversal, inst)};

  const auto nonzero = vs.nonzero_elements();
  std::optional<Counterexample> found;
  for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
    const auto& g = graphs_[gi];
    auto rng = make_rng(bounds_.seed, stream, 1000 + gi);
    const auto sources = indicator_sources(vs, g.vertices());
    std::vector<std::vector<Key>> expected;
    for (const auto& s : sources) expected.push_back(oracle_vertex_frontier(g, support_keys(vs, s)));
    for_each_weighting(build_incidence(vs, g), incidence_slots(g, true, true), nonzero,
                       bounds_.max_weight_assignments, rng, [&](const IncidencePair& p) {
                         for (std::size_t i = 0; i < sources.size(); ++i)
                           if (support_keys(vs, linalg_bfs(vs, sources[i], p)) != expected[i]) {
                             found = make_cx(CheckKind::Traversal, "enumerated", g, sources[i], p);
                             return false;
                           }
                         return true;
                       });
    if (found) return {false, std::move(found)};
  }
  return {};
}

VerificationReport Verifier::theorem_2_1(const ValueSet& vs, std::uint64_t stream) const {
  const auto prof = profile(vs);
  const bool iv = prof.bfs_valid();
  const auto witness = first_failure({{"zero_sum_free", &prof.zero_sum_free},
                                      {"zero_divisor_free", &prof.zero_divisor_free},
                                      {"zero_annihilates", &prof.zero_annihilates}});
  VerificationReport report{vs, bounds_.seed, bounds_, iv, {}};
  auto add = [&](const char* check, EmpiricalResult r) {
    report.records.push_back(
        ConditionRecord{check, iv, r.valid, true, witness, std::move(r.counterexample)});
  };
  add("star", star_validity(vs));
  add("dagger", dagger_validity(vs));
  add("traversal", traversal_validity(vs, stream));
  return report;
}

namespace {

struct PoolInstance {
  std::string origin;
  DirectedHypergraph graph;
  FrontierVector vector;
  IncidencePair incidence;
};

std::vector<KeySpace> permutations_of(const KeySpace& keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<KeySpace> out;
  while (std::next_permutation(idx.begin(), idx.end())) {
    std::vector<Key> k;
    for (auto i : idx) k.push_back(keys[i]);
    out.emplace_back(std::move(k));
  }
  return out;
}

// First vertex reordering of the instance that changes the result.
std::optional<Counterexample> vertex_order_violation(const ValueSet& vs, const PoolInstance& in) {
  const auto base = linalg_bfs(vs, in.vector, in.incidence);
  for (const auto& order : permutations_of(in.graph.vertices())) {
    const auto alt = linalg_bfs(vs, reorder(in.vector, in.vector.rows(), order),
                                with_vertex_order(in.incidence, order));
    if (!equal_as_map(base, alt)) {
      auto cx = make_cx(CheckKind::VertexOrder, in.origin, in.graph, in.vector, in.incidence);
      cx.vertex_order = order;
      return cx;
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> edge_order_violation(const ValueSet& vs, const PoolInstance& in) {
  const auto base = linalg_bfs(vs, in.vector, in.incidence);
  for (const auto& order : permutations_of(in.graph.edge_keys())) {
    if (!equal_as_map(base, linalg_bfs(vs, in.vector, with_edge_order(in.incidence, order)))) {
      auto cx = make_cx(CheckKind::EdgeOrder, in.origin, in.graph, in.vector, in.incidence);
      cx.edge_order = order;
      return cx;
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> simple_violation(const ValueSet& vs, CheckKind kind,
                                               const PoolInstance& in) {
  auto cx = make_cx(kind, in.origin, in.graph, in.vector, in.incidence);
  if (violates(vs, kind, cx)) return cx;
  return std::nullopt;
}

PoolInstance pooled(const ConstructionInstance& inst) {
  return {inst.name, inst.graph, inst.vector, inst.incidence};
}

}  // namespace

std::optional<VerificationReport> Verifier::conventions(const ValueSet& vs,
                                                        std::uint64_t stream) const {
  require_checkable(vs);
  const auto prof = profile(vs);
  if (!prof.bfs_valid()) return std::nullopt;

  const auto all = vs.elements();
  const auto nonzero = vs.nonzero_elements();

  // Shared pool: enumerated graphs with unit incidence and every indicator
  // source, then seeded random weighted instances.
  std::vector<PoolInstance> pool;
  for (const auto& g : graphs_) {
    const auto ones = build_incidence(vs, g);
    for (auto& s : indicator_sources(vs, g.vertices()))
      pool.push_back({"enumerated", g, std::move(s), ones});
  }
  auto rng = make_rng(bounds_.seed, stream, 7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t r = 0; r < bounds_.random_instances; ++r) {
    auto g = random_hypergraph(rng, bounds_.random_max_vertices, bounds_.random_max_edges);
    auto p = build_incidence(vs, g, random_weights(vs, g, rng));
    std::vector<Value> values(g.vertices().size());
    for (auto& v : values) v = all[pick(rng)];
    auto v = row_vector(vs, g.vertices(), values);
    pool.push_back({"random", std::move(g), std::move(v), std::move(p)});
  }

  // Figure instances first, then the pool; stop at the first violation.
  auto scan = [&](const std::vector<PoolInstance>& figures,
                  auto violation) -> EmpiricalResult {
    const std::array<const std::vector<PoolInstance>*, 2> lists{&figures, &pool};
    for (const auto* list : lists)
      for (const auto& in : *list)
        if (auto cx = violation(in)) return EmpiricalResult{false, std::move(cx)};
    return EmpiricalResult{};
  };

  std::vector<PoolInstance> plus_figs, times_comm_figs, regroup_figs;
  for (Value u : all)
    for (Value v : all) plus_figs.push_back(pooled(fig2_plus_comm(vs, u, v)));
  for (Value u : all)
    for (Value v : all)
      for (Value w : all) plus_figs.push_back(pooled(fig2_plus_assoc(vs, u, v, w)));
  for (Value x : all)
    for (Value y : nonzero) times_comm_figs.push_back(pooled(fig2_times_comm(vs, x, y)));
  for (Value u : all)
    for (Value v : all)
      for (Value w : all) {
        if (!vs.is_zero(u) && !vs.is_zero(v) && !vs.is_zero(w))
          regroup_figs.push_back(pooled(fig2_times_assoc(vs, u, v, w)));
        regroup_figs.push_back(pooled(fig2_plus_assoc_regroup(vs, u, v, w)));
      }

  VerificationReport report{vs, bounds_.seed, bounds_, true, {}};
  auto add = [&](const char* check, bool profile_flag, std::optional<ProfileWitness> w,
                 EmpiricalResult r, bool asserted = true) {
    report.records.push_back(ConditionRecord{check, profile_flag, r.valid, asserted, std::move(w),
                                             std::move(r.counterexample)});
  };

  const bool plus_ac = prof.plus_assoc.holds && prof.plus_comm.holds;
  const auto plus_ac_witness =
      first_failure({{"plus_comm", &prof.plus_comm}, {"plus_assoc", &prof.plus_assoc}});

  add("vertex-order", plus_ac, plus_ac_witness,
      scan(plus_figs, [&](const PoolInstance& in) { return vertex_order_violation(vs, in); }));
  add("edge-order", plus_ac, plus_ac_witness,
      scan({}, [&](const PoolInstance& in) { return edge_order_violation(vs, in); }), false);
  add("fold-direction", prof.plus_assoc.holds, first_failure({{"plus_assoc", &prof.plus_assoc}}),
      scan(plus_figs, [&](const PoolInstance& in) {
        return simple_violation(vs, CheckKind::FoldDirection, in);
      }));
  add("row-column", prof.times_comm.holds, first_failure({{"times_comm", &prof.times_comm}}),
      scan(times_comm_figs, [&](const PoolInstance& in) {
        return simple_violation(vs, CheckKind::RowColumn, in);
      }));
  if (plus_ac)
    add("regrouping", prof.times_assoc.holds, first_failure({{"times_assoc", &prof.times_assoc}}),
        scan(regroup_figs, [&](const PoolInstance& in) {
          return simple_violation(vs, CheckKind::Regrouping, in);
        }));
  return report;
}

// ---- free functions and harness drivers -------------------------------------

EmpiricalResult empirical_bfs_validity(const ValueSet& vs, const HarnessBounds& bounds) {
  require_checkable(vs);
  return Verifier(bounds).traversal_validity(vs);
}

EmpiricalResult empirical_bfs_validity(const ValueSet& vs,
                                       const std::vector<ConstructionInstance>& instances) {
  for (const auto& inst : instances) {
    if (inst.is_dagger()) continue;  // their vector is an edge vector
    if (traversal_fails(vs, inst.graph, inst.vector, inst.incidence))
      return {false, make_cx(CheckKind::Traversal, inst)};
  }
  return {};
}

namespace {

using ReportFn = std::function<std::optional<VerificationReport>(const ValueSet&, std::uint64_t)>;

HarnessSummary run_harness(int carrier_size, const HarnessBounds& bounds, const ReportSink& sink,
                           const ReportFn& fn) {
  if (carrier_size > 3)
    throw BoundsError("harness runs exhaustively only for carrier sizes up to 3");
  const ValueSetEnumeration sets(carrier_size);
  const std::uint64_t total = sets.count();
  const unsigned jobs = std::max(1u, bounds.jobs);
  const std::uint64_t block = 64ull * jobs;

  HarnessSummary summary;
  std::vector<std::optional<VerificationReport>> results;
  for (std::uint64_t start = 0; start < total; start += block) {
    const std::uint64_t len = std::min(block, total - start);
    results.assign(len, std::nullopt);
    auto work = [&](std::uint64_t i) { results[i] = fn(sets.at(start + i), start + i); };
    if (jobs == 1) {
      for (std::uint64_t i = 0; i < len; ++i) work(i);
    } else {
      std::atomic<std::uint64_t> next{0};
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < jobs; ++t)
        threads.emplace_back([&, t] {
          try {
            for (std::uint64_t i; (i = next++) < len;) work(i);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      for (auto& th : threads) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (const auto& r : results) {
      ++summary.value_sets;
      if (!r) continue;
      ++summary.reports;
      summary.conforming += r->bfs_conditions;
      summary.agreeing += r->all_agree();
      for (const auto& rec : r->records) {
        if (!rec.asserted) continue;
        ++summary.records;
        summary.agreements += rec.agreement();
      }
      if (sink) sink(*r);
    }
  }
  return summary;
}

}  // namespace

HarnessSummary theorem_2_1_harness(int carrier_size, const HarnessBounds& bounds,
                                   const ReportSink& sink) {
  const Verifier verifier(bounds);
  return run_harness(carrier_size, bounds, sink,
                     [&](const ValueSet& vs, std::uint64_t stream) {
                       return std::optional(verifier.theorem_2_1(vs, stream));
                     });
}

HarnessSummary convention_harness(int carrier_size, const HarnessBounds& bounds,
                                  const ReportSink& sink) {
  const Verifier verifier(bounds);
  return run_harness(carrier_size, bounds, sink, [&](const ValueSet& vs, std::uint64_t stream) {
    return verifier.conventions(vs, stream);
  });
}

}  // namespace hyperbfs
