#include "hyperbfs/errors.hpp"
#include "hyperbfs/verify.hpp"

namespace hyperbfs {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::StarZeroSum: return "star-zero-sum";
    case Relation::StarZeroDivisor: return "star-zero-divisor";
    case Relation::StarAnnihilator: return "star-annihilator";
    case Relation::DaggerZeroSum: return "dagger-zero-sum";
    case Relation::DaggerZeroDivisor: return "dagger-zero-divisor";
    case Relation::DaggerAnnihilator: return "dagger-annihilator";
    case Relation::PlusComm: return "plus-comm";
    case Relation::PlusAssoc: return "plus-assoc";
    case Relation::TimesComm: return "times-comm";
    case Relation::TimesAssoc: return "times-assoc";
    case Relation::PlusAssocRegroup: return "plus-assoc-regroup";
  }
  return "?";
}

bool ConstructionInstance::is_dagger() const {
  return relation == Relation::DaggerZeroSum || relation == Relation::DaggerZeroDivisor ||
         relation == Relation::DaggerAnnihilator;
}

namespace {

// Hyperedge-by-vertex array from dense rows.
AssociativeArray incidence_array(const ValueSet& vs, const DirectedHypergraph& g,
                                 std::initializer_list<std::initializer_list<Value>> rows) {
  AssociativeArray a(g.edge_keys(), g.vertices(), vs.zero());
  std::size_t k = 0;
  for (const auto& row : rows) {
    std::size_t v = 0;
    for (Value x : row) {
      if (!vs.is_zero(x)) a.set(k, v, x);
      ++v;
    }
    ++k;
  }
  return a;
}

FrontierVector vec(const ValueSet& vs, const KeySpace& space, std::vector<Value> values) {
  return row_vector(vs, space, values);
}

DirectedHypergraph graph(std::vector<Key> vertices, std::vector<Hyperedge> edges) {
  return DirectedHypergraph(KeySpace(std::move(vertices)), std::move(edges));
}

ConstructionInstance make(const ValueSet& vs, std::string name, Relation rel,
                          DirectedHypergraph g, FrontierVector v, IncidencePair pair,
                          std::vector<Value> params, Key probe, Value expected) {
  if (!validate_incidence(vs, g, pair).valid)
    throw IncidenceError(name + ": arrays do not match the construction's hypergraph");
  return ConstructionInstance{std::move(name), rel,     std::move(g),      std::move(v),
                              std::move(pair), std::move(params), std::move(probe), expected,
                              std::nullopt,    std::nullopt};
}

void require_nonzero(const ValueSet& vs, std::initializer_list<Value> params, const char* who) {
  for (Value p : params)
    if (vs.is_zero(p))
      throw Error(std::string(who) + ": parameter must be nonzero, got " + vs.name(p));
}

}  // namespace

std::vector<ConstructionInstance> fig1_constructions(const ValueSet& vs, Value v, Value w) {
  require_nonzero(vs, {v, w}, "fig1_constructions");
  const Value o = vs.zero();
  const Value l = vs.one();
  std::vector<ConstructionInstance> out;

  {  // two vertices, k from {a, b} to {a}
    auto g = graph({"a", "b"}, {{"k", {"a", "b"}, {"a"}}});
    IncidencePair p{incidence_array(vs, g, {{v, w}}), incidence_array(vs, g, {{l, o}})};
    auto src = vec(vs, g.vertices(), {l, l});
    out.push_back(make(vs, "fig1.1", Relation::StarZeroSum, g, src, p, {v, w}, "k",
                       vs.plus(v, w)));
  }
  {  // self-loop at a
    auto g = graph({"a"}, {{"k", {"a"}, {"a"}}});
    IncidencePair p{incidence_array(vs, g, {{w}}), incidence_array(vs, g, {{l}})};
    auto src = vec(vs, g.vertices(), {v});
    out.push_back(make(vs, "fig1.2", Relation::StarZeroDivisor, g, src, p, {v, w}, "k",
                       vs.times(v, w)));
  }
  {  // k from {a} to {b, c}, source weight on c only
    auto g = graph({"a", "b", "c"}, {{"k", {"a"}, {"b", "c"}}});
    IncidencePair p{incidence_array(vs, g, {{v, o, o}}), incidence_array(vs, g, {{o, l, l}})};
    auto src = vec(vs, g.vertices(), {o, o, v});
    out.push_back(make(vs, "fig1.3", Relation::StarAnnihilator, g, src, p, {v}, "k",
                       vs.plus(vs.times(o, v), vs.plus(vs.times(o, o), vs.times(v, o)))));
  }
  {  // two self-loops at a
    auto g = graph({"a"}, {{"k1", {"a"}, {"a"}}, {"k2", {"a"}, {"a"}}});
    IncidencePair p{build_incidence(vs, g).e_out, incidence_array(vs, g, {{v}, {w}})};
    auto e = vec(vs, g.edge_keys(), {l, l});
    out.push_back(make(vs, "fig1.4", Relation::DaggerZeroSum, g, e, p, {v, w}, "a",
                       vs.plus(v, w)));
  }
  {  // self-loop at a, edge weight v
    auto g = graph({"a"}, {{"k", {"a"}, {"a"}}});
    IncidencePair p{build_incidence(vs, g).e_out, incidence_array(vs, g, {{w}})};
    auto e = vec(vs, g.edge_keys(), {v});
    out.push_back(make(vs, "fig1.5", Relation::DaggerZeroDivisor, g, e, p, {v, w}, "a",
                       vs.times(v, w)));
  }
  {  // loops at a and b, plus k2 from {a} to {b}
    auto g = graph({"a", "b"},
                   {{"k1", {"a"}, {"a"}}, {"k2", {"a"}, {"b"}}, {"k3", {"b"}, {"b"}}});
    IncidencePair p{build_incidence(vs, g).e_out,
                    incidence_array(vs, g, {{v, o}, {o, l}, {o, l}})};
    auto e = vec(vs, g.edge_keys(), {o, v, o});
    out.push_back(make(vs, "fig1.6", Relation::DaggerAnnihilator, g, e, p, {v}, "a",
                       vs.plus(vs.times(o, v), vs.plus(vs.times(v, o), vs.times(o, o)))));
  }
  return out;
}

ConstructionInstance fig2_plus_comm(const ValueSet& vs, Value u, Value v) {
  const Value o = vs.zero(), l = vs.one();
  auto g = graph({"a", "b"}, {{"k", {"a", "b"}, {"a"}}});
  IncidencePair p{incidence_array(vs, g, {{l, l}}), incidence_array(vs, g, {{l, o}})};
  auto inst = make(vs, "fig2.1", Relation::PlusComm, g, vec(vs, g.vertices(), {u, v}), p, {u, v},
                   "a", vs.plus(u, v));
  inst.expected_alternative = vs.plus(v, u);
  inst.alternative_order = KeySpace{"b", "a"};
  return inst;
}

ConstructionInstance fig2_plus_assoc(const ValueSet& vs, Value u, Value v, Value w) {
  const Value o = vs.zero(), l = vs.one();
  auto g = graph({"a", "b", "c"}, {{"k", {"a", "b", "c"}, {"a"}}});
  IncidencePair p{incidence_array(vs, g, {{l, l, l}}), incidence_array(vs, g, {{l, o, o}})};
  auto inst = make(vs, "fig2.2", Relation::PlusAssoc, g, vec(vs, g.vertices(), {u, v, w}), p,
                   {u, v, w}, "a", vs.plus(u, vs.plus(v, w)));
  inst.expected_alternative = vs.plus(w, vs.plus(u, v));
  inst.alternative_order = KeySpace{"c", "a", "b"};
  return inst;
}

ConstructionInstance fig2_times_comm(const ValueSet& vs, Value x, Value y) {
  require_nonzero(vs, {y}, "fig2_times_comm");
  const Value o = vs.zero(), l = vs.one();
  // E_out = (y 0) and E_in = (1 1) describe k from {a} to {a, b}.
  auto g = graph({"a", "b"}, {{"k", {"a"}, {"a", "b"}}});
  IncidencePair p{incidence_array(vs, g, {{y, o}}), incidence_array(vs, g, {{l, l}})};
  auto inst = make(vs, "fig2.1-row-column", Relation::TimesComm, g,
                   vec(vs, g.vertices(), {x, o}), p, {x, y}, "a", vs.times(x, y));
  inst.expected_alternative = vs.times(y, x);
  return inst;
}

ConstructionInstance fig2_times_assoc(const ValueSet& vs, Value u, Value v, Value w) {
  require_nonzero(vs, {u, v, w}, "fig2_times_assoc");
  const Value o = vs.zero(), l = vs.one();
  auto g = graph({"a", "b"}, {{"k", {"a", "b"}, {"a"}}});
  IncidencePair p{incidence_array(vs, g, {{v, l}}), incidence_array(vs, g, {{w, o}})};
  auto inst = make(vs, "fig2.1-regrouping", Relation::TimesAssoc, g,
                   vec(vs, g.vertices(), {u, o}), p, {u, v, w}, "a",
                   vs.times(vs.times(u, v), w));
  inst.expected_alternative = vs.times(u, vs.times(v, w));
  return inst;
}

ConstructionInstance fig2_plus_assoc_regroup(const ValueSet& vs, Value u, Value v, Value w) {
  const Value o = vs.zero(), l = vs.one();
  auto g = graph({"a", "b", "c"}, {{"k1", {"a", "b"}, {"a", "c"}}, {"k2", {"c"}, {"a", "b"}}});
  IncidencePair p{incidence_array(vs, g, {{l, l, o}, {o, o, l}}),
                  incidence_array(vs, g, {{l, o, l}, {l, l, o}})};
  auto inst = make(vs, "fig2.3", Relation::PlusAssocRegroup, g,
                   vec(vs, g.vertices(), {u, v, w}), p, {u, v, w}, "a",
                   vs.plus(vs.plus(u, v), w));
  inst.expected_alternative = vs.plus(u, vs.plus(v, w));
  return inst;
}

std::vector<ConstructionInstance> fig2_constructions(const ValueSet& vs, const Fig2Parameters& q) {
  return {fig2_plus_comm(vs, q.u, q.v), fig2_plus_assoc(vs, q.u, q.v, q.w),
          fig2_times_comm(vs, q.x, q.y), fig2_times_assoc(vs, q.u, q.v, q.w),
          fig2_plus_assoc_regroup(vs, q.u, q.v, q.w)};
}

namespace {

FrontierVector reorder_vector(const FrontierVector& v, const KeySpace& cols) {
  return reorder(v, v.rows(), cols);
}

IncidencePair reorder_vertices(const IncidencePair& p, const KeySpace& vertices) {
  return {reorder(p.e_out, p.e_out.rows(), vertices), reorder(p.e_in, p.e_in.rows(), vertices)};
}

}  // namespace

Value evaluate_probe(const ValueSet& vs, const ConstructionInstance& inst) {
  switch (inst.relation) {
    case Relation::StarZeroSum:
    case Relation::StarZeroDivisor:
    case Relation::StarAnnihilator:
      return bfs_edge_step(vs, inst.vector, inst.incidence.e_out).read(kVectorRow, inst.probe);
    case Relation::DaggerZeroSum:
    case Relation::DaggerZeroDivisor:
    case Relation::DaggerAnnihilator:
      return bfs_vertex_step(vs, inst.vector, inst.incidence.e_in).read(kVectorRow, inst.probe);
    default:
      return linalg_bfs(vs, inst.vector, inst.incidence).read(kVectorRow, inst.probe);
  }
}

std::optional<Value> evaluate_alternative(const ValueSet& vs, const ConstructionInstance& inst) {
  switch (inst.relation) {
    case Relation::PlusComm:
    case Relation::PlusAssoc: {
      const auto& order = *inst.alternative_order;
      return linalg_bfs(vs, reorder_vector(inst.vector, order),
                        reorder_vertices(inst.incidence, order))
          .read(kVectorRow, inst.probe);
    }
    case Relation::TimesComm:
      return linalg_bfs_transposed(vs, inst.vector, inst.incidence).read(kVectorRow, inst.probe);
    case Relation::TimesAssoc:
    case Relation::PlusAssocRegroup:
      return linalg_bfs_via_adjacency(vs, inst.vector, inst.incidence)
          .read(kVectorRow, inst.probe);
    default:
      return std::nullopt;
  }
}

}  // namespace hyperbfs
