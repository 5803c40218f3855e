#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperbfs/traversal.hpp"

namespace hyperbfs {

// ---- figure constructions -----------------------------------------------------

// What a construction demonstrates.
enum class Relation {
  StarZeroSum,         // e(k) = v + w
  StarZeroDivisor,     // e(k) = v * w
  StarAnnihilator,     // e(k) = (0 * v) + ((0 * 0) + (v * 0))
  DaggerZeroSum,       // w(a) = v + w
  DaggerZeroDivisor,   // w(a) = v * w
  DaggerAnnihilator,   // w(a) = (0 * v) + ((v * 0) + (0 * 0))
  PlusComm,            // w(a) = u + v under a < b, v + u under b < a
  PlusAssoc,           // u + (v + w) under a < b < c, w + (u + v) under c < a < b
  TimesComm,           // row form x * y, column form y * x
  TimesAssoc,          // stepwise (u * v) * w, via adjacency u * (v * w)
  PlusAssocRegroup,    // stepwise (u + v) + w, via adjacency u + (v + w)
};

std::string to_string(Relation r);

struct ConstructionInstance {
  std::string name;  // "fig1.1" ... "fig2.3"
  Relation relation;
  DirectedHypergraph graph;
  // v for star and traversal instances, e for dagger instances.
  FrontierVector vector;
  IncidencePair incidence;
  std::vector<Value> parameters;
  // Component the displayed expression refers to: of e for star instances,
  // of w otherwise.
  Key probe;
  // The displayed expression evaluated directly from the value set's tables.
  Value expected{};
  // Right-hand side of the comparison for convention constructions.
  std::optional<Value> expected_alternative;
  // Alternative vertex ordering for PlusComm / PlusAssoc.
  std::optional<KeySpace> alternative_order;

  bool is_dagger() const;
};

// The six necessity constructions for (v, w); both must be nonzero.
// Star instances carry an in-incidence array of ones so that they also
// exercise the full traversal.
std::vector<ConstructionInstance> fig1_constructions(const ValueSet& vs, Value v, Value w);

struct Fig2Parameters {
  Value u{}, v{}, w{};  // plus constructions and times-assoc
  Value x{}, y{};       // times-comm
};
// Five convention constructions. u, v, w must be nonzero for TimesAssoc and y
// for TimesComm (they sit on incidences).
std::vector<ConstructionInstance> fig2_constructions(const ValueSet& vs, const Fig2Parameters& p);

// The individual convention constructions.
ConstructionInstance fig2_plus_comm(const ValueSet& vs, Value u, Value v);
ConstructionInstance fig2_plus_assoc(const ValueSet& vs, Value u, Value v, Value w);
ConstructionInstance fig2_times_comm(const ValueSet& vs, Value x, Value y);
ConstructionInstance fig2_times_assoc(const ValueSet& vs, Value u, Value v, Value w);
ConstructionInstance fig2_plus_assoc_regroup(const ValueSet& vs, Value u, Value v, Value w);

// Component of the relevant product at instance.probe: e for star instances,
// w = linalg_bfs otherwise (w from e for dagger instances).
Value evaluate_probe(const ValueSet& vs, const ConstructionInstance& inst);
// The compared computation at instance.probe: the alternative vertex order
// for PlusComm / PlusAssoc, the column form for TimesComm, the adjacency form
// for TimesAssoc / PlusAssocRegroup. nullopt for figure-1 instances.
std::optional<Value> evaluate_alternative(const ValueSet& vs, const ConstructionInstance& inst);

// ---- counterexamples ------------------------------------------------------------

enum class CheckKind {
  Star,
  Dagger,
  Traversal,
  VertexOrder,
  EdgeOrder,
  FoldDirection,
  RowColumn,
  Regrouping,
};

std::string to_string(CheckKind k);
std::optional<CheckKind> check_kind_from_string(std::string_view s);

// A standalone instance on which a check fails.
struct Counterexample {
  CheckKind kind;
  std::string origin;  // construction name, "enumerated" or "random"
  DirectedHypergraph graph;
  FrontierVector vector;
  IncidencePair incidence;
  std::optional<KeySpace> vertex_order;  // VertexOrder
  std::optional<KeySpace> edge_order;    // EdgeOrder
};

// True when the check named by `kind` fails on the instance (for orderings:
// under the recorded alternative order).
bool violates(const ValueSet& vs, CheckKind kind, const Counterexample& cx);
inline bool reproduces(const ValueSet& vs, const Counterexample& cx) {
  return violates(vs, cx.kind, cx);
}

// Array product whose inner fold nests to the left; used only to compare
// fold directions.
AssociativeArray array_product_left_fold(const ValueSet& vs, const AssociativeArray& a,
                                         const AssociativeArray& b);

// ---- harnesses --------------------------------------------------------------

struct HarnessBounds {
  std::size_t max_vertices = 3;  // exhaustive graph family
  std::size_t max_edges = 2;
  std::size_t max_weight_assignments = 16;  // per graph, traversal side
  std::size_t random_instances = 200;       // per value set, conventions
  std::size_t random_max_vertices = 4;
  std::size_t random_max_edges = 3;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct EmpiricalResult {
  bool valid = true;
  std::optional<Counterexample> counterexample;
};

// Failing algebraic condition and its witness tuple.
struct ProfileWitness {
  std::string condition;
  std::vector<Value> values;
};

struct ConditionRecord {
  std::string check;
  bool profile = true;
  bool empirical = true;
  bool asserted = true;  // informational records do not count toward agreement
  std::optional<ProfileWitness> profile_witness;
  std::optional<Counterexample> counterexample;
  bool agreement() const { return profile == empirical; }
};

struct VerificationReport {
  ValueSet value_set;
  std::uint64_t seed = 0;
  HarnessBounds bounds;
  bool bfs_conditions = false;  // profile (iv)
  std::vector<ConditionRecord> records;

  const std::string& value_set_id() const { return value_set.id(); }
  bool all_agree() const;
};

// Instance families are built once per bounds and reused across value sets.
class Verifier {
 public:
  explicit Verifier(HarnessBounds bounds);

  const HarnessBounds& bounds() const { return bounds_; }

  // Each side of the BFS validity theorem, over figure-1 constructions with
  // every nonzero parameter plus the exhaustive graph family.
  EmpiricalResult star_validity(const ValueSet& vs) const;
  EmpiricalResult dagger_validity(const ValueSet& vs) const;
  EmpiricalResult traversal_validity(const ValueSet& vs, std::uint64_t stream = 0) const;

  // Records "star", "dagger", "traversal", each against profile (iv).
  VerificationReport theorem_2_1(const ValueSet& vs, std::uint64_t stream = 0) const;

  // nullopt when the value set fails the BFS validity conditions. Records
  // "vertex-order", "edge-order" (informational), "fold-direction",
  // "row-column" and, when plus is associative and commutative, "regrouping".
  std::optional<VerificationReport> conventions(const ValueSet& vs,
                                                std::uint64_t stream = 0) const;

 private:
  HarnessBounds bounds_;
  std::vector<DirectedHypergraph> graphs_;
  std::vector<DirectedHypergraph> star_graphs_;    // in-sets fixed to the first vertex
  std::vector<DirectedHypergraph> dagger_graphs_;  // out-sets fixed to the first vertex
};

// Traversal validity over the exhaustive family; throws BoundsError when the
// bounds exceed the exhaustive guards or the carrier is infinite.
EmpiricalResult empirical_bfs_validity(const ValueSet& vs, const HarnessBounds& bounds = {});
// Traversal validity over explicit instances (vector read as source weights).
EmpiricalResult empirical_bfs_validity(const ValueSet& vs,
                                       const std::vector<ConstructionInstance>& instances);

struct HarnessSummary {
  std::uint64_t value_sets = 0;
  std::uint64_t reports = 0;    // value sets that produced a report
  std::uint64_t records = 0;    // asserted records
  std::uint64_t agreements = 0;
  std::uint64_t conforming = 0;  // profile (iv) holds
  std::uint64_t agreeing = 0;    // reports whose asserted records all agree
  bool all_agree() const { return agreements == records; }
};

using ReportSink = std::function<void(const VerificationReport&)>;

// Runs over every enumerated value set of the carrier size (<= 3), emitting
// reports in enumeration order regardless of `bounds.jobs`.
HarnessSummary theorem_2_1_harness(int carrier_size, const HarnessBounds& bounds,
                                   const ReportSink& sink = {});
HarnessSummary convention_harness(int carrier_size, const HarnessBounds& bounds,
                                  const ReportSink& sink = {});

}  // namespace hyperbfs
