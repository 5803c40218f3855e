#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperbfs {

// Carrier element. Finite value sets use the element's position in the
// carrier enumeration; symbolic value sets use the value itself.
using Value = std::int64_t;

// (V, plus, times, zero, one) with no laws assumed beyond what the caller
// checks. Immutable and cheap to copy.
class ValueSet {
 public:
  using BinaryOp = std::function<Value(Value, Value)>;

  struct SymbolicOps {
    BinaryOp plus;
    BinaryOp times;
    Value zero = 0;
    Value one = 1;
    std::function<std::string(Value)> format;
    std::function<std::optional<Value>(std::string_view)> parse;
    bool annihilating = false;  // built-in certificate for the sparse path
  };

  // Table-backed finite value set. Tables are row-major, row = left operand.
  static ValueSet from_tables(std::string id, std::vector<std::string> names,
                              std::vector<Value> plus_table,
                              std::vector<Value> times_table, Value zero,
                              Value one);
  static ValueSet symbolic(std::string id, SymbolicOps ops);

  const std::string& id() const { return impl_->id; }
  bool is_finite() const { return impl_->finite; }

  // Number of carrier elements; throws NotCheckableError for symbolic sets.
  std::size_t size() const;
  // Carrier in enumeration order; throws NotCheckableError for symbolic sets.
  std::vector<Value> elements() const;
  std::vector<Value> nonzero_elements() const;

  Value zero() const { return impl_->zero; }
  Value one() const { return impl_->one; }
  bool is_zero(Value v) const { return v == impl_->zero; }

  Value plus(Value a, Value b) const {
    if (impl_->finite) return impl_->plus[index(a, b)];
    return impl_->ops.plus(a, b);
  }
  Value times(Value a, Value b) const {
    if (impl_->finite) return impl_->times[index(a, b)];
    return impl_->ops.times(a, b);
  }

  std::string name(Value v) const;
  // Element named `text`, or nullopt.
  std::optional<Value> parse(std::string_view text) const;
  // Like parse() but throws ParseError.
  Value element(std::string_view text) const;

  const std::vector<std::string>& names() const;
  const std::vector<Value>& plus_table() const;
  const std::vector<Value>& times_table() const;

  // Symbolic sets only: whether the built-in definition guarantees that
  // zero annihilates.
  bool declares_annihilating() const { return impl_->ops.annihilating; }

  // Same carrier, identities and tables (ids are ignored).
  bool same_structure(const ValueSet& other) const;

 private:
  struct Impl {
    std::string id;
    bool finite = true;
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<Value> plus;
    std::vector<Value> times;
    Value zero = 0;
    Value one = 0;
    SymbolicOps ops;
  };

  explicit ValueSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::size_t index(Value a, Value b) const {
    return static_cast<std::size_t>(a) * impl_->n + static_cast<std::size_t>(b);
  }

  std::shared_ptr<const Impl> impl_;
};

// ---- algebraic checks ------------------------------------------------------

enum class IdentitySide { PlusLeft, PlusRight, TimesLeft, TimesRight };

struct IdentityCheck {
  bool valid = true;
  std::optional<Value> element;      // violating element
  std::optional<IdentitySide> side;  // which law it breaks
};

// A flag with the first violating tuple in carrier enumeration order.
struct CheckResult {
  bool holds = true;
  std::optional<std::vector<Value>> witness;
};

IdentityCheck check_identities(const ValueSet& vs);
CheckResult check_zero_sum_free(const ValueSet& vs);
CheckResult check_zero_divisor_free(const ValueSet& vs);
CheckResult check_zero_annihilates(const ValueSet& vs);
CheckResult check_plus_assoc(const ValueSet& vs);
CheckResult check_plus_comm(const ValueSet& vs);
CheckResult check_times_assoc(const ValueSet& vs);
CheckResult check_times_comm(const ValueSet& vs);

struct PropertyProfile {
  CheckResult zero_sum_free;
  CheckResult zero_divisor_free;
  CheckResult zero_annihilates;
  CheckResult plus_assoc;
  CheckResult plus_comm;
  CheckResult times_assoc;
  CheckResult times_comm;

  // Zero-sum-free, zero-divisor-free and annihilating together: the
  // conditions under which one-step BFS through incidence arrays is valid.
  bool bfs_valid() const {
    return zero_sum_free.holds && zero_divisor_free.holds && zero_annihilates.holds;
  }
  friend bool operator==(const PropertyProfile&, const PropertyProfile&) = default;
};

inline bool operator==(const CheckResult& a, const CheckResult& b) {
  return a.holds == b.holds && a.witness == b.witness;
}

PropertyProfile profile(const ValueSet& vs);

// Re-evaluates `r.witness` against `vs` for the named check; true when the
// witness reproduces a violation. Checks: "zero_sum_free",
// "zero_divisor_free", "zero_annihilates", "plus_assoc", "plus_comm",
// "times_assoc", "times_comm".
bool witness_reproduces(const ValueSet& vs, std::string_view check,
                        const std::vector<Value>& witness);

// ---- built-ins --------------------------------------------------------------

ValueSet boolean_value_set();
// {inf, 0, ..., max}; plus = min, times = + saturating at max, inf absorbing.
ValueSet min_plus_truncated(int max = 6);
// {0, ..., max} with + and x saturating at max.
ValueSet naturals_saturating(int max = 7);
// {0, 1, -1, 2, -2, ..., bound, -bound} with + and x clamped to [-bound, bound].
ValueSet signed_clamped(int bound = 1);
// {0, 1, x}: plus = max over 0 < 1 < x, times standard except times(0, x) = x.
ValueSet non_annihilating_table();
// {0, 1, x}: plus = max over 0 < 1 < x, times standard with x * x = 0.
ValueSet zero_divisor_table();
// Z/n with modular + and x.
ValueSet integers_mod(int n);
// Evaluation-only: int64 + and x (overflow throws).
ValueSet integers_symbolic();
// Evaluation-only: min-plus over non-negative int64 with an inf sentinel.
ValueSet tropical_symbolic();

// Names accepted by builtin(): boolean, minplus, natsat, signed,
// nonannihilating, zerodivisor, zmodN (2 <= N <= 16), integers, tropical.
// builtin() also accepts enumeration ids such as "n3-4214".
std::vector<std::string> builtin_names();
ValueSet builtin(std::string_view name);

// ---- enumeration ------------------------------------------------------------

// Every pair of operation tables on the canonical carrier {0, 1, x2, ...}
// such that 0 is a two-sided plus identity and 1 a two-sided times identity.
// Index order: plus table major, times table minor; within a table the free
// cells are read row-major with the first cell most significant.
class ValueSetEnumeration {
 public:
  explicit ValueSetEnumeration(int carrier_size);  // 2 <= size <= 4

  int carrier_size() const { return n_; }
  std::uint64_t count() const { return tables_ * tables_; }
  ValueSet at(std::uint64_t index) const;

  class iterator {
   public:
    using value_type = ValueSet;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const ValueSetEnumeration* e, std::uint64_t i) : e_(e), i_(i) {}
    ValueSet operator*() const { return e_->at(i_); }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { auto t = *this; ++i_; return t; }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const ValueSetEnumeration* e_ = nullptr;
    std::uint64_t i_ = 0;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }

  static std::string id_for(int carrier_size, std::uint64_t index);

 private:
  int n_;
  std::uint64_t tables_;  // n^((n-1)^2)
};

}  // namespace hyperbfs
