#include "hyperbfs/valueset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "hyperbfs/errors.hpp"

namespace hyperbfs {

ValueSet ValueSet::from_tables(std::string id, std::vector<std::string> names,
                               std::vector<Value> plus_table,
                               std::vector<Value> times_table, Value zero,
                               Value one) {
  const std::size_t n = names.size();
  if (n == 0) throw Error("value set '" + id + "': empty carrier");
  if (plus_table.size() != n * n || times_table.size() != n * n)
    throw Error("value set '" + id + "': tables must be " + std::to_string(n) +
                "x" + std::to_string(n));
  auto in_range = [n](Value v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  if (!in_range(zero) || !in_range(one))
    throw Error("value set '" + id + "': identity outside carrier");
  // Closure: every table entry is a carrier element.
  if (!std::all_of(plus_table.begin(), plus_table.end(), in_range) ||
      !std::all_of(times_table.begin(), times_table.end(), in_range))
    throw Error("value set '" + id + "': table entry outside carrier");
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("value set '" + id + "': duplicate element name");

  auto impl = std::make_shared<Impl>();
  impl->id = std::move(id);
  impl->finite = true;
  impl->n = n;
  impl->names = std::move(names);
  impl->plus = std::move(plus_table);
  impl->times = std::move(times_table);
  impl->zero = zero;
  impl->one = one;
  return ValueSet(std::move(impl));
}

ValueSet ValueSet::symbolic(std::string id, SymbolicOps ops) {
  auto impl = std::make_shared<Impl>();
  impl->id = std::move(id);
  impl->finite = false;
  impl->zero = ops.zero;
  impl->one = ops.one;
  impl->ops = std::move(ops);
  return ValueSet(std::move(impl));
}

std::size_t ValueSet::size() const {
  if (!impl_->finite)
    throw NotCheckableError("value set '" + impl_->id +
                            "' is evaluation-only: carrier not exhaustively checkable");
  return impl_->n;
}

std::vector<Value> ValueSet::elements() const {
  std::vector<Value> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Value>(i);
  return out;
}

std::vector<Value> ValueSet::nonzero_elements() const {
  auto all = elements();
  std::erase(all, zero());
  return all;
}

std::string ValueSet::name(Value v) const {
  if (impl_->finite) {
    if (v < 0 || static_cast<std::size_t>(v) >= impl_->n)
      throw Error("value " + std::to_string(v) + " outside carrier of '" + impl_->id + "'");
    return impl_->names[static_cast<std::size_t>(v)];
  }
  return impl_->ops.format(v);
}

std::optional<Value> ValueSet::parse(std::string_view text) const {
  if (impl_->finite) {
    for (std::size_t i = 0; i < impl_->n; ++i)
      if (impl_->names[i] == text) return static_cast<Value>(i);
    return std::nullopt;
  }
  return impl_->ops.parse(text);
}

Value ValueSet::element(std::string_view text) const {
  auto v = parse(text);
  if (!v)
    throw ParseError("'" + std::string(text) + "' is not an element of '" + impl_->id + "'");
  return *v;
}

const std::vector<std::string>& ValueSet::names() const {
  size();
  return impl_->names;
}
const std::vector<Value>& ValueSet::plus_table() const {
  size();
  return impl_->plus;
}
const std::vector<Value>& ValueSet::times_table() const {
  size();
  return impl_->times;
}

bool ValueSet::same_structure(const ValueSet& other) const {
  if (!impl_->finite || !other.impl_->finite) return impl_ == other.impl_;
  return impl_->names == other.impl_->names && impl_->plus == other.impl_->plus &&
         impl_->times == other.impl_->times && impl_->zero == other.impl_->zero &&
         impl_->one == other.impl_->one;
}

// ---- checks -----------------------------------------------------------------

IdentityCheck check_identities(const ValueSet& vs) {
  const Value zero = vs.zero();
  const Value one = vs.one();
  for (Value v : vs.elements()) {
    const std::pair<bool, IdentitySide> laws[] = {
        {vs.plus(zero, v) == v, IdentitySide::PlusLeft},
        {vs.plus(v, zero) == v, IdentitySide::PlusRight},
        {vs.times(one, v) == v, IdentitySide::TimesLeft},
        {vs.times(v, one) == v, IdentitySide::TimesRight},
    };
    for (auto [ok, side] : laws)
      if (!ok) return {false, v, side};
  }
  return {};
}

namespace {

CheckResult fail(std::vector<Value> w) { return {false, std::move(w)}; }

bool zero_sum_violation(const ValueSet& vs, Value v, Value w) {
  return vs.is_zero(vs.plus(v, w)) && !(vs.is_zero(v) && vs.is_zero(w));
}
bool zero_divisor_violation(const ValueSet& vs, Value v, Value w) {
  return vs.is_zero(vs.times(v, w)) && !vs.is_zero(v) && !vs.is_zero(w);
}
bool annihilator_violation(const ValueSet& vs, Value v) {
  return !vs.is_zero(vs.times(v, vs.zero())) || !vs.is_zero(vs.times(vs.zero(), v));
}
template <class Op>
bool assoc_violation(Op op, Value a, Value b, Value c) {
  return op(op(a, b), c) != op(a, op(b, c));
}
template <class Op>
bool comm_violation(Op op, Value a, Value b) {
  return op(a, b) != op(b, a);
}

template <class Pred>
CheckResult scan_pairs(const ValueSet& vs, Pred violated) {
  const auto elems = vs.elements();
  for (Value a : elems)
    for (Value b : elems)
      if (violated(a, b)) return fail({a, b});
  return {};
}

template <class Pred>
CheckResult scan_triples(const ValueSet& vs, Pred violated) {
  const auto elems = vs.elements();
  for (Value a : elems)
    for (Value b : elems)
      for (Value c : elems)
        if (violated(a, b, c)) return fail({a, b, c});
  return {};
}

auto plus_of(const ValueSet& vs) {
  return [&vs](Value a, Value b) { return vs.plus(a, b); };
}
auto times_of(const ValueSet& vs) {
  return [&vs](Value a, Value b) { return vs.times(a, b); };
}

}  // namespace

CheckResult check_zero_sum_free(const ValueSet& vs) {
  return scan_pairs(vs, [&](Value v, Value w) { return zero_sum_violation(vs, v, w); });
}

CheckResult check_zero_divisor_free(const ValueSet& vs) {
  return scan_pairs(vs, [&](Value v, Value w) { return zero_divisor_violation(vs, v, w); });
}

CheckResult check_zero_annihilates(const ValueSet& vs) {
  for (Value v : vs.elements())
    if (annihilator_violation(vs, v)) return fail({v});
  return {};
}

CheckResult check_plus_assoc(const ValueSet& vs) {
  return scan_triples(vs, [&](Value a, Value b, Value c) {
    return assoc_violation(plus_of(vs), a, b, c);
  });
}

CheckResult check_plus_comm(const ValueSet& vs) {
  return scan_pairs(vs, [&](Value a, Value b) { return comm_violation(plus_of(vs), a, b); });
}

CheckResult check_times_assoc(const ValueSet& vs) {
  return scan_triples(vs, [&](Value a, Value b, Value c) {
    return assoc_violation(times_of(vs), a, b, c);
  });
}

CheckResult check_times_comm(const ValueSet& vs) {
  return scan_pairs(vs, [&](Value a, Value b) { return comm_violation(times_of(vs), a, b); });
}

PropertyProfile profile(const ValueSet& vs) {
  return {check_zero_sum_free(vs),  check_zero_divisor_free(vs), check_zero_annihilates(vs),
          check_plus_assoc(vs),     check_plus_comm(vs),         check_times_assoc(vs),
          check_times_comm(vs)};
}

bool witness_reproduces(const ValueSet& vs, std::string_view check,
                        const std::vector<Value>& w) {
  auto need = [&](std::size_t n) {
    if (w.size() != n) throw Error("witness for " + std::string(check) + " needs " +
                                   std::to_string(n) + " values");
  };
  if (check == "zero_sum_free") return need(2), zero_sum_violation(vs, w[0], w[1]);
  if (check == "zero_divisor_free") return need(2), zero_divisor_violation(vs, w[0], w[1]);
  if (check == "zero_annihilates") return need(1), annihilator_violation(vs, w[0]);
  if (check == "plus_assoc") return need(3), assoc_violation(plus_of(vs), w[0], w[1], w[2]);
  if (check == "plus_comm") return need(2), comm_violation(plus_of(vs), w[0], w[1]);
  if (check == "times_assoc") return need(3), assoc_violation(times_of(vs), w[0], w[1], w[2]);
  if (check == "times_comm") return need(2), comm_violation(times_of(vs), w[0], w[1]);
  throw Error("unknown check '" + std::string(check) + "'");
}

// ---- enumeration ------------------------------------------------------------

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::string> canonical_names(int n) {
  std::vector<std::string> names{"0", "1"};
  for (int i = 2; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// Fills the cells of `table` not fixed by `identity` from the base-n digits
// of `code`, first free cell most significant.
std::vector<Value> decode_table(int n, Value identity, std::uint64_t code) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Value> table(un * un, -1);
  for (std::size_t i = 0; i < un; ++i) {
    table[static_cast<std::size_t>(identity) * un + i] = static_cast<Value>(i);
    table[i * un + static_cast<std::size_t>(identity)] = static_cast<Value>(i);
  }
  for (std::size_t cell = table.size(); cell-- > 0;) {
    if (table[cell] != -1) continue;
    table[cell] = static_cast<Value>(code % un);
    code /= un;
  }
  return table;
}

}  // namespace

ValueSetEnumeration::ValueSetEnumeration(int carrier_size) : n_(carrier_size) {
  if (carrier_size < 2 || carrier_size > 4)
    throw BoundsError("carrier size must be between 2 and 4, got " +
                      std::to_string(carrier_size));
  tables_ = ipow(static_cast<std::uint64_t>(n_), static_cast<unsigned>((n_ - 1) * (n_ - 1)));
}

ValueSet ValueSetEnumeration::at(std::uint64_t index) const {
  if (index >= count()) throw BoundsError("value set index out of range");
  return ValueSet::from_tables(id_for(n_, index), canonical_names(n_),
                               decode_table(n_, 0, index / tables_),
                               decode_table(n_, 1, index % tables_), 0, 1);
}

std::string ValueSetEnumeration::id_for(int carrier_size, std::uint64_t index) {
  return "n" + std::to_string(carrier_size) + "-" + std::to_string(index);
}

}  // namespace hyperbfs
