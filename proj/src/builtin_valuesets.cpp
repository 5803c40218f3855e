#include <algorithm>
#include <charconv>
#include <limits>

#include "hyperbfs/errors.hpp"
#include "hyperbfs/valueset.hpp"

namespace hyperbfs {

namespace {

// Builds a finite value set from element labels and operations on labels.
template <class Label, class Plus, class Times>
ValueSet tabulate(std::string id, const std::vector<Label>& labels,
                  std::vector<std::string> names, Label zero, Label one, Plus plus,
                  Times times) {
  const std::size_t n = labels.size();
  auto index_of = [&](Label l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw Error("value set '" + id + "': operation leaves carrier");
    return static_cast<Value>(it - labels.begin());
  };
  std::vector<Value> p(n * n), t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p[i * n + j] = index_of(plus(labels[i], labels[j]));
      t[i * n + j] = index_of(times(labels[i], labels[j]));
    }
  return ValueSet::from_tables(std::move(id), std::move(names), std::move(p), std::move(t),
                               index_of(zero), index_of(one));
}

std::optional<Value> parse_int(std::string_view s) {
  Value v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Three-element carriers {0, 1, x} in that order share plus = max.
std::vector<Value> max_plus_3() { return {0, 1, 2, 1, 1, 2, 2, 2, 2}; }

}  // namespace

ValueSet boolean_value_set() {
  return ValueSet::from_tables("boolean", {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
}

ValueSet min_plus_truncated(int max) {
  if (max < 0) throw Error("minplus: max must be non-negative");
  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<int> labels{inf};
  std::vector<std::string> names{"inf"};
  for (int i = 0; i <= max; ++i) {
    labels.push_back(i);
    names.push_back(std::to_string(i));
  }
  return tabulate(
      "minplus", labels, names, inf, 0, [](int a, int b) { return std::min(a, b); },
      [max](int a, int b) { return (a == inf || b == inf) ? inf : std::min(a + b, max); });
}

ValueSet naturals_saturating(int max) {
  if (max < 1) throw Error("natsat: max must be at least 1");
  std::vector<int> labels;
  std::vector<std::string> names;
  for (int i = 0; i <= max; ++i) {
    labels.push_back(i);
    names.push_back(std::to_string(i));
  }
  return tabulate(
      "natsat", labels, names, 0, 1, [max](int a, int b) { return std::min(a + b, max); },
      [max](int a, int b) { return std::min(a * b, max); });
}

ValueSet signed_clamped(int bound) {
  if (bound < 1) throw Error("signed: bound must be at least 1");
  std::vector<int> labels{0};
  for (int i = 1; i <= bound; ++i) {
    labels.push_back(i);
    labels.push_back(-i);
  }
  std::vector<std::string> names;
  for (int l : labels) names.push_back(std::to_string(l));
  auto clamp = [bound](int x) { return std::clamp(x, -bound, bound); };
  return tabulate(
      "signed", labels, names, 0, 1, [clamp](int a, int b) { return clamp(a + b); },
      [clamp](int a, int b) { return clamp(a * b); });
}

ValueSet non_annihilating_table() {
  //        0  1  x
  // 0      0  0  x   <- times(0, x) = x
  // 1      0  1  x
  // x      0  x  x
  return ValueSet::from_tables("nonannihilating", {"0", "1", "x"}, max_plus_3(),
                               {0, 0, 2, 0, 1, 2, 0, 2, 2}, 0, 1);
}

ValueSet zero_divisor_table() {
  //        0  1  x
  // 0      0  0  0
  // 1      0  1  x
  // x      0  x  0   <- x * x = 0
  return ValueSet::from_tables("zerodivisor", {"0", "1", "x"}, max_plus_3(),
                               {0, 0, 0, 0, 1, 2, 0, 2, 0}, 0, 1);
}

ValueSet integers_mod(int n) {
  if (n < 2 || n > 16) throw Error("zmod: modulus must be between 2 and 16");
  std::vector<int> labels;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i);
    names.push_back(std::to_string(i));
  }
  return tabulate(
      "zmod" + std::to_string(n), labels, names, 0, 1,
      [n](int a, int b) { return (a + b) % n; }, [n](int a, int b) { return (a * b) % n; });
}

ValueSet integers_symbolic() {
  ValueSet::SymbolicOps ops;
  ops.plus = [](Value a, Value b) {
    Value r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integers: overflow in +");
    return r;
  };
  ops.times = [](Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integers: overflow in *");
    return r;
  };
  ops.zero = 0;
  ops.one = 1;
  ops.format = [](Value v) { return std::to_string(v); };
  ops.parse = parse_int;
  ops.annihilating = true;
  return ValueSet::symbolic("integers", std::move(ops));
}

ValueSet tropical_symbolic() {
  constexpr Value inf = std::numeric_limits<Value>::max();
  ValueSet::SymbolicOps ops;
  ops.plus = [](Value a, Value b) { return std::min(a, b); };
  ops.times = [](Value a, Value b) {
    Value r;
    if (a == inf || b == inf || __builtin_add_overflow(a, b, &r) || r == inf) return inf;
    return r;
  };
  ops.zero = inf;
  ops.one = 0;
  ops.format = [](Value v) { return v == inf ? std::string("inf") : std::to_string(v); };
  ops.parse = [](std::string_view s) -> std::optional<Value> {
    if (s == "inf") return inf;
    auto v = parse_int(s);
    if (!v || *v < 0) return std::nullopt;
    return v;
  };
  ops.annihilating = true;
  return ValueSet::symbolic("tropical", std::move(ops));
}

std::vector<std::string> builtin_names() {
  return {"boolean", "minplus", "natsat",   "signed",  "nonannihilating",
          "zerodivisor", "zmodN", "integers", "tropical"};
}

ValueSet builtin(std::string_view name) {
  if (name == "boolean") return boolean_value_set();
  if (name == "minplus") return min_plus_truncated();
  if (name == "natsat") return naturals_saturating();
  if (name == "signed") return signed_clamped();
  if (name == "nonannihilating") return non_annihilating_table();
  if (name == "zerodivisor") return zero_divisor_table();
  if (name == "integers") return integers_symbolic();
  if (name == "tropical") return tropical_symbolic();
  if (name.starts_with("zmod")) {
    if (auto n = parse_int(name.substr(4)); n && *n >= 2 && *n <= 16)
      return integers_mod(static_cast<int>(*n));
  }
  if (name.starts_with("n")) {
    if (auto dash = name.find('-'); dash != std::string_view::npos) {
      auto size = parse_int(name.substr(1, dash - 1));
      auto index = parse_int(name.substr(dash + 1));
      if (size && index && *size >= 2 && *size <= 4 && *index >= 0)
        return ValueSetEnumeration(static_cast<int>(*size)).at(static_cast<std::uint64_t>(*index));
    }
  }
  throw Error("unknown built-in value set '" + std::string(name) + "'");
}

}  // namespace hyperbfs
