#include "hyperbfs/array.hpp"

#include <algorithm>

#include "hyperbfs/errors.hpp"

namespace hyperbfs {

// ---- KeySpace -----------------------------------------------------------------

KeySpace::KeySpace() : impl_(std::make_shared<Impl>()) {}

KeySpace::KeySpace(std::vector<Key> keys) {
  auto impl = std::make_shared<Impl>();
  impl->index.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!impl->index.emplace(keys[i], i).second)
      throw KeyError("duplicate key '" + keys[i] + "' in key space");
  impl->keys = std::move(keys);
  impl_ = std::move(impl);
}

std::optional<std::size_t> KeySpace::find(const Key& k) const {
  auto it = impl_->index.find(k);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t KeySpace::index_of(const Key& k) const {
  if (auto i = find(k)) return *i;
  throw KeyError("unknown key '" + k + "'");
}

bool KeySpace::same_set(const KeySpace& other) const {
  if (size() != other.size()) return false;
  return std::all_of(begin(), end(), [&](const Key& k) { return other.contains(k); });
}

// ---- AssociativeArray ---------------------------------------------------------

AssociativeArray::AssociativeArray(KeySpace rows, KeySpace cols, Value zero)
    : rows_(std::move(rows)), cols_(std::move(cols)), zero_(zero) {}

std::vector<AssociativeArray::Entry>::const_iterator AssociativeArray::locate(
    std::size_t row, std::size_t col) const {
  return std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                          [](const Entry& e, const std::pair<std::size_t, std::size_t>& rc) {
                            return std::pair{e.row, e.col} < rc;
                          });
}

Value AssociativeArray::at(std::size_t row, std::size_t col) const {
  auto it = locate(row, col);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return zero_;
}

bool AssociativeArray::is_stored(std::size_t row, std::size_t col) const {
  auto it = locate(row, col);
  return it != entries_.end() && it->row == row && it->col == col;
}

Value AssociativeArray::read(const Key& row, const Key& col) const {
  return at(rows_.index_of(row), cols_.index_of(col));
}

void AssociativeArray::set(std::size_t row, std::size_t col, Value v) {
  if (row >= rows_.size() || col >= cols_.size())
    throw KeyError("array index out of key space");
  auto it = entries_.begin() + (locate(row, col) - entries_.cbegin());
  if (it != entries_.end() && it->row == row && it->col == col)
    it->value = v;
  else
    entries_.insert(it, Entry{row, col, v});
}

void AssociativeArray::set(const Key& row, const Key& col, Value v) {
  set(rows_.index_of(row), cols_.index_of(col), v);
}

void AssociativeArray::erase(std::size_t row, std::size_t col) {
  auto it = locate(row, col);
  if (it != entries_.end() && it->row == row && it->col == col) entries_.erase(it);
}

std::vector<Value> AssociativeArray::dense() const {
  std::vector<Value> out(rows_.size() * cols_.size(), zero_);
  for (const auto& e : entries_) out[e.row * cols_.size() + e.col] = e.value;
  return out;
}

std::vector<Key> AssociativeArray::support(std::size_t row) const {
  std::vector<Key> out;
  for (const auto& e : entries_)
    if (e.row == row && e.value != zero_) out.push_back(cols_[e.col]);
  return out;
}

// ---- operations ---------------------------------------------------------------

AssociativeArray row_vector(const ValueSet& vs, const KeySpace& cols,
                            std::span<const Value> values) {
  if (values.size() != cols.size()) throw KeyError("vector length does not match key space");
  AssociativeArray v(KeySpace{kVectorRow}, cols, vs.zero());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!vs.is_zero(values[i])) v.set(0, i, values[i]);
  return v;
}

Value read(const AssociativeArray& a, const Key& row, const Key& col) {
  return a.read(row, col);
}

Value fold_plus(const ValueSet& vs, std::span<const Value> values) {
  if (values.empty()) return vs.zero();
  Value acc = values.back();
  for (std::size_t i = values.size() - 1; i-- > 0;) acc = vs.plus(values[i], acc);
  return acc;
}

namespace {

void require_contractible(const AssociativeArray& a, const AssociativeArray& b) {
  if (a.cols() == b.rows()) return;
  if (a.cols().same_set(b.rows()))
    throw ContractionError("array product: contracted key spaces are ordered differently");
  throw ContractionError("array product: contracted key spaces differ");
}

}  // namespace

AssociativeArray array_product_strict(const ValueSet& vs, const AssociativeArray& a,
                                      const AssociativeArray& b) {
  require_contractible(a, b);
  const std::size_t n1 = a.rows().size(), n2 = a.cols().size(), n3 = b.cols().size();
  const auto da = a.dense();
  const auto db = b.dense();
  AssociativeArray c(a.rows(), b.cols(), vs.zero());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n3; ++k) {
      Value acc = vs.zero();
      // Right-nested: the last term seeds the accumulator.
      for (std::size_t j = n2; j-- > 0;) {
        Value term = vs.times(da[i * n2 + j], db[j * n3 + k]);
        acc = (j == n2 - 1) ? term : vs.plus(term, acc);
      }
      if (!vs.is_zero(acc)) c.set(i, k, acc);
    }
  return c;
}

AnnihilatorCertificate AnnihilatorCertificate::issue(const ValueSet& vs) {
  if (!vs.is_finite()) {
    if (vs.declares_annihilating()) return AnnihilatorCertificate(vs.id());
    throw CertificationError("value set '" + vs.id() +
                             "' carries no annihilator declaration");
  }
  if (!check_zero_annihilates(vs).holds)
    throw CertificationError("value set '" + vs.id() + "': zero does not annihilate");
  return AnnihilatorCertificate(vs.id());
}

AnnihilatorCertificate AnnihilatorCertificate::from_profile(const ValueSet& vs,
                                                            const PropertyProfile& p) {
  if (!p.zero_annihilates.holds)
    throw CertificationError("value set '" + vs.id() + "': profile shows zero does not annihilate");
  return AnnihilatorCertificate(vs.id());
}

AssociativeArray array_product_sparse(const ValueSet& vs, const AnnihilatorCertificate& cert,
                                      const AssociativeArray& a, const AssociativeArray& b) {
  if (cert.value_set_id() != vs.id())
    throw CertificationError("certificate issued for '" + cert.value_set_id() +
                             "', not '" + vs.id() + "'");
  require_contractible(a, b);
  const std::size_t n3 = b.cols().size();

  // Row starts of B's entries.
  std::vector<std::size_t> b_start(b.rows().size() + 1, 0);
  const auto be = b.entries();
  for (const auto& e : be) ++b_start[e.row + 1];
  for (std::size_t r = 0; r < b.rows().size(); ++r) b_start[r + 1] += b_start[r];

  AssociativeArray c(a.rows(), b.cols(), vs.zero());
  std::vector<std::vector<Value>> terms(n3);
  const auto ae = a.entries();
  for (std::size_t p = 0; p < ae.size();) {
    const std::size_t row = ae[p].row;
    for (auto& t : terms) t.clear();
    // Entries of one row arrive in column (= contracted key) order.
    for (; p < ae.size() && ae[p].row == row; ++p) {
      if (vs.is_zero(ae[p].value)) continue;
      const std::size_t j = ae[p].col;
      for (std::size_t q = b_start[j]; q < b_start[j + 1]; ++q) {
        if (vs.is_zero(be[q].value)) continue;
        terms[be[q].col].push_back(vs.times(ae[p].value, be[q].value));
      }
    }
    for (std::size_t k = 0; k < n3; ++k) {
      if (terms[k].empty()) continue;
      Value acc = fold_plus(vs, terms[k]);
      if (!vs.is_zero(acc)) c.set(row, k, acc);
    }
  }
  return c;
}

AssociativeArray array_product_sparse(const ValueSet& vs, const AssociativeArray& a,
                                      const AssociativeArray& b) {
  return array_product_sparse(vs, AnnihilatorCertificate::issue(vs), a, b);
}

AssociativeArray transpose(const AssociativeArray& a) {
  AssociativeArray t(a.cols(), a.rows(), a.zero());
  for (const auto& e : a.entries()) t.set(e.col, e.row, e.value);
  return t;
}

AssociativeArray reorder(const AssociativeArray& a, const KeySpace& new_rows,
                         const KeySpace& new_cols) {
  if (!new_rows.same_set(a.rows()) || !new_cols.same_set(a.cols()))
    throw KeyError("reorder: new key spaces must be permutations of the old ones");
  AssociativeArray r(new_rows, new_cols, a.zero());
  for (const auto& e : a.entries())
    r.set(new_rows.index_of(a.rows()[e.row]), new_cols.index_of(a.cols()[e.col]), e.value);
  return r;
}

bool equal_as_map(const AssociativeArray& a, const AssociativeArray& b) {
  if (!a.rows().same_set(b.rows()) || !a.cols().same_set(b.cols())) return false;
  for (std::size_t i = 0; i < a.rows().size(); ++i) {
    const std::size_t bi = b.rows().index_of(a.rows()[i]);
    for (std::size_t j = 0; j < a.cols().size(); ++j)
      if (a.at(i, j) != b.at(bi, b.cols().index_of(a.cols()[j]))) return false;
  }
  return true;
}

}  // namespace hyperbfs
