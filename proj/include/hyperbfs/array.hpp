#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperbfs/valueset.hpp"

namespace hyperbfs {

using Key = std::string;

// Finite key set with a total order given by listing order.
class KeySpace {
 public:
  KeySpace();
  explicit KeySpace(std::vector<Key> keys);  // throws KeyError on duplicates
  KeySpace(std::initializer_list<Key> keys) : KeySpace(std::vector<Key>(keys)) {}

  std::size_t size() const { return impl_->keys.size(); }
  bool empty() const { return impl_->keys.empty(); }
  const Key& operator[](std::size_t i) const { return impl_->keys[i]; }
  const std::vector<Key>& keys() const { return impl_->keys; }
  auto begin() const { return impl_->keys.begin(); }
  auto end() const { return impl_->keys.end(); }

  std::optional<std::size_t> find(const Key& k) const;
  bool contains(const Key& k) const { return find(k).has_value(); }
  std::size_t index_of(const Key& k) const;  // throws KeyError

  bool same_set(const KeySpace& other) const;
  // Equal keys in equal order.
  friend bool operator==(const KeySpace& a, const KeySpace& b) {
    return a.impl_ == b.impl_ || a.impl_->keys == b.impl_->keys;
  }

 private:
  struct Impl {
    std::vector<Key> keys;
    std::unordered_map<Key, std::size_t> index;
  };
  std::shared_ptr<const Impl> impl_;
};

// Sparse map rows x cols -> carrier; absent entries read as the value set's
// zero. Stored zeros are allowed and read the same as absent ones.
class AssociativeArray {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Value value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  AssociativeArray() = default;
  AssociativeArray(KeySpace rows, KeySpace cols, Value zero);

  const KeySpace& rows() const { return rows_; }
  const KeySpace& cols() const { return cols_; }
  Value zero() const { return zero_; }

  // Stored entries sorted by (row, col).
  std::span<const Entry> entries() const { return entries_; }
  std::size_t stored() const { return entries_.size(); }

  Value at(std::size_t row, std::size_t col) const;
  Value read(const Key& row, const Key& col) const;  // throws KeyError
  bool is_stored(std::size_t row, std::size_t col) const;

  void set(std::size_t row, std::size_t col, Value v);
  void set(const Key& row, const Key& col, Value v);
  void erase(std::size_t row, std::size_t col);

  // Row-major dense copy with absent entries filled by zero.
  std::vector<Value> dense() const;

  // Columns (in order) with nonzero value in `row`.
  std::vector<Key> support(std::size_t row = 0) const;

  // Exact structural equality: orderings and stored entries, including stored zeros.
  friend bool operator==(const AssociativeArray& a, const AssociativeArray& b) {
    return a.zero_ == b.zero_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry>::const_iterator locate(std::size_t row, std::size_t col) const;

  KeySpace rows_;
  KeySpace cols_;
  Value zero_ = 0;
  std::vector<Entry> entries_;
};

// Row key used for 1-row (vector) arrays.
inline const Key kVectorRow = "*";

// 1-row array over `cols` with the given dense values (zeros are not stored).
AssociativeArray row_vector(const ValueSet& vs, const KeySpace& cols,
                            std::span<const Value> values);

Value read(const AssociativeArray& a, const Key& row, const Key& col);

// v1 + (v2 + (... + vn)) in the given order; the empty fold is zero.
Value fold_plus(const ValueSet& vs, std::span<const Value> values);

// C(i, k) = fold over every j of the contracted key space, in its order, of
// A(i, j) * B(j, k). Zero operands are not skipped. Only nonzero results are
// stored. Throws ContractionError unless A.cols == B.rows (set and order).
AssociativeArray array_product_strict(const ValueSet& vs, const AssociativeArray& a,
                                      const AssociativeArray& b);

// Proof that zero annihilates times in a value set. Only obtainable from a
// profile or a built-in declaration.
class AnnihilatorCertificate {
 public:
  // Scans finite value sets; uses the built-in declaration for symbolic ones.
  // Throws CertificationError when zero does not annihilate.
  static AnnihilatorCertificate issue(const ValueSet& vs);
  static AnnihilatorCertificate from_profile(const ValueSet& vs, const PropertyProfile& p);

  const std::string& value_set_id() const { return id_; }

 private:
  explicit AnnihilatorCertificate(std::string id) : id_(std::move(id)) {}
  std::string id_;
};

// Fold only over j where both A(i, j) and B(j, k) are stored nonzero, in key
// order. Agrees with the strict product for annihilating value sets.
AssociativeArray array_product_sparse(const ValueSet& vs, const AnnihilatorCertificate& cert,
                                      const AssociativeArray& a, const AssociativeArray& b);
// Issues the certificate itself; throws CertificationError when it cannot.
AssociativeArray array_product_sparse(const ValueSet& vs, const AssociativeArray& a,
                                      const AssociativeArray& b);

AssociativeArray transpose(const AssociativeArray& a);

// Same entry map under new orderings. Throws KeyError on set mismatch.
AssociativeArray reorder(const AssociativeArray& a, const KeySpace& new_rows,
                         const KeySpace& new_cols);

// Equal key sets and equal read values everywhere; orderings ignored.
bool equal_as_map(const AssociativeArray& a, const AssociativeArray& b);

}  // namespace hyperbfs
