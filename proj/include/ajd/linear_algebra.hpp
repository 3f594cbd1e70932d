#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ajd/chain.hpp"
#include "ajd/coefficient.hpp"

namespace ajd {

template <class Key, class Compare = std::less<Key>>
using SparseRow = std::map<Key, Coefficient, Compare>;

/// Incremental row echelon form over an exact field. Each stored row has a
/// distinct pivot (its first key under `Compare`) with coefficient 1.
template <class Key, class Compare = std::less<Key>>
class RowEchelon {
 public:
  using Row = SparseRow<Key, Compare>;

  std::size_t rank() const { return pivots_.size(); }

  /// Remainder of `row` modulo the stored span.
  Row reduce(Row row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Key k = it->first;
      Coefficient f = it->second;
      for (const auto& [key, v] : p->second) {
        auto [slot, inserted] = row.try_emplace(key, -(f * v));
        if (!inserted) {
          slot->second -= f * v;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
      it = row.upper_bound(k);
    }
    return row;
  }

  bool contains(const Row& row) const { return reduce(row).empty(); }

  /// Inserts `row`; returns false when it was already in the span.
  bool insert(const Row& row) {
    Row r = reduce(row);
    if (r.empty()) return false;
    Coefficient inv = r.begin()->second.inverse();
    for (auto& [k, v] : r) v *= inv;
    Key pivot = r.begin()->first;
    pivots_.emplace(std::move(pivot), std::move(r));
    return true;
  }

  const std::map<Key, Row, Compare>& rows() const { return pivots_; }

  /// True when both spans coincide.
  bool same_span(const RowEchelon& other) const {
    if (rank() != other.rank()) return false;
    for (const auto& [k, r] : other.pivots_) {
      if (!contains(r)) return false;
    }
    return true;
  }

 private:
  std::map<Key, Row, Compare> pivots_;
};

inline SparseRow<Word> to_row(const Chain& c) {
  SparseRow<Word> r;
  for (const auto& [w, k] : c) r.emplace(w, k);
  return r;
}

inline Chain from_row(const SparseRow<Word>& r, int alphabet, Field field) {
  Chain c(alphabet, field);
  for (const auto& [w, k] : r) c.add(w, k);
  return c;
}

/// Basis of the kernel of the linear map sending basis vector `tags[i]` to
/// `images[i]`, written in the tag coordinates.
template <class Tag, class Key>
std::vector<SparseRow<Tag>> kernel_basis(const std::vector<Tag>& tags,
                                         const std::vector<SparseRow<Key>>& images) {
  // Image coordinates sort before tag coordinates, so a row whose image part
  // reduces away keeps its pivot in the tag part.
  using Aug = std::pair<int, std::pair<Key, Tag>>;
  RowEchelon<Aug> e;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    SparseRow<Aug> row;
    for (const auto& [k, v] : images[i]) row.emplace(Aug{0, {k, Tag{}}}, v);
    row.emplace(Aug{1, {Key{}, tags[i]}}, Coefficient(1));
    e.insert(row);
  }
  std::vector<SparseRow<Tag>> out;
  for (const auto& [pivot, row] : e.rows()) {
    if (pivot.first != 1) continue;
    SparseRow<Tag> k;
    for (const auto& [key, v] : row) k.emplace(key.second.second, v);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace ajd
