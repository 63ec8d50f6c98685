// Sparse exact linear algebra over arbitrary ordered key types.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace cdgl {

template <class K>
using SVec = std::map<K, Rat>;

template <class K>
void axpy(SVec<K>& dst, const Rat& c, const SVec<K>& src) {
  if (is_zero(c)) return;
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, c * v);
    } else {
      it->second += c * v;
      if (is_zero(it->second)) dst.erase(it);
    }
  }
}

// Incremental echelon form. Every stored row is normalized so that its pivot
// (smallest key) has coefficient 1 and carries the combination of originally
// inserted vectors it equals, keyed by insertion tag. Rows are only reduced
// forward, which suffices: reducing a vector by ascending pivot order never
// reintroduces a smaller pivot key.
template <class K>
class Echelon {
 public:
  struct Row {
    SVec<K> vec;
    SVec<int> combo;
  };

  // Eliminates every pivot key from v; accumulates the used combination
  // (over insertion tags) into *used when given.
  void reduce(SVec<K>& v, SVec<int>* used = nullptr) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto rit = rows_.find(it->first);
      if (rit == rows_.end()) {
        ++it;
        continue;
      }
      Rat c = it->second;
      const Row& row = rit->second;
      axpy(v, -c, row.vec);
      if (used) axpy(*used, c, row.combo);
      it = v.upper_bound(rit->first);
    }
  }

  // Insert a vector with the given tag. Returns true if independent (a new row
  // was created). When dependent and dependency != nullptr, *dependency is the
  // expression of v over previously accepted tags.
  bool insert(SVec<K> v, int tag, SVec<int>* dependency = nullptr) {
    SVec<int> used;
    reduce(v, &used);
    if (v.empty()) {
      if (dependency) *dependency = std::move(used);
      return false;
    }
    Rat lead = v.begin()->second;
    Row row;
    row.combo[tag] = rat(1);
    axpy(row.combo, rat(-1), used);
    for (auto& [k, c] : v) row.vec[k] = c / lead;
    for (auto& [t, c] : row.combo) c /= lead;
    K pivot = v.begin()->first;
    rows_.emplace(std::move(pivot), std::move(row));
    return true;
  }

  bool contains(SVec<K> v) const {
    reduce(v);
    return v.empty();
  }

  // Solve span(inserted) ∋ v exactly; nullopt if v is outside the span.
  std::optional<SVec<int>> solve(SVec<K> v) const {
    SVec<int> used;
    reduce(v, &used);
    if (!v.empty()) return std::nullopt;
    return used;
  }

  size_t rank() const { return rows_.size(); }

 private:
  std::map<K, Row> rows_;  // keyed by pivot
};

}  // namespace cdgl
