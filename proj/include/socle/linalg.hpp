#pragma once

// Sparse row echelon forms over a coefficient Ops (detail::FpOps or
// detail::QQOps). Rows are sorted by column; the pivot of a row is its
// smallest column.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "socle/field.hpp"

namespace socle::linalg {

template <class Ops>
using Row = std::vector<std::pair<std::uint32_t, typename Ops::value_type>>;

/// Incremental fully reduced echelon form: every pivot is 1 and no row has a
/// nonzero entry in another row's pivot column.
template <class Ops>
class Echelon {
public:
  using V = typename Ops::value_type;

  Echelon(Ops ops, std::uint32_t ncols) : ops_(ops), ncols_(ncols) {}

  std::uint32_t columns() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint32_t, Row<Ops>>& rows() const { return rows_; }

  Row<Ops> reduce(const Row<Ops>& v) const {
    if (rows_.empty()) return v;
    std::map<std::uint32_t, V> acc;
    for (const auto& [c, x] : v) acc[c] = x;
    for (const auto& [c, x] : v) {
      auto r = rows_.find(c);
      if (r == rows_.end()) continue;
      auto it = acc.find(c);
      if (it == acc.end()) continue;
      V f = it->second;
      for (const auto& [rc, rx] : r->second) {
        auto& slot = acc[rc];
        slot = ops_.sub(slot, ops_.mul(f, rx));
      }
    }
    Row<Ops> out;
    for (auto& [c, x] : acc) {
      if (!ops_.is_zero(x)) out.emplace_back(c, std::move(x));
    }
    return out;
  }

  bool contains(const Row<Ops>& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false when it was already there.
  bool insert(const Row<Ops>& v) {
    Row<Ops> r = reduce(v);
    if (r.empty()) return false;
    V inv = ops_.inv(r.front().second);
    for (auto& e : r) e.second = ops_.mul(e.second, inv);
    std::uint32_t p = r.front().first;
    for (auto& [pc, row] : rows_) {
      auto hit = std::lower_bound(row.begin(), row.end(), p,
                                  [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (hit == row.end() || hit->first != p) continue;
      V f = hit->second;
      row = axpy(row, f, r);
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  /// Pivot columns in increasing order.
  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
  }

private:
  // a - f * b
  Row<Ops> axpy(const Row<Ops>& a, const V& f, const Row<Ops>& b) const {
    Row<Ops> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, ops_.neg(ops_.mul(f, b[j].second)));
        ++j;
      } else {
        V x = ops_.sub(a[i].second, ops_.mul(f, b[j].second));
        if (!ops_.is_zero(x)) out.emplace_back(a[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ops ops_;
  std::uint32_t ncols_;
  std::map<std::uint32_t, Row<Ops>> rows_;
};

/// Kernel of the linear map sending basis vector j to images[j] (a row over
/// `target_cols` columns). Returned vectors are in reduced echelon form over
/// the source coordinates, pivot first.
template <class Ops>
std::vector<Row<Ops>> kernel(const Ops& ops, const std::vector<Row<Ops>>& images, std::uint32_t target_cols) {
  const auto n = static_cast<std::uint32_t>(images.size());
  Echelon<Ops> e(ops, target_cols + n);
  for (std::uint32_t j = 0; j < n; ++j) {
    Row<Ops> r = images[j];
    r.emplace_back(target_cols + j, ops.one());
    e.insert(r);
  }
  std::vector<Row<Ops>> out;
  for (const auto& [p, row] : e.rows()) {
    if (p < target_cols) continue;
    Row<Ops> k;
    for (const auto& [c, x] : row) k.emplace_back(c - target_cols, x);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace socle::linalg
