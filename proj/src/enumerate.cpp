#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tiverify/corpus.hpp"
#include "tiverify/errors.hpp"

namespace tiv {

namespace {

int table_element_order(const std::vector<int>& t, int n, int x) {
  int k = 1, acc = x;
  while (acc != 0) {
    acc = t[static_cast<size_t>(acc) * n + x];
    ++k;
  }
  return k;
}

std::vector<int> element_orders_of(const std::vector<int>& t, int n) {
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x) orders[x] = table_element_order(t, n, x);
  return orders;
}

/// Isomorphism test on raw tables: backtrack over the images of a greedy
/// generating sequence; candidate images are restricted to elements of the
/// same order. The derived map is then verified in full.
bool raw_tables_isomorphic(const std::vector<int>& a, const std::vector<int>& b,
                           int n) {
  std::vector<int> ord_a = element_orders_of(a, n);
  std::vector<int> ord_b = element_orders_of(b, n);
  {
    std::vector<int> sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Greedy generating sequence of `a`.
  std::vector<int> gens;
  std::vector<char> closure(n, 0);
  auto recompute_closure = [&]() {
    std::fill(closure.begin(), closure.end(), 0);
    closure[0] = 1;
    std::vector<int> list{0};
    for (size_t i = 0; i < list.size(); ++i)
      for (int s : gens) {
        int p = a[static_cast<size_t>(list[i]) * n + s];
        if (!closure[p]) {
          closure[p] = 1;
          list.push_back(p);
        }
      }
    return static_cast<int>(list.size());
  };
  int covered = recompute_closure();
  while (covered < n) {
    for (int x = 1; x < n; ++x)
      if (!closure[x]) {
        gens.push_back(x);
        break;
      }
    covered = recompute_closure();
  }

  std::vector<int> images(gens.size(), -1);
  std::function<bool(size_t)> place = [&](size_t level) -> bool {
    if (level == gens.size()) {
      std::vector<int> map(n, -1);
      map[0] = 0;
      std::vector<int> list{0};
      for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
          int e = a[static_cast<size_t>(list[i]) * n + gens[j]];
          int f = b[static_cast<size_t>(map[list[i]]) * n + images[j]];
          if (map[e] == -1) {
            map[e] = f;
            list.push_back(e);
          } else if (map[e] != f) {
            return false;
          }
        }
      if (static_cast<int>(list.size()) != n) return false;
      std::vector<char> hit(n, 0);
      for (int x = 0; x < n; ++x) {
        if (hit[map[x]]) return false;
        hit[map[x]] = 1;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (map[a[static_cast<size_t>(x) * n + y]] !=
              b[static_cast<size_t>(map[x]) * n + map[y]])
            return false;
      return true;
    }
    for (int y = 1; y < n; ++y) {
      if (ord_b[y] != ord_a[gens[level]]) continue;
      images[level] = y;
      if (place(level + 1)) return true;
    }
    return false;
  };
  return place(0);
}

/// Backtracking construction of every multiplication table on {0..n-1}
/// with identity 0, where new labels may only be introduced in increasing
/// order as products require them. Completed boxes of materialized labels
/// are subgroups, so partial tables whose box size does not divide n are
/// pruned. Light-style associativity forcing keeps the tree narrow; a full
/// associativity check runs at every leaf.
class CayleySearch {
 public:
  explicit CayleySearch(int n) : n_(n) {
    if (n_ > 31) throw Error("Cayley-table enumeration supports order <= 31");
    cell_.assign(static_cast<size_t>(n_) * n_, -1);
    rowmask_.assign(n_, 0);
    colmask_.assign(n_, 0);
    for (int x = 0; x < n_; ++x) {
      cell_[static_cast<size_t>(x) * n_ + 0] = x;
      cell_[static_cast<size_t>(0) * n_ + x] = x;
      rowmask_[x] |= 1u << x;
      colmask_[x] |= 1u << x;
    }
    rowmask_[0] = colmask_[0] = (n_ >= 31) ? ~0u : ((1u << n_) - 1);
  }

  std::vector<std::vector<int>> run() {
    if (n_ == 1) return {{0}};
    // In every consistent table the first completed box is the cyclic
    // subgroup generated by element 1, with label j = 1^j: each new label
    // in that phase is forced to be the next power. So instead of growing
    // it cell by cell, preset a Z_d box for every possible order d of
    // element 1 and search only the extension.
    for (int d = 2; d <= n_; ++d) {
      if (n_ % d != 0) continue;
      size_t mark = trail_.size();
      for (int m = 1; m < d; ++m) materialize();
      bool ok = true;
      for (int i = 1; i < d && ok; ++i)
        for (int j = 1; j < d && ok; ++j)
          ok = try_assign(i, j, (i + j) % d);
      if (ok) dfs(0);
      undo_to(mark);
      for (int m = 1; m < d; ++m) dematerialize();
    }
    return results_;
  }

 private:
  int at(int r, int c) const { return cell_[static_cast<size_t>(r) * n_ + c]; }

  void dfs(size_t cursor) {
    while (cursor < agenda_.size() &&
           at(agenda_[cursor].first, agenda_[cursor].second) != -1)
      ++cursor;
    if (cursor == agenda_.size()) {
      if (k_ == n_) {
        accept_leaf();
        return;
      }
      if (n_ % k_ != 0) return;
      materialize();
      dfs(cursor);
      dematerialize();
      return;
    }
    auto [r, c] = agenda_[cursor];
    for (int v = 0; v < k_; ++v) {
      if ((rowmask_[r] >> v & 1) || (colmask_[c] >> v & 1)) continue;
      size_t mark = trail_.size();
      if (try_assign(r, c, v)) dfs(cursor + 1);
      undo_to(mark);
    }
    if (k_ < n_) {
      int v = k_;
      materialize();
      size_t mark = trail_.size();
      if (try_assign(r, c, v)) dfs(cursor + 1);
      undo_to(mark);
      dematerialize();
    }
  }

  void materialize() {
    agenda_marks_.push_back(agenda_.size());
    int m = k_;
    for (int c = 1; c < m; ++c) agenda_.emplace_back(m, c);
    for (int r = 1; r < m; ++r) agenda_.emplace_back(r, m);
    agenda_.emplace_back(m, m);
    ++k_;
  }

  void dematerialize() {
    agenda_.resize(agenda_marks_.back());
    agenda_marks_.pop_back();
    --k_;
  }

  bool try_assign(int r0, int c0, int v0) {
    pending_.clear();
    pending_.emplace_back(r0 * n_ + c0, v0);
    for (size_t qi = 0; qi < pending_.size(); ++qi) {
      auto [flat, v] = pending_[qi];
      int r = flat / n_, c = flat % n_;
      int cur = cell_[flat];
      if (cur != -1) {
        if (cur == v) continue;
        return false;
      }
      if ((rowmask_[r] >> v & 1) || (colmask_[c] >> v & 1)) return false;
      cell_[flat] = v;
      rowmask_[r] |= 1u << v;
      colmask_[c] |= 1u << v;
      trail_.push_back(flat);
      // Associativity consequences of the new fact r*c = v.
      for (int t = 0; t < k_; ++t) {
        int u = at(t, r);  // (t*r)*c = t*(r*c)
        if (u != -1) {
          int lhs = at(u, c), rhs = at(t, v);
          if (lhs != -1 && rhs != -1) {
            if (lhs != rhs) return false;
          } else if (lhs != -1) {
            pending_.emplace_back(t * n_ + v, lhs);
          } else if (rhs != -1) {
            pending_.emplace_back(u * n_ + c, rhs);
          }
        }
        int w = at(c, t);  // (r*c)*t = r*(c*t)
        if (w != -1) {
          int lhs = at(v, t), rhs = at(r, w);
          if (lhs != -1 && rhs != -1) {
            if (lhs != rhs) return false;
          } else if (lhs != -1) {
            pending_.emplace_back(r * n_ + w, lhs);
          } else if (rhs != -1) {
            pending_.emplace_back(v * n_ + t, rhs);
          }
        }
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      int flat = trail_.back();
      trail_.pop_back();
      int v = cell_[flat];
      cell_[flat] = -1;
      rowmask_[flat / n_] &= ~(1u << v);
      colmask_[flat % n_] &= ~(1u << v);
    }
  }

  void accept_leaf() {
    std::vector<int> table(cell_.begin(), cell_.end());
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (table[static_cast<size_t>(table[static_cast<size_t>(a) * n_ + b]) * n_ + c] !=
              table[static_cast<size_t>(a) * n_ + table[static_cast<size_t>(b) * n_ + c]])
            return;
    std::vector<int> profile = element_orders_of(table, n_);
    std::sort(profile.begin(), profile.end());
    for (size_t i = 0; i < results_.size(); ++i) {
      if (profiles_[i] != profile) continue;
      if (raw_tables_isomorphic(results_[i], table, n_)) return;
    }
    results_.push_back(std::move(table));
    profiles_.push_back(std::move(profile));
  }

  int n_;
  int k_ = 1;
  std::vector<int> cell_;
  std::vector<uint32_t> rowmask_, colmask_;
  std::vector<std::pair<int, int>> agenda_;
  std::vector<size_t> agenda_marks_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<std::vector<int>> results_;
  std::vector<std::vector<int>> profiles_;
};

}  // namespace

std::vector<GroupTable> enumerate_all_of_order(int n, int hard_cap) {
  if (n < 1) throw Error("order must be >= 1");
  if (n > hard_cap)
    throw Error("order " + std::to_string(n) + " exceeds the enumeration cap (" +
                std::to_string(hard_cap) + ")");
  CayleySearch search(n);
  std::vector<GroupTable> out;
  int index = 1;
  for (auto& table : search.run()) {
    std::vector<int32_t> mul(table.begin(), table.end());
    std::string name = "G(" + std::to_string(n) + "," + std::to_string(index) + ")";
    out.push_back(GroupTable::from_mul_table(
        n, std::move(mul), name,
        "Cayley-table backtracking search, order " + std::to_string(n) +
            ", class " + std::to_string(index)));
    ++index;
  }
  return out;
}

bool isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  int n = a.order();
  std::vector<int> ta(static_cast<size_t>(n) * n), tb(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ta[static_cast<size_t>(x) * n + y] = a.mul(x, y);
      tb[static_cast<size_t>(x) * n + y] = b.mul(x, y);
    }
  return raw_tables_isomorphic(ta, tb, n);
}

}  // namespace tiv
