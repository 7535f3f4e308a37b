#include "hha/group.hpp"

#include <algorithm>

namespace hha {

FiniteGroup FiniteGroup::build(const std::vector<std::vector<int>>& table) {
  FiniteGroup g;
  int n = int(table.size());
  if (n == 0) throw Error("empty group table");
  g.n_ = n;
  g.table_.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (int(table[i].size()) != n) throw Error("group table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw Error("group table entry out of range");
      g.table_[std::size_t(i) * n + j] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error("group table not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  int e = -1;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) != b || g.mul(b, a) != b) {
        ok = false;
        break;
      }
    if (ok) {
      e = a;
      break;
    }
  }
  if (e < 0) throw Error("group table has no identity");
  g.identity_ = e;
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == e && g.mul(b, a) == e) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw Error("group element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n_, false);
  for (int a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    for (int g = 0; g < n_; ++g) {
      int c = mul(mul(g, a), inv(g));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace hha
