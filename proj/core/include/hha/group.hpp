#pragma once

#include <string>
#include <vector>

#include "hha/ext_scalar.hpp"

namespace hha {

/// A finite group given by its multiplication table over indices 0..n-1.
/// Associativity, identity and inverses are verified at construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  static FiniteGroup build(const std::vector<std::vector<int>>& table);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
};

}  // namespace hha
