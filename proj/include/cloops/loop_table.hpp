#pragma once

#include <vector>

namespace cloops {

/// A finite loop given by its multiplication table: an n x n Latin square over
/// 0..n-1 whose row 0 and column 0 are the identity permutation (element 0 is
/// the two-sided neutral element). Immutable after construction; all lookups
/// are O(1) thanks to precomputed division tables.
class LoopTable {
public:
  /// Validates and adopts a square matrix of element indices.
  /// Throws Ragged / NotLatin / NoIdentity. No renumbering is performed.
  static LoopTable from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }

  int mul(int x, int y) const { return t_[x * n_ + y]; }

  /// Unique z with x*z = y.
  int ldiv(int x, int y) const { return ld_[x * n_ + y]; }

  /// Unique z with z*y = x.
  int rdiv(int x, int y) const { return rd_[y * n_ + x]; }

  bool has_two_sided_inverse(int x) const { return ldiv(x, 0) == rdiv(0, x); }

  /// The unique y with x*y = y*x = 0; throws NoTwoSidedInverse if the two
  /// one-sided solutions differ.
  int inv(int x) const;

  /// Left-associated power x^k = (..((x*x)*x)..)*x, with x^0 = 0.
  int power(int x, int k) const;

  /// Least k >= 1 with left-associated x^k = 0.
  int element_order(int x) const;

  /// lcm of all element orders.
  long long exponent() const;

  const std::vector<int>& data() const { return t_; }

  bool operator==(const LoopTable& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
  LoopTable(int n, std::vector<int> t);

  int n_ = 0;
  std::vector<int> t_;   // t_[x*n+y] = x*y
  std::vector<int> ld_;  // ld_[x*n+y] = x \ y
  std::vector<int> rd_;  // rd_[y*n+x] = x / y
};

}  // namespace cloops
