#include "cloops/loop_table.hpp"

#include <numeric>
#include <string>

#include "cloops/error.hpp"

namespace cloops {

LoopTable LoopTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) fail(Err::Ragged, "empty table");
  std::vector<int> t;
  t.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      fail(Err::Ragged, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n),
           {i});
    for (int v : rows[i]) {
      if (v < 0 || v >= n)
        fail(Err::NotLatin, "entry " + std::to_string(v) + " out of range in row " + std::to_string(i), {i, v});
      t.push_back(v);
    }
  }

  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = t[i * n + j];
      if (seen[v]) fail(Err::NotLatin, "duplicate " + std::to_string(v) + " in row " + std::to_string(i), {i, v});
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      const int v = t[i * n + j];
      if (seen[v])
        fail(Err::NotLatin, "duplicate " + std::to_string(v) + " in column " + std::to_string(j), {j, v});
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j)
    if (t[j] != j) fail(Err::NoIdentity, "row 0 is not the identity permutation", {j});
  for (int i = 0; i < n; ++i)
    if (t[i * n] != i) fail(Err::NoIdentity, "column 0 is not the identity permutation", {i});

  return LoopTable(n, std::move(t));
}

LoopTable::LoopTable(int n, std::vector<int> t) : n_(n), t_(std::move(t)) {
  ld_.resize(t_.size());
  rd_.resize(t_.size());
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      const int p = t_[x * n_ + y];
      ld_[x * n_ + p] = y;  // x * y = p  =>  x \ p = y
      rd_[y * n_ + p] = x;  // x * y = p  =>  p / y = x
    }
}

int LoopTable::inv(int x) const {
  const int l = ldiv(x, 0);
  const int r = rdiv(0, x);
  if (l != r)
    fail(Err::NoTwoSidedInverse,
         "element " + std::to_string(x) + " has right inverse " + std::to_string(l) +
             " but left inverse " + std::to_string(r),
         {x});
  return l;
}

int LoopTable::power(int x, int k) const {
  int p = 0;
  for (int i = 0; i < k; ++i) p = mul(p, x);
  return p;
}

int LoopTable::element_order(int x) const {
  int p = x, k = 1;
  while (p != 0) {
    p = mul(p, x);
    ++k;
  }
  return k;
}

long long LoopTable::exponent() const {
  long long e = 1;
  for (int x = 0; x < n_; ++x) e = std::lcm<long long>(e, element_order(x));
  return e;
}

}  // namespace cloops
