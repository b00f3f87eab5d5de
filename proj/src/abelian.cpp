#include "cloops/abelian.hpp"

#include <string>

#include "cloops/error.hpp"

namespace cloops {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(Err::OutOfRange, "factor sequence must be nonempty");
  long long ord = 1;
  for (int f : factors_) {
    if (f < 1) fail(Err::OutOfRange, "cyclic factor " + std::to_string(f) + " < 1");
    ord *= f;
    if (ord > (1 << 20)) fail(Err::TooLarge, "group order exceeds 2^20");
  }
  order_ = static_cast<int>(ord);
  strides_.resize(factors_.size());
  int s = 1;
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    strides_[i] = s;
    s *= factors_[i];
  }
}

std::vector<int> AbelianGroup::residues(int index) const {
  std::vector<int> r(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) r[i] = (index / strides_[i]) % factors_[i];
  return r;
}

int AbelianGroup::index_of(const std::vector<int>& residues) const {
  if (residues.size() != factors_.size()) fail(Err::OutOfRange, "residue tuple arity mismatch");
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= factors_[i])
      fail(Err::OutOfRange, "residue out of range", {static_cast<int>(i), residues[i]});
    idx += residues[i] * strides_[i];
  }
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int ra = (a / strides_[i]) % factors_[i];
    const int rb = (b / strides_[i]) % factors_[i];
    idx += ((ra + rb) % factors_[i]) * strides_[i];
  }
  return idx;
}

int AbelianGroup::neg(int a) const {
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int ra = (a / strides_[i]) % factors_[i];
    idx += ((factors_[i] - ra) % factors_[i]) * strides_[i];
  }
  return idx;
}

int AbelianGroup::scalar(long long m, int a) const {
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int ra = (a / strides_[i]) % factors_[i];
    long long v = (m % factors_[i]) * ra % factors_[i];
    if (v < 0) v += factors_[i];
    idx += static_cast<int>(v) * strides_[i];
  }
  return idx;
}

bool AbelianGroup::exponent_divides(int k) const {
  for (int f : factors_)
    if (k % f != 0) return false;
  return true;
}

LoopTable AbelianGroup::cayley_table() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) rows[a][b] = add(a, b);
  return LoopTable::from_rows(rows);
}

Automorphism validate_automorphism(const AbelianGroup& k, const Perm& images) {
  if (static_cast<int>(images.size()) != k.order() || !is_permutation(images))
    fail(Err::NotAdditive, "images are not a permutation of the group indices");
  const int n = k.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[k.add(a, b)] != k.add(images[a], images[b]))
        fail(Err::NotAdditive,
             "phi(a+b) != phi(a)+phi(b) at a=" + std::to_string(a) + " b=" + std::to_string(b),
             {a, b});
  return Automorphism{images};
}

void validate_theta(const AbelianGroup& k, const LoopTable& q, const ThetaMap& maps) {
  if (static_cast<int>(maps.size()) != q.size())
    fail(Err::NotHomomorphism, "theta must assign one automorphism per element of Q");
  for (const Perm& p : maps) validate_automorphism(k, p);
  if (maps[0] != perm_identity(k.order()))
    fail(Err::NotHomomorphism, "theta_1 is not the identity automorphism");
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (maps[q.mul(x, y)] != perm_compose(maps[x], maps[y]))
        fail(Err::NotHomomorphism,
             "theta_{xy} != theta_x theta_y at x=" + std::to_string(x) + " y=" + std::to_string(y),
             {x, y});
}

}  // namespace cloops
