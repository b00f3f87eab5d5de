#pragma once

#include <vector>

#include "cloops/loop_table.hpp"
#include "cloops/perm.hpp"

namespace cloops {

/// Finite abelian group as a product of cyclic groups Z_{n_1} x ... x Z_{n_k}.
/// Elements travel as linear indices: the row-major mixed-radix value of the
/// residue tuple (first factor most significant).
class AbelianGroup {
public:
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }

  std::vector<int> residues(int index) const;
  int index_of(const std::vector<int>& residues) const;

  int add(int a, int b) const;
  int neg(int a) const;
  int scalar(long long m, int a) const;  // m*a with any integer m

  bool exponent_divides(int k) const;

  /// Addition table as a LoopTable (identity is index 0).
  LoopTable cayley_table() const;

private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
};

/// An additive bijection of the group's linear indices.
struct Automorphism {
  Perm images;
};

/// Checks bijectivity and additivity phi(a+b) = phi(a)+phi(b) over all pairs.
/// Throws NotAdditive with a witness pair.
Automorphism validate_automorphism(const AbelianGroup& k, const Perm& images);

/// One automorphism of K per element of Q.
using ThetaMap = std::vector<Perm>;

/// Checks each map is an automorphism, theta_0 = id, and
/// theta_{xy} = theta_x o theta_y over all pairs of Q.
/// Throws NotAdditive / NotHomomorphism.
void validate_theta(const AbelianGroup& k, const LoopTable& q, const ThetaMap& maps);

}  // namespace cloops
