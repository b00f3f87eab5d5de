#pragma once

#include <optional>
#include <vector>

#include "cloops/loop_table.hpp"
#include "cloops/perm.hpp"

namespace cloops {

/// Smallest subset containing S and 0 that is closed under multiplication.
/// Closure under divisions follows by finiteness. Returned sorted.
std::vector<int> subloop_generated(const LoopTable& l, const std::vector<int>& s);

/// 0 in H and H closed under multiplication (H need not be sorted).
bool is_subloop(const LoopTable& l, const std::vector<int>& h);

/// Pointwise inner mapping generators; O(1) per application.
int apply_t(const LoopTable& l, int x, int h);               // T_x = R_x^{-1} L_x
int apply_l(const LoopTable& l, int x, int y, int h);        // L(x,y) = L_{yx}^{-1} L_y L_x
int apply_r(const LoopTable& l, int x, int y, int h);        // R(x,y) = R_{xy}^{-1} R_y R_x

struct InnerMaps {
  Perm l;  // L(x,y)
  Perm r;  // R(x,y)
  Perm t;  // T_x
};
InnerMaps inner_maps(const LoopTable& l, int x, int y);

/// True iff the subloop H is setwise invariant under all T_x, L(x,y), R(x,y).
/// Throws NotASubloop when H is not a subloop.
bool is_normal(const LoopTable& l, const std::vector<int>& h);

/// Smallest normal subloop containing S.
std::vector<int> normal_closure(const LoopTable& l, const std::vector<int>& s);

struct QuotientLoop {
  LoopTable table;                      // loop on the cosets
  std::vector<int> coset_of;            // projection: element -> coset index
  std::vector<std::vector<int>> cosets; // sorted members per coset, ordered by min element
};

/// Quotient by a normal subloop; coset of 0 is element 0, cosets are ordered by
/// their minimal element. Throws NotNormal / NotASubloop.
QuotientLoop quotient(const LoopTable& l, const std::vector<int>& h);

/// Componentwise product on pairs, index (i1, i2) -> i1*n2 + i2.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);

/// The multiplication table induced on a subloop, relabeled by sorted position.
/// Throws NotASubloop when the set is not closed or misses 0.
LoopTable induced_subtable(const LoopTable& l, const std::vector<int>& h);

/// phi with phi(x*y) = phi(x)*phi(y), phi(0) = 0, or nullopt. Backtracking over
/// a generating sequence with element-order and square/root fingerprint pruning.
/// The returned map is re-verified against both tables. Throws TooLarge above
/// the search bound.
std::optional<std::vector<int>> find_isomorphism(const LoopTable& a, const LoopTable& b,
                                                 int max_size = 64);

/// Checks that phi is a bijective homomorphism a -> b fixing 0.
bool is_isomorphism(const LoopTable& a, const LoopTable& b, const std::vector<int>& phi);

}  // namespace cloops
