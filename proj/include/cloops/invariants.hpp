#pragma once

#include <set>
#include <vector>

#include "cloops/kernels.hpp"
#include "cloops/loop_table.hpp"

namespace cloops {

struct NucleusReport {
  std::vector<int> left;
  std::vector<int> middle;
  std::vector<int> right;
  std::vector<int> nucleus;  // intersection of the three
};

/// Left, middle, right nuclei and their intersection, each sorted.
NucleusReport nuclei(const LoopTable& l, Exec exec = Exec::Auto);

/// Nuclear elements commuting with everything; sorted.
std::vector<int> center(const LoopTable& l, Exec exec = Exec::Auto);

/// [x,y,z] = (xy*z)^{-1} * (x*yz). Throws NoTwoSidedInverse when xy*z has none.
int associator(const LoopTable& l, int x, int y, int z);

/// { element_order([x,y,z]) : all triples }.
std::set<int> associator_order_spectrum(const LoopTable& l, Exec exec = Exec::Auto);

/// All subloops invariant under the inner mapping generators, sorted by size
/// then lexicographically. Found by closing singleton normal closures under
/// join. Throws TooLarge above the bound.
std::vector<std::vector<int>> normal_subloops(const LoopTable& l, int max_size = 64);

/// Exactly the two trivial normal subloops (so the trivial loop is not simple).
bool is_simple(const LoopTable& l, int max_size = 64);

}  // namespace cloops
