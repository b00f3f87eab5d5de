#pragma once

#include <random>
#include <string>
#include <vector>

#include "cloops/abelian.hpp"
#include "cloops/loop_table.hpp"
#include "cloops/steiner.hpp"

namespace testsup {

/// Uniform-ish random loop of order n (identity row/column fixed) by
/// randomized backtracking over the remaining Latin square cells.
cloops::LoopTable random_loop(int n, std::mt19937& rng);

/// Cayley table of the symmetric group on 3 symbols, identity first.
cloops::LoopTable sym3();

/// The quaternion group of order 8: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
cloops::LoopTable quaternion8();

cloops::LoopTable cyclic(int n);
cloops::LoopTable klein4();

/// The Fano plane triple system on 7 points.
cloops::SteinerTripleSystem fano();

/// Random central factor set over a Steiner loop, assembled from random
/// per-element diagonal values and per-triangle (orientation, d) choices.
cloops::FactorSet random_central_factor_set(const cloops::LoopTable& q, const cloops::AbelianGroup& k,
                                            std::mt19937& rng);

struct NamedLoop {
  std::string name;
  cloops::LoopTable table;
};

/// The fixture corpus used by the cross-cutting structural tests.
std::vector<NamedLoop> corpus();

}  // namespace testsup
