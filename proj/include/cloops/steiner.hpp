#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "cloops/extension.hpp"
#include "cloops/loop_table.hpp"

namespace cloops {

/// Steiner triple system on points 1..v: every pair of distinct points lies in
/// exactly one triple.
struct SteinerTripleSystem {
  int v = 0;
  std::vector<std::array<int, 3>> triples;
};

/// Throws InvalidSTS unless every pair is covered exactly once.
SteinerTripleSystem validate_sts(int v, std::vector<std::array<int, 3>> triples);

/// Loop of order v+1: element 0 adjoined identity, points are 1..v, x*x = 0,
/// and x*y is the third point of the triple through x and y.
LoopTable steiner_loop(const SteinerTripleSystem& sts);

/// The triple system {x, y, x*y} of a Steiner loop. Throws QNotSteiner.
SteinerTripleSystem underlying_sts(const LoopTable& q);

/// Fixture tables: "steiner10" (the order-10 Steiner loop), "table1_16"
/// (the order-16 nonflexible C-loop), "sedenion_table2" (the order-32 signed
/// sedenion basis loop). Throws UnknownIdentity for other names.
LoopTable builtin(std::string_view name);

/// Parameters (a,b,c,d) of the 4x4 block of a central factor set restricted to
/// a Klein subloop {1,u,v,uv}: diagonal (0,a,b,c) and f(v,u) = d.
struct Block {
  int a = 0, b = 0, c = 0, d = 0;
};

/// The full 4x4 array over K determined by the parameters; rows/columns in the
/// order (1, u, v, uv).
std::array<std::array<int, 4>, 4> expand_block(const AbelianGroup& k, const Block& blk);

Block block_b1(int a);  // rows (0,a,a,0), (0,0,a,a), (0,a,0,a)
Block block_b2(int d);  // rows (0,0,-d,d), (0,d,0,-d), (0,-d,d,0)
Block block_b3(const AbelianGroup& k, int a);  // rows (0,0,0,0), (0,-a,0,a), (0,a,0,a)

/// Free choices for one triangle of the triple system: which two points play
/// (u, v) and the value d = f(v,u). The third point is u*v.
struct TriangleChoice {
  int u = 0, v = 0;
  int d = 0;
};

/// Central factor set (theta = id) assembled triangle by triangle: the
/// diagonal f(x,x) comes from diag, each triangle's block is completed from
/// its d value and orientation. Unlisted triangles default to u < v < uv with
/// d = 0. Throws QNotSteiner. The result always validates.
FactorSet factor_set_from_blocks(const LoopTable& q, const AbelianGroup& k,
                                 const std::vector<int>& diag = {},
                                 const std::vector<TriangleChoice>& choices = {});

/// True iff for every Klein subloop of Q some ordering of its three points
/// makes the restriction of f equal to the expanded block.
bool is_based_on(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f,
                 const Block& blk);
bool is_based_on(const FactorSet& fs, const Block& blk);

/// The nonflexible order-16 extension of the Klein group by the Klein group
/// (isomorphic to the table1_16 fixture); pair index (a,x) -> a*4 + x.
FactorSet klein16_factor_set();
LoopTable klein16();

/// Nonflexible C-loop with an associator of order exactly n (n > 2): a central
/// extension of Z_n (n odd, order 4n) or Z_{2n} (n even, order 8n) by the
/// Klein group, built on the B3 block. Throws BadOrder for n <= 2.
FactorSet assoc_loop_factor_set(int n);
LoopTable assoc_loop(int n);

}  // namespace cloops
