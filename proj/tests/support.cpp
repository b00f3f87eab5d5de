#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "cloops/cayley_dickson.hpp"
#include "cloops/core.hpp"

namespace testsup {

using cloops::LoopTable;

LoopTable random_loop(int n, std::mt19937& rng) {
  if (n > 16) throw std::runtime_error("random_loop: order too large");
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  std::vector<unsigned> row_used(n, 0), col_used(n, 0);
  auto set = [&](int i, int j, int v) {
    t[i][j] = v;
    row_used[i] |= 1u << v;
    col_used[j] |= 1u << v;
  };
  for (int j = 0; j < n; ++j) set(0, j, j);
  for (int i = 1; i < n; ++i) set(i, 0, i);

  const unsigned full = (n == 32) ? ~0u : (1u << n) - 1;
  std::function<bool(int)> go = [&](int cell) -> bool {
    if (cell == (n - 1) * (n - 1)) return true;
    const int i = 1 + cell / (n - 1), j = 1 + cell % (n - 1);
    unsigned avail = full & ~(row_used[i] | col_used[j]);
    std::vector<int> opts;
    for (unsigned m = avail; m; m &= m - 1) opts.push_back(__builtin_ctz(m));
    std::shuffle(opts.begin(), opts.end(), rng);
    for (int v : opts) {
      set(i, j, v);
      if (go(cell + 1)) return true;
      t[i][j] = -1;
      row_used[i] &= ~(1u << v);
      col_used[j] &= ~(1u << v);
    }
    return false;
  };
  if (!go(0)) throw std::runtime_error("random_loop: backtracking failed");
  return LoopTable::from_rows(t);
}

LoopTable sym3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    throw std::logic_error("not a permutation of 3");
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      rows[i][j] = index_of(comp);
    }
  return LoopTable::from_rows(rows);
}

LoopTable quaternion8() {
  return LoopTable::from_rows({{0, 1, 2, 3, 4, 5, 6, 7},
                               {1, 0, 3, 2, 5, 4, 7, 6},
                               {2, 3, 1, 0, 6, 7, 5, 4},
                               {3, 2, 0, 1, 7, 6, 4, 5},
                               {4, 5, 7, 6, 1, 0, 2, 3},
                               {5, 4, 6, 7, 0, 1, 3, 2},
                               {6, 7, 4, 5, 3, 2, 1, 0},
                               {7, 6, 5, 4, 2, 3, 0, 1}});
}

LoopTable cyclic(int n) { return cloops::AbelianGroup({n}).cayley_table(); }

LoopTable klein4() { return cloops::AbelianGroup({2, 2}).cayley_table(); }

cloops::SteinerTripleSystem fano() {
  return cloops::validate_sts(
      7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

cloops::FactorSet random_central_factor_set(const cloops::LoopTable& q,
                                            const cloops::AbelianGroup& k, std::mt19937& rng) {
  std::uniform_int_distribution<int> kd(0, k.order() - 1);
  std::vector<int> diag(q.size(), 0);
  for (int x = 1; x < q.size(); ++x) diag[x] = kd(rng);
  std::vector<cloops::TriangleChoice> choices;
  const auto sts = cloops::underlying_sts(q);
  for (const auto& tri : sts.triples) {
    std::array<int, 3> pts = tri;
    std::shuffle(pts.begin(), pts.end(), rng);
    choices.push_back(cloops::TriangleChoice{pts[0], pts[1], kd(rng)});
  }
  return cloops::factor_set_from_blocks(q, k, diag, choices);
}

std::vector<NamedLoop> corpus() {
  std::vector<NamedLoop> out;
  out.push_back({"trivial", LoopTable::from_rows({{0}})});
  out.push_back({"z2", cyclic(2)});
  out.push_back({"z4", cyclic(4)});
  out.push_back({"z6", cyclic(6)});
  out.push_back({"klein", klein4()});
  out.push_back({"sym3", sym3()});
  out.push_back({"quaternion8", quaternion8()});
  out.push_back({"fano8", cloops::steiner_loop(fano())});
  out.push_back({"steiner10", cloops::builtin("steiner10")});
  out.push_back({"table1_16", cloops::builtin("table1_16")});
  out.push_back({"klein16", cloops::klein16()});
  out.push_back({"assoc3", cloops::assoc_loop(3)});
  out.push_back({"assoc4", cloops::assoc_loop(4)});
  out.push_back({"complex4", cloops::signed_loop(cloops::doubled_to_level(1))});
  out.push_back({"quaternion_signed8", cloops::signed_loop(cloops::doubled_to_level(2))});
  out.push_back({"octonion16", cloops::signed_loop(cloops::doubled_to_level(3))});
  out.push_back({"sedenion32", cloops::sedenion_loop()});
  out.push_back({"sym3_x_steiner10", cloops::direct_product(sym3(), cloops::builtin("steiner10"))});
  return out;
}

}  // namespace testsup
