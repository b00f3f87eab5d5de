#include "cloops/steiner.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cloops/error.hpp"

namespace cloops {

SteinerTripleSystem validate_sts(int v, std::vector<std::array<int, 3>> triples) {
  if (v < 1) fail(Err::InvalidSTS, "point count must be >= 1");
  std::vector<char> pair_seen(static_cast<size_t>(v + 1) * (v + 1), 0);
  auto mark = [&](int a, int b, size_t ti) {
    char& s = pair_seen[static_cast<size_t>(a) * (v + 1) + b];
    if (s)
      fail(Err::InvalidSTS,
           "pair {" + std::to_string(a) + "," + std::to_string(b) + "} covered twice",
           {a, b, static_cast<int>(ti)});
    s = 1;
  };
  for (size_t ti = 0; ti < triples.size(); ++ti) {
    auto& t = triples[ti];
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > v || t[0] == t[1] || t[1] == t[2])
      fail(Err::InvalidSTS, "triple " + std::to_string(ti) + " is not three distinct points");
    mark(t[0], t[1], ti);
    mark(t[0], t[2], ti);
    mark(t[1], t[2], ti);
  }
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b)
      if (!pair_seen[static_cast<size_t>(a) * (v + 1) + b])
        fail(Err::InvalidSTS, "pair {" + std::to_string(a) + "," + std::to_string(b) + "} uncovered",
             {a, b});
  return SteinerTripleSystem{v, std::move(triples)};
}

LoopTable steiner_loop(const SteinerTripleSystem& sts) {
  const int n = sts.v + 1;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    rows[0][i] = i;
    rows[i][0] = i;
  }
  for (const auto& t : sts.triples) {
    rows[t[0]][t[1]] = t[2];
    rows[t[1]][t[0]] = t[2];
    rows[t[0]][t[2]] = t[1];
    rows[t[2]][t[0]] = t[1];
    rows[t[1]][t[2]] = t[0];
    rows[t[2]][t[1]] = t[0];
  }
  return LoopTable::from_rows(rows);
}

SteinerTripleSystem underlying_sts(const LoopTable& q) {
  if (!check_identity(q, "steiner").holds) fail(Err::QNotSteiner, "not a Steiner loop");
  std::vector<std::array<int, 3>> triples;
  for (int x = 1; x < q.size(); ++x)
    for (int y = x + 1; y < q.size(); ++y) {
      const int z = q.mul(x, y);
      if (z > y) triples.push_back({x, y, z});
    }
  return validate_sts(q.size() - 1, std::move(triples));
}

std::array<std::array<int, 4>, 4> expand_block(const AbelianGroup& k, const Block& blk) {
  const int a = blk.a, b = blk.b, c = blk.c, d = blk.d;
  auto add = [&](int x, int y) { return k.add(x, y); };
  auto sub = [&](int x, int y) { return k.add(x, k.neg(y)); };
  std::array<std::array<int, 4>, 4> m{};
  m[1] = {0, a, sub(add(a, b), add(c, d)), add(sub(c, b), d)};
  m[2] = {0, d, b, sub(b, d)};
  m[3] = {0, sub(a, d), add(sub(c, a), d), c};
  return m;
}

Block block_b1(int a) { return Block{a, a, a, 0}; }
Block block_b2(int d) { return Block{0, 0, 0, d}; }
Block block_b3(const AbelianGroup& k, int a) { return Block{0, 0, a, k.neg(a)}; }

namespace {

std::vector<std::array<int, 3>> triangles_of(const LoopTable& q) {
  std::vector<std::array<int, 3>> out;
  for (int x = 1; x < q.size(); ++x)
    for (int y = x + 1; y < q.size(); ++y) {
      const int z = q.mul(x, y);
      if (z > y) out.push_back({x, y, z});
    }
  return out;
}

void fill_triangle(FactorSet& fs, int u, int v, const Block& blk) {
  const auto m = expand_block(fs.k, blk);
  const int w = fs.q.mul(u, v);
  const int pts[4] = {0, u, v, w};
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) fs.f_at(pts[i], pts[j]) = m[i][j];
}

}  // namespace

FactorSet factor_set_from_blocks(const LoopTable& q, const AbelianGroup& k,
                                 const std::vector<int>& diag,
                                 const std::vector<TriangleChoice>& choices) {
  if (!check_identity(q, "steiner").holds) fail(Err::QNotSteiner, "Q is not a Steiner loop");
  const int qn = q.size();
  std::vector<int> d(qn, 0);
  if (!diag.empty()) {
    if (static_cast<int>(diag.size()) != qn) fail(Err::OutOfRange, "diag must have |Q| entries");
    d = diag;
    if (d[0] != 0) fail(Err::OutOfRange, "diagonal of the identity must be 0");
  }
  std::map<std::array<int, 3>, TriangleChoice> chosen;
  for (const TriangleChoice& tc : choices) {
    if (tc.u < 1 || tc.u >= qn || tc.v < 1 || tc.v >= qn || tc.u == tc.v)
      fail(Err::OutOfRange, "triangle choice points out of range", {tc.u, tc.v});
    std::array<int, 3> key{tc.u, tc.v, q.mul(tc.u, tc.v)};
    std::sort(key.begin(), key.end());
    chosen[key] = tc;
  }
  FactorSet fs{k, q, ThetaMap(qn, perm_identity(k.order())), std::vector<int>(qn * qn, 0)};
  for (const auto& tri : triangles_of(q)) {
    auto it = chosen.find(tri);
    const TriangleChoice tc = it != chosen.end() ? it->second : TriangleChoice{tri[0], tri[1], 0};
    const int u = tc.u, v = tc.v, w = q.mul(u, v);
    fill_triangle(fs, u, v, Block{d[u], d[v], d[w], tc.d});
  }
  validate_factor_set(fs);
  return fs;
}

bool is_based_on(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f,
                 const Block& blk) {
  const auto want = expand_block(k, blk);
  const int qn = q.size();
  auto at = [&](int x, int y) { return f[x * qn + y]; };
  for (const auto& tri : triangles_of(q)) {
    bool matched = false;
    const int perms[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    for (const auto& pr : perms) {
      const int u = tri[pr[0]], v = tri[pr[1]], w = q.mul(u, v);
      const int pts[4] = {0, u, v, w};
      bool eq = true;
      for (int i = 1; i < 4 && eq; ++i)
        for (int j = 1; j < 4 && eq; ++j) eq = at(pts[i], pts[j]) == want[i][j];
      if (eq) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool is_based_on(const FactorSet& fs, const Block& blk) {
  return is_based_on(fs.k, fs.q, fs.f, blk);
}

FactorSet klein16_factor_set() {
  AbelianGroup k({2, 2});
  LoopTable q = k.cayley_table();
  // theta_1 = theta_w = id, theta_u = theta_v = (v,w); f exactly as the
  // canonical extraction from the table1_16 fixture produces it.
  const Perm id = perm_identity(4);
  const Perm sw = {0, 1, 3, 2};
  ThetaMap theta = {id, sw, sw, id};
  std::vector<int> f = {0, 0, 0, 0,   //
                        0, 0, 0, 0,   //
                        0, 2, 0, 3,   //
                        0, 2, 0, 2};
  FactorSet fs{std::move(k), std::move(q), std::move(theta), std::move(f)};
  validate_factor_set(fs);
  return fs;
}

LoopTable klein16() { return build_extension(klein16_factor_set()).table; }

FactorSet assoc_loop_factor_set(int n) {
  if (n <= 2) fail(Err::BadOrder, "assoc_loop requires n > 2, got " + std::to_string(n));
  const int kn = (n % 2 == 1) ? n : 2 * n;
  AbelianGroup k({kn});
  LoopTable q = AbelianGroup({2, 2}).cayley_table();
  // B3(1) on the unique triangle {u,v,w} = {1,2,3}, oriented (u,v) = (1,2).
  const Block b3 = block_b3(k, 1);
  std::vector<int> diag = {0, b3.a, b3.b, b3.c};
  return factor_set_from_blocks(q, k, diag, {TriangleChoice{1, 2, b3.d}});
}

LoopTable assoc_loop(int n) { return build_extension(assoc_loop_factor_set(n)).table; }

}  // namespace cloops
