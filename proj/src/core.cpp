#include "cloops/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cloops/error.hpp"

namespace cloops {

std::vector<int> subloop_generated(const LoopTable& l, const std::vector<int>& s) {
  const int n = l.size();
  std::vector<char> in(n, 0);
  std::vector<int> queue;
  auto add = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      queue.push_back(e);
    }
  };
  add(0);
  for (int e : s) {
    if (e < 0 || e >= n) fail(Err::OutOfRange, "generator " + std::to_string(e) + " out of range", {e});
    add(e);
  }
  std::vector<int> members;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int e = queue[qi];
    members.push_back(e);
    for (size_t mj = 0; mj <= qi; ++mj) {
      const int d = queue[mj];
      add(l.mul(e, d));
      add(l.mul(d, e));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subloop(const LoopTable& l, const std::vector<int>& h) {
  const int n = l.size();
  std::vector<char> in(n, 0);
  bool has0 = false;
  for (int e : h) {
    if (e < 0 || e >= n) return false;
    in[e] = 1;
    has0 |= (e == 0);
  }
  if (!has0) return false;
  for (int a : h)
    for (int b : h)
      if (!in[l.mul(a, b)]) return false;
  return true;
}

int apply_t(const LoopTable& l, int x, int h) { return l.rdiv(l.mul(x, h), x); }

int apply_l(const LoopTable& l, int x, int y, int h) {
  return l.ldiv(l.mul(y, x), l.mul(y, l.mul(x, h)));
}

int apply_r(const LoopTable& l, int x, int y, int h) {
  return l.rdiv(l.mul(l.mul(h, x), y), l.mul(x, y));
}

InnerMaps inner_maps(const LoopTable& l, int x, int y) {
  const int n = l.size();
  InnerMaps m{Perm(n), Perm(n), Perm(n)};
  for (int h = 0; h < n; ++h) {
    m.l[h] = apply_l(l, x, y, h);
    m.r[h] = apply_r(l, x, y, h);
    m.t[h] = apply_t(l, x, h);
  }
  return m;
}

bool is_normal(const LoopTable& l, const std::vector<int>& h) {
  if (!is_subloop(l, h)) fail(Err::NotASubloop, "set is not a subloop");
  const int n = l.size();
  std::vector<char> in(n, 0);
  for (int e : h) in[e] = 1;
  for (int x = 0; x < n; ++x) {
    for (int e : h)
      if (!in[apply_t(l, x, e)]) return false;
    for (int y = 0; y < n; ++y)
      for (int e : h)
        if (!in[apply_l(l, x, y, e)] || !in[apply_r(l, x, y, e)]) return false;
  }
  return true;
}

std::vector<int> normal_closure(const LoopTable& l, const std::vector<int>& s) {
  const int n = l.size();
  std::vector<int> h = subloop_generated(l, s);
  for (;;) {
    std::vector<char> in(n, 0);
    for (int e : h) in[e] = 1;
    std::vector<int> extra;
    for (int x = 0; x < n; ++x) {
      for (int e : h) {
        const int t = apply_t(l, x, e);
        if (!in[t]) {
          in[t] = 1;
          extra.push_back(t);
        }
      }
      for (int y = 0; y < n; ++y)
        for (int e : h) {
          const int a = apply_l(l, x, y, e);
          if (!in[a]) {
            in[a] = 1;
            extra.push_back(a);
          }
          const int b = apply_r(l, x, y, e);
          if (!in[b]) {
            in[b] = 1;
            extra.push_back(b);
          }
        }
    }
    if (extra.empty()) return h;
    extra.insert(extra.end(), h.begin(), h.end());
    h = subloop_generated(l, extra);
  }
}

QuotientLoop quotient(const LoopTable& l, const std::vector<int>& h) {
  if (!is_normal(l, h)) fail(Err::NotNormal, "subloop is not normal");
  const int n = l.size();
  std::vector<int> raw_coset(n, -1);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < n; ++x) {
    if (raw_coset[x] >= 0) continue;
    std::vector<int> cs;
    cs.reserve(h.size());
    for (int e : h) cs.push_back(l.mul(x, e));
    std::sort(cs.begin(), cs.end());
    for (int e : cs) {
      if (raw_coset[e] >= 0) fail(Err::NotNormal, "cosets do not partition the loop", {x, e});
      raw_coset[e] = static_cast<int>(blocks.size());
    }
    blocks.push_back(std::move(cs));
  }
  // Order cosets by minimal element; block of 0 lands at index 0.
  std::vector<int> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return blocks[a][0] < blocks[b][0]; });
  std::vector<int> remap(blocks.size());
  for (size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);

  std::vector<int> coset_of(n);
  for (int x = 0; x < n; ++x) coset_of[x] = remap[raw_coset[x]];
  std::vector<std::vector<int>> cosets(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) cosets[remap[i]] = std::move(blocks[i]);

  const int m = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rows[i][j] = coset_of[l.mul(cosets[i][0], cosets[j][0])];
  return QuotientLoop{LoopTable::from_rows(rows), std::move(coset_of), std::move(cosets)};
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < nb; ++i2)
      for (int j1 = 0; j1 < na; ++j1)
        for (int j2 = 0; j2 < nb; ++j2)
          rows[i1 * nb + i2][j1 * nb + j2] = a.mul(i1, j1) * nb + b.mul(i2, j2);
  return LoopTable::from_rows(rows);
}

LoopTable induced_subtable(const LoopTable& l, const std::vector<int>& h) {
  if (!is_subloop(l, h)) fail(Err::NotASubloop, "set is not a subloop");
  std::vector<int> sorted = h;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(l.size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rows[i][j] = pos[l.mul(sorted[i], sorted[j])];
  return LoopTable::from_rows(rows);
}

namespace {

// Per-element fingerprint preserved by isomorphisms.
std::vector<long long> fingerprints(const LoopTable& t) {
  const int n = t.size();
  std::vector<int> ord(n), sqrt_count(n, 0);
  for (int x = 0; x < n; ++x) ord[x] = t.element_order(x);
  for (int x = 0; x < n; ++x) ++sqrt_count[t.mul(x, x)];
  std::vector<long long> fp(n);
  for (int x = 0; x < n; ++x) {
    const int sq = t.mul(x, x);
    int comm = 0;
    for (int y = 0; y < n; ++y) comm += (t.mul(x, y) == t.mul(y, x));
    fp[x] = ((long long)ord[x] << 40) ^ ((long long)ord[sq] << 28) ^
            ((long long)sqrt_count[x] << 14) ^ comm;
  }
  return fp;
}

struct IsoSearch {
  const LoopTable& a;
  const LoopTable& b;
  int n;
  std::vector<long long> fpa, fpb;
  std::vector<int> map, rmap;

  // Propagate phi(p*q) = phi(p)*phi(q) from a newly assigned element.
  // Returns false on conflict; records assignments in trail for rollback.
  bool close(int start, std::vector<int>& trail) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int d = 0; d < n; ++d) {
        if (map[d] < 0) continue;
        const int pr[2][2] = {{x, d}, {d, x}};
        for (const auto& p : pr) {
          const int r = a.mul(p[0], p[1]);
          const int s = b.mul(map[p[0]], map[p[1]]);
          if (map[r] < 0) {
            if (rmap[s] >= 0) return false;
            map[r] = s;
            rmap[s] = r;
            trail.push_back(r);
            stack.push_back(r);
          } else if (map[r] != s) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void rollback(const std::vector<int>& trail) {
    for (int r : trail) {
      rmap[map[r]] = -1;
      map[r] = -1;
    }
  }

  bool solve() {
    // Next element to branch on: fewest feasible images.
    int x = -1, best = n + 1;
    for (int i = 0; i < n; ++i) {
      if (map[i] >= 0) continue;
      int cnt = 0;
      for (int u = 0; u < n; ++u)
        if (rmap[u] < 0 && fpb[u] == fpa[i]) ++cnt;
      if (cnt == 0) return false;
      if (cnt < best) {
        best = cnt;
        x = i;
      }
    }
    if (x < 0) return true;
    for (int u = 0; u < n; ++u) {
      if (rmap[u] >= 0 || fpb[u] != fpa[x]) continue;
      std::vector<int> trail;
      map[x] = u;
      rmap[u] = x;
      trail.push_back(x);
      if (close(x, trail) && solve()) return true;
      rollback(trail);
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const LoopTable& a, const LoopTable& b, const std::vector<int>& phi) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(phi.size()) != n) return false;
  if (!is_permutation(phi) || phi[0] != 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

std::optional<std::vector<int>> find_isomorphism(const LoopTable& a, const LoopTable& b,
                                                 int max_size) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n > max_size)
    fail(Err::TooLarge, "isomorphism search bound " + std::to_string(max_size) +
                            " exceeded by tables of order " + std::to_string(n));
  IsoSearch s{a, b, n, fingerprints(a), fingerprints(b), std::vector<int>(n, -1),
              std::vector<int>(n, -1)};
  {
    auto sa = s.fpa, sb = s.fpb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  s.map[0] = 0;
  s.rmap[0] = 0;
  if (!s.solve()) return std::nullopt;
  if (!is_isomorphism(a, b, s.map)) fail(Err::InvariantViolation, "isomorphism failed re-check");
  return s.map;
}

}  // namespace cloops
