#include "cloops/extension.hpp"

#include <algorithm>
#include <string>

#include "cloops/core.hpp"
#include "cloops/error.hpp"
#include "cloops/invariants.hpp"

namespace cloops {

namespace {

void check_f_shape(const FactorSet& fs) {
  const int qn = fs.q.size();
  if (static_cast<int>(fs.f.size()) != qn * qn)
    fail(Err::OutOfRange, "f must be a |Q| x |Q| matrix");
  for (int v : fs.f)
    if (v < 0 || v >= fs.k.order()) fail(Err::OutOfRange, "f entry " + std::to_string(v) + " out of range");
}

void check_normalized(const FactorSet& fs) {
  for (int x = 0; x < fs.q.size(); ++x)
    if (fs.f_at(x, 0) != 0 || fs.f_at(0, x) != 0)
      fail(Err::NotNormalized, "f(x,1) = 0 = f(1,x) violated at x=" + std::to_string(x), {x});
}

void require_steiner(const LoopTable& q) {
  if (!check_identity(q, "steiner").holds) fail(Err::QNotSteiner, "Q is not a Steiner loop");
}

}  // namespace

void validate_factor_set(const FactorSet& fs) {
  validate_theta(fs.k, fs.q, fs.theta);
  check_f_shape(fs);
  if (!c_loop(fs.q).holds) fail(Err::QNotCLoop, "Q is not a C-loop");
  check_normalized(fs);
  const int qn = fs.q.size();
  const auto& k = fs.k;
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y)
      for (int z = 0; z < qn; ++z) {
        const int yz = fs.q.mul(y, z);
        const int yyz = fs.q.mul(y, yz);
        const int xy = fs.q.mul(x, y);
        const int xyy = fs.q.mul(xy, y);
        const int lhs =
            k.add(k.add(fs.theta[xy][fs.f_at(y, z)], fs.theta[x][fs.f_at(y, yz)]), fs.f_at(x, yyz));
        const int rhs = k.add(k.add(fs.f_at(x, y), fs.f_at(xy, y)), fs.f_at(xyy, z));
        if (lhs != rhs)
          fail(Err::CocycleViolation,
               "cocycle violated at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")",
               {x, y, z});
      }
}

namespace {

ExtensionLoop build_pairs(const FactorSet& fs) {
  const int kn = fs.k.order(), qn = fs.q.size(), n = kn * qn;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < kn; ++a)
    for (int x = 0; x < qn; ++x) {
      const int i = a * qn + x;
      for (int b = 0; b < kn; ++b)
        for (int y = 0; y < qn; ++y) {
          const int val = fs.k.add(fs.k.add(a, fs.theta[x][b]), fs.f_at(x, y));
          rows[i][b * qn + y] = val * qn + fs.q.mul(x, y);
        }
    }
  std::vector<int> embedded, projection(n);
  for (int a = 0; a < kn; ++a) embedded.push_back(a * qn);
  for (int i = 0; i < n; ++i) projection[i] = i % qn;
  return ExtensionLoop{LoopTable::from_rows(rows), std::move(embedded), std::move(projection), kn,
                       qn};
}

}  // namespace

ExtensionLoop build_extension(const FactorSet& fs) {
  validate_factor_set(fs);
  return build_pairs(fs);
}

ExtensionLoop build_extension_unchecked(const FactorSet& fs) {
  validate_theta(fs.k, fs.q, fs.theta);
  check_f_shape(fs);
  check_normalized(fs);
  return build_pairs(fs);
}

std::pair<int, int> inverse_in_extension(const FactorSet& fs, int a, int x) {
  const auto& k = fs.k;
  const int xi = fs.q.inv(x);
  // Solve (a,x)*(b,xi) = (0,0):  a + theta_x(b) + f(x,xi) = 0.
  const int b = perm_inverse(fs.theta[x])[k.neg(k.add(a, fs.f_at(x, xi)))];
  const int left = k.add(k.add(a, fs.theta[x][b]), fs.f_at(x, xi));
  const int right = k.add(k.add(b, fs.theta[xi][a]), fs.f_at(xi, x));
  if (left != 0 || right != 0)
    fail(Err::NoTwoSidedInverse, "pair (" + std::to_string(a) + "," + std::to_string(x) +
                                     ") has no two-sided inverse in the extension",
         {a, x});
  return {b, xi};
}

namespace {

// Basis of a finite abelian group given by its induced table, as prime-power
// cyclic factors. Returns {factors, basis elements}.
struct AbelianBasis {
  std::vector<int> factors;
  std::vector<int> basis;
};

std::vector<int> span(const LoopTable& g, const std::vector<int>& gens) {
  return subloop_generated(g, gens);
}

AbelianBasis abelian_basis(const LoopTable& g) {
  const int n = g.size();
  AbelianBasis out;
  if (n == 1) {
    out.factors = {1};
    return out;
  }
  std::vector<int> ord(n);
  for (int x = 0; x < n; ++x) ord[x] = g.element_order(x);
  std::vector<int> primes;
  for (int m = n, p = 2; m > 1; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  for (int p : primes) {
    std::vector<int> comp;
    for (int x = 0; x < n; ++x) {
      int o = ord[x];
      while (o % p == 0) o /= p;
      if (o == 1) comp.push_back(x);  // includes the identity (order 1)
    }
    std::vector<int> h{0};
    while (static_cast<int>(h.size()) < static_cast<int>(comp.size())) {
      std::vector<char> in(n, 0);
      for (int e : h) in[e] = 1;
      // Element with maximal coset order p^j (least j with g^{p^j} in H).
      int best = -1, best_k = 0;
      for (int x : comp) {
        if (in[x]) continue;
        int k = 1, cur = x;
        while (!in[cur]) {
          cur = g.power(cur, p);
          k *= p;
        }
        if (k > best_k) {
          best_k = k;
          best = x;
        }
      }
      // Representative of the coset with full element order best_k.
      int rep = -1;
      for (int e : h) {
        const int cand = g.mul(best, e);
        if (ord[cand] == best_k) {
          rep = cand;
          break;
        }
      }
      if (rep < 0) fail(Err::InvariantViolation, "abelian basis extraction failed");
      out.basis.push_back(rep);
      out.factors.push_back(best_k);
      std::vector<int> gens = h;
      gens.push_back(rep);
      h = span(g, gens);
    }
  }
  return out;
}

}  // namespace

ExtractedFactorSet extract_factor_set(const LoopTable& c, const std::vector<int>& ksub,
                                      const std::optional<Section>& section) {
  if (!c_loop(c).holds) fail(Err::NotCLoop, "ambient loop is not a C-loop");
  std::vector<int> k_elems = ksub;
  std::sort(k_elems.begin(), k_elems.end());
  if (!is_normal(c, k_elems)) fail(Err::NotNormal, "designated subloop is not normal");
  const int n = c.size();
  std::vector<char> in(n, 0);
  for (int e : k_elems) in[e] = 1;
  for (int a : k_elems)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (c.mul(a, c.mul(y, z)) != c.mul(c.mul(a, y), z) ||
            c.mul(y, c.mul(a, z)) != c.mul(c.mul(y, a), z) ||
            c.mul(y, c.mul(z, a)) != c.mul(c.mul(y, z), a))
          fail(Err::NotNuclear, "subloop element " + std::to_string(a) + " is not nuclear",
               {a, y, z});
      }
  for (int a : k_elems)
    for (int b : k_elems)
      if (c.mul(a, b) != c.mul(b, a))
        fail(Err::NotAbelian, "designated subloop is not abelian", {a, b});

  QuotientLoop quo = quotient(c, k_elems);
  const int qn = quo.table.size();

  Section sec(qn);
  if (section) {
    sec = *section;
    if (static_cast<int>(sec.size()) != qn) fail(Err::InvalidSection, "section arity mismatch");
    for (int x = 0; x < qn; ++x) {
      if (sec[x] < 0 || sec[x] >= n || quo.coset_of[sec[x]] != x)
        fail(Err::InvalidSection, "section does not split the projection at " + std::to_string(x),
             {x});
    }
    if (sec[0] != 0) fail(Err::InvalidSection, "section must map the identity coset to 0");
  } else {
    for (int x = 0; x < qn; ++x) sec[x] = quo.cosets[x][0];
  }

  // Group structure on the designated subloop.
  LoopTable kt = induced_subtable(c, k_elems);
  AbelianBasis basis = abelian_basis(kt);
  AbelianGroup k(basis.factors);
  if (k.order() != static_cast<int>(k_elems.size()))
    fail(Err::InvariantViolation, "abelian decomposition order mismatch");
  // k linear index -> ambient element, via sums of basis multiples.
  std::vector<int> elem_of(k.order());
  for (int idx = 0; idx < k.order(); ++idx) {
    std::vector<int> res = k.residues(idx);
    int acc = 0;  // index within kt
    for (size_t i = 0; i < res.size(); ++i)
      for (int c2 = 0; c2 < res[i]; ++c2) acc = kt.mul(acc, basis.basis[i]);
    elem_of[idx] = k_elems[acc];
  }
  {
    std::vector<int> chk = elem_of;
    std::sort(chk.begin(), chk.end());
    if (chk != k_elems) fail(Err::InvariantViolation, "abelian index map is not bijective");
  }
  std::vector<int> index_of(n, -1);
  for (int idx = 0; idx < k.order(); ++idx) index_of[elem_of[idx]] = idx;

  // theta_x = T_{l(x)} restricted to the subloop; f(x,y) from l(x)l(y) = f * l(xy).
  ThetaMap theta(qn);
  for (int x = 0; x < qn; ++x) {
    Perm p(k.order());
    for (int idx = 0; idx < k.order(); ++idx) {
      const int img = apply_t(c, sec[x], elem_of[idx]);
      if (index_of[img] < 0) fail(Err::NotNormal, "inner mapping leaves the subloop", {sec[x]});
      p[idx] = index_of[img];
    }
    theta[x] = std::move(p);
  }
  std::vector<int> f(qn * qn, 0);
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y) {
      const int prod = c.mul(sec[x], sec[y]);
      const int kk = c.rdiv(prod, sec[quo.table.mul(x, y)]);
      if (index_of[kk] < 0)
        fail(Err::InvariantViolation, "factor value escapes the subloop", {x, y});
      f[x * qn + y] = index_of[kk];
    }

  ExtractedFactorSet out{FactorSet{std::move(k), quo.table, std::move(theta), std::move(f)},
                         std::move(elem_of), std::move(sec), std::move(quo.coset_of)};
  validate_factor_set(out.fs);
  return out;
}

bool is_central(const FactorSet& fs) {
  const Perm id = perm_identity(fs.k.order());
  for (const Perm& p : fs.theta)
    if (p != id) return false;
  return true;
}

IdentityReport check_cfs2(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f) {
  const int qn = q.size();
  auto at = [&](int x, int y) { return f[x * qn + y]; };
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y)
      for (int z = 0; z < qn; ++z)
        if (k.add(at(y, z), at(y, q.mul(y, z))) != k.add(at(x, y), at(q.mul(x, y), y)))
          return {false, {x, y, z}};
  return {};
}

IdentityReport check_mk(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f) {
  require_steiner(q);
  const int qn = q.size();
  auto at = [&](int x, int y) { return f[x * qn + y]; };
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y) {
      if (at(q.mul(x, y), y) != k.add(at(y, y), k.neg(at(x, y)))) return {false, {x, y, 1}};
      if (at(y, q.mul(y, x)) != k.add(at(y, y), k.neg(at(y, x)))) return {false, {x, y, 2}};
    }
  return {};
}

IdentityReport check_q(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f) {
  require_steiner(q);
  const int qn = q.size();
  auto at = [&](int x, int y) { return f[x * qn + y]; };
  for (int y = 0; y < qn; ++y)
    if (at(y, y) != 0) fail(Err::DiagonalNonzero, "f(y,y) != 0 at y=" + std::to_string(y), {y});
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y) {
      if (at(q.mul(x, y), y) != k.neg(at(x, y))) return {false, {x, y, 1}};
      if (at(y, q.mul(y, x)) != k.neg(at(y, x))) return {false, {x, y, 2}};
    }
  return {};
}

IdentityReport check_cfs2(const FactorSet& fs) { return check_cfs2(fs.k, fs.q, fs.f); }
IdentityReport check_mk(const FactorSet& fs) { return check_mk(fs.k, fs.q, fs.f); }
IdentityReport check_q(const FactorSet& fs) { return check_q(fs.k, fs.q, fs.f); }

bool flexibility_criterion(const FactorSet& fs) {
  if (!is_central(fs)) fail(Err::NotCentral, "flexibility criterion requires theta = id");
  require_steiner(fs.q);
  const int qn = fs.q.size();
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y)
      if (fs.k.scalar(2, fs.f_at(x, y)) != fs.k.scalar(2, fs.f_at(y, x))) return false;
  return true;
}

}  // namespace cloops
