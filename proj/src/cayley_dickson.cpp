#include "cloops/cayley_dickson.hpp"

#include <string>

#include "cloops/error.hpp"

namespace cloops {

SignedTable scalar_level() {
  SignedTable t;
  t.level = 0;
  t.dim = 1;
  t.sign = {1};
  t.index = {1};
  t.conj = {1};
  return t;
}

namespace {

struct Signed {
  int s;
  int i;  // 1-based
};

Signed mul(const SignedTable& t, Signed a, Signed b) {
  return {a.s * b.s * t.sign_at(a.i, b.i), t.index_at(a.i, b.i)};
}

Signed conj(const SignedTable& t, Signed a) { return {a.s * t.conj[a.i - 1], a.i}; }

}  // namespace

void validate_signed_table(const SignedTable& t) {
  const int n = t.dim;
  if (n < 1 || static_cast<int>(t.sign.size()) != n * n ||
      static_cast<int>(t.index.size()) != n * n || static_cast<int>(t.conj.size()) != n)
    fail(Err::InvariantViolation, "malformed signed table");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int k = t.index_at(i, j);
      if (k < 1 || k > n) fail(Err::InvariantViolation, "basis index out of range", {i, j});
      const int s = t.sign_at(i, j);
      if (s != 1 && s != -1) fail(Err::InvariantViolation, "sign must be +-1", {i, j});
    }
  for (int j = 1; j <= n; ++j) {
    if (t.sign_at(1, j) != 1 || t.index_at(1, j) != j)
      fail(Err::InvariantViolation, "unit row is not neutral", {1, j});
    if (t.sign_at(j, 1) != 1 || t.index_at(j, 1) != j)
      fail(Err::InvariantViolation, "unit column is not neutral", {j, 1});
  }
  if (t.conj[0] != 1) fail(Err::InvariantViolation, "conjugation must fix the unit");
  for (int i = 2; i <= n; ++i) {
    if (t.conj[i - 1] != -1) fail(Err::InvariantViolation, "conjugation sign must be -1", {i});
    if (t.sign_at(i, i) != -1 || t.index_at(i, i) != 1)
      fail(Err::InvariantViolation, "d_i d_i != -1", {i});
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (t.sign_at(i, j) != -t.sign_at(j, i) || t.index_at(i, j) != t.index_at(j, i))
        fail(Err::InvariantViolation, "d_i d_j != -d_j d_i", {i, j});
  // Conjugation antiautomorphism: conj(d_i d_j) = conj(d_j) conj(d_i).
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Signed lhs = conj(t, mul(t, {1, i}, {1, j}));
      const Signed rhs = mul(t, conj(t, {1, j}), conj(t, {1, i}));
      if (lhs.s != rhs.s || lhs.i != rhs.i)
        fail(Err::InvariantViolation, "conjugation is not an antiautomorphism", {i, j});
    }
  // Basis alternative and flexible laws.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Signed di{1, i}, dj{1, j};
      const Signed l1 = mul(t, di, mul(t, di, dj));
      const Signed r1 = mul(t, mul(t, di, di), dj);
      const Signed l2 = mul(t, di, mul(t, dj, dj));
      const Signed r2 = mul(t, mul(t, di, dj), dj);
      const Signed l3 = mul(t, mul(t, di, dj), di);
      const Signed r3 = mul(t, di, mul(t, dj, di));
      if (l1.s != r1.s || l1.i != r1.i || l2.s != r2.s || l2.i != r2.i || l3.s != r3.s ||
          l3.i != r3.i)
        fail(Err::InvariantViolation, "basis alternative/flexible law fails", {i, j});
    }
}

SignedTable double_table(const SignedTable& t) {
  validate_signed_table(t);
  const int n = t.dim;
  SignedTable d;
  d.level = t.level + 1;
  d.dim = 2 * n;
  d.sign.resize(static_cast<size_t>(d.dim) * d.dim);
  d.index.resize(static_cast<size_t>(d.dim) * d.dim);
  auto put = [&](int i, int j, int s, int k) {
    d.sign[(i - 1) * d.dim + (j - 1)] = static_cast<std::int8_t>(s);
    d.index[(i - 1) * d.dim + (j - 1)] = k;
  };
  // Exactly one summand of (x,y)(u,v) = (xu - conj(v)y, vx + y conj(u)) is
  // nonzero on pairs of basis elements:
  //   c_i c_j = (d_i d_j, 0)        c_i c_{j+n} = (0, d_j d_i)
  //   c_{i+n} c_j = (0, d_i conj(d_j))   c_{i+n} c_{j+n} = (-conj(d_j) d_i, 0)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      put(i, j, t.sign_at(i, j), t.index_at(i, j));
      put(i, j + n, t.sign_at(j, i), t.index_at(j, i) + n);
      put(i + n, j, t.sign_at(i, j) * t.conj[j - 1], t.index_at(i, j) + n);
      put(i + n, j + n, -t.sign_at(j, i) * t.conj[j - 1], t.index_at(j, i));
    }
  d.conj = t.conj;
  d.conj.insert(d.conj.end(), static_cast<size_t>(n), static_cast<std::int8_t>(-1));
  validate_signed_table(d);
  return d;
}

SignedTable doubled_to_level(int level, int max_level) {
  if (level < 0) fail(Err::BadOrder, "level must be >= 0");
  if (level > max_level)
    fail(Err::TooLarge,
         "level " + std::to_string(level) + " exceeds bound " + std::to_string(max_level));
  SignedTable t = scalar_level();
  for (int i = 0; i < level; ++i) t = double_table(t);
  return t;
}

LoopTable signed_loop(const SignedTable& t) {
  const int n = 2 * t.dim;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 1; i <= t.dim; ++i)
    for (int si : {1, -1})
      for (int j = 1; j <= t.dim; ++j)
        for (int sj : {1, -1}) {
          const int s = si * sj * t.sign_at(i, j);
          rows[signed_element_index(si, i)][signed_element_index(sj, j)] =
              signed_element_index(s, t.index_at(i, j));
        }
  return LoopTable::from_rows(rows);
}

LoopTable sedenion_loop() { return signed_loop(doubled_to_level(4)); }

std::optional<std::pair<int, int>> first_table2_mismatch(const SignedTable& t) {
  const SignedTable& fix = sedenion_fixture();
  if (t.dim != fix.dim) return std::make_pair(1, 1);
  for (int i = 1; i <= fix.dim; ++i)
    for (int j = 1; j <= fix.dim; ++j)
      if (t.sign_at(i, j) != fix.sign_at(i, j) || t.index_at(i, j) != fix.index_at(i, j))
        return std::make_pair(i, j);
  return std::nullopt;
}

bool verify_table2(const SignedTable& t) { return !first_table2_mismatch(t).has_value(); }

std::string render_constants(const SignedTable& t) {
  std::string out;
  for (int i = 1; i <= t.dim; ++i) {
    for (int j = 1; j <= t.dim; ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(t.sign_at(i, j) * t.index_at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace cloops
