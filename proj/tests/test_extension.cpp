#include <functional>
#include <random>

#include "cloops/cayley_dickson.hpp"
#include "cloops/core.hpp"
#include "cloops/error.hpp"
#include "cloops/extension.hpp"
#include "cloops/identities.hpp"
#include "cloops/invariants.hpp"
#include "cloops/steiner.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cloops;

namespace {

Err code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LoopError& e) {
    return e.code();
  }
  return Err::ParseError;  // sentinel: "did not throw"
}

FactorSet zero_factor_set(const AbelianGroup& k, const LoopTable& q) {
  return FactorSet{k, q, ThetaMap(q.size(), perm_identity(k.order())),
                   std::vector<int>(q.size() * q.size(), 0)};
}

// The Proposition-D property suite, asserted on one built extension.
void check_prop_d(const FactorSet& fs) {
  const ExtensionLoop e = build_extension(fs);
  const LoopTable& t = e.table;
  CHECK(c_loop(t).holds);
  const auto nuc = nuclei(t).nucleus;
  for (int a : e.embedded_k)
    CHECK(std::find(nuc.begin(), nuc.end(), a) != nuc.end());
  CHECK(is_normal(t, e.embedded_k));
  const QuotientLoop q = quotient(t, e.embedded_k);
  REQUIRE(q.table.size() == fs.q.size());
  CHECK(find_isomorphism(q.table, fs.q).has_value());
  // T_{(a,x)} restricted to the embedded copy of K equals theta_x.
  for (int a = 0; a < e.kn; ++a)
    for (int x = 0; x < e.qn; ++x)
      for (int kk = 0; kk < e.kn; ++kk)
        CHECK(apply_t(t, e.pair_index(a, x), e.pair_index(kk, 0)) ==
              e.pair_index(fs.theta[x][kk], 0));
  // The solved inverse agrees with the table inverse everywhere.
  for (int a = 0; a < e.kn; ++a)
    for (int x = 0; x < e.qn; ++x) {
      const auto [b, xi] = inverse_in_extension(fs, a, x);
      CHECK(t.inv(e.pair_index(a, x)) == e.pair_index(b, xi));
    }
  // The embedded K is central exactly when theta is trivial.
  const auto zen = center(t);
  bool k_central = true;
  for (int a : e.embedded_k)
    k_central = k_central && std::find(zen.begin(), zen.end(), a) != zen.end();
  CHECK(k_central == is_central(fs));
}

}  // namespace

TEST_SUITE_BEGIN("extension");

TEST_CASE("validate_factor_set") {
  CHECK_NOTHROW(validate_factor_set(klein16_factor_set()));
  CHECK_NOTHROW(validate_factor_set(zero_factor_set(AbelianGroup({2, 2}), testsup::klein4())));
  CHECK_NOTHROW(
      validate_factor_set(zero_factor_set(AbelianGroup({3}), builtin("steiner10"))));

  // Perturbing one f entry of the order-16 factor set breaks the cocycle.
  FactorSet bad = klein16_factor_set();
  bad.f_at(2, 1) = 1;
  CHECK(code_of([&] { validate_factor_set(bad); }) == Err::CocycleViolation);

  FactorSet unnorm = zero_factor_set(AbelianGroup({3}), testsup::klein4());
  unnorm.f_at(0, 2) = 1;
  CHECK(code_of([&] { validate_factor_set(unnorm); }) == Err::NotNormalized);

  // Q must be a C-loop.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const LoopTable q = testsup::random_loop(5, rng);
    if (c_loop(q).holds) continue;
    CHECK(code_of([&] { validate_factor_set(zero_factor_set(AbelianGroup({2}), q)); }) ==
          Err::QNotCLoop);
    break;
  }
}

TEST_CASE("the order-16 extension") {
  const FactorSet fs = klein16_factor_set();
  const ExtensionLoop e = build_extension(fs);
  REQUIRE(e.table.size() == 16);

  // (u,v)(v,u) = (1,w) and the displayed nonflexibility chain.
  const int uv = e.pair_index(1, 2), vu = e.pair_index(2, 1);
  CHECK(e.table.mul(uv, vu) == e.pair_index(0, 3));
  CHECK(e.table.mul(vu, uv) == e.pair_index(3, 3));
  const int lhs = e.table.mul(e.table.mul(uv, vu), uv);
  const int rhs = e.table.mul(uv, e.table.mul(vu, uv));
  CHECK(lhs == e.pair_index(1, 1));
  CHECK(rhs == e.pair_index(0, 1));
  CHECK(lhs != rhs);

  CHECK(find_isomorphism(e.table, builtin("table1_16")).has_value());
  CHECK(nuclei(e.table).nucleus == e.embedded_k);
  check_prop_d(fs);
}

TEST_CASE("zero factor set gives the direct product") {
  const AbelianGroup k({2, 2});
  const LoopTable q = testsup::klein4();
  const ExtensionLoop e = build_extension(zero_factor_set(k, q));
  CHECK(e.table == direct_product(k.cayley_table(), q));
}

TEST_CASE("Proposition D suite on random central factor sets") {
  std::mt19937 rng(42);
  const LoopTable fano8 = steiner_loop(testsup::fano());
  for (int trial = 0; trial < 6; ++trial) {
    const AbelianGroup k(trial % 2 ? std::vector<int>{4} : std::vector<int>{2, 3});
    const LoopTable& q = trial % 3 == 0 ? fano8 : testsup::klein4();
    check_prop_d(testsup::random_central_factor_set(q, k, rng));
  }
}

TEST_CASE("inverse_in_extension") {
  const FactorSet fs = klein16_factor_set();
  CHECK(inverse_in_extension(fs, 0, 0) == std::pair<int, int>{0, 0});
  const FactorSet split = zero_factor_set(AbelianGroup({4}), testsup::klein4());
  const ExtensionLoop e = build_extension(split);
  for (int a = 0; a < 4; ++a)
    for (int x = 0; x < 4; ++x) {
      const auto [b, xi] = inverse_in_extension(split, a, x);
      CHECK(e.table.inv(e.pair_index(a, x)) == e.pair_index(b, xi));
    }
}

TEST_CASE("extraction from the order-16 fixture") {
  const LoopTable t1 = builtin("table1_16");
  const ExtractedFactorSet ex = extract_factor_set(t1, {0, 1, 2, 3});
  CHECK(ex.fs.k.order() == 4);
  CHECK(ex.fs.k.exponent_divides(2));
  CHECK(ex.fs.q.size() == 4);
  CHECK(ex.section == std::vector<int>{0, 4, 8, 12});
  // Canonical section reproduces the order-16 factor set exactly, read at the
  // ambient-element level (the linear labeling of K is the algorithm's own).
  const int f_ambient[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 2, 0, 3}, {0, 2, 0, 2}};
  const int theta_ambient[4][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 1, 3, 2}, {0, 1, 2, 3}};
  std::vector<int> pos(4, -1);
  for (int k = 0; k < 4; ++k) pos[ex.k_elements[k]] = k;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) CHECK(ex.k_elements[ex.fs.f_at(x, y)] == f_ambient[x][y]);
    for (int e = 0; e < 4; ++e) CHECK(ex.k_elements[ex.fs.theta[x][pos[e]]] == theta_ambient[x][e]);
  }

  const ExtensionLoop rebuilt = build_extension(ex.fs);
  CHECK(find_isomorphism(rebuilt.table, t1).has_value());
}

TEST_CASE("extraction with a non-canonical section") {
  const LoopTable t1 = builtin("table1_16");
  const Section sec{0, 5, 9, 14};  // other representatives of the same cosets
  const ExtractedFactorSet ex = extract_factor_set(t1, {0, 1, 2, 3}, sec);
  CHECK_NOTHROW(validate_factor_set(ex.fs));
  CHECK(find_isomorphism(build_extension(ex.fs).table, t1).has_value());
  CHECK(code_of([&] { extract_factor_set(t1, {0, 1, 2, 3}, Section{0, 1, 8, 12}); }) ==
        Err::InvalidSection);
}

TEST_CASE("extraction of a direct product is split") {
  const AbelianGroup k({2, 2});
  const LoopTable prod = direct_product(k.cayley_table(), builtin("steiner10"));
  std::vector<int> ksub;
  for (int a = 0; a < 4; ++a) ksub.push_back(a * 10);
  const ExtractedFactorSet ex = extract_factor_set(prod, ksub);
  CHECK(ex.fs.f == std::vector<int>(100, 0));
  for (const Perm& p : ex.fs.theta) CHECK(p == perm_identity(4));
}

TEST_CASE("extraction from the sedenion loop") {
  const LoopTable sed = sedenion_loop();
  const ExtractedFactorSet ex = extract_factor_set(sed, {0, 1});
  CHECK(ex.fs.k.order() == 2);
  CHECK(ex.fs.q.size() == 16);
  CHECK(check_identity(ex.fs.q, "steiner").holds);
  CHECK(is_central(ex.fs));
  CHECK(find_isomorphism(build_extension(ex.fs).table, sed).has_value());
}

TEST_CASE("extraction error paths") {
  const LoopTable t1 = builtin("table1_16");
  // Normal but not nuclear.
  CHECK(code_of([&] { extract_factor_set(t1, {0, 1, 2, 3, 4, 5, 6, 7}); }) == Err::NotNuclear);
  // Not normal.
  CHECK(code_of([&] { extract_factor_set(builtin("steiner10"), {0, 1}); }) == Err::NotNormal);
  // Nuclear and normal but nonabelian: the S_3 factor of a direct product.
  const LoopTable d60 = direct_product(testsup::sym3(), builtin("steiner10"));
  std::vector<int> s3;
  for (int i = 0; i < 6; ++i) s3.push_back(i * 10);
  CHECK(code_of([&] { extract_factor_set(d60, s3); }) == Err::NotAbelian);
  // Ambient loop must be a C-loop.
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const LoopTable l = testsup::random_loop(5, rng);
    if (c_loop(l).holds) continue;
    CHECK(code_of([&] { extract_factor_set(l, {0}); }) == Err::NotCLoop);
    break;
  }
}

TEST_CASE("abelian structure recovery round-trips through several groups") {
  std::mt19937 rng(44);
  for (const std::vector<int>& factors :
       {std::vector<int>{6}, {2, 4}, {8}, {2, 2, 2}, {12}, {9}}) {
    const AbelianGroup k(factors);
    const LoopTable prod = direct_product(k.cayley_table(), testsup::klein4());
    std::vector<int> ksub;
    for (int a = 0; a < k.order(); ++a) ksub.push_back(a * 4);
    const ExtractedFactorSet ex = extract_factor_set(prod, ksub);
    CHECK(ex.fs.k.order() == k.order());
    CHECK(find_isomorphism(ex.fs.k.cayley_table(), k.cayley_table()).has_value());
  }
}

TEST_CASE("build-extract round trip") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 4; ++trial) {
    const AbelianGroup k({trial % 2 ? 4 : 6});
    const FactorSet fs = testsup::random_central_factor_set(testsup::klein4(), k, rng);
    const ExtensionLoop e = build_extension(fs);
    const ExtractedFactorSet ex = extract_factor_set(e.table, e.embedded_k);
    CHECK(find_isomorphism(build_extension(ex.fs).table, e.table).has_value());
  }
  // The nuclear-but-not-central factor set round-trips too.
  const ExtensionLoop e16 = build_extension(klein16_factor_set());
  const ExtractedFactorSet ex16 = extract_factor_set(e16.table, e16.embedded_k);
  CHECK(find_isomorphism(build_extension(ex16.fs).table, e16.table).has_value());
}

TEST_CASE("central-case equation families") {
  const AbelianGroup z4({4});
  const LoopTable q = testsup::klein4();
  const FactorSet zero = zero_factor_set(z4, q);
  CHECK(check_cfs2(zero).holds);
  CHECK(check_mk(zero).holds);
  CHECK(check_q(zero).holds);
  CHECK(is_central(zero));
  CHECK_FALSE(is_central(klein16_factor_set()));

  std::mt19937 rng(46);
  std::uniform_int_distribution<int> kd(0, 3);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> f(16, 0);
    if (trial % 3 == 0) {
      f = testsup::random_central_factor_set(q, z4, rng).f;
      if (trial % 6 == 0) f[1 * 4 + 2] = kd(rng);  // perturb one off-identity entry
    } else {
      for (int x = 1; x < 4; ++x)
        for (int y = 1; y < 4; ++y) f[x * 4 + y] = kd(rng);
    }
    const bool cfs2 = check_cfs2(z4, q, f).holds;
    const bool mk = check_mk(z4, q, f).holds;
    CHECK(cfs2 == mk);
    positives += cfs2;
  }
  CHECK(positives > 0);

  // check_q preconditions.
  FactorSet diag = zero_factor_set(z4, q);
  diag.f_at(1, 1) = 2;
  CHECK(code_of([&] { (void)check_q(diag); }) == Err::DiagonalNonzero);
  CHECK(code_of([&] { (void)check_mk(zero_factor_set(z4, testsup::cyclic(4))); }) ==
        Err::QNotSteiner);
}

TEST_CASE("flexibility criterion") {
  const AbelianGroup z2({2});
  const LoopTable q = testsup::klein4();
  std::mt19937 rng(47);
  // Exponent-2 coefficients always pass.
  for (int trial = 0; trial < 10; ++trial) {
    const FactorSet fs = testsup::random_central_factor_set(q, z2, rng);
    CHECK(flexibility_criterion(fs));
    CHECK(check_identity(build_extension(fs).table, "flexible").holds);
  }
  // A block with f(u,v) = a, f(v,u) = 0 and 2a != 0 fails.
  const AbelianGroup z4({4});
  const FactorSet b1 = factor_set_from_blocks(q, z4, {0, 1, 1, 1}, {TriangleChoice{1, 2, 0}});
  CHECK_FALSE(flexibility_criterion(b1));
  CHECK_FALSE(check_identity(build_extension(b1).table, "flexible").holds);
  CHECK(flexibility_criterion(zero_factor_set(z4, q)));

  CHECK(code_of([&] { (void)flexibility_criterion(klein16_factor_set()); }) == Err::NotCentral);
}

TEST_CASE("flexibility criterion matches the built loop on random central sets") {
  std::mt19937 rng(48);
  for (int trial = 0; trial < 12; ++trial) {
    const AbelianGroup k({trial % 2 ? 4 : 6});
    const FactorSet fs = testsup::random_central_factor_set(testsup::klein4(), k, rng);
    CHECK(flexibility_criterion(fs) == check_identity(build_extension(fs).table, "flexible").holds);
  }
}

TEST_SUITE_END();
