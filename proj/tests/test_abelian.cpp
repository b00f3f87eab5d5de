#include "cloops/abelian.hpp"
#include "cloops/core.hpp"
#include "cloops/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cloops;

TEST_SUITE_BEGIN("abelian");

TEST_CASE("index and residue conversion is a bijection") {
  for (const std::vector<int>& factors :
       {std::vector<int>{5}, {2, 2}, {4, 3}, {2, 3, 2}, {1, 6}, {8}}) {
    const AbelianGroup k(factors);
    for (int i = 0; i < k.order(); ++i) {
      CHECK(k.index_of(k.residues(i)) == i);
    }
  }
  CHECK_THROWS_AS(AbelianGroup({}), LoopError);
  CHECK_THROWS_AS(AbelianGroup({0}), LoopError);
}

TEST_CASE("arithmetic") {
  const AbelianGroup z3({3});
  CHECK(z3.add(1, 2) == 0);
  const AbelianGroup klein({2, 2});
  CHECK(klein.neg(klein.index_of({1, 0})) == klein.index_of({1, 0}));
  const AbelianGroup z6({6});
  CHECK(z6.scalar(-2, 1) == 4);
  CHECK(z6.scalar(7, 1) == 1);
  for (int a = 0; a < z6.order(); ++a) {
    CHECK(z6.add(a, z6.neg(a)) == 0);
    CHECK(z6.scalar(0, a) == 0);
  }
  CHECK(klein.exponent_divides(2));
  CHECK_FALSE(z6.exponent_divides(2));
}

TEST_CASE("cayley tables") {
  CHECK(AbelianGroup({2, 2}).cayley_table() == testsup::klein4());
  const AbelianGroup z6({6});
  const AbelianGroup z23({2, 3});
  CHECK(find_isomorphism(z6.cayley_table(), z23.cayley_table()).has_value());
  // (2,2) and (4) stay distinct: the factor sequence is authoritative.
  CHECK_FALSE(find_isomorphism(AbelianGroup({2, 2}).cayley_table(),
                               AbelianGroup({4}).cayley_table())
                  .has_value());
}

TEST_CASE("automorphism validation") {
  const AbelianGroup klein({2, 2});
  // Swap v = (0,1) and w = (1,1), fixing u = (1,0).
  const int u = klein.index_of({1, 0}), v = klein.index_of({0, 1}), w = klein.index_of({1, 1});
  Perm swap_vw = perm_identity(4);
  std::swap(swap_vw[v], swap_vw[w]);
  CHECK(validate_automorphism(klein, swap_vw).images == swap_vw);
  CHECK(validate_automorphism(klein, perm_identity(4)).images == perm_identity(4));
  (void)u;

  const AbelianGroup z4({4});
  Perm bad = perm_identity(4);
  std::swap(bad[0], bad[2]);
  CHECK_THROWS_AS((void)validate_automorphism(z4, bad), LoopError);
  try {
    (void)validate_automorphism(z4, bad);
  } catch (const LoopError& e) {
    CHECK(e.code() == Err::NotAdditive);
  }

  // Every validated automorphism has a validating inverse.
  Perm neg(4);
  for (int i = 0; i < 4; ++i) neg[i] = z4.neg(i);
  const Automorphism a = validate_automorphism(z4, neg);
  CHECK(validate_automorphism(z4, perm_inverse(a.images)).images == perm_inverse(a.images));
}

TEST_CASE("theta validation") {
  const AbelianGroup klein({2, 2});
  const LoopTable q = testsup::klein4();
  const Perm id = perm_identity(4);
  Perm sw = id;
  std::swap(sw[2], sw[3]);

  CHECK_NOTHROW(validate_theta(klein, q, ThetaMap(4, id)));
  // theta_1 = theta_u = id, theta_v = theta_w = (v,w) is a homomorphism.
  CHECK_NOTHROW(validate_theta(klein, q, ThetaMap{id, id, sw, sw}));
  // ...and so is the kernel-{1,w} variant used by the order-16 fixture.
  CHECK_NOTHROW(validate_theta(klein, q, ThetaMap{id, sw, sw, id}));

  // Perturb one assignment: theta_u = sw alone breaks theta_{uv} = theta_u theta_v.
  bool threw = false;
  try {
    validate_theta(klein, q, ThetaMap{id, sw, id, id});
  } catch (const LoopError& e) {
    threw = true;
    CHECK(e.code() == Err::NotHomomorphism);
  }
  CHECK(threw);

  // theta_x composed with theta at the inverse gives the identity.
  const ThetaMap theta{id, id, sw, sw};
  for (int x = 0; x < 4; ++x)
    CHECK(perm_compose(theta[x], theta[q.inv(x)]) == id);
}

TEST_SUITE_END();
