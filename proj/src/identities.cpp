#include "cloops/identities.hpp"

#include <charconv>
#include <string>

#include "cloops/error.hpp"
#include "cloops/invariants.hpp"

namespace cloops {

namespace {

IdentityReport from_triple(const std::optional<std::array<int, 3>>& w) {
  if (!w) return {};
  return {false, {(*w)[0], (*w)[1], (*w)[2]}};
}

IdentityReport from_pair(const std::optional<std::array<int, 2>>& w) {
  if (!w) return {};
  return {false, {(*w)[0], (*w)[1]}};
}

IdentityReport associative(const LoopTable& l, Exec e) {
  return from_triple(kernels::first_triple(
      l.size(), [&](int x, int y, int z) { return l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z)); },
      e));
}

IdentityReport commutative(const LoopTable& l, Exec e) {
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return l.mul(x, y) != l.mul(y, x); }, e));
}

IdentityReport flexible(const LoopTable& l, Exec e) {
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return l.mul(x, l.mul(y, x)) != l.mul(l.mul(x, y), x); }, e));
}

IdentityReport left_alternative(const LoopTable& l, Exec e) {
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return l.mul(x, l.mul(x, y)) != l.mul(l.mul(x, x), y); }, e));
}

IdentityReport right_alternative(const LoopTable& l, Exec e) {
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return l.mul(l.mul(y, x), x) != l.mul(y, l.mul(x, x)); }, e));
}

IdentityReport lip(const LoopTable& l, Exec e) {
  // x^lambda (xy) = y  with  x^lambda * x = 0.
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return l.mul(l.rdiv(0, x), l.mul(x, y)) != y; }, e));
}

IdentityReport rip(const LoopTable& l, Exec e) {
  // (yx) x^rho = y  with  x * x^rho = 0.
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return l.mul(l.mul(y, x), l.ldiv(x, 0)) != y; }, e));
}

IdentityReport inverse_property(const LoopTable& l, Exec e) {
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    if (!l.has_two_sided_inverse(x)) return {false, {x}};
  return from_pair(kernels::first_pair(
      n,
      [&](int x, int y) {
        const int xi = l.ldiv(x, 0);
        return l.mul(xi, l.mul(x, y)) != y || l.mul(l.mul(y, x), xi) != y;
      },
      e));
}

IdentityReport moufang(const LoopTable& l, Exec e) {
  return from_triple(kernels::first_triple(
      l.size(),
      [&](int x, int y, int z) {
        return l.mul(l.mul(x, y), l.mul(z, x)) != l.mul(x, l.mul(l.mul(y, z), x));
      },
      e));
}

IdentityReport steiner(const LoopTable& l, Exec e) {
  // Inverse property loop of exponent two: x*x = 0 and x(xy) = y = (yx)x.
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    if (l.mul(x, x) != 0) return {false, {x}};
  return from_pair(kernels::first_pair(
      n, [&](int x, int y) { return l.mul(x, l.mul(x, y)) != y || l.mul(l.mul(y, x), x) != y; },
      e));
}

IdentityReport exponent_divides(const LoopTable& l, int k) {
  if (k < 1) fail(Err::UnknownIdentity, "exponent(k) requires k >= 1");
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    if (l.power(x, k) != 0) return {false, {x}};
  return {};
}

IdentityReport squares_in(const LoopTable& l, const std::vector<int>& set) {
  std::vector<char> in(l.size(), 0);
  for (int e : set) in[e] = 1;
  for (int x = 0; x < l.size(); ++x)
    if (!in[l.mul(x, x)]) return {false, {x}};
  return {};
}

}  // namespace

IdentityReport c_loop(const LoopTable& l, Exec exec) {
  return from_triple(kernels::first_triple(
      l.size(),
      [&](int x, int y, int z) {
        return l.mul(x, l.mul(y, l.mul(y, z))) != l.mul(l.mul(l.mul(x, y), y), z);
      },
      exec));
}

IdentityReport c_loop_structural(const LoopTable& l, Exec exec) {
  IdentityReport ip = inverse_property(l, exec);
  if (!ip.holds) return ip;
  return squares_in(l, nuclei(l, exec).nucleus);
}

IdentityReport cube_antiautomorphism(const LoopTable& l, Exec exec) {
  auto cube = [&](int x) { return l.mul(l.mul(x, x), x); };
  return from_pair(kernels::first_pair(
      l.size(), [&](int x, int y) { return cube(l.mul(x, y)) != l.mul(cube(y), cube(x)); }, exec));
}

IdentityReport check_identity(const LoopTable& l, std::string_view name, Exec exec) {
  if (name == "associative") return associative(l, exec);
  if (name == "commutative") return commutative(l, exec);
  if (name == "flexible") return flexible(l, exec);
  if (name == "left_alternative") return left_alternative(l, exec);
  if (name == "right_alternative") return right_alternative(l, exec);
  if (name == "lip") return lip(l, exec);
  if (name == "rip") return rip(l, exec);
  if (name == "inverse_property") return inverse_property(l, exec);
  if (name == "moufang") return moufang(l, exec);
  if (name == "extra") {
    IdentityReport m = moufang(l, exec);
    if (!m.holds) return m;
    return c_loop(l, exec);
  }
  if (name == "steiner") return steiner(l, exec);
  if (name == "squares_central") return squares_in(l, center(l, exec));
  if (name == "squares_nuclear") return squares_in(l, nuclei(l, exec).nucleus);
  if (name.rfind("exponent(", 0) == 0 && name.back() == ')') {
    int k = 0;
    const char* first = name.data() + 9;
    const char* last = name.data() + name.size() - 1;
    auto [p, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || p != last)
      fail(Err::UnknownIdentity, "bad exponent argument in '" + std::string(name) + "'");
    return exponent_divides(l, k);
  }
  fail(Err::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

const std::vector<std::string_view>& identity_names() {
  static const std::vector<std::string_view> names = {
      "associative",      "commutative", "flexible",        "left_alternative",
      "right_alternative", "lip",        "rip",             "inverse_property",
      "moufang",          "extra",       "steiner",         "squares_central",
      "squares_nuclear",  "exponent(k)"};
  return names;
}

}  // namespace cloops
