#pragma once

#include <string_view>
#include <vector>

#include "cloops/kernels.hpp"
#include "cloops/loop_table.hpp"

namespace cloops {

/// Outcome of a quantified identity check. When the identity fails, witness
/// holds the lexicographically first violating tuple (its length depends on
/// the identity: triples for 3-variable laws, pairs for 2-variable laws, a
/// single element for per-element conditions).
struct IdentityReport {
  bool holds = true;
  std::vector<int> witness;
};

/// x(y*yz) = (xy*y)z quantified over all triples.
IdentityReport c_loop(const LoopTable& l, Exec exec = Exec::Auto);

/// Independent oracle for the same class: inverse property plus every square
/// in the nucleus. Shares no code path with the identity quantifier.
IdentityReport c_loop_structural(const LoopTable& l, Exec exec = Exec::Auto);

/// (xy)^3 = y^3 x^3 with left-associated cubes.
IdentityReport cube_antiautomorphism(const LoopTable& l, Exec exec = Exec::Auto);

/// Named identity dispatch. Accepted names: associative, commutative,
/// flexible, left_alternative, right_alternative, lip, rip, inverse_property,
/// moufang, extra, steiner, squares_central, squares_nuclear, exponent(k).
/// Throws UnknownIdentity.
IdentityReport check_identity(const LoopTable& l, std::string_view name, Exec exec = Exec::Auto);

/// All names accepted by check_identity (exponent listed as "exponent(k)").
const std::vector<std::string_view>& identity_names();

}  // namespace cloops
