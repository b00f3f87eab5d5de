#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cloops/loop_table.hpp"

namespace cloops {

/// Multiplication of the signed basis elements of one level of the standard
/// doubling process (lambda = -1). dim = 2^level; products store the single
/// nonzero structure constant per pair as (sign, 1-based basis index);
/// conj holds the per-basis conjugation sign (+1 for the unit, -1 otherwise).
struct SignedTable {
  int level = 0;
  int dim = 1;
  std::vector<std::int8_t> sign;  // dim x dim, row-major
  std::vector<int> index;         // dim x dim, 1-based
  std::vector<std::int8_t> conj;  // per basis element

  std::int8_t sign_at(int i, int j) const { return sign[(i - 1) * dim + (j - 1)]; }
  int index_at(int i, int j) const { return index[(i - 1) * dim + (j - 1)]; }
};

/// Level 0: the reals, a single basis element.
SignedTable scalar_level();

/// The basis invariants: unit neutral, conjugation signs, d_i d_i = -1,
/// anticommutation off the unit, conjugation an involutive antiautomorphism,
/// and the one-sided alternative/flexible basis laws.
/// Throws InvariantViolation with the offending indices.
void validate_signed_table(const SignedTable& t);

/// One standard doubling step; input and output both satisfy the invariants.
SignedTable double_table(const SignedTable& t);

/// Doubles from the reals up to the requested level. Throws TooLarge past the
/// bound (default 10, loop order 2048).
SignedTable doubled_to_level(int level, int max_level = 10);

/// The 2*dim signed basis elements as a loop; +a_i -> 2(i-1), -a_i -> 2(i-1)+1.
LoopTable signed_loop(const SignedTable& t);

/// Encode/decode the export convention.
inline int signed_element_index(int sign, int basis_1based) {
  return 2 * (basis_1based - 1) + (sign < 0 ? 1 : 0);
}
inline std::pair<int, int> signed_element_of(int loop_index) {
  return {loop_index % 2 ? -1 : +1, loop_index / 2 + 1};
}

/// The verbatim 16 x 16 sedenion structure-constant fixture.
const SignedTable& sedenion_fixture();

/// The order-32 sedenion loop, doubled from the reals.
LoopTable sedenion_loop();

/// First (i,j), 1-based, where the level-4 doubled table differs from the
/// fixture; nullopt when they agree entrywise.
std::optional<std::pair<int, int>> first_table2_mismatch(const SignedTable& t);

/// Entrywise equality with the fixture (signs and indices).
bool verify_table2(const SignedTable& t);

/// Rows of signed 1-based indices, one row per line, entries space-separated.
std::string render_constants(const SignedTable& t);

}  // namespace cloops
