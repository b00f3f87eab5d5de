#include "cloops/steiner.hpp"

#include <string>

#include "cloops/cayley_dickson.hpp"
#include "cloops/error.hpp"

namespace cloops {

namespace {

const std::vector<std::vector<int>>& table1_rows() {
  static const std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
      {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14},
      {2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13},
      {3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12},
      {4, 5, 7, 6, 0, 1, 3, 2, 12, 13, 15, 14, 8, 9, 11, 10},
      {5, 4, 6, 7, 1, 0, 2, 3, 13, 12, 14, 15, 9, 8, 10, 11},
      {6, 7, 5, 4, 2, 3, 1, 0, 14, 15, 13, 12, 10, 11, 9, 8},
      {7, 6, 4, 5, 3, 2, 0, 1, 15, 14, 12, 13, 11, 10, 8, 9},
      {8, 9, 11, 10, 14, 15, 13, 12, 0, 1, 3, 2, 7, 6, 4, 5},
      {9, 8, 10, 11, 15, 14, 12, 13, 1, 0, 2, 3, 6, 7, 5, 4},
      {10, 11, 9, 8, 12, 13, 15, 14, 2, 3, 1, 0, 5, 4, 6, 7},
      {11, 10, 8, 9, 13, 12, 14, 15, 3, 2, 0, 1, 4, 5, 7, 6},
      {12, 13, 14, 15, 10, 11, 8, 9, 4, 5, 6, 7, 2, 3, 0, 1},
      {13, 12, 15, 14, 11, 10, 9, 8, 5, 4, 7, 6, 3, 2, 1, 0},
      {14, 15, 12, 13, 8, 9, 10, 11, 6, 7, 4, 5, 0, 1, 2, 3},
      {15, 14, 13, 12, 9, 8, 11, 10, 7, 6, 5, 4, 1, 0, 3, 2},
  };
  return rows;
}

const std::vector<std::vector<int>>& steiner10_rows() {
  static const std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
      {1, 0, 3, 2, 5, 4, 7, 6, 9, 8},
      {2, 3, 0, 1, 6, 9, 4, 8, 7, 5},
      {3, 2, 1, 0, 8, 7, 9, 5, 4, 6},
      {4, 5, 6, 8, 0, 1, 2, 9, 3, 7},
      {5, 4, 9, 7, 1, 0, 8, 3, 6, 2},
      {6, 7, 4, 9, 2, 8, 0, 1, 5, 3},
      {7, 6, 8, 5, 9, 3, 1, 0, 2, 4},
      {8, 9, 7, 4, 3, 6, 5, 2, 0, 1},
      {9, 8, 5, 6, 7, 2, 3, 4, 1, 0},
  };
  return rows;
}

// Signed structure constants of the 16-dimensional standard doubling level.
constexpr int kSedenionConstants[16][16] = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16},
    {2, -1, 4, -3, 6, -5, -8, 7, 10, -9, -12, 11, -14, 13, 16, -15},
    {3, -4, -1, 2, 7, 8, -5, -6, 11, 12, -9, -10, -15, -16, 13, 14},
    {4, 3, -2, -1, 8, -7, 6, -5, 12, -11, 10, -9, -16, 15, -14, 13},
    {5, -6, -7, -8, -1, 2, 3, 4, 13, 14, 15, 16, -9, -10, -11, -12},
    {6, 5, -8, 7, -2, -1, -4, 3, 14, -13, 16, -15, 10, -9, 12, -11},
    {7, 8, 5, -6, -3, 4, -1, -2, 15, -16, -13, 14, 11, -12, -9, 10},
    {8, -7, 6, 5, -4, -3, 2, -1, 16, 15, -14, -13, 12, 11, -10, -9},
    {9, -10, -11, -12, -13, -14, -15, -16, -1, 2, 3, 4, 5, 6, 7, 8},
    {10, 9, -12, 11, -14, 13, 16, -15, -2, -1, -4, 3, -6, 5, 8, -7},
    {11, 12, 9, -10, -15, -16, 13, 14, -3, 4, -1, -2, -7, -8, 5, 6},
    {12, -11, 10, 9, -16, 15, -14, 13, -4, -3, 2, -1, -8, 7, -6, 5},
    {13, 14, 15, 16, 9, -10, -11, -12, -5, 6, 7, 8, -1, -2, -3, -4},
    {14, -13, 16, -15, 10, 9, 12, -11, -6, -5, 8, -7, 2, -1, 4, -3},
    {15, -16, -13, 14, 11, -12, 9, 10, -7, -8, -5, 6, 3, -4, -1, 2},
    {16, 15, -14, -13, 12, 11, -10, 9, -8, 7, -6, -5, 4, 3, -2, -1},
};

}  // namespace

const SignedTable& sedenion_fixture() {
  static const SignedTable t = [] {
    SignedTable s;
    s.level = 4;
    s.dim = 16;
    s.sign.resize(256);
    s.index.resize(256);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) {
        const int v = kSedenionConstants[i][j];
        s.sign[i * 16 + j] = static_cast<std::int8_t>(v < 0 ? -1 : 1);
        s.index[i * 16 + j] = v < 0 ? -v : v;
      }
    s.conj.assign(16, static_cast<std::int8_t>(-1));
    s.conj[0] = 1;
    validate_signed_table(s);
    return s;
  }();
  return t;
}

LoopTable builtin(std::string_view name) {
  if (name == "steiner10") return LoopTable::from_rows(steiner10_rows());
  if (name == "table1_16") return LoopTable::from_rows(table1_rows());
  if (name == "sedenion_table2") return signed_loop(sedenion_fixture());
  fail(Err::UnknownIdentity, "unknown builtin '" + std::string(name) + "'");
}

}  // namespace cloops
