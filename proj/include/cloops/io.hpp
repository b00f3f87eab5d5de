#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cloops/extension.hpp"
#include "cloops/loop_table.hpp"
#include "cloops/steiner.hpp"

namespace cloops {

/// .loop: first line "n", then n lines of n space-separated 0-based indices.
LoopTable read_loop(std::istream& in);
LoopTable read_loop_file(const std::filesystem::path& path);
void write_loop(std::ostream& out, const LoopTable& l);
void write_loop_file(const std::filesystem::path& path, const LoopTable& l);

/// .cfs: "K: n_1 ... n_k"; "Q: <n>" with the table inline (or "Q: <path>" to a
/// .loop file); "theta:" with |Q| permutations of 0..|K|-1; "f:" with |Q| rows
/// of |Q| K-indices. base_dir resolves relative Q paths.
FactorSet read_cfs(std::istream& in, const std::filesystem::path& base_dir = {});
FactorSet read_cfs_file(const std::filesystem::path& path);
void write_cfs(std::ostream& out, const FactorSet& fs);
void write_cfs_file(const std::filesystem::path& path, const FactorSet& fs);

/// .sts: first line "v", then one triple of 1-based points per line.
SteinerTripleSystem read_sts(std::istream& in);
SteinerTripleSystem read_sts_file(const std::filesystem::path& path);
void write_sts(std::ostream& out, const SteinerTripleSystem& sts);
void write_sts_file(const std::filesystem::path& path, const SteinerTripleSystem& sts);

}  // namespace cloops
