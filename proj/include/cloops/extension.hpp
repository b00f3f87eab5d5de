#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cloops/abelian.hpp"
#include "cloops/identities.hpp"
#include "cloops/loop_table.hpp"

namespace cloops {

/// A factor set (theta, f) over an abelian group K and a loop Q. K elements in
/// f are linear indices; f is row-major |Q| x |Q|. Written additively: the
/// normalization is f(x,0) = 0 = f(0,x) and the cocycle condition reads
///   theta_{xy} f(y,z) + theta_x f(y,yz) + f(x, y*yz)
///     = f(x,y) + f(xy,y) + f(xy*y, z).
struct FactorSet {
  AbelianGroup k;
  LoopTable q;
  ThetaMap theta;
  std::vector<int> f;

  int f_at(int x, int y) const { return f[x * q.size() + y]; }
  int& f_at(int x, int y) { return f[x * q.size() + y]; }
};

/// Exhaustive verification: theta valid, Q a C-loop, f normalized, cocycle
/// over all triples. Throws QNotCLoop / NotNormalized / CocycleViolation.
void validate_factor_set(const FactorSet& fs);

/// Extension loop on K x Q pairs with index (a,x) -> a*|Q| + x.
struct ExtensionLoop {
  LoopTable table;
  std::vector<int> embedded_k;  // indices of (a, 0), sorted
  std::vector<int> projection;  // (a,x) -> x

  int pair_index(int a, int x) const { return a * qn + x; }
  int k_part(int i) const { return i / qn; }
  int q_part(int i) const { return i % qn; }
  int kn = 0, qn = 0;
};

/// Builds and validates: the factor set is checked first, so the result is
/// always a C-loop.
ExtensionLoop build_extension(const FactorSet& fs);

/// Builds the pair table without the cocycle check (theta and normalization
/// are still required so the result is a loop). Used to test equation
/// characterizations against the built table.
ExtensionLoop build_extension_unchecked(const FactorSet& fs);

/// Two-sided inverse of (a,x) in the extension, solved from the product
/// equations; both sides are verified.
std::pair<int, int> inverse_in_extension(const FactorSet& fs, int a, int x);

/// Per-coset representatives, indexed by quotient element; rep of coset 0 is 0.
using Section = std::vector<int>;

struct ExtractedFactorSet {
  FactorSet fs;
  std::vector<int> k_elements;    // k linear index -> element of the ambient loop
  std::vector<int> section;      // section actually used
  std::vector<int> projection;   // ambient element -> Q element
};

/// Recovers (K, Q, theta, f) from a C-loop with a designated abelian nuclear
/// normal subloop. The default section picks the minimal element of each
/// coset. The result always passes validate_factor_set.
/// Throws NotCLoop / NotNormal / NotNuclear / NotAbelian / InvalidSection.
ExtractedFactorSet extract_factor_set(const LoopTable& c, const std::vector<int>& ksub,
                                      const std::optional<Section>& section = std::nullopt);

/// theta = id everywhere.
bool is_central(const FactorSet& fs);

/// f(y,z) + f(y,yz) = f(x,y) + f(xy,y) over all triples (central Steiner case).
IdentityReport check_cfs2(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f);

/// f(xy,y) = f(y,y) - f(x,y) and f(y,yz) = f(y,y) - f(y,z) over all pairs.
/// Throws QNotSteiner.
IdentityReport check_mk(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f);

/// Zero-diagonal specialization: f(xy,y) = -f(x,y) and f(y,yz) = -f(y,z).
/// Throws QNotSteiner / DiagonalNonzero.
IdentityReport check_q(const AbelianGroup& k, const LoopTable& q, const std::vector<int>& f);

IdentityReport check_cfs2(const FactorSet& fs);
IdentityReport check_mk(const FactorSet& fs);
IdentityReport check_q(const FactorSet& fs);

/// 2 f(x,y) = 2 f(y,x) for all pairs; the extension of a central factor set
/// over a Steiner Q is flexible exactly when this holds.
/// Throws NotCentral / QNotSteiner.
bool flexibility_criterion(const FactorSet& fs);

}  // namespace cloops
