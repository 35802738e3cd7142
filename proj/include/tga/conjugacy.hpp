#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tga/int_matrix.hpp"
#include "tga/scalar.hpp"

namespace tga {

/// (a, b) conjugated by P in SL(2, Z) so that a = (1 n; 0 1); a is first
/// replaced by a^2 when its trace is -2.
struct NormalizedPair {
  IntMatrix a;
  IntMatrix b;
  IntMatrix conjugator;
  bool squared = false;
  std::int64_t n = 0;
  std::int64_t m1 = 0, m2 = 0, m3 = 0, m4 = 0;
};

/// Throws PreconditionError unless a is parabolic and ab != ba (m3 != 0).
NormalizedPair normalize_parabolic(const IntMatrix& a, const IntMatrix& b);

/// Rows l on which a nonzero element fixed by sigma_alpha((1 n; 0 1)) can be
/// supported. The recurrence is alpha^(-n l^2 / 2) c_(k - nl, l) = c_(k, l).
struct SupportSet {
  /// True for Z^2: orbits k -> k + nl are infinite for l != 0, so square
  /// summability leaves only the row l = 0.
  bool infinite_rule = true;
  std::optional<std::int64_t> modulus;
  std::vector<std::int64_t> rows;
  std::string to_string() const;
};

/// Without a modulus: rows {0}. With modulus q, orbits close after
/// L = q / gcd(nl, q) steps and row l survives iff (alpha^(1/2))^(n l^2 L) = 1,
/// a weaker support that may contain l != 0.
SupportSet parabolic_support(std::int64_t n, const Alpha& alpha, std::optional<std::int64_t> modulus = std::nullopt);

/// {k0 : alpha1^(m3 k0^2) = alpha2^(m3)}. Root-of-unity mode: residues
/// mod lcm(ord alpha1, ord alpha2). Symbolic mode: the +-k0 with
/// k0^2 times the exponent vector of alpha1 equal to that of alpha2.
/// Throws PreconditionError for m3 = 0 and MismatchError for mixed modes.
std::vector<std::int64_t> k0_solutions(const Scalar& alpha1, const Scalar& alpha2, std::int64_t m3);

/// {l : alpha1^(k0 l) = alpha2}: residues mod the common order, or {k0}
/// or {} in symbolic mode.
std::vector<std::int64_t> vprime_support(std::int64_t k0, const Scalar& alpha1, const Scalar& alpha2);

enum class Verdict { Obstructed, Consistent };

std::string to_string(Verdict v);

struct TranscriptEntry {
  std::string constraint;
  std::string anchor;
};

struct ConjugacyDecision {
  Verdict verdict = Verdict::Obstructed;
  bool symbolic = false;
  NormalizedPair pair;
  SupportSet u_support;
  /// Output of k0_solutions.
  std::vector<std::int64_t> k0_set;
  /// Candidates left after the v' support, generation and upper half torus
  /// constraints; {1} exactly when the verdict is Consistent.
  std::vector<std::int64_t> surviving;
  std::vector<TranscriptEntry> transcript;
};

/// Propagates the coefficient constraints that a conjugacy between
/// sigma_alpha1 and sigma_alpha2 restricted to <a, b> imposes. Both values
/// must lie in the upper half torus.
ConjugacyDecision decide_conjugacy(const Alpha& alpha1, const Alpha& alpha2, const IntMatrix& a, const IntMatrix& b);

/// Numeric cross-check of decide_conjugacy: with k0 = 1 (the only value the
/// generation and upper half torus constraints allow), solves on
/// |k|, |l| <= bound the linear system u^k0 v' - alpha2 v' u^k0 = 0 for
/// v' = sum d_(k,l) u^k v^l supported on the row l = k0,
/// and reports whether a nonzero solution exists (rank via Eigen, threshold
/// 1e-9). Agrees with a Consistent verdict.
bool truncated_solution_exists(const Alpha& alpha1, const Alpha& alpha2, std::int64_t bound = 8);

/// The conjugate of a root of unity into the upper half torus; flags whether
/// conjugation was needed. Symbolic scalars are returned unchanged.
std::pair<Alpha, bool> normalize_upper_half(const Alpha& alpha);

struct SweepRow {
  std::int64_t order = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  bool conjugated1 = false;
  bool conjugated2 = false;
  Verdict verdict = Verdict::Obstructed;
  std::vector<std::int64_t> k0_set;
};

/// decide_conjugacy over alpha1 = zeta_N^s, alpha2 = zeta_N^t for all
/// 1 <= s, t < N ((N - 1)^2 rows, s-major), each value moved to the upper
/// half torus first.
std::vector<SweepRow> conjugacy_sweep(std::int64_t order, const IntMatrix& a, const IntMatrix& b);

}  // namespace tga
