#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tga/group.hpp"
#include "tga/scalar.hpp"

namespace tga {

/// A scalar 2-cocycle mu: G x G -> T, backed by a formula or a table.
class TwoCocycle {
 public:
  using Evaluator = std::function<Scalar(const GroupElement&, const GroupElement&)>;

  TwoCocycle(GroupPtr group, Evaluator eval, std::optional<std::int64_t> value_order, std::string label);

  Scalar operator()(const GroupElement& g, const GroupElement& h) const { return eval_(g, h); }

  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  /// The group as a FiniteGroup, or nullptr.
  const FiniteGroup* finite_group() const;
  /// All values lie in <zeta_M>; nullopt when unknown or not torsion.
  std::optional<std::int64_t> value_order() const { return value_order_; }
  const std::string& label() const { return label_; }

  /// Pointwise product; both cocycles must live on the same group object.
  TwoCocycle operator*(const TwoCocycle& other) const;
  TwoCocycle conj() const;
  /// mu(e, e) = 1.
  bool is_normalized() const;

 private:
  GroupPtr group_;
  Evaluator eval_;
  std::optional<std::int64_t> value_order_;
  std::string label_;
};

/// The constant cocycle 1.
TwoCocycle trivial_cocycle(GroupPtr group);

/// x^t J y with J = (0 I_n; -I_n 0); x, y of length 2n.
std::int64_t symplectic_pairing(const GroupElement& x, const GroupElement& y);

/// nu_alpha(x, y) = (alpha^(1/2))^(x^t J y) on Z^(2n) (q absent) or (Z/q)^(2n).
/// Throws WellDefinednessError if q is given and ord(alpha^(1/2)) does not
/// divide q (symbolic alpha has infinite order and never descends).
TwoCocycle symplectic_cocycle(const Alpha& alpha, std::size_t n, std::optional<std::int64_t> q = std::nullopt);

/// The same formula on an existing (Z/q)^(2n) group object.
TwoCocycle symplectic_cocycle_on(const Alpha& alpha, AbelianGroupPtr group);

/// mu_alpha((k, l), (k', l')) = alpha^((k l' - k' l) / 2) on Z^2.
TwoCocycle mu_alpha(const Alpha& alpha);

/// True iff nu(g x, g y) = nu(x, y) for all pairs of standard basis vectors.
/// Sufficient for bicharacters such as the symplectic cocycles. The cocycle
/// must live on Z^d or (Z/q)^d.
bool verify_invariance(const TwoCocycle& nu, const IntMatrix& g);

/// nu((x1, g1), (x2, g2)) = nu(x1, g1 x2) on (Z/q)^d x| Gamma. Every element of
/// Gamma is checked with verify_invariance first; InvarianceViolation names
/// the first offender.
TwoCocycle extend_to_semidirect(const TwoCocycle& nu, MatrixGroupPtr gamma);

/// The same extension on Z^d x| GL(d, Z); invariance is checked on the given
/// generators, which also seed sampling.
TwoCocycle extend_to_affine(const TwoCocycle& nu, const std::vector<IntMatrix>& generators);

/// Table cocycle on a finite group: values[i * |G| + j] = mu(g_i, g_j).
TwoCocycle table_cocycle(FiniteGroupPtr group, std::vector<Scalar> values, std::optional<std::int64_t> value_order,
                         std::string label = "table");

/// Full value table of a cocycle on a finite group.
std::vector<Scalar> tabulate(const TwoCocycle& mu);

/// (d lambda)(g, h) = lambda_g lambda_h conj(lambda_gh) for lambda given per
/// element index of a finite group.
TwoCocycle coboundary_of(FiniteGroupPtr group, const std::vector<Scalar>& lambda, std::string label = "coboundary");

/// A coboundary of a uniformly random normalized lambda with values in <zeta_M>.
/// Returns the cocycle and lambda.
std::pair<TwoCocycle, std::vector<Scalar>> random_coboundary(FiniteGroupPtr group, std::int64_t m,
                                                             std::mt19937_64& rng);

struct VerificationPolicy {
  std::uint64_t exhaustive_limit = 10'000'000;  // |G|^3 at or below: every triple
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

struct CocycleCheck {
  bool ok = true;
  bool exhaustive = false;
  std::uint64_t triples = 0;
  std::string witness;
};

/// mu(g,h) mu(gh,k) = mu(h,k) mu(g,hk), exhaustive when |G|^3 <= limit, else
/// seeded samples (infinite groups are always sampled). Deterministic for a
/// fixed seed regardless of worker count.
CocycleCheck verify_cocycle_identity(const TwoCocycle& mu, const VerificationPolicy& policy = {});

/// The smallest M with every value in <zeta_M>. Throws UnsupportedError for
/// symbolic values or infinite groups.
std::int64_t torsion_order(const TwoCocycle& mu);

/// lambda (per element index, values in <zeta_(M |G|)>) with mu = d lambda,
/// or nullopt. Solves lambda_g + lambda_h - lambda_gh = m_gh over Z/(M |G|):
/// if mu = d lambda at all then lambda^M is a character, so lambda can be
/// taken with values of order dividing M |G|.
std::optional<std::vector<Scalar>> is_coboundary(const TwoCocycle& mu);

/// Pointwise restriction to a subgroup whose parent is the cocycle's group.
TwoCocycle restrict_cocycle(const TwoCocycle& mu, SubgroupPtr h);

/// is_coboundary(mu1 * conj(mu2)) succeeds.
bool same_class(const TwoCocycle& mu1, const TwoCocycle& mu2);

}  // namespace tga
