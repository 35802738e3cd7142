#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/int_matrix.hpp"
#include "tga/twisted_algebra.hpp"

namespace tga {

/// The action of Sp(2n, Z) (SL(2, Z) for n = 1) on the twisted algebra of
/// Z^(2n) or (Z/q)^(2n) with cocycle nu_alpha.
struct ActionContext {
  Alpha alpha;
  std::size_t n = 1;
  std::optional<std::int64_t> q;
  std::vector<IntMatrix> generators;
  AlgebraPtr algebra;
  /// Added as phase_fault * k^2 to the half-exponent of the monomial formula;
  /// nonzero only for fault injection.
  std::int64_t phase_fault = 0;
};

/// Builds the context. Throws WellDefinednessError when ord(alpha^(1/2))
/// does not divide q and InvarianceViolation when a generator does not
/// preserve nu_alpha.
ActionContext make_action_context(const Alpha& alpha, std::size_t n, std::optional<std::int64_t> q,
                                  std::vector<IntMatrix> generators, std::int64_t phase_fault = 0);

/// The monomial formula (n = 1): with (k', l') = g (k, l),
/// sigma(g)(u^k v^l) = alpha^((k l - k' l') / 2) u^k' v^l'.
AlgebraElement sigma_formula(const ActionContext& ctx, const IntMatrix& g, const AlgebraElement& x);

/// Transport of structure: sigma(g)(lambda(x)) = lambda(g x).
AlgebraElement sigma_transport(const ActionContext& ctx, const IntMatrix& g, const AlgebraElement& x);

/// The formula for n = 1, transport otherwise.
AlgebraElement sigma(const ActionContext& ctx, const IntMatrix& g, const AlgebraElement& x);

struct ActionReport {
  bool homomorphism = true;
  bool multiplicative = true;
  bool star_preserving = true;
  bool trace_preserving = true;
  /// Formula and transport routes agree on every monomial (n = 1).
  bool formula_matches_transport = true;
  bool exhaustive = true;
  std::uint64_t checks = 0;
  std::string witness;
  bool ok() const {
    return homomorphism && multiplicative && star_preserving && trace_preserving && formula_matches_transport;
  }
};

/// Checks sigma over the generators and their inverses: sigma(g) sigma(h) =
/// sigma(gh) on all monomials, sigma(g)(xy) = sigma(g)(x) sigma(g)(y) on
/// monomial pairs, star and trace preservation. Exhaustive for q <= 8,
/// seeded samples of monomial pairs beyond. Requires a finite q.
ActionReport verify_action(const ActionContext& ctx, std::uint64_t seed = 1, std::uint64_t samples = 20000);

/// Twisted regular representation of (Z/q)^2 x| Gamma_q with the extended
/// nu_alpha. Throws WellDefinednessError as for the cocycle.
ProjectiveRep finite_model(const Alpha& alpha, std::int64_t q, MatrixGroupPtr gamma);

struct CrossedProductReport {
  bool consistent = true;
  bool exhaustive = true;
  std::uint64_t pairs = 0;
  std::string witness;
};

/// Compares the product of basis elements (x1, g1)(x2, g2) in the twisted
/// algebra of (Z/q)^2 x| Gamma with the crossed-product rule
/// (lambda(x1) w_g1)(lambda(x2) w_g2) = lambda(x1) sigma(g1)(lambda(x2)) w_g1g2,
/// where sigma is evaluated by the monomial formula. `fault` flips the sign
/// of the extension cocycle whenever x1 != 0 and g1 != e.
CrossedProductReport crossed_product_consistency(const Alpha& alpha, std::int64_t q, MatrixGroupPtr gamma,
                                                 bool fault = false, std::uint64_t seed = 1,
                                                 std::uint64_t exhaustive_pairs = 300000,
                                                 std::uint64_t samples = 20000);

/// The standard generators S = (0 -1; 1 0) and T = (1 1; 0 1).
std::vector<IntMatrix> sl2_generators();

}  // namespace tga
