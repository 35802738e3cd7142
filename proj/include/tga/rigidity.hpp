#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tga/twisted_algebra.hpp"

namespace tga {

using ComplexVector = std::vector<std::complex<double>>;

/// A common eigenvector xi0 of pi(H) and the scalars lambda_h with
/// pi(h) xi0 = lambda_h xi0, so that mu(h, h') = lambda_h lambda_h' conj(lambda_hh').
struct TrivializationResult {
  ComplexVector xi0;
  std::vector<GroupElement> subgroup;
  ComplexVector lambda_numeric;
  /// lambda snapped to roots of unity of order M |H|; empty when the cocycle
  /// is not torsion.
  std::vector<Scalar> lambda;
  /// ||xi - xi0||.
  double residual = 0;
  /// max_h ||pi(h) xi0 - lambda_h xi0||.
  double eigen_residual = 0;
  /// |<xi0, xi>|^2.
  double overlap = 0;
  /// max over h, h' of |mu(h, h') - lambda_h lambda_h' conj(lambda_hh')| for the
  /// numeric lambda.
  double certificate = 0;
  /// The snapped lambda satisfy the coboundary identity exactly.
  bool exact = false;
};

/// Averages xi xi^* over pi(H), eigendecomposes the average T (T T^* = T^2),
/// takes the rank-one nonzero eigenprojection with the largest overlap with
/// xi, phase-aligns its vector against xi and reads lambda_h off
/// pi(h) xi0. `subgroup` must be closed under the group law of pi.
/// Throws NoRankOneInvariant when every nonzero eigenvalue cluster has rank
/// above one, NotEigenvector when the eigen residual exceeds tol, and
/// IdentityFailure when the numeric certificate exceeds tol.
TrivializationResult trivialize(const ProjectiveRep& pi, const std::vector<GroupElement>& subgroup,
                                const ComplexVector& xi, double tol = 1e-8);

/// Seeded unit vector with independent uniform real and imaginary parts.
ComplexVector random_unit_vector(std::size_t dim, std::uint64_t seed);

/// The schedule eps -> (F(eps), delta(eps)) of relative rigidity constants.
struct ConstantSchedule {
  std::function<std::vector<IntMatrix>(double)> F;
  std::function<double(double)> delta;
};

/// F = {S, T}, delta(eps) = eps / 10.
ConstantSchedule default_schedule();

struct LemmaConstants {
  double argument = 0;  // eps^2 / 28
  std::vector<IntMatrix> F;
  double delta = 0;
};

/// (F(eps^2 / 28), delta(eps^2 / 28) / 2). Requires 0 < eps <= 1.
LemmaConstants lemma_constants(double eps, const ConstantSchedule& schedule = default_schedule());

/// g -> (eta -> pi1(g) eta pi2(g)^*) on d1 x d2 matrices, basis E_ij at index
/// i * d2 + j, with cocycle mu1 conj(mu2). Both representations must live on
/// the same group object. The cocycle relation is verified before returning;
/// IdentityFailure carries the witness.
ProjectiveRep comparison_rep(const ProjectiveRep& pi1, const ProjectiveRep& pi2);

struct GapResult {
  /// Smallest eigenvalue of the compression of Delta_F to the complement of
  /// the pi(H)-invariant vectors; +infinity when the complement is zero.
  double gap = 0;
  std::size_t dim_complement = 0;
  std::size_t dim_invariant = 0;
};

/// Delta_F = sum_{g in F} (2I - pi(g) - pi(g)^*). The dimension of the
/// invariant subspace is the exact cyclotomic trace of the H-average. The
/// representation must be genuine (trivial cocycle).
GapResult relative_gap(const ProjectiveRep& pi, const std::vector<GroupElement>& subgroup,
                       const std::vector<GroupElement>& generators);

/// Exact test that the gap is positive for a permutation representation: every
/// orbit of <F> is H-stable, so no <F>-invariant vector lies in the
/// complement. Throws UnsupportedError for non-permutation representations.
bool gap_is_positive(const ProjectiveRep& pi, const std::vector<GroupElement>& subgroup,
                     const std::vector<GroupElement>& generators);

/// x -> x + t and x -> gamma x on l^2((Z/q)^2), the affine permutation
/// representation of (Z/q)^2 x| Gamma; basis in (Z/q)^2 element order.
ProjectiveRep affine_permutation_rep(SemidirectPtr group);

using BigInt = boost::multiprecision::cpp_int;

/// 2^n c0^(|F1| n^2) with c0 = ceil((1 + 4 / delta1)^2). Requires n >= 1 and
/// 0 < delta1 <= 2.
BigInt counting_bound(std::int64_t n, std::int64_t f1_size, double delta1);

/// ceil((1 + 4 / delta1)^2).
std::int64_t covering_constant(double delta1);

}  // namespace tga
