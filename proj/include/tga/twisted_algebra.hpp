#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "tga/cocycle.hpp"
#include "tga/cyclotomic.hpp"
#include "tga/group.hpp"
#include "tga/matrix.hpp"

namespace tga {

/// The twisted group algebra C_mu[G]: basis delta_g with
/// delta_g delta_h = mu(g, h) delta_gh.
class TwistedAlgebra {
 public:
  /// Requires a normalized cocycle, mu(e, e) = 1.
  explicit TwistedAlgebra(TwoCocycle mu);

  const TwoCocycle& cocycle() const { return mu_; }
  const Group& group() const { return mu_.group(); }

 private:
  TwoCocycle mu_;
};

using AlgebraPtr = std::shared_ptr<const TwistedAlgebra>;

AlgebraPtr make_algebra(TwoCocycle mu);

/// Finite sum sum_g c_g delta_g with exact cyclotomic coefficients.
class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraPtr ambient);
  static AlgebraElement basis(AlgebraPtr ambient, const GroupElement& g, const Cyclotomic& c = Cyclotomic(1));

  const AlgebraPtr& ambient() const { return ambient_; }
  const std::map<GroupElement, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coefficient(const GroupElement& g) const;
  /// Adds c delta_g, pruning exact zeros.
  void add(const GroupElement& g, const Cyclotomic& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Cyclotomic& c) const;

  /// delta_g^* = conj(mu(g, g^-1)) delta_(g^-1), extended antilinearly.
  AlgebraElement star() const;
  /// Coefficient of the identity.
  Cyclotomic trace() const;
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_string() const;

 private:
  void check_ambient(const AlgebraElement& o) const;

  AlgebraPtr ambient_;
  std::map<GroupElement, Cyclotomic> terms_;
};

/// tau(y^* x).
Cyclotomic hs_inner(const AlgebraElement& x, const AlgebraElement& y);

/// Random element with `terms` basis elements drawn from the group's sampler
/// and small integer multiples of roots of unity of order `root_order`.
AlgebraElement random_element(AlgebraPtr ambient, std::size_t terms, std::int64_t root_order, std::mt19937_64& rng);

/// u^k v^l in an algebra over Z^2 or (Z/q)^2 with cocycle nu_alpha:
/// alpha^(kl/2) delta_(k,l).
AlgebraElement uv_monomial(AlgebraPtr ambient, const Alpha& alpha, std::int64_t k, std::int64_t l);

/// The group element (k, l) of Z^2 or (Z/q)^2 (reduced mod q).
GroupElement lattice_point(const Group& g, std::int64_t k, std::int64_t l);

/// A map g -> unitary matrix with pi(g) pi(h) = mu(g, h) pi(gh).
class ProjectiveRep {
 public:
  using Map = std::function<MonomialMatrix(const GroupElement&)>;

  ProjectiveRep(FiniteGroupPtr group, TwoCocycle mu, std::size_t dim, Map map, std::string label);

  MonomialMatrix operator()(const GroupElement& g) const { return map_(g); }
  const FiniteGroup& group() const { return *group_; }
  FiniteGroupPtr group_ptr() const { return group_; }
  const TwoCocycle& cocycle() const { return mu_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }

  /// Linear extension to the twisted algebra: sum_g c_g pi(g).
  CoeffMatrix extend(const AlgebraElement& x) const;

 private:
  FiniteGroupPtr group_;
  TwoCocycle mu_;
  std::size_t dim_;
  Map map_;
  std::string label_;
};

/// lambda_mu(g) xi_h = mu(g, h) xi_gh on l^2(G), basis in element order.
ProjectiveRep regular_rep(FiniteGroupPtr group, TwoCocycle mu);

struct ProjectiveCheck {
  bool ok = true;
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  bool unitary = true;
  std::string witness;
};

/// pi(g) pi(h) = mu(g, h) pi(gh) and pi(g) pi(g)^* = I. Exhaustive when
/// |G|^2 dim <= work_limit, else `samples` seeded pairs.
ProjectiveCheck verify_projective(const ProjectiveRep& pi, std::uint64_t seed = 1, std::uint64_t work_limit = 50'000'000,
                                  std::uint64_t samples = 4000);

struct ClockShift {
  Scalar alpha;
  MonomialMatrix u;
  MonomialMatrix v;
};

/// u = diag(1, beta, .., beta^(N-1)), v e_i = e_(i+1 mod N). Requires
/// beta^N = 1; then u v = beta v u.
ClockShift clock_shift(const Scalar& beta, std::size_t n);
/// clock_shift(zeta_N, N).
ClockShift clock_shift(std::size_t n);

}  // namespace tga
