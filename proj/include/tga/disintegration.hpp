#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/twisted_algebra.hpp"

namespace tga {

/// G~ = A x_nu G with (a1, g1)(a2, g2) = (a1 a2 nu(g1, g2), g1 g2), nu an
/// A-valued normalized 2-cocycle. Coordinates are (a coords, g coords);
/// elements are enumerated A-major.
class CentralExtension final : public FiniteGroup {
 public:
  using Cocycle = std::function<GroupElement(const GroupElement&, const GroupElement&)>;

  /// Verifies the A-valued cocycle identity (exhaustive when |G|^3 is within
  /// the policy limit, else sampled) and throws IdentityFailure with the
  /// witness triple. `g_generators` generate G; empty means all of G.
  CentralExtension(AbelianGroupPtr a, FiniteGroupPtr g, Cocycle nu, std::vector<GroupElement> g_generators = {},
                   std::string label = "extension", const VerificationPolicy& policy = {});

  const AbelianGroup& central() const { return *a_; }
  const FiniteGroup& quotient() const { return *g_; }
  AbelianGroupPtr central_ptr() const { return a_; }
  FiniteGroupPtr quotient_ptr() const { return g_; }
  GroupElement nu(const GroupElement& g, const GroupElement& h) const { return nu_(g, h); }

  GroupElement make(const GroupElement& a, const GroupElement& g) const;
  GroupElement central_part(const GroupElement& x) const;
  GroupElement quotient_part(const GroupElement& x) const;
  /// Unit vectors of A and lifts (0, g) of the generators of G.
  std::vector<GroupElement> generators() const;

  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const override;
  /// (a, g)^-1 = (a^-1 nu(g, g^-1)^-1, g^-1).
  GroupElement inverse(const GroupElement& x) const override;
  std::string name() const override { return label_; }

 private:
  AbelianGroupPtr a_;
  FiniteGroupPtr g_;
  Cocycle nu_;
  std::vector<GroupElement> g_generators_;
  std::string label_;
};

using ExtensionPtr = std::shared_ptr<const CentralExtension>;

/// A = Z/m, G = (Z/m)^2, nu(x, y) = x1 y2 mod m; generators e1, e2 of G.
ExtensionPtr heisenberg(std::int64_t m);

/// chi_j(a) = prod_i zeta_(m_i)^(j_i a_i).
struct Character {
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> moduli;
  Scalar operator()(const GroupElement& a) const;
  bool is_trivial() const;
  std::string to_string() const;
};

/// All |A| characters, exponent vectors in lexicographic order.
std::vector<Character> characters(const AbelianGroup& a);

/// tau_chi(sum c_(a,g) delta_(a,g)) = sum_a c_(a,e) chi(a), for x in the
/// untwisted group algebra of G~.
Cyclotomic tau_alpha(const Character& chi, const CentralExtension& ext, const AlgebraElement& x);

/// nu_chi = chi o nu on G.
TwoCocycle scalar_cocycle(ExtensionPtr ext, const Character& chi);

/// pi_chi(a, g) = chi(a) lambda_(nu_chi)(g) on l^2(G): a genuine
/// representation of G~.
ProjectiveRep block_rep(ExtensionPtr ext, const Character& chi);

/// theta e_(a,g) = sum_chi chi(a) e_(chi,g), rows in (character, G) order.
/// theta^* theta = |A| I.
CoeffMatrix theta_map(const CentralExtension& ext);

struct BlockReport {
  Character character;
  std::size_t dim = 0;
  bool commutative = false;
  /// Heisenberg blocks: tr(p u^k v^l) for 0 <= k, l < d, p the central
  /// projection onto u^d = v^d = 1 and d = ord(chi(1)); otherwise the traces
  /// of pi_chi(e, g) over G.
  std::vector<std::string> trace_table;
  /// Heisenberg blocks: the compressed traces equal d tr(U^k V^l) for the
  /// clock-shift pair with parameter chi(1).
  bool matches_clock_shift = true;
};

struct DisintegrationReport {
  std::vector<BlockReport> blocks;
  bool unitary = false;       // theta^* theta = |A| I
  bool intertwines = false;   // theta rho(x) = (+)_chi pi_chi(x) theta on generators
  bool dimensions = false;    // sum of block dims = |A||G|
  bool trace_identity = false;  // |A| tau(x) = sum_chi tau_chi(x) on basis elements
  std::string witness;
  bool ok() const;
};

/// Block-diagonalizes the regular representation of G~ by theta and checks
/// every claim above exactly. `heisenberg_m` > 0 enables the clock-shift
/// comparison (A = Z/m, G = (Z/m)^2 with generators e1, e2).
DisintegrationReport disintegrate(ExtensionPtr ext, std::int64_t heisenberg_m = 0);

}  // namespace tga
