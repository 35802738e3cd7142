#include "tga/conjugacy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/integer/extended_euclidean.hpp>
#include <numeric>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {

namespace {

std::string set_string(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << '}';
  return out.str();
}

// (x, y) with w1 y - w2 x = 1 for primitive (w1, w2).
std::pair<std::int64_t, std::int64_t> complete_basis(std::int64_t w1, std::int64_t w2) {
  if (w1 == 0) return {-w2, 0};
  if (w2 == 0) return {0, w1};
  auto r = boost::integer::extended_euclidean(std::abs(w1), std::abs(w2));
  // |w1| r.x + |w2| r.y = 1
  std::int64_t a = w1 > 0 ? r.x : -r.x;
  std::int64_t b = w2 > 0 ? r.y : -r.y;
  return {-b, a};
}

std::int64_t common_order(const Scalar& a, const Scalar& b) { return lcm64(a.order(), b.order()); }

void check_modes(const Scalar& a, const Scalar& b) {
  if (a.is_torsion() != b.is_torsion()) throw MismatchError("conjugacy needs both scalars in the same mode");
}

}  // namespace

NormalizedPair normalize_parabolic(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) throw PreconditionError("a and b must be 2x2");
  if (!is_parabolic(a)) throw PreconditionError("a = " + a.to_string() + " is not parabolic");
  if (b.determinant() != 1) throw PreconditionError("b = " + b.to_string() + " is not in SL(2, Z)");
  NormalizedPair r;
  IntMatrix aa = a;
  if (a.trace() == -2) {
    aa = a * a;
    r.squared = true;
  }
  IntMatrix m = aa - IntMatrix::identity(2);
  std::int64_t w1 = -m(0, 1), w2 = m(0, 0);
  if (w1 == 0 && w2 == 0) {
    w1 = -m(1, 1);
    w2 = m(1, 0);
  }
  std::int64_t g = std::gcd(w1, w2);
  w1 /= g;
  w2 /= g;
  auto [x, y] = complete_basis(w1, w2);
  IntMatrix q{{w1, x}, {w2, y}};
  IntMatrix p = *q.unimodular_inverse();
  r.conjugator = p;
  r.a = p * aa * q;
  r.b = p * b * q;
  if (r.a(0, 0) != 1 || r.a(1, 0) != 0 || r.a(1, 1) != 1) {
    throw IdentityFailure("normalization of a failed: " + r.a.to_string());
  }
  r.n = r.a(0, 1);
  r.m1 = r.b(0, 0);
  r.m2 = r.b(0, 1);
  r.m3 = r.b(1, 0);
  r.m4 = r.b(1, 1);
  if (r.m3 == 0) throw PreconditionError("a and b commute (m3 = 0)");
  return r;
}

std::string SupportSet::to_string() const {
  if (infinite_rule) return "rows {l = 0}";
  return "rows " + set_string(rows) + " mod " + std::to_string(*modulus);
}

SupportSet parabolic_support(std::int64_t n, const Alpha& alpha, std::optional<std::int64_t> modulus) {
  if (n == 0) throw PreconditionError("a = I has no parabolic support constraint");
  SupportSet s;
  if (!modulus) {
    s.rows = {0};
    return s;
  }
  if (!alpha.root.is_torsion()) throw UnsupportedError("a symbolic parameter has no finite quotient");
  std::int64_t q = *modulus;
  if (q < 1) throw PreconditionError("modulus must be positive");
  s.infinite_rule = false;
  s.modulus = q;
  for (std::int64_t l = 0; l < q; ++l) {
    std::int64_t step = mod64(n * l, q);
    std::int64_t len = q / std::gcd(step, q);
    if (half_power(alpha, -n * l * l * len).is_one()) s.rows.push_back(l);
  }
  return s;
}

std::vector<std::int64_t> k0_solutions(const Scalar& alpha1, const Scalar& alpha2, std::int64_t m3) {
  if (m3 == 0) throw PreconditionError("m3 must be nonzero");
  check_modes(alpha1, alpha2);
  std::vector<std::int64_t> out;
  Scalar target = alpha2.pow(m3);
  if (alpha1.is_torsion()) {
    std::int64_t n = common_order(alpha1, alpha2);
    for (std::int64_t k = 0; k < n; ++k)
      if (alpha1.pow(m3 * k * k) == target) out.push_back(k);
    return out;
  }
  // k^2 (h1, h2)(alpha1) = (h1, h2)(alpha2)
  std::int64_t v1[2] = {alpha1.half_exponent1(), alpha1.half_exponent2()};
  std::int64_t v2[2] = {alpha2.half_exponent1(), alpha2.half_exponent2()};
  std::optional<std::int64_t> ratio;
  for (int i = 0; i < 2; ++i) {
    if (v1[i] == 0) {
      if (v2[i] != 0) return out;
      continue;
    }
    if (v2[i] % v1[i] != 0) return out;
    std::int64_t r = v2[i] / v1[i];
    if (ratio && *ratio != r) return out;
    ratio = r;
  }
  if (!ratio || *ratio <= 0) return out;
  auto k = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(*ratio))));
  if (k * k != *ratio) return out;
  for (std::int64_t cand : {-k, k})
    if (alpha1.pow(m3 * cand * cand) == target) out.push_back(cand);
  return out;
}

std::vector<std::int64_t> vprime_support(std::int64_t k0, const Scalar& alpha1, const Scalar& alpha2) {
  check_modes(alpha1, alpha2);
  std::vector<std::int64_t> out;
  if (alpha1.is_torsion()) {
    std::int64_t n = common_order(alpha1, alpha2);
    for (std::int64_t l = 0; l < n; ++l)
      if (alpha1.pow(k0 * l) == alpha2) out.push_back(l);
    return out;
  }
  if (alpha1.pow(k0 * k0) == alpha2) out.push_back(k0);
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::Consistent ? "Consistent" : "Obstructed"; }

std::pair<Alpha, bool> normalize_upper_half(const Alpha& alpha) {
  if (in_upper_half_torus(alpha.value)) return {alpha, false};
  return {Alpha{alpha.value.conj(), alpha.root.conj()}, true};
}

ConjugacyDecision decide_conjugacy(const Alpha& alpha1, const Alpha& alpha2, const IntMatrix& a, const IntMatrix& b) {
  const Scalar& x1 = alpha1.value;
  const Scalar& x2 = alpha2.value;
  check_modes(x1, x2);
  for (const auto* s : {&x1, &x2})
    if (!in_upper_half_torus(*s)) throw PreconditionError(s->to_string() + " is not in the upper half torus");

  ConjugacyDecision d;
  d.symbolic = x1.is_symbolic();
  d.pair = normalize_parabolic(a, b);
  const NormalizedPair& p = d.pair;
  auto note = [&d](std::string c, std::string anchor) { d.transcript.push_back({std::move(c), std::move(anchor)}); };

  note("a -> " + p.a.to_string() + (p.squared ? " (after squaring)" : "") + ", b -> " + p.b.to_string() +
           ", m3 = " + std::to_string(p.m3) + " != 0",
       "conjugate a to a shear fixing (1, 0); ab != ba iff m3 != 0");

  std::int64_t n = common_order(x1, x2);
  if (d.symbolic) {
    d.u_support = parabolic_support(p.n, alpha1);
    note("u' fixed by sigma(a): support " + d.u_support.to_string() + ", u' = sum_k c_k u^k",
         "fixed points of the parabolic automorphism, infinite orbits for l != 0");
  } else {
    std::int64_t q = lcm64(alpha1.root.order(), alpha2.root.order());
    d.u_support = parabolic_support(p.n, alpha1, q);
    note("u' fixed by sigma(a): finite orbits mod " + std::to_string(q) + " allow " + d.u_support.to_string() +
             "; the chain continues on the row l = 0",
         "fixed points of the parabolic automorphism, weaker support on finite quotients");
  }

  d.k0_set = k0_solutions(x1, x2, p.m3);
  note("c_k c_j (alpha1^(m3 k j) - alpha2^m3) = 0 with m3 = " + std::to_string(p.m3) + ": k0 in " +
           set_string(d.k0_set) + (d.symbolic ? "" : " mod " + std::to_string(n)),
       "commutation of u' with sigma(b)(u')");

  std::vector<std::int64_t> admissible;
  for (auto k0 : d.k0_set) {
    auto rows = vprime_support(k0, x1, x2);
    std::int64_t target = d.symbolic ? k0 : mod64(k0, n);
    if (std::find(rows.begin(), rows.end(), target) != rows.end()) admissible.push_back(k0);
  }
  note("d_(k,l) (1 - alpha2 alpha1^(-k0 l)) = 0 and v' on the row l = k0: k0 in " + set_string(admissible),
       "commutation of u' and v'");

  auto congruent = [&](std::int64_t k, std::int64_t r) { return d.symbolic ? k == r : mod64(k - r, n) == 0; };
  std::vector<std::int64_t> generating;
  for (auto k0 : admissible)
    if (congruent(k0, 1) || congruent(k0, -1)) generating.push_back(congruent(k0, 1) ? 1 : -1);
  std::sort(generating.begin(), generating.end());
  generating.erase(std::unique(generating.begin(), generating.end()), generating.end());
  note("u' = c u^k0 and v' = d v^k0 generate only for k0 = +-1: k0 in " + set_string(generating),
       "generation of the algebra by u' and v'");

  for (auto k0 : generating)
    if (k0 == 1) d.surviving.push_back(1);
  note("k0 = -1 would identify alpha2 with conj(alpha1), excluded in the upper half torus: k0 in " +
           set_string(d.surviving),
       "upper half torus normalization");

  if (!d.surviving.empty()) {
    d.verdict = Verdict::Consistent;
    if (x1 != x2) throw IdentityFailure("k0 = 1 survived but alpha1 != alpha2");
    note("k0 = 1 and alpha1 = alpha2", "conclusion");
  } else {
    note("no admissible k0: the coefficient constraints admit no conjugacy", "conclusion");
  }
  return d;
}

bool truncated_solution_exists(const Alpha& alpha1, const Alpha& alpha2, std::int64_t bound) {
  const Scalar& x1 = alpha1.value;
  const Scalar& x2 = alpha2.value;
  auto side = 2 * bound + 1;
  for (std::int64_t k0 : {1}) {
    if (std::abs(k0) > bound) continue;
    // The rows d_(k,l) = 0 for l != k0 are eliminated first, leaving the
    // unknowns d_(k,k0). L(v') = u^k0 v' - alpha2 v' u^k0 with
    // (u^a v^b)(u^c v^e) = alpha1^(-bc) u^(a+c) v^(b+e) sends d_(k,l) to the
    // coefficient of u^(k+k0) v^l.
    std::int64_t out_bound = bound + std::abs(k0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * out_bound + 1, side);
    for (std::int64_t k = -bound; k <= bound; ++k) {
      auto row = k + k0 + out_bound, col = k + bound;
      m(row, col) += 1.0;
      m(row, col) -= (x2 * x1.pow(-k0 * k0)).to_complex();
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    lu.setThreshold(1e-9);
    if (lu.rank() < side) return true;
  }
  return false;
}

std::vector<SweepRow> conjugacy_sweep(std::int64_t order, const IntMatrix& a, const IntMatrix& b) {
  if (order < 1) throw PreconditionError("sweep order must be positive");
  std::vector<SweepRow> rows;
  for (std::int64_t s = 1; s < order; ++s)
    for (std::int64_t t = 1; t < order; ++t) {
      auto [a1, c1] = normalize_upper_half(make_alpha(order, s));
      auto [a2, c2] = normalize_upper_half(make_alpha(order, t));
      auto dec = decide_conjugacy(a1, a2, a, b);
      rows.push_back({order, s, t, c1, c2, dec.verdict, dec.k0_set});
    }
  return rows;
}

}  // namespace tga
