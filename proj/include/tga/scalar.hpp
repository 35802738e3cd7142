#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace tga {

/// Default numeric values used when a symbolic scalar has to be evaluated in
/// floating point. They only matter for numeric cross-checks.
inline constexpr double kDefaultT1 = 0.23606797749978969;  // sqrt(5) - 2
inline constexpr double kDefaultT2 = 0.41421356237309515;  // sqrt(2) - 1

/// A unit complex number with exact equality.
///
/// The value is exp(2 pi i r) * exp(pi i (h1 t1 + h2 t2)), where r = num/den is
/// a reduced fraction in [0, 1) and t1, t2 are formally independent
/// transcendental parameters. The formal parameters are
/// alpha1 = exp(2 pi i t1) and alpha2 = exp(2 pi i t2), so h1, h2 count
/// half-powers of alpha1 and alpha2.
///
/// A scalar with h1 = h2 = 0 is in root-of-unity mode; otherwise it is in
/// symbolic mode. Products of the two modes are well defined.
class Scalar {
 public:
  /// The identity.
  Scalar() = default;

  /// zeta_order^exponent.
  static Scalar root_of_unity(std::int64_t order, std::int64_t exponent);
  /// alpha1^(half1/2) * alpha2^(half2/2).
  static Scalar symbolic(std::int64_t half1, std::int64_t half2);
  static Scalar one() { return {}; }
  static Scalar minus_one() { return root_of_unity(2, 1); }

  Scalar operator*(const Scalar& other) const;
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  Scalar operator/(const Scalar& other) const { return *this * other.conj(); }
  Scalar conj() const;
  Scalar pow(std::int64_t n) const;

  bool is_one() const { return num_ == 0 && half1_ == 0 && half2_ == 0; }
  bool is_torsion() const { return half1_ == 0 && half2_ == 0; }
  bool is_symbolic() const { return !is_torsion(); }

  /// Multiplicative order; 0 when the scalar has infinite order.
  std::int64_t order() const { return is_torsion() ? den_ : 0; }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  std::int64_t half_exponent1() const { return half1_; }
  std::int64_t half_exponent2() const { return half2_; }

  /// The part of the scalar that lives in the formal parameters.
  Scalar symbolic_part() const { return symbolic(half1_, half2_); }
  /// The root-of-unity part.
  Scalar torsion_part() const { return root_of_unity(den_, num_); }

  std::complex<double> to_complex(double t1 = kDefaultT1, double t2 = kDefaultT2) const;

  /// "zeta(d)^e", "alpha1^p*alpha2^q" or a product of both; exponents of the
  /// formal parameters may be halves ("alpha1^3/2").
  std::string to_string() const;
  static Scalar parse(std::string_view text);

  friend auto operator<=>(const Scalar&, const Scalar&) = default;
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  // Member order fixes the total order used by sorted containers: symbolic
  // part first, then the root of unity.
  std::int64_t half1_ = 0;
  std::int64_t half2_ = 0;
  std::int64_t den_ = 1;
  std::int64_t num_ = 0;
};

/// Exponent e with s = zeta_modulus^e, 0 <= e < modulus. Throws
/// UnsupportedError if s is not a modulus-th root of unity.
std::int64_t exponent_in(const Scalar& s, std::int64_t modulus);

/// True iff the rotation angle lies in [0, 1/2] (root-of-unity mode). Symbolic
/// scalars are taken as normalized.
bool in_upper_half_torus(const Scalar& s);

/// A rotation parameter together with its fixed square root.
///
/// alpha^(1/2) is ambiguous for roots of unity; it is fixed once, at
/// construction, and every half-integer power goes through `root`.
struct Alpha {
  Scalar value;
  Scalar root;

  /// Order of the root, 0 if infinite.
  std::int64_t root_order() const { return root.order(); }
  friend bool operator==(const Alpha&, const Alpha&) = default;
};

/// alpha = zeta_N^k, with root zeta_{2N}^k. Requires N >= 1.
Alpha make_alpha(std::int64_t order, std::int64_t k);

/// alpha = alpha1^p * alpha2^q, with root alpha1^(p/2) * alpha2^(q/2).
Alpha symbolic_alpha(std::int64_t p, std::int64_t q);

/// (alpha^(1/2))^m.
inline Scalar half_power(const Alpha& alpha, std::int64_t m) { return alpha.root.pow(m); }

/// "N:k" builds make_alpha(N, k); anything else is read with the scalar
/// grammar and its canonical square root (half the angle, or half the
/// symbolic exponents) is used.
Alpha parse_alpha(std::string_view text);
std::string alpha_to_string(const Alpha& alpha);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Mathematical modulus in [0, m).
std::int64_t mod64(std::int64_t a, std::int64_t m);

}  // namespace tga

template <>
struct std::hash<tga::Scalar> {
  std::size_t operator()(const tga::Scalar& s) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(s.numerator());
    h = h * 1000003u ^ std::hash<std::int64_t>{}(s.denominator());
    h = h * 1000003u ^ std::hash<std::int64_t>{}(s.half_exponent1());
    h = h * 1000003u ^ std::hash<std::int64_t>{}(s.half_exponent2());
    return h;
  }
};
