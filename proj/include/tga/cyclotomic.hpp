#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tga/scalar.hpp"

namespace tga {

/// Integer coefficients of the M-th cyclotomic polynomial, lowest degree
/// first. Results are cached; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

/// A finite integer combination sum_j c_j s_j of Scalars.
///
/// Stored as an element of the integral group ring of the scalar group. The
/// zero test works per symbolic class and splits Q(zeta_L) into a tensor
/// product over the prime factors of L, so equality is exact and stays sparse
/// for large L (1 + zeta(2)^1 == 0; 1 + zeta(3)^1 + zeta(3)^2 == 0).
class Cyclotomic {
 public:
  using Term = std::pair<Scalar, std::int64_t>;

  Cyclotomic() = default;
  Cyclotomic(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Scalar& s, std::int64_t coefficient = 1);  // NOLINT(google-explicit-constructor)

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Scalar& s) const;
  Cyclotomic operator*(std::int64_t n) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Adds c * s in place.
  void add_term(const Scalar& s, std::int64_t c);

  Cyclotomic conj() const;

  /// True iff the combination is empty as a formal sum (cheap, not exact).
  bool is_formally_zero() const { return terms_.empty(); }
  /// Exact zero test.
  bool is_zero() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  /// Canonical representative: per symbolic class, powers zeta_L^j with
  /// j < phi(L), where L is the lcm of the orders present. Dense in L.
  Cyclotomic reduced() const;

  /// The integer value, when the element is an integer.
  std::optional<std::int64_t> as_integer() const;

  std::complex<double> to_complex(double t1 = kDefaultT1, double t2 = kDefaultT2) const;

  const std::vector<Term>& terms() const { return terms_; }

  /// "3*zeta(4)^1 + -1*zeta(1)^0"; "0" for the empty sum.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

 private:
  std::vector<Term> terms_;  // sorted by scalar, no zero coefficients
};

inline Cyclotomic operator*(const Scalar& s, const Cyclotomic& c) { return c * s; }

}  // namespace tga
