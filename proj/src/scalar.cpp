#include "tga/scalar.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(mod64(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m), m));
}

}  // namespace

Scalar Scalar::root_of_unity(std::int64_t order, std::int64_t exponent) {
  if (order < 1) throw PreconditionError("root of unity order must be positive");
  Scalar s;
  std::int64_t e = mod64(exponent, order);
  std::int64_t g = std::gcd(e, order);
  if (e == 0) {
    s.den_ = 1;
    s.num_ = 0;
  } else {
    s.den_ = order / g;
    s.num_ = e / g;
  }
  return s;
}

Scalar Scalar::symbolic(std::int64_t half1, std::int64_t half2) {
  Scalar s;
  s.half1_ = half1;
  s.half2_ = half2;
  return s;
}

Scalar Scalar::operator*(const Scalar& other) const {
  Scalar s;
  s.half1_ = half1_ + other.half1_;
  s.half2_ = half2_ + other.half2_;
  if (den_ == other.den_) {
    std::int64_t e = num_ + other.num_;
    if (e >= den_) e -= den_;
    Scalar t = root_of_unity(den_, e);
    s.den_ = t.den_;
    s.num_ = t.num_;
    return s;
  }
  std::int64_t l = std::lcm(den_, other.den_);
  Scalar t = root_of_unity(l, num_ * (l / den_) + other.num_ * (l / other.den_));
  s.den_ = t.den_;
  s.num_ = t.num_;
  return s;
}

Scalar Scalar::conj() const {
  Scalar s;
  s.half1_ = -half1_;
  s.half2_ = -half2_;
  s.den_ = den_;
  s.num_ = num_ == 0 ? 0 : den_ - num_;
  return s;
}

Scalar Scalar::pow(std::int64_t n) const {
  Scalar s = root_of_unity(den_, mulmod(num_, mod64(n, den_), den_));
  s.half1_ = half1_ * n;
  s.half2_ = half2_ * n;
  return s;
}

std::complex<double> Scalar::to_complex(double t1, double t2) const {
  // Reduce the angle before multiplying by 2 pi to keep full precision.
  double turns = static_cast<double>(num_) / static_cast<double>(den_);
  double sym = 0.5 * (static_cast<double>(half1_) * t1 + static_cast<double>(half2_) * t2);
  sym -= std::floor(sym);
  double angle = 2.0 * std::numbers::pi * (turns + sym);
  return std::polar(1.0, angle);
}

namespace {

std::string half_exponent_text(std::int64_t half) {
  if (half % 2 == 0) return std::to_string(half / 2);
  return std::to_string(half) + "/2";
}

}  // namespace

std::string Scalar::to_string() const {
  std::ostringstream out;
  bool any = false;
  if (!is_torsion() && num_ == 0) {
    // pure symbolic: the torsion factor is omitted
  } else {
    out << "zeta(" << den_ << ")^" << num_;
    any = true;
  }
  if (half1_ != 0) {
    if (any) out << '*';
    out << "alpha1^" << half_exponent_text(half1_);
    any = true;
  }
  if (half2_ != 0) {
    if (any) out << '*';
    out << "alpha2^" << half_exponent_text(half2_);
  }
  return out.str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  bool consume(std::string_view token) {
    skip_spaces();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }
  std::int64_t integer() {
    skip_spaces();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }
  /// Integer or "n/2", returned in halves.
  std::int64_t half_integer() {
    std::int64_t v = integer();
    if (consume("/")) {
      std::int64_t d = integer();
      if (d != 2) fail("only halves are supported as fractional exponents");
      return v;
    }
    return 2 * v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty input");
  Scalar result;
  do {
    if (cur.consume("zeta(")) {
      std::int64_t d = cur.integer();
      if (d < 1) cur.fail("order must be positive");
      cur.expect(")");
      std::int64_t e = 1;
      if (cur.consume("^")) e = cur.integer();
      result *= root_of_unity(d, e);
    } else if (cur.consume("alpha1")) {
      std::int64_t h = 2;
      if (cur.consume("^")) h = cur.half_integer();
      result *= symbolic(h, 0);
    } else if (cur.consume("alpha2")) {
      std::int64_t h = 2;
      if (cur.consume("^")) h = cur.half_integer();
      result *= symbolic(0, h);
    } else if (cur.consume("-1")) {
      result *= minus_one();
    } else if (cur.consume("1")) {
      // identity factor
    } else {
      cur.fail("unknown factor");
    }
  } while (cur.consume("*"));
  if (!cur.done()) cur.fail("trailing characters");
  return result;
}

std::int64_t exponent_in(const Scalar& s, std::int64_t modulus) {
  if (!s.is_torsion()) {
    throw UnsupportedError("scalar " + s.to_string() + " is not a root of unity");
  }
  if (modulus % s.denominator() != 0) {
    throw UnsupportedError("scalar " + s.to_string() + " is not a " + std::to_string(modulus) +
                           "-th root of unity");
  }
  return s.numerator() * (modulus / s.denominator());
}

bool in_upper_half_torus(const Scalar& s) {
  if (!s.is_torsion()) return true;
  return 2 * s.numerator() <= s.denominator();
}

Alpha make_alpha(std::int64_t order, std::int64_t k) {
  if (order < 1) throw PreconditionError("make_alpha: order must be >= 1");
  return Alpha{Scalar::root_of_unity(order, k), Scalar::root_of_unity(2 * order, k)};
}

Alpha symbolic_alpha(std::int64_t p, std::int64_t q) {
  return Alpha{Scalar::symbolic(2 * p, 2 * q), Scalar::symbolic(p, q)};
}

Alpha parse_alpha(std::string_view text) {
  auto colon = text.find(':');
  if (colon != std::string_view::npos && text.find('(') == std::string_view::npos) {
    std::int64_t n = 0;
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(std::string(text.substr(0, colon)), &used);
      if (used != colon) throw ParseError("bad order");
      std::string rest(text.substr(colon + 1));
      k = std::stoll(rest, &used);
      if (used != rest.size()) throw ParseError("bad exponent");
    } catch (const std::exception&) {
      throw ParseError("cannot parse alpha descriptor '" + std::string(text) + "', expected N:k");
    }
    if (n < 1) throw ParseError("alpha descriptor '" + std::string(text) + "': order must be >= 1");
    return make_alpha(n, k);
  }
  Scalar value = Scalar::parse(text);
  if (value.half_exponent1() % 2 != 0 || value.half_exponent2() % 2 != 0) {
    throw ParseError("alpha '" + std::string(text) + "' must have integer symbolic exponents");
  }
  Scalar root = Scalar::root_of_unity(2 * value.denominator(), value.numerator()) *
                Scalar::symbolic(value.half_exponent1() / 2, value.half_exponent2() / 2);
  return Alpha{value, root};
}

std::string alpha_to_string(const Alpha& alpha) {
  return alpha.value.to_string() + " (root " + alpha.root.to_string() + ")";
}

}  // namespace tga
