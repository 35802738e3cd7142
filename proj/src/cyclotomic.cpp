#include "tga/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {

namespace {

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den is monic
  std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  if (m < 1) throw PreconditionError("cyclotomic polynomial index must be positive");
  std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(std::int64_t n) {
  if (n != 0) terms_.emplace_back(Scalar::one(), n);
}

Cyclotomic::Cyclotomic(const Scalar& s, std::int64_t coefficient) {
  if (coefficient != 0) terms_.emplace_back(s, coefficient);
}

namespace {

std::vector<Cyclotomic::Term> merge(const std::vector<Cyclotomic::Term>& a, const std::vector<Cyclotomic::Term>& b,
                                    std::int64_t sign) {
  std::vector<Cyclotomic::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      std::int64_t c = a[i].second + sign * b[j].second;
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_terms(std::vector<Cyclotomic::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    Scalar s = terms[r].first;
    std::int64_t c = 0;
    while (r < terms.size() && terms[r].first == s) c += terms[r++].second;
    if (c != 0) terms[w++] = {s, c};
  }
  terms.resize(w);
}

}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r;
  r.terms_ = merge(terms_, o.terms_, 1);
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic r;
  r.terms_ = merge(terms_, o.terms_, -1);
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic r;
  if (terms_.empty() || o.terms_.empty()) return r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [s, c] : terms_) {
    for (const auto& [t, d] : o.terms_) r.terms_.emplace_back(s * t, c * d);
  }
  normalize_terms(r.terms_);
  return r;
}

Cyclotomic Cyclotomic::operator*(const Scalar& s) const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.first *= s;
  normalize_terms(r.terms_);
  return r;
}

Cyclotomic Cyclotomic::operator*(std::int64_t n) const {
  if (n == 0) return {};
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.second *= n;
  return r;
}

void Cyclotomic::add_term(const Scalar& s, std::int64_t c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, const Scalar& key) { return t.first < key; });
  if (it != terms_.end() && it->first == s) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {s, c});
  }
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_) t.first = t.first.conj();
  normalize_terms(r.terms_);
  return r;
}

Cyclotomic Cyclotomic::reduced() const {
  Cyclotomic out;
  // Terms are sorted with the symbolic part as the leading key, so each
  // symbolic class is a contiguous run.
  std::size_t r = 0;
  while (r < terms_.size()) {
    Scalar sym = terms_[r].first.symbolic_part();
    std::size_t end = r;
    std::int64_t order = 1;
    while (end < terms_.size() && terms_[end].first.symbolic_part() == sym) {
      order = std::lcm(order, terms_[end].first.denominator());
      ++end;
    }
    std::vector<std::int64_t> dense(static_cast<std::size_t>(order), 0);
    for (std::size_t i = r; i < end; ++i) {
      const Scalar& s = terms_[i].first;
      dense[static_cast<std::size_t>(s.numerator() * (order / s.denominator()))] += terms_[i].second;
    }
    const auto& phi = cyclotomic_polynomial(order);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = dense.size(); i-- > deg;) {
      std::int64_t c = dense[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) dense[i - deg + j] -= c * phi[j];
    }
    for (std::size_t j = 0; j < deg; ++j) {
      if (dense[j] != 0) out.terms_.emplace_back(Scalar::root_of_unity(order, static_cast<std::int64_t>(j)) * sym, dense[j]);
    }
    r = end;
  }
  normalize_terms(out.terms_);
  return out;
}

namespace {

using Sparse = std::map<std::int64_t, std::int64_t>;

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

// Zero test for sum_e c_e zeta_L^e. Non-squarefree L: Q(zeta_L) has basis
// 1, x, .., x^(s-1) over Q(zeta_r) with r = rad(L), s = L / r. Squarefree
// L = p m: Q(zeta_L) = Q(zeta_p) (x) Q(zeta_m), with basis 1, .., y^(p-2)
// of the first factor over the second.
bool sparse_is_zero(const Sparse& terms, std::int64_t order) {
  bool empty = true;
  for (const auto& [e, c] : terms) empty = empty && c == 0;
  if (empty) return true;
  if (order == 1) return false;
  std::int64_t rad = 1;
  for (std::int64_t n = order; n > 1;) {
    std::int64_t p = smallest_prime_factor(n);
    rad *= p;
    while (n % p == 0) n /= p;
  }
  if (rad != order) {
    std::int64_t s = order / rad;
    std::map<std::int64_t, Sparse> parts;
    for (const auto& [e, c] : terms) parts[e % s][e / s] += c;
    for (const auto& [j, part] : parts)
      if (!sparse_is_zero(part, rad)) return false;
    return true;
  }
  std::int64_t p = smallest_prime_factor(order);
  std::int64_t m = order / p;
  // 1/L = u/p + v/m with u m + v p = 1.
  std::int64_t u = 0;
  for (std::int64_t t = 0; t < p; ++t)
    if ((t * (m % p)) % p == 1) u = t;
  std::int64_t v = (1 - u * m) / p;
  std::vector<Sparse> parts(static_cast<std::size_t>(p));
  for (const auto& [e, c] : terms) {
    std::int64_t i = static_cast<std::int64_t>((static_cast<__int128>(e) * u) % p);
    std::int64_t k = static_cast<std::int64_t>(((static_cast<__int128>(e) * v) % m + m) % m);
    parts[static_cast<std::size_t>(i)][k] += c;
  }
  const Sparse& last = parts.back();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    Sparse diff = parts[i];
    for (const auto& [k, c] : last) diff[k] -= c;
    if (!sparse_is_zero(diff, m)) return false;
  }
  return true;
}

}  // namespace

bool Cyclotomic::is_zero() const {
  std::size_t r = 0;
  while (r < terms_.size()) {
    Scalar sym = terms_[r].first.symbolic_part();
    std::size_t end = r;
    std::int64_t order = 1;
    while (end < terms_.size() && terms_[end].first.symbolic_part() == sym) {
      order = lcm64(order, terms_[end].first.denominator());
      ++end;
    }
    Sparse dense;
    for (std::size_t i = r; i < end; ++i) {
      const Scalar& s = terms_[i].first;
      dense[s.numerator() * (order / s.denominator())] += terms_[i].second;
    }
    if (!sparse_is_zero(dense, order)) return false;
    r = end;
  }
  return true;
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  auto z = to_complex();
  auto n = static_cast<std::int64_t>(std::llround(z.real()));
  if ((*this - Cyclotomic(n)).is_zero()) return n;
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex(double t1, double t2) const {
  std::complex<double> z = 0.0;
  for (const auto& [s, c] : terms_) z += static_cast<double>(c) * s.to_complex(t1, t2);
  return z;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out << " + ";
    out << terms_[i].second << '*' << terms_[i].first.to_string();
  }
  return out.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  Cyclotomic out;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty coefficient");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto first = term.find_first_not_of(' ');
    auto last = term.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty term in coefficient '" + s + "'");
    term = term.substr(first, last - first + 1);
    if (term == "0") {
      // zero term
    } else {
      std::size_t star = term.find('*');
      std::int64_t c = 1;
      std::string scalar_part = term;
      if (star != std::string::npos) {
        std::string head = term.substr(0, star);
        std::size_t used = 0;
        try {
          c = std::stoll(head, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == head.size() && !head.empty()) {
          scalar_part = term.substr(star + 1);
        } else {
          c = 1;
        }
      } else {
        std::size_t used = 0;
        try {
          std::int64_t v = std::stoll(term, &used);
          if (used == term.size()) {
            out.add_term(Scalar::one(), v);
            if (next == std::string::npos) break;
            pos = next + 3;
            continue;
          }
        } catch (const std::exception&) {
        }
      }
      out.add_term(Scalar::parse(scalar_part), c);
    }
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

}  // namespace tga
