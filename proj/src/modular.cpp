#include "tga/modular.hpp"

#include <deque>

#include "tga/errors.hpp"
#include "tga/scalar.hpp"

namespace tga {

std::vector<std::pair<std::int64_t, std::int64_t>> prime_power_factors(std::int64_t n) {
  if (n < 1) throw PreconditionError("factorization needs a positive integer");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::int64_t pe = 1;
    while (n % p == 0) {
      n /= p;
      pe *= p;
    }
    out.emplace_back(p, pe);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = mod64(a, m), y = 1;
  while (r != 0) {
    std::int64_t t = g / r;
    std::int64_t tmp = g - t * r;
    g = r;
    r = tmp;
    tmp = x - t * y;
    x = y;
    y = tmp;
  }
  if (g != 1) throw PreconditionError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod64(x, m);
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

class LocalHowell {
 public:
  LocalHowell(std::size_t width, std::int64_t p, std::int64_t pe) : width_(width), p_(p), pe_(pe), basis_(width) {}

  void insert(std::vector<std::int64_t> row) {
    std::deque<std::vector<std::int64_t>> queue;
    queue.push_back(std::move(row));
    while (!queue.empty()) {
      std::vector<std::int64_t> r = std::move(queue.front());
      queue.pop_front();
      for (std::size_t c = 0; c < width_; ++c) {
        if (r[c] == 0) continue;
        auto& slot = basis_[c];
        if (slot.empty()) {
          normalize(r, c);
          add_multiple(r, c, queue);
          slot = std::move(r);
          break;
        }
        std::int64_t pivot = slot[c];
        if (valuation(r[c]) < valuation(pivot)) {
          normalize(r, c);
          add_multiple(r, c, queue);
          std::swap(slot, r);
          pivot = slot[c];
        }
        std::int64_t f = r[c] / pivot;
        for (std::size_t j = c; j < width_; ++j) r[j] = mod64(r[j] - mulmod(f, slot[j], pe_), pe_);
      }
    }
  }

  bool consistent() const { return basis_.back().empty(); }

  std::vector<std::int64_t> back_substitute() const {
    std::size_t n = width_ - 1;
    std::vector<std::int64_t> z(n, 0);
    for (std::size_t c = n; c-- > 0;) {
      const auto& row = basis_[c];
      if (row.empty()) continue;
      std::int64_t s = row[n];
      for (std::size_t j = c + 1; j < n; ++j) s = mod64(s - mulmod(row[j], z[j], pe_), pe_);
      if (s % row[c] != 0) throw IdentityFailure("Howell back-substitution hit a non-divisible pivot");
      z[c] = s / row[c];
    }
    return z;
  }

 private:
  std::int64_t valuation(std::int64_t x) const {
    std::int64_t v = 0;
    while (x % p_ == 0 && x != 0) {
      x /= p_;
      ++v;
    }
    return v;
  }

  void normalize(std::vector<std::int64_t>& r, std::size_t c) const {
    std::int64_t x = r[c];
    std::int64_t pv = 1;
    while (x % p_ == 0) {
      x /= p_;
      pv *= p_;
    }
    std::int64_t u = inverse_mod(x, pe_);
    for (std::size_t j = c; j < width_; ++j) r[j] = mulmod(r[j], u, pe_);
    r[c] = pv;
  }

  void add_multiple(const std::vector<std::int64_t>& r, std::size_t c, std::deque<std::vector<std::int64_t>>& queue) const {
    std::int64_t scale = pe_ / r[c];
    if (scale == 1 || scale == pe_) return;
    std::vector<std::int64_t> m(width_, 0);
    bool nonzero = false;
    for (std::size_t j = c + 1; j < width_; ++j) {
      m[j] = mulmod(r[j], scale, pe_);
      nonzero = nonzero || m[j] != 0;
    }
    if (nonzero) queue.push_back(std::move(m));
  }

  std::size_t width_;
  std::int64_t p_;
  std::int64_t pe_;
  std::vector<std::vector<std::int64_t>> basis_;
};

}  // namespace

std::optional<std::vector<std::int64_t>> solve_mod(const std::vector<std::vector<std::int64_t>>& a,
                                                   const std::vector<std::int64_t>& b, std::size_t unknowns,
                                                   std::int64_t modulus) {
  if (a.size() != b.size()) throw MismatchError("solve_mod: row count and right-hand side differ");
  if (modulus < 1) throw PreconditionError("solve_mod: modulus must be positive");
  std::vector<std::int64_t> z(unknowns, 0);
  if (modulus == 1) return z;
  std::int64_t glued = 1;
  for (auto [p, pe] : prime_power_factors(modulus)) {
    LocalHowell basis(unknowns + 1, p, pe);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != unknowns) throw MismatchError("solve_mod: ragged row");
      std::vector<std::int64_t> row(unknowns + 1);
      for (std::size_t j = 0; j < unknowns; ++j) row[j] = mod64(a[i][j], pe);
      row[unknowns] = mod64(b[i], pe);
      basis.insert(std::move(row));
      if (!basis.consistent()) return std::nullopt;
    }
    auto local = basis.back_substitute();
    // z = z mod glued, local mod pe  ->  mod glued * pe
    std::int64_t inv = inverse_mod(glued % pe, pe);
    for (std::size_t j = 0; j < unknowns; ++j) {
      std::int64_t t = mulmod(mod64(local[j] - z[j], pe), inv, pe);
      z[j] = z[j] + glued * t;
    }
    glued *= pe;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    __int128 s = 0;
    for (std::size_t j = 0; j < unknowns; ++j) s += static_cast<__int128>(a[i][j]) * z[j];
    if (mod64(static_cast<std::int64_t>(s % modulus), modulus) != mod64(b[i], modulus)) {
      throw IdentityFailure("solve_mod produced a vector that fails equation " + std::to_string(i));
    }
  }
  return z;
}

}  // namespace tga
