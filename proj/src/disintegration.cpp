#include "tga/disintegration.hpp"

#include <random>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/parallel.hpp"

namespace tga {

namespace {

GroupElement concat(const GroupElement& a, const GroupElement& g) {
  GroupElement out = a;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g[i]);
  return out;
}

}  // namespace

CentralExtension::CentralExtension(AbelianGroupPtr a, FiniteGroupPtr g, Cocycle nu,
                                   std::vector<GroupElement> g_generators, std::string label,
                                   const VerificationPolicy& policy)
    : a_(std::move(a)), g_(std::move(g)), nu_(std::move(nu)), g_generators_(std::move(g_generators)),
      label_(std::move(label)) {
  GroupElement eg = g_->identity();
  if (nu_(eg, eg) != a_->identity()) throw PreconditionError("central extension needs a normalized cocycle");
  auto identity_holds = [this](const GroupElement& x, const GroupElement& y, const GroupElement& z) {
    GroupElement lhs = a_->multiply(nu_(x, y), nu_(g_->multiply(x, y), z));
    GroupElement rhs = a_->multiply(nu_(y, z), nu_(x, g_->multiply(y, z)));
    if (lhs != rhs) {
      throw IdentityFailure("A-valued cocycle identity fails at g=" + x.to_string() + " h=" + y.to_string() +
                            " k=" + z.to_string());
    }
  };
  auto n = static_cast<std::uint64_t>(g_->order());
  if (n * n * n <= policy.exhaustive_limit) {
    for (const auto& x : g_->elements())
      for (const auto& y : g_->elements())
        for (const auto& z : g_->elements()) identity_holds(x, y, z);
  } else {
    std::mt19937_64 rng(policy.seed);
    for (std::uint64_t s = 0; s < policy.samples; ++s) {
      GroupElement x = g_->sample(rng), y = g_->sample(rng), z = g_->sample(rng);
      identity_holds(x, y, z);
    }
  }
  if (g_generators_.empty()) g_generators_ = g_->elements();
  std::vector<GroupElement> elems;
  elems.reserve(a_->order() * g_->order());
  for (const auto& x : a_->elements())
    for (const auto& y : g_->elements()) elems.push_back(concat(x, y));
  set_elements(std::move(elems));
}

GroupElement CentralExtension::make(const GroupElement& a, const GroupElement& g) const { return concat(a, g); }

GroupElement CentralExtension::central_part(const GroupElement& x) const {
  return GroupElement(x.slice(0, a_->rank()));
}

GroupElement CentralExtension::quotient_part(const GroupElement& x) const {
  return GroupElement(x.slice(a_->rank(), x.size() - a_->rank()));
}

std::vector<GroupElement> CentralExtension::generators() const {
  std::vector<GroupElement> out;
  GroupElement eg = g_->identity();
  for (std::size_t i = 0; i < a_->rank(); ++i) {
    std::vector<std::int64_t> unit(a_->rank(), 0);
    unit[i] = 1;
    out.push_back(make(a_->make(unit), eg));
  }
  for (const auto& g : g_generators_) out.push_back(make(a_->identity(), g));
  return out;
}

GroupElement CentralExtension::identity() const { return make(a_->identity(), g_->identity()); }

GroupElement CentralExtension::multiply(const GroupElement& x, const GroupElement& y) const {
  GroupElement g1 = quotient_part(x), g2 = quotient_part(y);
  GroupElement a = a_->multiply(a_->multiply(central_part(x), central_part(y)), nu_(g1, g2));
  return make(a, g_->multiply(g1, g2));
}

GroupElement CentralExtension::inverse(const GroupElement& x) const {
  GroupElement g = quotient_part(x), gi = g_->inverse(g);
  return make(a_->multiply(a_->inverse(central_part(x)), a_->inverse(nu_(g, gi))), gi);
}

ExtensionPtr heisenberg(std::int64_t m) {
  if (m < 1) throw PreconditionError("Heisenberg modulus must be positive");
  auto a = AbelianGroup::power(m, 1);
  auto g = AbelianGroup::power(m, 2);
  const AbelianGroup* ap = a.get();
  auto nu = [ap](const GroupElement& x, const GroupElement& y) {
    return ap->make({static_cast<std::int64_t>(x[0]) * y[1]});
  };
  return std::make_shared<const CentralExtension>(a, g, nu, std::vector<GroupElement>{g->make({1, 0}), g->make({0, 1})},
                                                  "heisenberg(" + std::to_string(m) + ")");
}

Scalar Character::operator()(const GroupElement& a) const {
  Scalar s;
  for (std::size_t i = 0; i < moduli.size(); ++i) s *= Scalar::root_of_unity(moduli[i], mod64(exponents[i] * a[i], moduli[i]));
  return s;
}

bool Character::is_trivial() const {
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (mod64(exponents[i], moduli[i]) != 0) return false;
  return true;
}

std::string Character::to_string() const {
  std::ostringstream out;
  out << "chi(";
  for (std::size_t i = 0; i < exponents.size(); ++i) out << (i ? "," : "") << exponents[i];
  out << ')';
  return out.str();
}

std::vector<Character> characters(const AbelianGroup& a) {
  std::vector<Character> out;
  for (const auto& e : a.elements()) out.push_back({e.to_vector(), a.moduli()});
  return out;
}

Cyclotomic tau_alpha(const Character& chi, const CentralExtension& ext, const AlgebraElement& x) {
  Cyclotomic t;
  GroupElement eg = ext.quotient().identity();
  for (const auto& [g, c] : x.terms())
    if (ext.quotient_part(g) == eg) t += c * Cyclotomic(chi(ext.central_part(g)));
  return t;
}

TwoCocycle scalar_cocycle(ExtensionPtr ext, const Character& chi) {
  std::int64_t order = 1;
  for (auto m : chi.moduli) order = lcm64(order, m);
  const CentralExtension* e = ext.get();
  return TwoCocycle(
      ext->quotient_ptr(), [ext, e, chi](const GroupElement& g, const GroupElement& h) { return chi(e->nu(g, h)); },
      order, "nu_" + chi.to_string());
}

ProjectiveRep block_rep(ExtensionPtr ext, const Character& chi) {
  ProjectiveRep lambda = regular_rep(ext->quotient_ptr(), scalar_cocycle(ext, chi));
  const CentralExtension* e = ext.get();
  auto map = [ext, e, chi, lambda](const GroupElement& x) {
    return lambda(e->quotient_part(x)) * chi(e->central_part(x));
  };
  std::size_t dim = ext->quotient().order();
  auto mu = trivial_cocycle(ext);
  return ProjectiveRep(std::move(ext), std::move(mu), dim, map, "pi_" + chi.to_string());
}

CoeffMatrix theta_map(const CentralExtension& ext) {
  auto chars = characters(ext.central());
  std::size_t ng = ext.quotient().order(), n = ext.order();
  CoeffMatrix theta(chars.size() * ng, n);
  for (std::size_t col = 0; col < n; ++col) {
    const GroupElement& x = ext.element(col);
    std::size_t ig = ext.quotient().index_of(ext.quotient_part(x));
    GroupElement a = ext.central_part(x);
    for (std::size_t c = 0; c < chars.size(); ++c) theta.add(c * ng + ig, col, Cyclotomic(chars[c](a)));
  }
  return theta;
}

bool DisintegrationReport::ok() const {
  bool blocks_ok = true;
  for (const auto& b : blocks) blocks_ok = blocks_ok && b.matches_clock_shift;
  return unitary && intertwines && dimensions && trace_identity && blocks_ok;
}

DisintegrationReport disintegrate(ExtensionPtr ext, std::int64_t heisenberg_m) {
  DisintegrationReport r;
  auto chars = characters(ext->central());
  auto na = static_cast<std::int64_t>(ext->central().order());
  const FiniteGroup& g = ext->quotient();
  auto note = [&r](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };

  CoeffMatrix theta = theta_map(*ext);
  r.unitary = theta.adjoint() * theta == CoeffMatrix::identity(ext->order()) * Cyclotomic(na);
  if (!r.unitary) note("theta^* theta != |A| I");

  std::vector<ProjectiveRep> reps;
  for (const auto& chi : chars) reps.push_back(block_rep(ext, chi));
  auto rho = regular_rep(ext, trivial_cocycle(ext));
  r.intertwines = true;
  for (const auto& x : ext->generators()) {
    std::vector<MonomialMatrix> blocks;
    for (const auto& p : reps) blocks.push_back(p(x));
    if (!(theta * rho(x) == direct_sum(blocks) * theta)) {
      r.intertwines = false;
      note("theta rho(x) != (+) pi_chi(x) theta at x=" + x.to_string());
    }
  }

  std::size_t total = 0;
  for (const auto& p : reps) total += p.dim();
  r.dimensions = total == ext->order();

  auto alg = make_algebra(trivial_cocycle(ext));
  r.trace_identity = true;
  for (const auto& x : ext->elements()) {
    auto b = AlgebraElement::basis(alg, x);
    Cyclotomic sum;
    for (const auto& chi : chars) sum += tau_alpha(chi, *ext, b);
    if (!(b.trace() * Cyclotomic(na) - sum).is_zero()) {
      r.trace_identity = false;
      note("|A| tau(x) != sum_chi tau_chi(x) at x=" + x.to_string());
    }
  }

  r.blocks.resize(chars.size());
  std::vector<std::string> block_witness(chars.size());
  parallel_for(chars.size(), [&](std::size_t c) {
    BlockReport& b = r.blocks[c];
    b.character = chars[c];
    b.dim = reps[c].dim();
    auto nu = scalar_cocycle(ext, chars[c]);
    b.commutative = true;
    for (const auto& x : g.elements())
      for (const auto& y : g.elements())
        if (nu(x, y) != nu(y, x) || g.multiply(x, y) != g.multiply(y, x)) b.commutative = false;
    if (heisenberg_m <= 0) {
      for (const auto& x : g.elements())
        b.trace_table.push_back(reps[c](ext->make(ext->central().identity(), x)).trace().to_string());
      return;
    }
    std::int64_t m = heisenberg_m;
    const auto& a = ext->central();
    Scalar beta = chars[c](a.make({1}));
    std::int64_t d = beta.order();
    MonomialMatrix u = reps[c](ext->make(a.identity(), g.element(g.index_of(GroupElement{1, 0})))),
                   v = reps[c](ext->make(a.identity(), g.element(g.index_of(GroupElement{0, 1}))));
    CoeffMatrix proj(b.dim, b.dim);
    for (std::int64_t i = 0; i < m / d; ++i)
      for (std::int64_t j = 0; j < m / d; ++j) proj = proj + CoeffMatrix::from_monomial(u.pow(d * i) * v.pow(d * j));
    auto cs = clock_shift(beta, static_cast<std::size_t>(d));
    std::int64_t copies = (m / d) * (m / d);
    for (std::int64_t k = 0; k < d; ++k)
      for (std::int64_t l = 0; l < d; ++l) {
        Cyclotomic t = (proj * (u.pow(k) * v.pow(l))).trace();
        Cyclotomic expected = (cs.u.pow(k) * cs.v.pow(l)).trace() * Cyclotomic(copies * d);
        if (!(t - expected).is_zero()) {
          if (b.matches_clock_shift) {
            block_witness[c] = "block " + chars[c].to_string() + ": compressed trace of u^" + std::to_string(k) +
                               " v^" + std::to_string(l) + " differs from the clock-shift trace";
          }
          b.matches_clock_shift = false;
        }
        auto ti = t.as_integer();
        b.trace_table.push_back(ti && *ti % copies == 0 ? std::to_string(*ti / copies)
                                                        : "(" + t.to_string() + ")/" + std::to_string(copies));
      }
  });
  for (const auto& w : block_witness)
    if (!w.empty()) note(w);
  return r;
}

}  // namespace tga
