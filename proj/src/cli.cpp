#include "tga/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "tga/action.hpp"
#include "tga/cocycle.hpp"
#include "tga/conjugacy.hpp"
#include "tga/disintegration.hpp"
#include "tga/parallel.hpp"
#include "tga/rigidity.hpp"
#include "tga/twisted_algebra.hpp"

namespace tga {

namespace {

struct Outcome {
  Json results = Json::object();
  bool passed = true;
  std::string witness;
};

using Handler = std::function<Outcome(const Json& params, const ExperimentConfig& config)>;

struct Command {
  std::string routine;
  Handler handler;
};

const Json& field(const Json& p, const char* key) {
  if (!p.is_object() || !p.contains(key)) throw ConfigError(std::string("missing parameter '") + key + "'");
  return p.at(key);
}

template <typename T>
T get(const Json& p, const char* key) {
  try {
    return field(p, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("parameter '") + key + "' has the wrong type");
  }
}

template <typename T>
T get_or(const Json& p, const char* key, T fallback) {
  if (!p.is_object() || !p.contains(key)) return fallback;
  return get<T>(p, key);
}

std::int64_t positive(const Json& p, const char* key, std::int64_t lo = 1) {
  auto v = get<std::int64_t>(p, key);
  if (v < lo) throw ConfigError(std::string("parameter '") + key + "' must be at least " + std::to_string(lo));
  return v;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw ConfigError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw ConfigError("bad integer '" + item + "'");
    }
  }
  return out;
}

Alpha alpha_param(const Json& p, const char* key) {
  const Json& v = field(p, key);
  if (!v.is_string()) throw ConfigError(std::string("parameter '") + key + "' must be a string such as \"4:1\"");
  return parse_alpha(v.get<std::string>());
}

Alpha cocycle_alpha(const Json& d) {
  if (d.contains("alpha")) return alpha_param(d, "alpha");
  return make_alpha(positive(d, "alphaOrder"), get<std::int64_t>(d, "alphaExp"));
}

std::vector<std::string> to_strings(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::vector<std::int64_t> element_coords(const Json& j) {
  if (j.is_string()) return parse_ints(j.get<std::string>());
  try {
    return j.get<std::vector<std::int64_t>>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("group element must be an integer array");
  }
}

MatrixGroupPtr gamma_param(const Json& p, std::int64_t q) {
  if (!p.contains("gamma")) return sl2_mod(q);
  const Json& g = p.at("gamma");
  if (g.is_string() && g.get<std::string>() == "sl2mod") return sl2_mod(q);
  return matrix_group_mod(q, parse_matrix_list(g));
}

FiniteGroupPtr group_from(const Json& d) {
  auto kind = get<std::string>(d, "kind");
  if (kind == "abelian") {
    auto moduli = get<std::vector<std::int64_t>>(d, "moduli");
    if (moduli.empty()) throw ConfigError("abelian group needs at least one modulus");
    for (auto m : moduli)
      if (m < 1) throw ConfigError("abelian moduli must be positive");
    return std::make_shared<const AbelianGroup>(moduli);
  }
  if (kind == "sl2mod") return sl2_mod(positive(d, "q", 2));
  if (kind == "semidirect") {
    auto q = positive(d, "q", 2);
    return std::make_shared<const SemidirectProduct>(AbelianGroup::power(q, 2), gamma_param(d, q));
  }
  if (kind == "table") {
    auto n = static_cast<std::size_t>(positive(d, "n"));
    return std::make_shared<const TableGroup>(n, get<std::vector<std::size_t>>(d, "table"));
  }
  throw ConfigError("unknown group kind '" + kind + "'");
}

TwoCocycle cocycle_from(const Json& d, std::uint64_t seed) {
  auto type = get<std::string>(d, "type");
  if (type == "symplectic") {
    auto n = static_cast<std::size_t>(get_or<std::int64_t>(d, "n", 1));
    return symplectic_cocycle(cocycle_alpha(d), n, positive(d, "q"));
  }
  if (type == "semidirect") {
    auto q = positive(d, "q", 2);
    return extend_to_semidirect(symplectic_cocycle_on(cocycle_alpha(d), AbelianGroup::power(q, 2)), gamma_param(d, q));
  }
  auto group = group_from(field(d, "group"));
  if (type == "trivial") return trivial_cocycle(group);
  auto m = positive(d, "order");
  if (type == "coboundary") {
    std::mt19937_64 rng(get_or<std::uint64_t>(d, "seed", seed));
    return random_coboundary(group, m, rng).first;
  }
  if (type == "table") {
    std::size_t n = group->order();
    std::vector<Scalar> values(n * n);
    for (const auto& entry : field(d, "values")) {
      auto t = entry.get<std::vector<std::int64_t>>();
      if (t.size() != 3 || t[0] < 0 || t[1] < 0 || static_cast<std::size_t>(t[0]) >= n ||
          static_cast<std::size_t>(t[1]) >= n) {
        throw ConfigError("table entries are [g, h, exponent] with element indices");
      }
      values[static_cast<std::size_t>(t[0]) * n + static_cast<std::size_t>(t[1])] = Scalar::root_of_unity(m, t[2]);
    }
    return table_cocycle(group, std::move(values), m);
  }
  throw ConfigError("unknown cocycle type '" + type + "'");
}

FiniteGroupPtr finite_group_of(const TwoCocycle& mu) {
  auto g = std::dynamic_pointer_cast<const FiniteGroup>(mu.group_ptr());
  if (!g) throw ConfigError("the cocycle must live on a finite group");
  return g;
}

std::vector<GroupElement> subgroup_param(const Json& p, const FiniteGroupPtr& g) {
  if (!p.contains("subgroup")) return g->elements();
  std::vector<GroupElement> gens;
  for (const auto& e : p.at("subgroup")) {
    auto coords = element_coords(e);
    gens.push_back(GroupElement(std::span<const std::int64_t>(coords)));
    if (!g->contains(gens.back())) throw ConfigError("subgroup generator " + gens.back().to_string() + " is not in the group");
  }
  return generated_subgroup(g, gens)->elements();
}

Outcome scalars_check(const Json& p, const ExperimentConfig&) {
  Outcome o;
  Alpha a = alpha_param(p, "alpha");
  std::int64_t span = a.value.is_torsion() ? 4 * std::max<std::int64_t>(a.value.order(), 1) : 8;
  bool additive = true;
  for (std::int64_t m = -span; m <= span && additive; ++m)
    for (std::int64_t k = -span; k <= span; ++k)
      if (half_power(a, m) * half_power(a, k) != half_power(a, m + k)) {
        additive = false;
        o.witness = "half_power(alpha, " + std::to_string(m) + ") * half_power(alpha, " + std::to_string(k) +
                    ") != half_power(alpha, " + std::to_string(m + k) + ")";
        break;
      }
  bool squares = a.root * a.root == a.value;
  if (!squares) o.witness = "root^2 != alpha";
  o.results = {{"value", a.value.to_string()},
               {"root", a.root.to_string()},
               {"order", a.value.order()},
               {"rootOrder", a.root_order()},
               {"symbolic", a.value.is_symbolic()},
               {"upperHalf", in_upper_half_torus(a.value)},
               {"halfPowerAdditive", additive},
               {"rootSquares", squares}};
  if (p.contains("power")) o.results["power"] = a.value.pow(get<std::int64_t>(p, "power")).to_string();
  o.passed = additive && squares;
  return o;
}

Outcome cocycle_verify(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto mu = cocycle_from(field(p, "cocycle"), c.seed);
  VerificationPolicy policy;
  policy.seed = c.seed;
  policy.samples = get_or<std::uint64_t>(p, "samples", policy.samples);
  auto r = verify_cocycle_identity(mu, policy);
  o.results = {{"cocycle", mu.label()},
               {"group", mu.group().name()},
               {"exhaustive", r.exhaustive},
               {"triples", r.triples},
               {"identityHolds", r.ok}};
  o.passed = r.ok;
  o.witness = r.witness;
  return o;
}

Outcome cocycle_coboundary(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto mu = cocycle_from(field(p, "cocycle"), c.seed);
  auto g = finite_group_of(mu);
  auto lambda = is_coboundary(mu);
  o.results = {{"cocycle", mu.label()}, {"group", g->name()}, {"coboundary", lambda.has_value()}};
  if (lambda) {
    o.results["lambda"] = to_strings(*lambda);
    bool reproduces = tabulate(coboundary_of(g, *lambda)) == tabulate(mu);
    o.results["lambdaReproduces"] = reproduces;
    o.passed = reproduces;
    if (!reproduces) o.witness = "d(lambda) differs from the cocycle";
  }
  return o;
}

Outcome cocycle_restrict(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto mu = cocycle_from(field(p, "cocycle"), c.seed);
  auto g = finite_group_of(mu);
  std::vector<GroupElement> gens;
  for (const auto& e : field(p, "subgroup")) {
    auto coords = element_coords(e);
    gens.push_back(GroupElement(std::span<const std::int64_t>(coords)));
  }
  auto h = generated_subgroup(g, gens);
  auto res = restrict_cocycle(mu, h);
  VerificationPolicy policy;
  policy.seed = c.seed;
  auto check = verify_cocycle_identity(res, policy);
  auto lambda = is_coboundary(res);
  o.results = {{"subgroupOrder", h->order()},
               {"identityHolds", check.ok},
               {"exhaustive", check.exhaustive},
               {"coboundary", lambda.has_value()}};
  if (lambda) o.results["lambda"] = to_strings(*lambda);
  o.passed = check.ok;
  o.witness = check.witness;
  return o;
}

Outcome algebra_clockshift(const Json& p, const ExperimentConfig&) {
  Outcome o;
  auto n = positive(p, "n");
  auto e = get_or<std::int64_t>(p, "exp", 1);
  Scalar beta = Scalar::root_of_unity(n, e);
  auto cs = clock_shift(beta, static_cast<std::size_t>(n));
  bool commutation = cs.u * cs.v == cs.v * cs.u * beta;
  bool u_order = cs.u.pow(n).is_identity(), v_order = cs.v.pow(n).is_identity();
  bool traces = true;
  std::int64_t checked = 0;
  MonomialMatrix uk = MonomialMatrix::identity(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n && traces; ++k, uk = uk * cs.u) {
    MonomialMatrix m = uk;
    for (std::int64_t l = 0; l < n; ++l, m = m * cs.v) {
      std::int64_t expected = (l == 0 && beta.pow(k).is_one()) ? n : 0;
      ++checked;
      if (!(m.trace() - Cyclotomic(expected)).is_zero()) {
        traces = false;
        o.witness = "tr(u^" + std::to_string(k) + " v^" + std::to_string(l) + ") = " + m.trace().to_string();
        break;
      }
    }
  }
  if (!commutation) o.witness = "uv != beta vu";
  o.results = {{"n", n},
               {"beta", beta.to_string()},
               {"commutation", commutation},
               {"uPowerN", u_order},
               {"vPowerN", v_order},
               {"tracesVanish", traces},
               {"tracesChecked", checked}};
  o.passed = commutation && u_order && v_order && traces;
  return o;
}

Outcome algebra_regular(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto mu = cocycle_from(field(p, "cocycle"), c.seed);
  auto g = finite_group_of(mu);
  auto rep = regular_rep(g, mu);
  auto r = verify_projective(rep, c.seed);
  o.results = {{"dim", rep.dim()},
               {"group", g->name()},
               {"exhaustive", r.exhaustive},
               {"pairs", r.pairs},
               {"unitary", r.unitary},
               {"projective", r.ok}};
  o.passed = r.ok && r.unitary;
  o.witness = r.witness;
  return o;
}

Outcome action_verify(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto rank = static_cast<std::size_t>(get_or<std::int64_t>(p, "rank", 1));
  std::vector<IntMatrix> gens;
  if (p.contains("gens")) {
    gens = parse_matrix_list(p.at("gens"));
  } else if (rank == 1) {
    gens = sl2_generators();
  } else if (rank == 2) {
    for (const auto& g : sl2_generators()) gens.push_back(theta_embedding(g));
  } else {
    throw ConfigError("rank above 2 needs explicit gens");
  }
  auto ctx = make_action_context(alpha_param(p, "alpha"), rank, positive(p, "q"), gens,
                                 get_or<std::int64_t>(p, "phaseFault", 0));
  auto r = verify_action(ctx, c.seed, get_or<std::uint64_t>(p, "samples", 20000));
  o.results = {{"homomorphism", r.homomorphism},
               {"multiplicative", r.multiplicative},
               {"starPreserving", r.star_preserving},
               {"tracePreserving", r.trace_preserving},
               {"formulaMatchesTransport", r.formula_matches_transport},
               {"exhaustive", r.exhaustive},
               {"checks", r.checks}};
  o.passed = r.ok();
  o.witness = r.witness;
  return o;
}

Outcome action_model(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto q = positive(p, "q", 2);
  auto rep = finite_model(alpha_param(p, "alpha"), q, gamma_param(p, q));
  auto r = verify_projective(rep, c.seed);
  o.results = {{"dim", rep.dim()},
               {"group", rep.group().name()},
               {"exhaustive", r.exhaustive},
               {"pairs", r.pairs},
               {"unitary", r.unitary},
               {"projective", r.ok}};
  o.passed = r.ok && r.unitary;
  o.witness = r.witness;
  return o;
}

Outcome action_crossed(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto q = positive(p, "q", 2);
  auto r = crossed_product_consistency(alpha_param(p, "alpha"), q, gamma_param(p, q), get_or<bool>(p, "fault", false),
                                       c.seed);
  o.results = {{"consistent", r.consistent}, {"exhaustive", r.exhaustive}, {"pairs", r.pairs}};
  o.passed = r.consistent;
  o.witness = r.witness;
  return o;
}

Json complex_list(const ComplexVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

Outcome rigidity_trivialize(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto mu = cocycle_from(field(p, "cocycle"), c.seed);
  auto g = finite_group_of(mu);
  auto h = subgroup_param(p, g);
  auto rep = regular_rep(g, mu);
  auto oracle = p.contains("subgroup") ? is_coboundary(restrict_cocycle(mu, generated_subgroup(g, h)))
                                       : is_coboundary(mu);
  auto xi = random_unit_vector(rep.dim(), get_or<std::uint64_t>(p, "vectorSeed", c.seed));
  o.results["oracleCoboundary"] = oracle.has_value();
  bool trivialized = false;
  try {
    auto r = trivialize(rep, h, xi, c.tol);
    trivialized = r.exact;
    o.results["rankOneInvariant"] = true;
    o.results["lambda"] = to_strings(r.lambda);
    o.results["residual"] = r.residual;
    o.results["eigenResidual"] = r.eigen_residual;
    o.results["overlap"] = r.overlap;
    o.results["certificate"] = r.certificate;
    o.results["exact"] = r.exact;
    if (get_or<bool>(p, "includeVector", false)) o.results["xi0"] = complex_list(r.xi0);
  } catch (const NoRankOneInvariant& e) {
    o.results["rankOneInvariant"] = false;
    o.results["reason"] = e.what();
  }
  o.passed = trivialized == oracle.has_value();
  if (!o.passed) {
    o.witness = oracle ? "the oracle finds a coboundary but no exact trivialization was produced"
                       : "a trivialization was produced for a cocycle the oracle rejects";
  }
  return o;
}

Outcome rigidity_gap(const Json& p, const ExperimentConfig&) {
  Outcome o;
  auto q = positive(p, "q", 2);
  auto family = get_or<std::string>(p, "family", "torus");
  if (family == "torus") {
    auto g = AbelianGroup::power(q, 2);
    auto r = relative_gap(regular_rep(g, trivial_cocycle(g)), g->elements(), {g->make({1, 0}), g->make({0, 1})});
    double closed = 2 - 2 * std::cos(2 * std::numbers::pi / static_cast<double>(q));
    double err = std::abs(r.gap - closed);
    o.results = {{"gap", r.gap},
                 {"closedForm", closed},
                 {"absError", err},
                 {"dimComplement", r.dim_complement},
                 {"dimInvariant", r.dim_invariant}};
    o.passed = err <= 1e-9;
    if (!o.passed) o.witness = "gap differs from 2 - 2 cos(2 pi / q)";
    return o;
  }
  if (family == "affine") {
    auto semi = std::make_shared<const SemidirectProduct>(AbelianGroup::power(q, 2), gamma_param(p, q));
    auto pi = affine_permutation_rep(semi);
    std::vector<GroupElement> h;
    for (const auto& x : semi->normal().elements()) h.push_back(semi->make(x, semi->acting().identity()));
    auto id = semi->acting().identity();
    auto zero = semi->normal().identity();
    std::vector<GroupElement> f = {semi->make(semi->normal().make({1, 0}), id),
                                   semi->make(semi->normal().make({0, 1}), id)};
    for (const auto& m : sl2_generators()) f.push_back(semi->make(zero, semi->acting().make(m.mod(q))));
    auto r = relative_gap(pi, h, f);
    bool positive_exact = gap_is_positive(pi, h, f);
    o.results = {{"gap", r.gap},
                 {"dimComplement", r.dim_complement},
                 {"dimInvariant", r.dim_invariant},
                 {"positiveExact", positive_exact}};
    o.passed = positive_exact;
    if (!o.passed) o.witness = "an <F>-orbit is not stable under the translations";
    return o;
  }
  throw ConfigError("unknown gap family '" + family + "' (torus or affine)");
}

Outcome rigidity_bound(const Json& p, const ExperimentConfig&) {
  Outcome o;
  auto n = positive(p, "n");
  auto f1 = positive(p, "f1");
  auto delta = get<double>(p, "delta");
  if (!(delta > 0 && delta <= 2)) throw ConfigError("delta must lie in (0, 2]");
  BigInt b = counting_bound(n, f1, delta);
  auto digits = b.str();
  o.results = {{"bound", digits}, {"digits", digits.size()}, {"coveringConstant", covering_constant(delta)}};
  if (p.contains("eps")) {
    auto eps = get<double>(p, "eps");
    if (!(eps > 0 && eps <= 1)) throw ConfigError("eps must lie in (0, 1]");
    auto lc = lemma_constants(eps);
    Json fs = Json::array();
    for (const auto& m : lc.F) fs.push_back(m.row_major());
    o.results["lemma"] = {{"argument", lc.argument}, {"delta", lc.delta}, {"F", fs}};
  }
  return o;
}

Json disintegration_json(const DisintegrationReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"character", b.character.to_string()},
                      {"dim", b.dim},
                      {"isCommutative", b.commutative},
                      {"traceTable", b.trace_table},
                      {"matchesClockShift", b.matches_clock_shift}});
  }
  return {{"blocks", blocks},
          {"unitaryCheck", r.unitary},
          {"intertwineCheck", r.intertwines},
          {"dimensionCheck", r.dimensions},
          {"traceIdentityCheck", r.trace_identity}};
}

Outcome disintegrate_heisenberg(const Json& p, const ExperimentConfig&) {
  Outcome o;
  auto m = positive(p, "m", 2);
  auto r = disintegrate(heisenberg(m), m);
  o.results = disintegration_json(r);
  o.passed = r.ok();
  o.witness = r.witness;
  return o;
}

Outcome disintegrate_custom(const Json& p, const ExperimentConfig& c) {
  Outcome o;
  auto a_mod = get<std::vector<std::int64_t>>(p, "a");
  auto g_mod = get<std::vector<std::int64_t>>(p, "g");
  auto forms = get<std::vector<std::vector<std::int64_t>>>(p, "forms");
  if (a_mod.empty() || g_mod.empty()) throw ConfigError("custom extension needs nonempty a and g");
  if (forms.size() != a_mod.size()) throw ConfigError("one bilinear form per cyclic factor of A");
  for (const auto& f : forms)
    if (f.size() != g_mod.size() * g_mod.size()) throw ConfigError("each form has rank(G)^2 entries");
  auto a = std::make_shared<const AbelianGroup>(a_mod);
  auto g = std::make_shared<const AbelianGroup>(g_mod);
  const AbelianGroup* ap = a.get();
  std::size_t r = g_mod.size();
  auto nu = [ap, forms, r](const GroupElement& x, const GroupElement& y) {
    std::vector<std::int64_t> out;
    for (const auto& f : forms) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) s += static_cast<std::int64_t>(x[i]) * f[i * r + j] * y[j];
      out.push_back(s);
    }
    return ap->make(out);
  };
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> unit(r, 0);
    unit[i] = 1;
    gens.push_back(g->make(unit));
  }
  VerificationPolicy policy;
  policy.seed = c.seed;
  auto ext = std::make_shared<const CentralExtension>(a, g, nu, gens, "custom", policy);
  auto rep = disintegrate(ext, 0);
  o.results = disintegration_json(rep);
  o.passed = rep.ok();
  o.witness = rep.witness;
  return o;
}

Outcome conjugacy_decide(const Json& p, const ExperimentConfig&) {
  Outcome o;
  bool symbolic = get_or<bool>(p, "symbolic", false);
  Alpha a1 = p.contains("alpha1") ? alpha_param(p, "alpha1") : symbolic_alpha(1, 0);
  Alpha a2 = p.contains("alpha2") ? alpha_param(p, "alpha2") : symbolic_alpha(0, 1);
  if (symbolic && !(a1.value.is_symbolic() && a2.value.is_symbolic()))
    throw ConfigError("symbolic mode needs scalars such as \"alpha1^1\"");
  auto d = decide_conjugacy(a1, a2, parse_matrix(field(p, "a")), parse_matrix(field(p, "b")));
  Json transcript = Json::array();
  for (const auto& t : d.transcript) transcript.push_back({{"constraint", t.constraint}, {"anchor", t.anchor}});
  o.results = {{"verdict", to_string(d.verdict)},
               {"symbolic", d.symbolic},
               {"k0set", d.k0_set},
               {"surviving", d.surviving},
               {"uSupport", d.u_support.to_string()},
               {"normalized", {{"n", d.pair.n}, {"m3", d.pair.m3}, {"squared", d.pair.squared}}},
               {"transcript", transcript}};
  if (!d.symbolic) {
    bool truncated = truncated_solution_exists(a1, a2);
    o.results["truncatedSolution"] = truncated;
    o.passed = truncated == (d.verdict == Verdict::Consistent);
    if (!o.passed) o.witness = "the truncated linear system disagrees with the verdict";
  }
  return o;
}

Outcome conjugacy_sweep_cmd(const Json& p, const ExperimentConfig&) {
  Outcome o;
  auto rows = conjugacy_sweep(positive(p, "order", 2), parse_matrix(field(p, "a")), parse_matrix(field(p, "b")));
  Json out = Json::array();
  std::size_t consistent = 0;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::Consistent) ++consistent;
    out.push_back({{"s", r.s},
                   {"t", r.t},
                   {"conjugated1", r.conjugated1},
                   {"conjugated2", r.conjugated2},
                   {"verdict", to_string(r.verdict)},
                   {"k0set", r.k0_set}});
  }
  o.results = {{"order", get<std::int64_t>(p, "order")}, {"count", rows.size()}, {"consistent", consistent}, {"rows", out}};
  return o;
}

const std::map<std::string, Command>& registry() {
  static const std::map<std::string, Command> table = {
      {"scalars.check", {"half_power / in_upper_half_torus", scalars_check}},
      {"cocycle.verify", {"verify_cocycle_identity", cocycle_verify}},
      {"cocycle.coboundary", {"is_coboundary", cocycle_coboundary}},
      {"cocycle.restrict", {"restrict_cocycle + verify_cocycle_identity", cocycle_restrict}},
      {"algebra.clockshift", {"clock_shift", algebra_clockshift}},
      {"algebra.regular", {"verify_projective(regular_rep)", algebra_regular}},
      {"action.verify", {"verify_action", action_verify}},
      {"action.model", {"verify_projective(finite_model)", action_model}},
      {"action.crossed", {"crossed_product_consistency", action_crossed}},
      {"rigidity.trivialize", {"trivialize vs is_coboundary", rigidity_trivialize}},
      {"rigidity.gap", {"relative_gap / gap_is_positive", rigidity_gap}},
      {"rigidity.bound", {"counting_bound", rigidity_bound}},
      {"disintegrate.heisenberg", {"disintegrate", disintegrate_heisenberg}},
      {"disintegrate.custom", {"disintegrate", disintegrate_custom}},
      {"conjugacy.decide", {"decide_conjugacy vs truncated_solution_exists", conjugacy_decide}},
      {"conjugacy.sweep", {"conjugacy_sweep", conjugacy_sweep_cmd}},
  };
  return table;
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

Json ExperimentConfig::to_json() const {
  Json j = {{"command", command}, {"params", params}, {"seed", seed}, {"tol", tol}};
  if (!out.empty()) j["out"] = out;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  c.command = get<std::string>(j, "command");
  c.params = get_or<Json>(j, "params", Json::object());
  if (!c.params.is_object()) throw ConfigError("params must be an object");
  c.seed = get_or<std::uint64_t>(j, "seed", 1);
  c.tol = get_or<double>(j, "tol", 1e-8);
  c.out = get_or<std::string>(j, "out", "");
  return c;
}

Report run(const ExperimentConfig& config) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  Json& body = report.body;
  body["schemaVersion"] = kSchemaVersion;
  body["command"] = config.command;
  body["config"] = config.to_json();
  auto it = registry().find(config.command);
  if (it == registry().end()) {
    body["error"] = {{"kind", "ConfigError"}, {"message", "unknown command '" + config.command + "'"}};
    body["check"] = {{"routine", nullptr}, {"passed", false}};
    report.exit_code = kExitInvalidConfig;
    return report;
  }
  body["check"] = {{"routine", it->second.routine}, {"passed", false}};
  auto fail = [&](const char* kind, const std::string& message, int code) {
    body["error"] = {{"kind", kind}, {"message", message}};
    report.exit_code = code;
  };
  try {
    Outcome o = it->second.handler(config.params, config);
    body["results"] = std::move(o.results);
    body["check"]["passed"] = o.passed;
    if (!o.witness.empty()) body["witness"] = o.witness;
    report.exit_code = o.passed ? kExitOk : kExitCheckFailed;
  } catch (const ConfigError& e) {
    fail("ConfigError", e.what(), kExitInvalidConfig);
  } catch (const ParseError& e) {
    fail("ParseError", e.what(), kExitInvalidConfig);
  } catch (const PreconditionError& e) {
    fail("PreconditionError", e.what(), kExitInvalidConfig);
  } catch (const WellDefinednessError& e) {
    fail("WellDefinednessError", e.what(), kExitInvalidConfig);
  } catch (const MismatchError& e) {
    fail("MismatchError", e.what(), kExitInvalidConfig);
  } catch (const UnsupportedError& e) {
    fail("UnsupportedError", e.what(), kExitInvalidConfig);
  } catch (const InvarianceViolation& e) {
    fail("InvarianceViolation", e.what(), kExitCheckFailed);
    body["witness"] = e.what();
  } catch (const IdentityFailure& e) {
    fail("IdentityFailure", e.what(), kExitCheckFailed);
    body["witness"] = e.what();
  } catch (const Error& e) {
    fail("Error", e.what(), kExitCheckFailed);
    body["witness"] = e.what();
  } catch (const nlohmann::json::exception& e) {
    fail("ConfigError", e.what(), kExitInvalidConfig);
  }
  report.wall_clock_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render(const Report& report, bool wall_clock) {
  Json body = report.body;
  if (wall_clock) body["wallClockMs"] = report.wall_clock_ms;
  return body.dump(2) + "\n";
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, cmd] : registry()) out.push_back(name);
  return out;
}

Json SweepSpec::to_json() const { return {{"base", base.to_json()}, {"parameter", parameter}, {"values", values}}; }

SweepSpec SweepSpec::from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("sweep spec must be a JSON object");
  SweepSpec s;
  s.base = ExperimentConfig::from_json(field(j, "base"));
  s.parameter = get<std::string>(j, "parameter");
  const Json& v = field(j, "values");
  if (!v.is_array()) throw ConfigError("values must be an array");
  s.values.assign(v.begin(), v.end());
  return s;
}

SweepResult sweep(const SweepSpec& spec) {
  SweepResult out;
  Json& table = out.table;
  table = {{"schemaVersion", kSchemaVersion}, {"command", "sweep"}, {"spec", spec.to_json()}};
  if (!registry().count(spec.base.command)) {
    table["error"] = {{"kind", "ConfigError"}, {"message", "unknown command '" + spec.base.command + "'"}};
    table["rows"] = Json::array();
    out.exit_code = kExitInvalidConfig;
    return out;
  }
  std::vector<Report> reports(spec.values.size());
  parallel_for(spec.values.size(), [&](std::size_t i) {
    ExperimentConfig c = spec.base;
    c.params[spec.parameter] = spec.values[i];
    reports[i] = run(c);
  });
  Json rows = Json::array();
  std::set<std::string> columns;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Json& b = reports[i].body;
    Json row = {{"value", spec.values[i]},
                {"exitCode", reports[i].exit_code},
                {"passed", b["check"]["passed"]},
                {"routine", b["check"]["routine"]}};
    if (b.contains("results")) {
      row["results"] = b["results"];
      for (const auto& [k, v] : b["results"].items())
        if (v.is_primitive()) columns.insert(k);
    }
    if (b.contains("error")) row["error"] = b["error"];
    if (b.contains("witness")) row["witness"] = b["witness"];
    if (reports[i].exit_code != kExitOk) out.exit_code = kExitCheckFailed;
    rows.push_back(std::move(row));
  }
  table["rows"] = rows;

  std::ostringstream csv;
  csv << csv_cell(spec.parameter) << ",exitCode,passed";
  for (const auto& c : columns) csv << ',' << csv_cell(c);
  csv << '\n';
  for (const auto& row : rows) {
    csv << csv_cell(row["value"]) << ',' << row["exitCode"].dump() << ',' << row["passed"].dump();
    for (const auto& c : columns) {
      csv << ',';
      if (row.contains("results") && row["results"].contains(c)) csv << csv_cell(row["results"][c]);
    }
    csv << '\n';
  }
  out.csv = csv.str();
  return out;
}

IntMatrix parse_matrix(const Json& j) {
  std::vector<std::int64_t> e;
  if (j.is_string()) {
    e = parse_ints(j.get<std::string>());
  } else {
    try {
      e = j.get<std::vector<std::int64_t>>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("matrix must be \"a,b,c,d\" or an integer array");
    }
  }
  std::size_t d = 1;
  while (d * d < e.size()) ++d;
  if (e.empty() || d * d != e.size()) throw ConfigError("matrix needs a square number of entries, got " + std::to_string(e.size()));
  return IntMatrix::from_row_major(e);
}

std::vector<IntMatrix> parse_matrix_list(const Json& j) {
  std::vector<IntMatrix> out;
  if (j.is_string()) {
    std::stringstream in(j.get<std::string>());
    std::string item;
    while (std::getline(in, item, ';'))
      if (!item.empty()) out.push_back(parse_matrix(Json(item)));
  } else if (j.is_array()) {
    for (const auto& m : j) out.push_back(parse_matrix(m));
  } else {
    throw ConfigError("generator list must be a string or an array");
  }
  if (out.empty()) throw ConfigError("generator list is empty");
  return out;
}

}  // namespace tga
