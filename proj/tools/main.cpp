#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tga/cli.hpp"

using tga::Json;

namespace {

struct Invocation {
  std::string command;
  Json params = Json::object();
  std::string config_path;
  std::string csv_path;
  bool is_run = false;
  bool is_sweep = false;
  bool list = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tga::ConfigError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Inline JSON, or "@path" for a file.
Json json_arg(const std::string& text) {
  std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw tga::ConfigError(std::string("invalid JSON argument: ") + e.what());
  }
}

class Builder {
 public:
  Builder(CLI::App* app, Invocation& inv, std::string command) : app_(app), inv_(inv) {
    app_->callback([&inv, command] { inv.command = command; });
  }
  Builder& str(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto* o = app_->add_option_function<std::string>(flag, [inv = &inv_, key](const std::string& v) { inv->params[key] = v; },
                                                      help);
    if (required) o->required();
    return *this;
  }
  Builder& integer(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto* o = app_->add_option_function<std::int64_t>(
        flag, [inv = &inv_, key](const std::int64_t& v) { inv->params[key] = v; }, help);
    if (required) o->required();
    return *this;
  }
  Builder& real(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto* o = app_->add_option_function<double>(flag, [inv = &inv_, key](const double& v) { inv->params[key] = v; }, help);
    if (required) o->required();
    return *this;
  }
  Builder& flag(const std::string& flag, const std::string& key, const std::string& help) {
    app_->add_flag_callback(flag, [inv = &inv_, key] { inv->params[key] = true; }, help);
    return *this;
  }
  Builder& json(const std::string& flag, const std::string& key, const std::string& help, bool required = false) {
    auto* o = app_->add_option_function<std::string>(
        flag, [inv = &inv_, key](const std::string& v) { inv->params[key] = json_arg(v); }, help);
    if (required) o->required();
    return *this;
  }
  /// Merges the fields of a JSON object file into the params.
  Builder& instance(const std::string& flag, const std::string& help) {
    app_->add_option_function<std::string>(
        flag,
        [inv = &inv_](const std::string& path) {
          Json j = json_arg("@" + path);
          if (!j.is_object()) throw tga::ConfigError("instance file must hold a JSON object");
          for (const auto& [k, v] : j.items())
            if (!inv->params.contains(k)) inv->params[k] = v;
        },
        help);
    return *this;
  }

 private:
  CLI::App* app_;
  Invocation& inv_;
};

void action_verify_options(Builder& b) {
  b.str("--alpha", "alpha", "rotation parameter, e.g. 4:1", true)
      .integer("--q", "q", "finite quotient modulus", true)
      .integer("--rank", "rank", "n for Sp(2n, Z); default 1")
      .str("--gens", "gens", "generators \"a,b,c,d;...\"; default S, T")
      .integer("--phase-fault", "phaseFault", "fault injection into the monomial formula")
      .integer("--samples", "samples", "sampled monomial pairs beyond q = 8");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw tga::ConfigError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with 2-cocycles, twisted group algebras and group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  Invocation inv;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string out;
  bool deterministic = false;
  auto* seed_opt = app.add_option("--seed", seed, "random seed")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_flag("--deterministic", deterministic, "omit wallClockMs from the report");

  try {
    auto* scalars = app.add_subcommand("scalars", "rotation parameters and half powers")->require_subcommand(1);
    Builder(scalars->add_subcommand("check", "half-power law and normalization"), inv, "scalars.check")
        .str("--alpha", "alpha", "\"N:k\" or scalar text", true)
        .integer("--power", "power", "also report alpha^power");

    auto* cocycle = app.add_subcommand("cocycle", "scalar 2-cocycles")->require_subcommand(1);
    Builder(cocycle->add_subcommand("verify", "cocycle identity"), inv, "cocycle.verify")
        .json("--cocycle", "cocycle", "cocycle descriptor (JSON or @file)", true)
        .integer("--samples", "samples", "sampled triples for large groups");
    Builder(cocycle->add_subcommand("coboundary", "coboundary test"), inv, "cocycle.coboundary")
        .json("--cocycle", "cocycle", "cocycle descriptor (JSON or @file)", true);
    Builder(cocycle->add_subcommand("restrict", "restriction to a generated subgroup"), inv, "cocycle.restrict")
        .json("--cocycle", "cocycle", "cocycle descriptor (JSON or @file)", true)
        .json("--subgroup", "subgroup", "generator coordinates, e.g. [[1,0]]", true);

    auto* algebra = app.add_subcommand("algebra", "twisted group algebras")->require_subcommand(1);
    Builder(algebra->add_subcommand("clockshift", "clock and shift matrices"), inv, "algebra.clockshift")
        .integer("--n", "n", "matrix size N", true)
        .integer("--exp", "exp", "beta = zeta_N^exp; default 1");
    Builder(algebra->add_subcommand("regular", "twisted regular representation"), inv, "algebra.regular")
        .json("--cocycle", "cocycle", "cocycle descriptor (JSON or @file)", true);

    auto* action = app.add_subcommand("action", "the symplectic action on the twisted algebra")->require_subcommand(1);
    Builder verify(action->add_subcommand("verify", "automorphism checks"), inv, "action.verify");
    action_verify_options(verify);
    Builder(action->add_subcommand("model", "finite semidirect model"), inv, "action.model")
        .str("--alpha", "alpha", "rotation parameter", true)
        .integer("--q", "q", "modulus", true)
        .str("--gamma", "gamma", "sl2mod or generators \"a,b,c,d;...\"");
    Builder(action->add_subcommand("crossed", "crossed-product consistency"), inv, "action.crossed")
        .str("--alpha", "alpha", "rotation parameter", true)
        .integer("--q", "q", "modulus", true)
        .str("--gamma", "gamma", "sl2mod or generators \"a,b,c,d;...\"")
        .flag("--fault", "fault", "inject a sign fault");
    Builder alias(app.add_subcommand("verify-action", "shorthand for action verify"), inv, "action.verify");
    action_verify_options(alias);

    auto* rigidity = app.add_subcommand("rigidity", "cocycle trivialization and spectral gaps")->require_subcommand(1);
    Builder(rigidity->add_subcommand("trivialize", "rank-one invariant of the averaged projection"), inv,
            "rigidity.trivialize")
        .instance("--instance", "JSON file with cocycle, subgroup, vectorSeed")
        .json("--cocycle", "cocycle", "cocycle descriptor (JSON or @file)")
        .json("--subgroup", "subgroup", "generator coordinates")
        .integer("--vector-seed", "vectorSeed", "seed of the test vector")
        .flag("--include-vector", "includeVector", "report xi0");
    Builder(rigidity->add_subcommand("gap", "relative spectral gap"), inv, "rigidity.gap")
        .integer("--q", "q", "modulus", true)
        .str("--family", "family", "torus or affine")
        .str("--gamma", "gamma", "affine family: sl2mod or generators");
    Builder(rigidity->add_subcommand("bound", "counting bound"), inv, "rigidity.bound")
        .integer("--n", "n", "dimension", true)
        .integer("--f1", "f1", "|F1|", true)
        .real("--delta", "delta", "delta1 in (0, 2]", true)
        .real("--eps", "eps", "also report the lemma constants at eps");

    auto* dis = app.add_subcommand("disintegrate", "central extensions and their blocks")->require_subcommand(1);
    Builder(dis->add_subcommand("heisenberg", "Heisenberg group mod m"), inv, "disintegrate.heisenberg")
        .integer("--m", "m", "modulus", true);
    Builder(dis->add_subcommand("custom", "A x_nu G with bilinear nu"), inv, "disintegrate.custom")
        .instance("--instance", "JSON file with a, g, forms")
        .json("--a", "a", "moduli of A, e.g. [2]")
        .json("--g", "g", "moduli of G, e.g. [2,2]")
        .json("--forms", "forms", "row-major bilinear forms, one per factor of A");

    auto* conj = app.add_subcommand("conjugacy", "conjugacy obstruction")->require_subcommand(1);
    Builder(conj->add_subcommand("decide", "decide one pair"), inv, "conjugacy.decide")
        .str("--alpha1", "alpha1", "first rotation parameter")
        .str("--alpha2", "alpha2", "second rotation parameter")
        .str("--a", "a", "parabolic matrix \"a,b,c,d\"", true)
        .str("--b", "b", "second matrix \"a,b,c,d\"", true)
        .flag("--symbolic", "symbolic", "independent formal parameters");
    Builder(conj->add_subcommand("sweep", "all exponent pairs for one order"), inv, "conjugacy.sweep")
        .integer("--order", "order", "N", true)
        .str("--a", "a", "parabolic matrix", true)
        .str("--b", "b", "second matrix", true);

    auto* run = app.add_subcommand("run", "run a persisted config");
    run->add_option("--config", inv.config_path, "config JSON file")->required();
    run->callback([&inv] { inv.is_run = true; });
    auto* sw = app.add_subcommand("sweep", "run one command over a list of parameter values");
    sw->add_option("--config", inv.config_path, "sweep spec JSON file")->required();
    sw->add_option("--csv", inv.csv_path, "also write the table as CSV");
    sw->callback([&inv] { inv.is_sweep = true; });
    app.add_subcommand("list", "print the command names")->callback([&inv] { inv.list = true; });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : tga::kExitInvalidConfig;
  } catch (const tga::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tga::kExitInvalidConfig;
  }

  try {
    if (inv.list) {
      for (const auto& n : tga::command_names()) std::cout << n << '\n';
      return 0;
    }
    if (inv.is_sweep) {
      auto spec = tga::SweepSpec::from_json(json_arg("@" + inv.config_path));
      if (seed_opt->count()) spec.base.seed = seed;
      if (tol_opt->count()) spec.base.tol = tol;
      auto result = tga::sweep(spec);
      write_output(result.table.dump(2) + "\n", out);
      if (!inv.csv_path.empty()) write_output(result.csv, inv.csv_path);
      return result.exit_code;
    }
    tga::ExperimentConfig config;
    if (inv.is_run) {
      config = tga::ExperimentConfig::from_json(json_arg("@" + inv.config_path));
      if (seed_opt->count()) config.seed = seed;
      if (tol_opt->count()) config.tol = tol;
      if (!out.empty()) config.out = out;
    } else {
      config.command = inv.command;
      config.params = inv.params;
      config.seed = seed;
      config.tol = tol;
      config.out = out;
    }
    auto report = tga::run(config);
    write_output(tga::render(report, !deterministic), config.out);
    if (report.exit_code != 0 && report.body.contains("error"))
      std::cerr << "error: " << report.body["error"]["message"].get<std::string>() << '\n';
    return report.exit_code;
  } catch (const tga::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tga::kExitInvalidConfig;
  }
}
