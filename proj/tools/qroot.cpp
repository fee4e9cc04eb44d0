// qroot: build maximal cyclic representations of the type-A quantum
// algebra at an odd root of unity, verify their structural identities
// with exact cyclotomic arithmetic, and certify irreducibility of the
// highest-weight submodule.  All outputs are deterministic JSON.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "qroot/json_io.hpp"
#include "qroot/verify_suites.hpp"

namespace fs = std::filesystem;
using namespace qroot;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceCap = 3;

struct CommonOptions {
  unsigned n = 0, l = 0;
  std::string lambda_text;
  std::string params_path;
  std::string out_dir = ".";
  std::int64_t cap = 10000;
  int format_version = kFormatVersion;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--n", opts.n, "rank of the algebra");
  cmd->add_option("--l", opts.l, "level (odd integer > 1)");
  cmd->add_option("--lambda", opts.lambda_text,
                  "weight entries, comma separated, each in [0,l)");
  cmd->add_option("--params", opts.params_path, "parameter file (JSON)");
  cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--cap", opts.cap, "dimension cap for dense computations")
      ->capture_default_str();
  cmd->add_option("--format-version", opts.format_version, "artifact schema version")
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "seed for sampled checks")
      ->capture_default_str();
}

std::vector<unsigned> parse_lambda(const std::string& text) {
  std::vector<unsigned> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty weight entry in --lambda");
    out.push_back((unsigned)std::stoul(tok));
  }
  if (out.empty()) throw std::invalid_argument("--lambda needs at least one entry");
  return out;
}

BasisIndex parse_shift(const std::string& text, const SpaceShape& shape) {
  std::vector<int> entries;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) entries.push_back(std::stoi(tok));
  if (entries.size() != shape.factors())
    throw std::invalid_argument("--shift needs " + std::to_string(shape.factors()) +
                                " entries");
  for (int& e : entries) e = ((e % (int)shape.level()) + shape.level()) % shape.level();
  return BasisIndex{entries};
}

void check_format_version(const CommonOptions& opts) {
  if (opts.format_version != kFormatVersion)
    throw std::invalid_argument("unsupported format version " +
                                std::to_string(opts.format_version) +
                                " (this build writes version " +
                                std::to_string(kFormatVersion) + ")");
}

ParamSet resolve_params(const CommonOptions& opts) {
  bool has_lambda = !opts.lambda_text.empty();
  bool has_file = !opts.params_path.empty();
  if (has_lambda == has_file)
    throw std::invalid_argument("give exactly one of --lambda or --params");
  if (has_file) return load_params(opts.params_path);
  if (opts.n == 0 || opts.l == 0)
    throw std::invalid_argument("--n and --l are required with --lambda");
  if (opts.l <= 1 || opts.l % 2 == 0)
    throw std::invalid_argument("l must be odd > 1");
  return default_params(opts.n, opts.l, parse_lambda(opts.lambda_text));
}

void emit_error(const std::string& message, const Json& extra = {}) {
  Json body;
  body["error"] = message;
  if (!extra.empty()) body["detail"] = extra;
  std::cout << body.dump(2) << "\n";
}

fs::path ensure_out_dir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

// ----------------------------------------------------------------- build

int run_build(const CommonOptions& opts) {
  check_format_version(opts);
  ParamSet P = resolve_params(opts);
  fs::path out = ensure_out_dir(opts.out_dir);

  write_artifact((out / "params.json").string(), params_to_json(P));

  SpecializationReport rep = validate_params(P);
  write_artifact((out / "specialization.json").string(), to_json(rep));
  if (!rep.all_pass()) {
    emit_error("specialization constraints failed", to_json(rep));
    return kExitInvalidInput;
  }

  Json gens;
  gens["params_digest"] = P.digest();
  gens["lambda"] = rep.derived_lambda;
  Json list = Json::array();
  for (unsigned i = 1; i <= P.n; ++i) {
    Json entry;
    entry["i"] = i;
    for (auto [key, g] : {std::pair{"e", Gen::E}, {"f", Gen::F}, {"t", Gen::T}}) {
      LinearOp op = gen_image(g, i, P);
      entry[key] = Json{{"operator", to_json(op)},
                        {"matrix", to_json(to_matrix(op, opts.cap))}};
    }
    list.push_back(std::move(entry));
  }
  gens["generators"] = std::move(list);
  write_artifact((out / "generators.json").string(), gens);

  std::cout << "build: wrote params.json, specialization.json, generators.json to "
            << out.string() << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------- verify

const std::vector<std::string> kAllSuites = {
    "defining",     "block-commutation", "action",           "power",
    "shift",        "primitive",         "root-commutation", "bar-comparison",
    "presentation", "nilpotency",        "constants",        "degree"};

SuiteReport run_one_suite(const std::string& name, const ParamSet& P,
                          ConventionFlag flag, bool flag_calibrated_scalar,
                          unsigned m_max, std::uint64_t seed, std::int64_t cap) {
  if (name == "defining") return relation_suite(Suite::Defining, P, flag);
  if (name == "block-commutation")
    return relation_suite(Suite::BlockCommutation, P, flag);
  if (name == "action") return action_suite(P);
  if (name == "power") return power_suite(P, m_max);
  if (name == "shift") return shift_suite(P, seed);
  if (name == "primitive") return primitive_suite(P, seed, cap);
  if (name == "root-commutation") return relation_suite(Suite::RootCommutation, P, flag);
  if (name == "bar-comparison") {
    SuiteReport rep = relation_suite(Suite::BarComparison, P, flag);
    rep.instances.push_back(SuiteInstance{
        "calibration", {}, true, true,
        flag.str() + (flag_calibrated_scalar
                          ? " (bar/plain scalar identity reproduced)"
                          : " (selected by l-th power agreement only)")});
    return rep;
  }
  if (name == "presentation") return relation_suite(Suite::Presentation, P, flag);
  if (name == "nilpotency") return nilpotency_check(P, flag);
  if (name == "constants") return constants_suite(P);
  if (name == "degree") return degree_suite(P, flag, 3, seed, cap);
  throw std::invalid_argument("unknown suite: " + name);
}

int verify_param_set(const ParamSet& P, const std::vector<std::string>& suites,
                     const std::optional<ConventionFlag>& flag_override,
                     unsigned m_max, const CommonOptions& opts, const fs::path& out,
                     const std::string& label) {
  SpecializationReport val = validate_params(P);
  write_artifact((out / "specialization.json").string(), to_json(val));
  if (!val.all_pass()) {
    emit_error("specialization constraints failed", to_json(val));
    return kExitInvalidInput;
  }

  ConventionFlag flag;
  bool scalar_ok = true;
  if (flag_override) {
    flag = *flag_override;
  } else {
    CalibrationResult cal = calibrate_conventions(P);
    flag = cal.flag;
    scalar_ok = cal.bar_scalar_identity;
  }

  bool all_ok = true;
  for (const std::string& name : suites) {
    SuiteReport rep =
        run_one_suite(name, P, flag, scalar_ok, m_max, opts.seed, opts.cap);
    write_artifact((out / (name + ".json")).string(), to_json(rep));
    bool ok = rep.all_pass();
    all_ok = all_ok && ok;
    std::cout << label << name << ": " << (ok ? "pass" : "FAIL") << " ("
              << rep.instances.size() << " checks, " << rep.failures()
              << " failures)\n";
  }
  return all_ok ? kExitPass : kExitSuiteFailure;
}

int run_verify(const CommonOptions& opts, std::vector<std::string> suites,
               const std::string& grid, const std::string& flag_text,
               unsigned m_max_opt) {
  check_format_version(opts);
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all"))
    suites = kAllSuites;
  for (const std::string& s : suites)
    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
      throw std::invalid_argument("unknown suite: " + s);
  std::optional<ConventionFlag> flag_override;
  if (!flag_text.empty()) flag_override = ConventionFlag::parse(flag_text);

  if (!grid.empty()) {
    if (grid != "default")
      throw std::invalid_argument("the only built-in grid is \"default\"");
    fs::path out = ensure_out_dir(opts.out_dir);
    int worst = kExitPass;
    for (const GridPoint& gp : default_grid()) {
      for (const auto& lambda : gp.lambdas) {
        std::string name =
            "n" + std::to_string(gp.n) + "_l" + std::to_string(gp.l) + "_lambda";
        for (size_t i = 0; i < lambda.size(); ++i)
          name += (i ? "-" : "") + std::to_string(lambda[i]);
        fs::path sub = out / name;
        fs::create_directories(sub);
        ParamSet P = default_params(gp.n, gp.l, lambda);
        unsigned m_max = m_max_opt ? m_max_opt : gp.l + 1;
        int rc =
            verify_param_set(P, suites, flag_override, m_max, opts, sub, name + " ");
        worst = std::max(worst, rc);
      }
    }
    return worst;
  }

  ParamSet P = resolve_params(opts);
  unsigned m_max = m_max_opt ? m_max_opt : P.l + 1;
  fs::path out = ensure_out_dir(opts.out_dir);
  return verify_param_set(P, suites, flag_override, m_max, opts, out, "");
}

// ---------------------------------------------------------------- report

int run_report(const CommonOptions& opts, const std::string& shift_text,
               const std::string& flag_text, bool closure_only) {
  check_format_version(opts);
  ParamSet P = resolve_params(opts);
  fs::path out = ensure_out_dir(opts.out_dir);

  std::optional<BasisIndex> shift;
  if (!shift_text.empty()) shift = parse_shift(shift_text, P.shape());

  ConventionFlag flag;
  if (!flag_text.empty())
    flag = ConventionFlag::parse(flag_text);
  else
    flag = calibrate_conventions(P).flag;

  IrreducibilityCertificate cert = irreducibility_certificate(P, flag, opts.cap, shift);
  write_artifact((out / "certificate.json").string(), to_json(cert));
  if (cert.verdict == "specialization invalid") {
    emit_error("certificate refused: specialization invalid");
    return kExitSuiteFailure;
  }

  DimensionReport dims = dimension_report(P, flag, !closure_only, opts.cap, shift);
  write_artifact((out / "dimensions.json").string(), to_json(dims));

  std::cout << "dim_L = " << cert.dim_L
            << ", primitive line dimension = " << cert.primitive_dim_V
            << ", verdict: " << cert.verdict << "\n";
  return (cert.verdict == "irreducible" && dims.strategies_agree) ? kExitPass
                                                                  : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cyclic representations of the type-A quantum algebra "
               "at odd roots of unity"};
  app.require_subcommand(1);

  CommonOptions build_opts, verify_opts, report_opts;

  CLI::App* build = app.add_subcommand(
      "build", "construct the representation and export generator matrices");
  add_common(build, build_opts);

  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites and export reports");
  add_common(verify, verify_opts);
  std::vector<std::string> suites;
  std::string grid, verify_flag;
  unsigned m_max = 0;
  verify->add_option("--suite", suites,
                     "suites to run (default: all); one or more of: all, defining, "
                     "block-commutation, action, power, shift, primitive, "
                     "root-commutation, bar-comparison, presentation, nilpotency, "
                     "constants, degree");
  verify->add_option("--grid", grid, "run the baked-in grid (value: default)");
  verify->add_option("--flag", verify_flag,
                     "convention flag override, e.g. ei-then-alpha/low-high");
  verify->add_option("--m-max", m_max, "largest power for the power suite");

  CLI::App* report = app.add_subcommand(
      "report", "compute the irreducibility certificate and dimension reports");
  add_common(report, report_opts);
  std::string shift_text, report_flag;
  bool closure_only = false;
  report->add_option("--shift", shift_text,
                     "shift index entries, comma separated (length N)");
  report->add_option("--flag", report_flag, "convention flag override");
  report->add_flag("--closure-only", closure_only,
                   "skip the ordered-monomial dimension strategy");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_build(build_opts);
    if (verify->parsed())
      return run_verify(verify_opts, suites, grid, verify_flag, m_max);
    if (report->parsed())
      return run_report(report_opts, shift_text, report_flag, closure_only);
  } catch (const CapExceeded& e) {
    emit_error(e.what());
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    emit_error(e.what());
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    emit_error(e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    emit_error(std::string("internal error: ") + e.what());
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
