#ifndef VURKIT_CLI_APP_HPP
#define VURKIT_CLI_APP_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vurkit/core/fixtures.hpp"
#include "vurkit/io.hpp"
#include "vurkit/lur.hpp"
#include "vurkit/oracle.hpp"
#include "vurkit/vur.hpp"

namespace vurkit::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseFailure = 2,
  kDimensionMismatch = 3,
  kNotHermitian = 4,
  kInvalidState = 5,
  kDomain = 6,
};

inline constexpr const char* kBuiltinPrefix = "builtin:";

/// Resolves a positional input: "builtin:NAME" or a JSON file path.
inline std::vector<SpectralObservable> load_observables(const std::string& token, const Tolerances& tol) {
  if (token.rfind(kBuiltinPrefix, 0) == 0) {
    const std::string name = token.substr(std::char_traits<char>::length(kBuiltinPrefix));
    if (auto set = fixtures::observable_set(name)) return *set;
    throw ParseError("unknown built-in observable set '" + name + "'");
  }
  std::vector<SpectralObservable> out;
  for (const auto& doc : io::observable_documents_from_json(io::read_file(token), tol))
    out.push_back(doc.resolve(tol));
  return out;
}

inline std::vector<SpectralObservable> load_observables(const std::vector<std::string>& tokens,
                                                        const Tolerances& tol) {
  std::vector<SpectralObservable> out;
  for (const auto& t : tokens)
    for (auto& o : load_observables(t, tol)) out.push_back(std::move(o));
  if (out.empty()) throw ParseError("no observables given");
  require_same_dim(out, "inputs");
  return out;
}

inline QuantumState load_state(const std::string& token, const Tolerances& tol) {
  if (token.rfind(kBuiltinPrefix, 0) == 0) {
    const std::string name = token.substr(std::char_traits<char>::length(kBuiltinPrefix));
    if (auto st = fixtures::state(name)) return *st;
    throw ParseError("unknown built-in state '" + name + "'");
  }
  return io::state_from_json(io::read_file(token), tol);
}

/// "X" pairs every observable of X with itself; "X,Y" zips the two sets.
inline std::vector<LocalObservablePair> load_pairs(const std::vector<std::string>& tokens, const Tolerances& tol) {
  std::vector<LocalObservablePair> pairs;
  for (const auto& t : tokens) {
    const auto comma = t.find(',');
    const auto a = load_observables(t.substr(0, comma), tol);
    const auto b = comma == std::string::npos ? a : load_observables(t.substr(comma + 1), tol);
    if (a.size() != b.size())
      throw DimensionError("pair spec '" + t + "': sides hold different numbers of observables");
    for (std::size_t i = 0; i < a.size(); ++i) pairs.push_back({a[i], b[i]});
  }
  if (pairs.empty()) throw ParseError("no observable pairs given");
  return pairs;
}

inline io::json run_report(const std::string& command, const std::vector<std::string>& args, io::json inputs,
                           io::json result, std::uint64_t seed) {
  return io::json{{"tool", "vurkit"},         {"version", kVersion}, {"command", command},
                  {"args", args},              {"seed", seed},       {"inputs", std::move(inputs)},
                  {"result", std::move(result)}};
}

inline io::json observables_digest(const std::vector<std::string>& tokens, const std::vector<SpectralObservable>& obs) {
  io::json spectra = io::json::array();
  for (const auto& o : obs) spectra.push_back(o.eigenvalues());
  return io::json{{"sources", tokens}, {"count", obs.size()}, {"dimension", obs.front().dim()},
                  {"spectra", std::move(spectra)}};
}

// ---------------------------------------------------------------------------
// text rendering

namespace detail {

struct Printer {
  std::ostream& os;
  explicit Printer(std::ostream& o) : os(o) { os << std::setprecision(10); }
  template <typename T>
  Printer& kv(const std::string& key, const T& v, int indent = 0) {
    os << std::string(static_cast<std::size_t>(indent), ' ') << key << ": " << v << '\n';
    return *this;
  }
};

} // namespace detail

// ---------------------------------------------------------------------------
// commands

struct BoundArgs {
  std::vector<std::string> inputs;
  std::optional<double> c;
  std::optional<double> alpha;
  AlphaSearch search;
};

inline io::json cmd_bound(const BoundArgs& a, const std::vector<std::string>& argv, const Tolerances& tol) {
  const auto obs = load_observables(a.inputs, tol);
  const int m = static_cast<int>(obs.size()), n = static_cast<int>(obs.front().dim());
  const EntropicConstant c = a.c ? user_constant(*a.c, m, n) : best_entropic_constant(obs, tol.mub);
  const BoundReport rep = a.alpha ? bound_at_alpha(obs, Alpha(*a.alpha), c) : optimize_alpha(obs, c, a.search);
  io::json inputs = observables_digest(a.inputs, obs);
  inputs["alpha_mode"] = a.alpha ? "fixed" : "optimized";
  if (!a.alpha) inputs["alpha_search"] = {a.search.lo, a.search.hi, a.search.points};
  return run_report("bound", argv, std::move(inputs), io::to_json(rep), 0);
}

inline io::json cmd_entropic(const std::vector<std::string>& inputs, const std::vector<std::string>& argv,
                             const Tolerances& tol) {
  const auto obs = load_observables(inputs, tol);
  if (obs.size() < 2) throw DomainError("entropic: need at least two observables");
  io::json pairs = io::json::array();
  for (std::size_t i = 0; i < obs.size(); ++i)
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      const double c = std::min(1.0, overlap_stats(obs[i], obs[j]).c);
      io::json pj{{"i", i}, {"j", j}, {"c", c}, {"maassen_uffink", maassen_uffink(c).value()}};
      pj["de_vicente_analytic"] = c >= kDeVicenteThreshold ? io::json(de_vicente_analytic(c).value()) : io::json(nullptr);
      pairs.push_back(std::move(pj));
    }
  const int m = static_cast<int>(obs.size()), n = static_cast<int>(obs.front().dim());
  const bool mub = is_mub(obs, tol.mub);
  io::json result{{"pairs", std::move(pairs)}, {"mub", mub}};
  result["wu_mub"] = mub && m <= n + 1 ? io::json(wu_mub_bound(m, n).value()) : io::json(nullptr);
  result["best"] = io::to_json(best_entropic_constant(obs, tol.mub));
  return run_report("entropic", argv, observables_digest(inputs, obs), std::move(result), 0);
}

struct OracleArgs {
  std::vector<std::string> inputs;
  OracleConfig config;
  unsigned threads = 0;
};

inline io::json cmd_oracle(const OracleArgs& a, const std::vector<std::string>& argv, const Tolerances& tol) {
  const auto obs = load_observables(a.inputs, tol);
  const OracleResult r = minimize_variance_sum(obs, a.config, a.threads == 0 ? configured_threads() : a.threads);
  io::json inputs = observables_digest(a.inputs, obs);
  inputs["restarts"] = a.config.restarts;
  inputs["max_iters"] = a.config.max_iters;
  inputs["step_tol"] = a.config.step_tol;
  return run_report("oracle", argv, std::move(inputs), io::to_json(r), a.config.seed);
}

struct LurArgs {
  std::string state;
  std::vector<std::string> pairs;
  std::optional<double> c_a, c_b;
  std::optional<double> u_a, u_b;
  AlphaSearch search;
};

inline io::json cmd_lur(const LurArgs& a, const std::vector<std::string>& argv, const Tolerances& tol) {
  const auto pairs = load_pairs(a.pairs, tol);
  const QuantumState rho = load_state(a.state, tol);
  LurReport r;
  std::string mode;
  if (a.u_a && a.u_b) {
    mode = "user-bounds";
    r = lur_test_with_bounds(pairs, rho, *a.u_a, *a.u_b);
  } else {
    std::vector<SpectralObservable> as, bs;
    for (const auto& p : pairs) {
      as.push_back(p.a_side);
      bs.push_back(p.b_side);
    }
    const int m = static_cast<int>(pairs.size());
    const auto constant_for = [&](const std::optional<double>& given, const std::vector<SpectralObservable>& side) {
      return given ? user_constant(*given, m, static_cast<int>(side.front().dim()))
                   : best_entropic_constant(side, tol.mub);
    };
    mode = a.c_a || a.c_b ? "user-C" : "auto-C";
    r = lur_test(pairs, rho, constant_for(a.c_a, as), constant_for(a.c_b, bs), a.search);
  }
  io::json inputs{{"state", a.state}, {"pairs", a.pairs}, {"pair_count", pairs.size()}, {"mode", mode}};
  return run_report("lur", argv, std::move(inputs), io::to_json(r), 0);
}

inline io::json cmd_continuous(double c, std::optional<double> alpha, const std::vector<std::string>& argv) {
  ContinuousBoundQuery q{c, std::nullopt};
  if (alpha) q.alpha = Alpha(*alpha);
  const ContinuousBound b = continuous_pair_bound(q);
  io::json inputs{{"C", c}};
  inputs["alpha"] = alpha ? io::json(*alpha) : io::json(nullptr);
  io::json result = io::to_json(b);
  result["alpha_mode"] = alpha ? "fixed" : "closed-form";
  return run_report("continuous", argv, std::move(inputs), std::move(result), 0);
}

/// Runs the worked examples end to end.
inline io::json cmd_demo(const std::vector<std::string>& argv, std::uint64_t seed, unsigned threads) {
  const auto pauli = fixtures::pauli3();
  const auto qutrit = fixtures::qutrit4();
  io::json r;
  r["pauli3_fixed"] = io::to_json(bound_at_alpha(pauli, Alpha(0.597), wu_full_mub(2)));
  r["qutrit4_fixed"] = io::to_json(bound_at_alpha(qutrit, Alpha(1.92), wu_full_mub(3)));
  r["pauli3_optimized"] = io::to_json(optimize_alpha(pauli, best_entropic_constant(pauli)));
  r["qutrit4_optimized"] = io::to_json(optimize_alpha(qutrit, best_entropic_constant(qutrit)));
  OracleConfig cfg;
  cfg.seed = seed;
  r["pauli3_oracle"] = io::to_json(minimize_variance_sum(pauli, cfg, threads));
  r["qutrit4_oracle"] = io::to_json(minimize_variance_sum(qutrit, cfg, threads));
  const double c_xp = 1.0 + std::log(std::numbers::pi);
  r["position_momentum_alpha1"] = io::to_json(continuous_pair_bound({c_xp, Alpha(1.0)}));
  r["position_momentum_optimal"] = io::to_json(continuous_pair_bound({c_xp, std::nullopt}));
  std::vector<LocalObservablePair> pairs;
  for (const auto& o : pauli) pairs.push_back({o, o});
  r["lur_singlet"] = io::to_json(lur_test_auto(pairs, fixtures::singlet()));
  r["lur_ket00"] = io::to_json(lur_test_auto(pairs, fixtures::ket00()));
  r["lur_mixed2"] = io::to_json(lur_test_auto(pairs, fixtures::maximally_mixed_2q()));
  return run_report("demo", argv, io::json{{"fixtures", {"pauli3", "qutrit4", "singlet", "ket00", "mixed2"}}},
                    std::move(r), seed);
}

/// Writes every built-in fixture as a JSON file into `dir`.
inline void export_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::string& name, const io::json& j) {
    std::ofstream(dir / (name + ".json")) << j.dump(2) << '\n';
  };
  io::json pauli = io::json::array();
  for (const auto& m : {fixtures::pauli_x(), fixtures::pauli_y(), fixtures::pauli_z()})
    pauli.push_back(io::to_json(io::ObservableDocument{m}));
  write("pauli3", pauli);
  for (auto [name, reading] : {std::pair{"qutrit4_printed", fixtures::QutritPhases::AsPrinted},
                               std::pair{"qutrit4_thirds", fixtures::QutritPhases::ThirdsOfPi}}) {
    io::json set = io::json::array();
    for (const auto& m : fixtures::qutrit4_matrices(reading)) set.push_back(io::to_json(io::ObservableDocument{m}));
    write(name, set);
  }
  write("singlet", io::to_json(fixtures::singlet()));
  write("ket00", io::to_json(fixtures::ket00()));
  write("mixed2", io::to_json(fixtures::maximally_mixed_2q()));
}

// ---------------------------------------------------------------------------
// text output for each command

inline void render_text(const io::json& rep, std::ostream& os) {
  detail::Printer p(os);
  const std::string cmd = rep.at("command");
  const io::json& r = rep.at("result");
  const auto num = [](const io::json& j) { return j.get<double>(); };
  const auto print_bound_json = [&](const io::json& b, int indent) {
    p.kv("C", num(b.at("constant").at("value")), indent)
        .kv("C source", b.at("constant").at("source").get<std::string>(), indent)
        .kv("alpha", num(b.at("alpha")), indent);
    std::size_t l = 0;
    for (const auto& op : b.at("per_operator"))
      os << std::string(static_cast<std::size_t>(indent), ' ') << "operator " << l++
         << ": beta* = " << num(op.at("beta_star")) << ", M = " << num(op.at("value")) << ", bracket = ["
         << num(op.at("bracket")[0]) << ", " << num(op.at("bracket")[1]) << "]\n";
    p.kv("raw bound", num(b.at("raw")), indent)
        .kv("lower bound", num(b.at("lower_bound")), indent)
        .kv("clamped", b.at("clamped").get<bool>() ? "yes" : "no", indent);
  };
  const auto print_oracle_json = [&](const io::json& o, int indent) {
    p.kv("minimum", num(o.at("minimum")), indent)
        .kv("restarts agreeing", std::to_string(o.at("restarts_agreeing").get<int>()) + "/" +
                                     std::to_string(o.at("restarts").get<int>()), indent)
        .kv("best restart", o.at("best_restart").get<int>(), indent);
    os << std::string(static_cast<std::size_t>(indent), ' ') << "argmin amplitudes:";
    for (const auto& z : o.at("argmin_state").at("pure")) os << " (" << num(z[0]) << ", " << num(z[1]) << ")";
    os << '\n';
  };
  const auto print_lur_json = [&](const io::json& l, int indent) {
    p.kv("lhs", num(l.at("lhs")), indent)
        .kv("U_A", num(l.at("u_a")), indent)
        .kv("U_B", num(l.at("u_b")), indent)
        .kv("margin", num(l.at("margin")), indent)
        .kv("verdict", l.at("verdict").get<std::string>(), indent);
    for (const char* side : {"bound_a", "bound_b"})
      if (!l.at(side).is_null()) {
        os << std::string(static_cast<std::size_t>(indent), ' ') << side << ":\n";
        print_bound_json(l.at(side), indent + 2);
      }
  };

  os << "vurkit " << rep.at("version").get<std::string>() << " " << cmd << " (seed " << rep.at("seed").get<std::uint64_t>()
     << ")\n";
  if (cmd == "bound") {
    print_bound_json(r, 0);
  } else if (cmd == "entropic") {
    for (const auto& pj : r.at("pairs")) {
      os << "pair (" << pj.at("i").get<int>() << ", " << pj.at("j").get<int>() << "): c = " << num(pj.at("c"))
         << ", Maassen-Uffink = " << num(pj.at("maassen_uffink"));
      if (!pj.at("de_vicente_analytic").is_null()) os << ", binary-entropy = " << num(pj.at("de_vicente_analytic"));
      os << '\n';
    }
    p.kv("mutually unbiased", r.at("mub").get<bool>() ? "yes" : "no");
    if (!r.at("wu_mub").is_null()) p.kv("MUB bound", num(r.at("wu_mub")));
    p.kv("best C", num(r.at("best").at("value"))).kv("best source", r.at("best").at("source").get<std::string>());
  } else if (cmd == "oracle") {
    print_oracle_json(r, 0);
  } else if (cmd == "lur") {
    print_lur_json(r, 0);
  } else if (cmd == "continuous") {
    p.kv("alpha", num(r.at("alpha_used"))).kv("alpha mode", r.at("alpha_mode").get<std::string>());
    p.kv("lower bound", num(r.at("lower_bound")));
  } else if (cmd == "demo") {
    for (const auto& [key, val] : r.items()) {
      os << key << ":\n";
      if (key.find("oracle") != std::string::npos)
        print_oracle_json(val, 2);
      else if (key.rfind("lur_", 0) == 0)
        print_lur_json(val, 2);
      else if (val.contains("per_operator"))
        print_bound_json(val, 2);
      else
        p.kv("alpha", num(val.at("alpha_used")), 2).kv("lower bound", num(val.at("lower_bound")), 2);
    }
  }
}

// ---------------------------------------------------------------------------
// entry point

/// Parses `args` (without the program name), runs the command and writes the report.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variance-based uncertainty bounds and local-uncertainty entanglement tests", "vurkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  bool as_json = false;
  Tolerances tol;
  std::uint64_t seed = 0;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit the machine-readable report");
    sub->add_option("--tol", tol.hermiticity, "Hermiticity tolerance for input matrices")->check(CLI::PositiveNumber);
    sub->add_option("--mub-tol", tol.mub, "Tolerance for the mutual-unbiasedness test")->check(CLI::PositiveNumber);
  };
  const auto add_search = [](CLI::App* sub, AlphaSearch& s) {
    sub->add_option("--alpha-min", s.lo, "Lower end of the alpha search");
    sub->add_option("--alpha-max", s.hi, "Upper end of the alpha search");
    sub->add_option("--alpha-points", s.points, "Log-spaced alpha samples before refinement");
  };

  BoundArgs bound;
  double bound_c = 0.0, bound_alpha = 0.0;
  auto* sub_bound = app.add_subcommand("bound", "State-independent lower bound on a sum of variances");
  sub_bound->add_option("inputs", bound.inputs, "Observable files or builtin:NAME")->required();
  auto* opt_c = sub_bound->add_option("--C", bound_c, "Entropic constant C (nats)");
  auto* opt_auto = sub_bound->add_flag("--auto-C", "Choose C with the built-in entropic calculators (default)");
  opt_c->excludes(opt_auto);
  auto* opt_alpha = sub_bound->add_option("--alpha", bound_alpha, "Evaluate at this alpha");
  auto* opt_opt = sub_bound->add_flag("--optimize", "Maximize the bound over alpha (default)");
  opt_alpha->excludes(opt_opt);
  add_search(sub_bound, bound.search);
  add_common(sub_bound);

  std::vector<std::string> entropic_inputs;
  auto* sub_entropic = app.add_subcommand("entropic", "Entropic constants for an observable set");
  sub_entropic->add_option("inputs", entropic_inputs, "Observable files or builtin:NAME")->required();
  add_common(sub_entropic);

  OracleArgs oracle;
  auto* sub_oracle = app.add_subcommand("oracle", "Brute-force minimum of the variance sum over pure states");
  sub_oracle->add_option("inputs", oracle.inputs, "Observable files or builtin:NAME")->required();
  sub_oracle->add_option("--restarts", oracle.config.restarts, "Random restarts")->check(CLI::PositiveNumber);
  sub_oracle->add_option("--max-iters", oracle.config.max_iters, "Descent iterations per restart")->check(CLI::PositiveNumber);
  sub_oracle->add_option("--seed", seed, "Seed for the restart streams");
  add_common(sub_oracle);

  LurArgs lur;
  double c_a = 0.0, c_b = 0.0, u_a = 0.0, u_b = 0.0;
  auto* sub_lur = app.add_subcommand("lur", "Local-uncertainty entanglement test");
  sub_lur->add_option("--state", lur.state, "State file or builtin:NAME")->required();
  sub_lur->add_option("--pairs", lur.pairs, "Pair specs: SET (paired with itself) or A,B")->required();
  auto* opt_lur_auto = sub_lur->add_flag("--auto-C", "Choose C_A, C_B automatically (default)");
  auto* opt_ca = sub_lur->add_option("--C-a", c_a, "Entropic constant for the A side");
  auto* opt_cb = sub_lur->add_option("--C-b", c_b, "Entropic constant for the B side");
  auto* opt_ua = sub_lur->add_option("--U-a", u_a, "Use this U_A instead of computing it");
  auto* opt_ub = sub_lur->add_option("--U-b", u_b, "Use this U_B instead of computing it");
  opt_ua->needs(opt_ub);
  opt_ub->needs(opt_ua);
  opt_lur_auto->excludes(opt_ca)->excludes(opt_cb)->excludes(opt_ua);
  add_search(sub_lur, lur.search);
  add_common(sub_lur);

  double cont_c = 0.0, cont_alpha = 0.0;
  auto* sub_cont = app.add_subcommand("continuous", "Position/momentum-type bound from an entropy constant");
  sub_cont->add_option("--C", cont_c, "Entropic constant C (nats)")->required();
  auto* opt_cont_alpha = sub_cont->add_option("--alpha", cont_alpha, "Evaluate at this alpha");
  add_common(sub_cont);

  std::string export_dir;
  auto* sub_demo = app.add_subcommand("demo", "Run the worked examples");
  sub_demo->add_option("--export", export_dir, "Also write the built-in fixtures as JSON into this directory");
  sub_demo->add_option("--seed", seed, "Seed for the oracle runs");
  add_common(sub_demo);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here with a success code
    return app.exit(e, out, err) == 0 ? kOk : kParseFailure;
  }

  try {
    io::json report;
    if (sub_bound->parsed()) {
      if (*opt_c) bound.c = bound_c;
      if (*opt_alpha) bound.alpha = bound_alpha;
      report = cmd_bound(bound, args, tol);
    } else if (sub_entropic->parsed()) {
      report = cmd_entropic(entropic_inputs, args, tol);
    } else if (sub_oracle->parsed()) {
      oracle.config.seed = seed;
      report = cmd_oracle(oracle, args, tol);
    } else if (sub_lur->parsed()) {
      if (*opt_ca) lur.c_a = c_a;
      if (*opt_cb) lur.c_b = c_b;
      if (*opt_ua) {
        lur.u_a = u_a;
        lur.u_b = u_b;
      }
      report = cmd_lur(lur, args, tol);
    } else if (sub_cont->parsed()) {
      std::optional<double> alpha;
      if (*opt_cont_alpha) alpha = cont_alpha;
      report = cmd_continuous(cont_c, alpha, args);
    } else if (sub_demo->parsed()) {
      if (!export_dir.empty()) export_fixtures(export_dir);
      report = cmd_demo(args, seed, configured_threads());
    }
    if (as_json)
      out << report.dump(2) << '\n';
    else
      render_text(report, out);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const NotHermitianError& e) {
    err << "not Hermitian: " << e.what() << '\n';
    return kNotHermitian;
  } catch (const InvalidStateError& e) {
    err << "invalid state: " << e.what() << '\n';
    return kInvalidState;
  } catch (const DomainError& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace vurkit::cli

#endif // VURKIT_CLI_APP_HPP
