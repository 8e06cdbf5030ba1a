#include <betawalk/cli.hpp>

#include <betawalk/catalog.hpp>
#include <betawalk/moments.hpp>
#include <betawalk/numeric.hpp>
#include <betawalk/parallel.hpp>
#include <betawalk/serialize.hpp>
#include <betawalk/walk.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace betawalk::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "a..b", "a,b,c" or "a"; all values >= `min`.
std::vector<unsigned> parse_range(const std::string& text, unsigned min = 1) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad integer '" + s + "' in range '" + text + "'");
    const unsigned long v = std::stoul(s);
    if (v < min || v > 100000) throw UsageError("value " + s + " out of range in '" + text + "'");
    return static_cast<unsigned>(v);
  };
  std::vector<unsigned> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const unsigned a = number(text.substr(0, dots));
    const unsigned b = number(text.substr(dots + 2));
    if (a > b) throw UsageError("empty range '" + text + "'");
    for (unsigned v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  if (out.empty()) throw UsageError("empty range");
  return out;
}

BigRational parse_exact(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not an integer or a/b rational (decimals need --mode float)");
  }
}

/// Decimal or a/b.
double parse_real(const std::string& text, const std::string& what) {
  if (text.find('/') != std::string::npos) return to_double(parse_exact(text, what));
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw UsageError("empty list");
  return out;
}

/// Writes OutputRecords in the selected format. CSV headers are printed once per payload kind.
class Emitter {
 public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  void emit(const std::string& command, const nlohmann::json& parameters, const std::string& status,
            const std::string& kind, const nlohmann::json& payload, const std::vector<std::string>& csv_header,
            const std::vector<std::string>& csv_fields, const std::string& plain) {
    if (format_ == "json") {
      nlohmann::json rec = {{"command", command},
                            {"parameters", parameters},
                            {"status", status},
                            {"payloadKind", kind},
                            {"payload", payload}};
      out_ << rec.dump() << '\n';
    } else if (format_ == "csv") {
      if (headers_.insert(kind).second) {
        std::vector<std::string> h{"command"};
        h.insert(h.end(), csv_header.begin(), csv_header.end());
        h.push_back("status");
        out_ << csv_row(h) << '\n';
      }
      std::vector<std::string> f{command};
      f.insert(f.end(), csv_fields.begin(), csv_fields.end());
      f.push_back(status);
      out_ << csv_row(f) << '\n';
    } else {
      out_ << plain << '\n';
    }
  }

 private:
  std::ostream& out_;
  std::string format_;
  std::set<std::string> headers_;
};

std::string joined_parameters(const IdentityReport& r) {
  std::string s;
  for (const auto& [k, v] : r.parameters) s += (s.empty() ? "" : ";") + k + "=" + v;
  return s;
}

const std::vector<std::string>& report_header() {
  static const std::vector<std::string> h{"identity", "parameters", "mode", "lhs", "rhs", "verified",
                                          "printedLhs", "printedRhs", "printedHolds"};
  return h;
}

void emit_report(Emitter& em, const std::string& command, const nlohmann::json& params,
                        const IdentityReport& r, bool timing) {
  const std::string status = r.verified ? "ok" : "violated";
  std::vector<std::string> fields{r.identity, joined_parameters(r), to_string(r.mode)};
  std::string plain = r.identity + " " + joined_parameters(r) + ": ";
  if (r.mode == Mode::exact) {
    fields.push_back(r.lhs.str());
    fields.push_back(r.rhs.str());
    plain += "lhs=" + r.lhs.str() + " rhs=" + r.rhs.str();
  } else {
    const auto& f = *r.float_check;
    fields.push_back(nlohmann::json(f.lhs).dump());
    fields.push_back(nlohmann::json(f.rhs).dump());
    plain += "lhs=" + nlohmann::json(f.lhs).dump() + " rhs=" + nlohmann::json(f.rhs).dump();
  }
  fields.push_back(r.verified ? "true" : "false");
  if (r.printed) {
    fields.push_back(r.printed->lhs.str());
    fields.push_back(r.printed->rhs.str());
    fields.push_back(r.printed->holds ? "true" : "false");
  } else {
    fields.insert(fields.end(), {"", "", ""});
  }
  plain += r.verified ? " verified" : " VIOLATED";
  if (r.printed && !r.printed->holds)
    plain += " [printed form: " + r.printed->lhs.str() + " vs " + r.printed->rhs.str() + "]";
  em.emit(command, params, status, "IdentityReport", to_json(r, timing), report_header(), fields, plain);
}

void emit_value(Emitter& em, const std::string& command, const nlohmann::json& params, const BigRational& v) {
  em.emit(command, params, "ok", "value", {{"value", rational_json(v)}}, {"parameters", "exact", "decimal"},
          {params.dump(), to_string(v), to_decimal(v)}, to_string(v) + "\t" + to_decimal(v));
}

void emit_float(Emitter& em, const std::string& command, const nlohmann::json& params,
                       const FloatVerification& f) {
  auto num = [](double x) { return real_json(x).dump(); };
  em.emit(command, params, f.passed ? "ok" : "violated", "FloatVerification", to_json(f),
          {"parameters", "lhs", "rhs", "absDiff", "relDiff", "conditionNumber", "tolerance", "passed"},
          {params.dump(), num(f.lhs), num(f.rhs), num(f.abs_diff), num(f.rel_diff), num(f.condition_number),
           num(f.tolerance), f.passed ? "true" : "false"},
          params.dump() + ": lhs=" + num(f.lhs) + " rhs=" + num(f.rhs) + " relDiff=" + num(f.rel_diff) +
              " cond=" + num(f.condition_number) + (f.passed ? " passed" : " FAILED"));
}

void emit_simulation(Emitter& em, const std::string& command, const nlohmann::json& params,
                            const SimulationResult& s, bool ok) {
  auto num = [](double x) { return real_json(x).dump(); };
  em.emit(command, params, ok ? "ok" : "violated", "SimulationResult", to_json(s),
          {"kind", "dimension", "halfSteps", "trials", "hits", "estimate", "stdError", "exactReference", "zScore",
           "seed", "workers"},
          {s.kind, std::to_string(s.dimension), std::to_string(s.half_steps), std::to_string(s.trials),
           std::to_string(s.hits), num(s.estimate), num(s.std_error), to_string(s.exact_reference), num(s.z_score),
           std::to_string(s.seed), std::to_string(s.workers)},
          s.kind + " k=" + std::to_string(s.dimension) + " n=" + std::to_string(s.half_steps) +
              " estimate=" + num(s.estimate) + " stdError=" + num(s.std_error) + " exact=" +
              to_string(s.exact_reference) + " z=" + num(s.z_score));
}

struct Common {
  std::string format = "plain";
  unsigned threads = 0;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_option("--threads", c.threads, "Worker threads (default: BETAWALK_THREADS or CPU count)");
  cmd->add_flag("--timing", c.timing, "Include elapsed times in identity reports");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact beta-moment identities and lattice walk return probabilities", "betawalk"};
  app.require_subcommand(1);
  Common common;

  // verify
  auto* verify = app.add_subcommand("verify", "Verify moment identities");
  verify->require_subcommand(1);
  std::string v_n = "1", v_k, v_coeffs, v_fill, v_p = "1/2", v_mode = "exact";
  double v_tol = 1e-10;
  auto* v_master = verify->add_subcommand("master", "Both expansions of E[(sum c_i U_i)^(2n)]");
  v_master->add_option("--n", v_n, "n as a range: 3, 1..4 or 1,2,5");
  v_master->add_option("--k", v_k, "Dimension range; coefficients default to 1/k each");
  v_master->add_option("--coeffs", v_coeffs, "Comma-separated coefficients, e.g. 1/3,1/3,1/3");
  v_master->add_option("--fill", v_fill, "With --k: use this value for every coefficient");
  v_master->add_option("--p", v_p, "Beta shape p (a/b in exact mode, decimal allowed in float mode)");
  v_master->add_option("--mode", v_mode)->check(CLI::IsMember({"exact", "float"}));
  v_master->add_option("--tolerance", v_tol);
  add_common(v_master, common);
  auto* v_equal = verify->add_subcommand("equal-coeff", "Equal-coefficient form and its scaling invariance");
  v_equal->add_option("--n", v_n);
  v_equal->add_option("--k", v_k);
  v_equal->add_option("--p", v_p);
  add_common(v_equal, common);

  // compute
  auto* compute = app.add_subcommand("compute", "Exact values");
  compute->require_subcommand(1);
  unsigned c_dim = 1, c_steps = 2, c_n = 1;
  std::string c_p = "1/2";
  bool c_allow_odd = false;
  auto* c_ret = compute->add_subcommand("return-prob", "P(walk at origin after --steps steps)");
  auto* c_cnt = compute->add_subcommand("path-count", "Number of closed paths of length --steps");
  for (auto* sub : {c_ret, c_cnt}) {
    sub->add_option("--dim", c_dim)->check(CLI::Range(1u, 1000u));
    sub->add_option("--steps", c_steps)->check(CLI::Range(1u, 100000u));
    sub->add_flag("--allow-odd", c_allow_odd, "Accept odd --steps (result is 0)");
    add_common(sub, common);
  }
  auto* c_mom = compute->add_subcommand("moment", "E[U^(2n)] for U = 2X-1, X ~ Be(p,p)");
  c_mom->add_option("--n", c_n)->check(CLI::Range(1u, 100000u));
  c_mom->add_option("--p", c_p);
  add_common(c_mom, common);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive path enumeration against the exact probability");
  unsigned o_dim = 1, o_steps = 2;
  std::uint64_t o_budget = kDefaultPathBudget;
  oracle->add_option("--dim", o_dim)->check(CLI::Range(1u, 1000u));
  oracle->add_option("--steps", o_steps)->check(CLI::Range(1u, 100000u));
  oracle->add_option("--budget", o_budget, "Maximum number of paths to enumerate");
  add_common(oracle, common);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo estimates");
  simulate->require_subcommand(1);
  unsigned s_dim = 1, s_n = 1;
  long long s_trials = 1'000'000;
  std::uint64_t s_seed = 1;
  auto* s_walk = simulate->add_subcommand("walk", "Walk paths");
  auto* s_beta = simulate->add_subcommand("beta", "Arcsine-variable moments");
  for (auto* sub : {s_walk, s_beta}) {
    sub->add_option("--dim", s_dim)->check(CLI::Range(1u, 1000u));
    sub->add_option("--n", s_n)->check(CLI::Range(1u, 100000u));
    sub->add_option("--trials", s_trials);
    sub->add_option("--seed", s_seed);
    add_common(sub, common);
  }

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Identity catalog");
  catalog_cmd->require_subcommand(1);
  auto* cat_list = catalog_cmd->add_subcommand("list", "List entries");
  add_common(cat_list, common);
  std::string cat_name = "all";
  auto* cat_verify = catalog_cmd->add_subcommand("verify", "Verify an entry over its range");
  cat_verify->add_option("name", cat_name, "Entry name or 'all'");
  add_common(cat_verify, common);

  // series402
  auto* series = app.add_subcommand("series402", "Partial sums of the Pochhammer series for the 2-D probability");
  unsigned se_n = 0;
  std::string se_variant = "all";
  std::uint64_t se_max = 1'000'000;
  double se_cutoff = 1e-12;
  series->add_option("--n", se_n);
  series->add_option("--variant", se_variant)
      ->check(CLI::IsMember({"all", "printed", "over-k-factorial", "over-k-factorial-squared"}));
  series->add_option("--max-terms", se_max);
  series->add_option("--cutoff", se_cutoff);
  add_common(series, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const unsigned threads = common.threads > 0 ? common.threads : default_threads();
  Emitter em(out, common.format);

  // Records are buffered so a usage error discovered midway leaves stdout empty.
  std::ostringstream buffer;
  Emitter bem(buffer, common.format);
  int code = kOk;
  auto flush = [&] { out << buffer.str(); };

  try {
    if (v_master->parsed()) {
      const auto ns = parse_range(v_n);
      if (!v_k.empty() && !v_coeffs.empty()) throw UsageError("--k and --coeffs are mutually exclusive");
      if (!v_fill.empty() && v_k.empty()) throw UsageError("--fill requires --k");
      const bool exact = v_mode == "exact";
      if (!(v_tol > 0)) throw UsageError("--tolerance must be > 0");

      // Each entry: display string and the coefficient texts.
      std::vector<std::vector<std::string>> coeff_sets;
      if (!v_k.empty()) {
        for (unsigned k : parse_range(v_k))
          coeff_sets.emplace_back(k, v_fill.empty() ? "1/" + std::to_string(k) : v_fill);
      } else {
        coeff_sets.push_back(split_list(v_coeffs.empty() ? "1" : v_coeffs));
      }

      if (exact) {
        const BigRational p = parse_exact(v_p, "--p");
        if (p <= 0) throw UsageError("--p must be > 0");
        std::optional<BetaParams> beta;
        try {
          beta = BetaParams::from_rational(p);
        } catch (const std::exception&) {
          throw UsageError("--p " + v_p + " must be a multiple of 1/2 in exact mode (use --mode float)");
        }
        std::vector<CoefficientVector> cvs;
        for (const auto& set : coeff_sets) {
          std::vector<BigRational> c;
          for (const auto& s : set) c.push_back(parse_exact(s, "coefficient"));
          for (const auto& q : c)
            if (q <= 0) throw UsageError("coefficients must be > 0");
          cvs.emplace_back(std::move(c));
        }
        for (const auto& cv : cvs)
          for (unsigned n : ns) {
            const auto r = verify_master(n, cv, *beta, Mode::exact, threads);
            if (!r.verified) code = kViolated;
            emit_report(bem, "verify master", {{"threads", threads}}, r, common.timing);
          }
      } else {
        const double p = parse_real(v_p, "--p");
        if (!(p > 0)) throw UsageError("--p must be > 0");
        std::vector<std::vector<double>> cvs;
        for (const auto& set : coeff_sets) {
          std::vector<double> c;
          for (const auto& s : set) {
            const double x = parse_real(s, "coefficient");
            if (!(x > 0)) throw UsageError("coefficients must be > 0");
            c.push_back(x);
          }
          cvs.push_back(std::move(c));
        }
        for (const auto& c : cvs)
          for (unsigned n : ns) {
            const auto f = verify_master_float(n, c, p, v_tol);
            if (!f.passed) code = kViolated;
            nlohmann::json params = {{"n", n}, {"coeffs", c}, {"p", p}, {"threads", threads}};
            emit_float(bem, "verify master", params, f);
          }
      }
    } else if (v_equal->parsed()) {
      const auto ns = parse_range(v_n);
      const auto ks = parse_range(v_k.empty() ? "1" : v_k);
      const BigRational p = parse_exact(v_p, "--p");
      if (p <= 0) throw UsageError("--p must be > 0");
      BetaParams beta(HalfInt{1});
      try {
        beta = BetaParams::from_rational(p);
      } catch (const std::exception&) {
        throw UsageError("--p must be a multiple of 1/2");
      }
      for (unsigned k : ks)
        for (unsigned n : ns) {
          const auto r = verify_equal_coeff_form(n, k, beta, threads);
          if (!r.verified) code = kViolated;
          emit_report(bem, "verify equal-coeff", {{"threads", threads}}, r, common.timing);
        }
    } else if (c_ret->parsed() || c_cnt->parsed()) {
      const bool odd = c_steps % 2 == 1;
      if (odd && !c_allow_odd) throw UsageError("--steps must be even (pass --allow-odd to get the exact 0)");
      nlohmann::json params = {{"dim", c_dim}, {"steps", c_steps}, {"threads", threads}};
      if (c_ret->parsed()) {
        const BigRational v = odd ? return_probability_odd(c_dim, c_steps) : return_probability(c_dim, c_steps / 2);
        emit_value(bem, "compute return-prob", params, v);
      } else {
        const PathCount pc = odd ? PathCount{0, pow(BigInt(2 * c_dim), c_steps)} : return_path_count(c_dim, c_steps / 2);
        bem.emit("compute path-count", params, "ok", "PathCount", to_json(pc),
                 {"parameters", "count", "totalPaths", "probability"},
                 {params.dump(), pc.count.get_str(), pc.total_paths.get_str(), to_string(pc.probability())},
                 pc.count.get_str() + "/" + pc.total_paths.get_str());
      }
    } else if (c_mom->parsed()) {
      const BigRational p = parse_exact(c_p, "--p");
      if (p <= 0) throw UsageError("--p must be > 0");
      BetaParams beta(HalfInt{1});
      try {
        beta = BetaParams::from_rational(p);
      } catch (const std::exception&) {
        throw UsageError("--p must be a multiple of 1/2");
      }
      const PiRational m = moment_u2n(c_n, beta);
      emit_value(bem, "compute moment", {{"n", c_n}, {"p", beta.str()}, {"threads", threads}}, m.coeff());
    } else if (oracle->parsed()) {
      if (o_steps % 2 == 1) throw UsageError("--steps must be even");
      PathCount pc;
      try {
        pc = brute_force_return(o_dim, o_steps / 2, o_budget);
      } catch (const BudgetExceeded& e) {
        throw UsageError(std::string(e.what()) + "; rerun with --budget " + e.required().get_str());
      }
      const BigRational exact = return_probability(o_dim, o_steps / 2);
      const bool match = pc.probability() == exact;
      if (!match) code = kViolated;
      nlohmann::json params = {{"dim", o_dim}, {"steps", o_steps}, {"budget", o_budget}, {"threads", threads}};
      nlohmann::json payload = to_json(pc);
      payload["exactReference"] = rational_json(exact);
      payload["match"] = match;
      bem.emit("oracle", params, match ? "ok" : "violated", "PathCount", payload,
               {"parameters", "count", "totalPaths", "exactReference", "match"},
               {params.dump(), pc.count.get_str(), pc.total_paths.get_str(), to_string(exact), match ? "true" : "false"},
               pc.count.get_str() + "/" + pc.total_paths.get_str() + (match ? " match" : " MISMATCH") + " (exact " +
                   to_string(exact) + ")");
    } else if (s_walk->parsed() || s_beta->parsed()) {
      if (s_trials < 1) throw UsageError("--trials must be >= 1");
      const auto trials = static_cast<std::uint64_t>(s_trials);
      const SimulationResult s = s_walk->parsed() ? simulate_walk(WalkSpec(s_dim, s_n), trials, s_seed, threads)
                                                  : simulate_beta_moment(s_dim, s_n, trials, s_seed, threads);
      const bool ok = s.within(4.0);
      if (!ok) code = kStatistical;
      emit_simulation(bem, std::string("simulate ") + s.kind, {{"threads", threads}}, s, ok);
    } else if (cat_list->parsed()) {
      for (const auto& e : catalog()) {
        if (e.erratum) err << "ERRATUM [" << e.location << "] " << e.name << ": " << *e.erratum << "\n";
        bem.emit("catalog list", nlohmann::json::object(), "ok", "CatalogEntry", to_json(e),
                 {"name", "paperLocation", "variant", "parameterRange", "erratum"},
                 {e.name, e.location, to_string(e.variant), e.parameter_range, e.erratum.value_or("")},
                 e.name + "\t" + to_string(e.variant) + "\t" + e.parameter_range + "\t" + e.location);
      }
    } else if (cat_verify->parsed()) {
      std::vector<const CatalogEntry*> entries;
      if (cat_name == "all") {
        for (const auto& e : catalog()) entries.push_back(&e);
      } else if (const auto* e = find_entry(cat_name)) {
        entries.push_back(e);
      } else {
        throw UsageError("unknown catalog entry '" + cat_name + "'");
      }
      for (const auto* e : entries) {
        if (e->erratum) err << "ERRATUM [" << e->location << "] " << e->name << ": " << *e->erratum << "\n";
        std::size_t passed = 0;
        const auto reports = e->verify_range();
        for (const auto& r : reports) {
          if (r.verified)
            ++passed;
          else
            code = kViolated;
          emit_report(bem, "catalog verify", {{"entry", e->name}, {"threads", threads}}, r, common.timing);
        }
        if (e->counterexample) {
          const auto cx = e->counterexample();
          emit_report(bem, "catalog counterexample", {{"entry", e->name}, {"threads", threads}}, cx, common.timing);
          if (cx.printed)
            err << "  printed form at " << joined_parameters(cx) << ": " << cx.printed->lhs.str() << " vs "
                << cx.printed->rhs.str() << (cx.printed->holds ? " (holds)" : " (fails)") << "; corrected: "
                << cx.lhs.str() << " = " << cx.rhs.str() << "\n";
        }
        err << e->name << ": " << passed << "/" << reports.size() << " verified (" << e->parameter_range << ")\n";
      }
    } else if (series->parsed()) {
      if (se_max < 1) throw UsageError("--max-terms must be >= 1");
      if (!(se_cutoff > 0)) throw UsageError("--cutoff must be > 0");
      std::vector<SeriesVariant> variants;
      if (se_variant == "all")
        variants = {SeriesVariant::printed, SeriesVariant::over_k_factorial, SeriesVariant::over_k_factorial_squared};
      else
        variants = {parse_series_variant(se_variant)};
      SeriesOptions opt;
      opt.max_terms = se_max;
      opt.cutoff = se_cutoff;
      for (auto v : variants) {
        const auto s = evaluate_series402(se_n, v, opt);
        auto num = [](double x) { return real_json(x).dump(); };
        nlohmann::json params = {{"n", se_n}, {"variant", to_string(v)}, {"maxTerms", se_max},
                                 {"cutoff", se_cutoff}, {"threads", threads}};
        const std::string state = s.converged ? "converged" : s.diverged ? "diverged" : "not-converged";
        bem.emit("series402", params, "ok", "SeriesEvaluation", to_json(s),
                 {"variant", "n", "termCount", "lastTerm", "lastPartialSum", "converged", "diverged",
                  "limitEstimate", "target", "matchesTarget"},
                 {s.variant, std::to_string(s.n), std::to_string(s.term_count), num(s.last_term),
                  num(s.last_partial_sum), s.converged ? "true" : "false", s.diverged ? "true" : "false",
                  num(s.limit_estimate), num(s.target), s.matches_target ? "true" : "false"},
                 s.variant + " n=" + std::to_string(s.n) + ": " + state + " after " + std::to_string(s.term_count) +
                     " terms, limit/pi=" + num(s.limit_estimate) + " target=" + num(s.target) +
                     (s.matches_target ? " (matches)" : " (no match)"));
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  flush();
  (void)em;
  return code;
}

}  // namespace betawalk::cli
