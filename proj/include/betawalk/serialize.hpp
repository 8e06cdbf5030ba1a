#pragma once

// JSON and CSV renderings of the result types. Field names are stable; see
// README.md for the full list.

#include <betawalk/catalog.hpp>
#include <betawalk/exact.hpp>
#include <betawalk/numeric.hpp>
#include <betawalk/report.hpp>
#include <betawalk/walk.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace betawalk {

/// Correctly rounded decimal with `digits` significant digits (half away from
/// zero), in %g style: fixed for exponents in [-5, digits), scientific otherwise.
inline std::string to_decimal(const BigRational& q, int digits = 15) {
  if (q == 0) return "0";
  const bool negative = q < 0;
  const BigRational a = negative ? BigRational(-q) : q;

  // 10^e <= a < 10^(e+1)
  long e = static_cast<long>(std::floor(std::log10(std::fabs(a.get_d()))));
  auto ten_pow = [](long x) { return pow(BigRational(10), x); };
  while (a < ten_pow(e)) --e;
  while (a >= ten_pow(e + 1)) ++e;

  auto rounded = [&](long exponent) {
    const BigRational scaled = a * ten_pow(digits - 1 - exponent);
    BigInt m;
    BigInt twice_num = scaled.get_num() * 2 + scaled.get_den();
    BigInt twice_den = scaled.get_den() * 2;
    mpz_fdiv_q(m.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    return m;
  };
  BigInt mant = rounded(e);
  if (mant >= pow(BigInt(10), static_cast<unsigned long>(digits))) {
    ++e;
    mant = rounded(e);
  }
  std::string ds = mant.get_str();  // exactly `digits` characters
  std::string out;
  if (e >= -5 && e < digits) {
    if (e >= 0) {
      out = ds.substr(0, static_cast<std::size_t>(e + 1));
      std::string frac = ds.substr(static_cast<std::size_t>(e + 1));
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out = "0." + frac;
    }
  } else {
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = ds.substr(0, 1) + (frac.empty() ? "" : "." + frac);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += buf;
  }
  return negative ? "-" + out : out;
}

/// Doubles with 17 significant digits; non-finite values become strings.
inline nlohmann::json real_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline nlohmann::json rational_json(const BigRational& q) {
  return {{"exact", to_string(q)}, {"decimal", to_decimal(q)}};
}

inline nlohmann::json to_json(const PiRational& v) {
  return {{"coeff", to_string(v.coeff())}, {"sqrtPiPow", v.half_pi_pow()}};
}

inline nlohmann::json to_json(const FloatVerification& f) {
  return {{"lhs", real_json(f.lhs)},
          {"rhs", real_json(f.rhs)},
          {"absDiff", real_json(f.abs_diff)},
          {"relDiff", real_json(f.rel_diff)},
          {"conditionNumber", real_json(f.condition_number)},
          {"tolerance", real_json(f.tolerance)},
          {"passed", f.passed}};
}

inline nlohmann::json to_json(const PrintedForm& p) {
  return {{"location", p.location},
          {"description", p.description},
          {"lhs", to_json(p.lhs)},
          {"rhs", to_json(p.rhs)},
          {"holds", p.holds}};
}

/// `with_timing` adds "elapsedMs"; without it the record is deterministic.
inline nlohmann::json to_json(const IdentityReport& r, bool with_timing = false) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  nlohmann::json j = {{"identityName", r.identity}, {"parameters", params}, {"mode", to_string(r.mode)}};
  if (r.mode == Mode::exact) {
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
  } else if (r.float_check) {
    j["lhs"] = real_json(r.float_check->lhs);
    j["rhs"] = real_json(r.float_check->rhs);
    j["floatCheck"] = to_json(*r.float_check);
  }
  j["verified"] = r.verified;
  if (r.printed) j["printedForm"] = to_json(*r.printed);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timing) j["elapsedMs"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

inline nlohmann::json to_json(const PathCount& p) {
  return {{"count", p.count.get_str()}, {"totalPaths", p.total_paths.get_str()},
          {"probability", rational_json(p.probability())}};
}

inline nlohmann::json to_json(const SimulationResult& s) {
  return {{"kind", s.kind},
          {"dimension", s.dimension},
          {"halfSteps", s.half_steps},
          {"trials", s.trials},
          {"hits", s.hits},
          {"estimate", real_json(s.estimate)},
          {"stdError", real_json(s.std_error)},
          {"exactReference", rational_json(s.exact_reference)},
          {"zScore", real_json(s.z_score)},
          {"seed", s.seed},
          {"workers", s.workers}};
}

inline nlohmann::json to_json(const SeriesEvaluation& s) {
  nlohmann::json terms = nlohmann::json::array(), sums = nlohmann::json::array();
  for (double t : s.terms) terms.push_back(real_json(t));
  for (double t : s.partial_sums) sums.push_back(real_json(t));
  return {{"variantName", s.variant},
          {"n", s.n},
          {"terms", terms},
          {"partialSums", sums},
          {"exactTerms", s.exact_terms},
          {"termCount", s.term_count},
          {"lastTerm", real_json(s.last_term)},
          {"lastPartialSum", real_json(s.last_partial_sum)},
          {"lastTermRatio", real_json(s.last_term_ratio)},
          {"converged", s.converged},
          {"diverged", s.diverged},
          {"tailEstimate", real_json(s.tail_estimate)},
          {"limitEstimate", real_json(s.limit_estimate)},
          {"target", real_json(s.target)},
          {"matchesTarget", s.matches_target}};
}

inline nlohmann::json to_json(const CatalogEntry& e) {
  nlohmann::json j = {{"name", e.name},
                      {"paperLocation", e.location},
                      {"variant", to_string(e.variant)},
                      {"parameterRange", e.parameter_range}};
  j["erratum"] = e.erratum ? nlohmann::json(*e.erratum) : nlohmann::json(nullptr);
  return j;
}

/// Quotes a CSV field when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out;
}

}  // namespace betawalk
