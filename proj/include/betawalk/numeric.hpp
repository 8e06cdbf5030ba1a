#pragma once

// Floating-point evaluation of the master moment identity for arbitrary real
// shape p > 0, and partial-sum diagnostics for a Pochhammer series whose
// right-hand side is the planar return probability.

#include <betawalk/compositions.hpp>
#include <betawalk/exact.hpp>
#include <betawalk/report.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace betawalk {

#if defined(__SIZEOF_FLOAT128__)
using WideReal = __float128;
#else
using WideReal = long double;
#endif

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw std::domain_error("log_gamma: argument must be positive and finite");
  return boost::math::lgamma(x);
}

/// Neumaier-compensated running sum.
template <typename Real>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    const Real ax = x < 0 ? -x : x;
    const Real as = sum_ < 0 ? -sum_ : sum_;
    if (as >= ax)
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
};

namespace detail {

/// Exact conversion of a big integer to WideReal (up to its precision).
inline WideReal to_wide(const BigInt& v) {
  WideReal r = 0;
  const mpz_srcptr z = v.get_mpz_t();
  const std::size_t limbs = mpz_size(z);
  const WideReal limb_base = static_cast<WideReal>(18446744073709551616.0);  // 2^64
  static_assert(sizeof(mp_limb_t) == 8);
  for (std::size_t i = limbs; i-- > 0;) r = r * limb_base + static_cast<WideReal>(mpz_getlimbn(z, i));
  return mpz_sgn(z) < 0 ? -r : r;
}

inline WideReal wide_abs(WideReal x) { return x < 0 ? -x : x; }

inline double condition(WideReal abs_sum, WideReal value) {
  if (value == 0) return abs_sum == 0 ? 1.0 : HUGE_VAL;
  return static_cast<double>(abs_sum / wide_abs(value));
}

}  // namespace detail

inline FloatVerification compare_values(double lhs, double rhs, double condition_number, double tolerance) {
  FloatVerification v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.abs_diff = std::fabs(lhs - rhs);
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  v.rel_diff = scale == 0 ? 0.0 : v.abs_diff / scale;
  v.condition_number = condition_number;
  v.tolerance = tolerance;
  v.passed = v.rel_diff <= tolerance * std::max(1.0, condition_number);
  return v;
}

/// Both expansions of E[(sum c_i U_i)^(2n)], U_i = 2X_i - 1, X_i ~ Be(p,p),
/// evaluated in floating point after dividing by B(p,p)^k.
///
/// Beta ratios come from Pochhammer recurrences anchored at
/// B(j+p,p)/B(p,p) = (p)_j / (2p)_j and
/// B(i+1/2,p)/B(p,p) = [B(1/2,p)/B(p,p)] (1/2)_i / (p+1/2)_i,
/// where the anchor uses log_gamma. Terms are accumulated in WideReal with
/// compensation, since the multinomial side alternates in sign.
inline FloatVerification verify_master_float(unsigned n, std::span<const double> c, double p,
                                             double tolerance = 1e-10) {
  if (n < 1) throw std::invalid_argument("verify_master_float: n must be >= 1");
  if (c.empty()) throw std::invalid_argument("verify_master_float: need at least one coefficient");
  for (double ci : c)
    if (!(ci > 0) || !std::isfinite(ci)) throw std::invalid_argument("verify_master_float: coefficients must be > 0");
  if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("verify_master_float: p must be > 0");

  const auto k = static_cast<unsigned>(c.size());
  const unsigned m = 2 * n;
  const WideReal wp = p;

  WideReal csum = 0;
  for (double ci : c) csum += ci;

  // (p)_j / (2p)_j for j = 0..2n
  std::vector<WideReal> lhs_ratio(m + 1);
  lhs_ratio[0] = 1;
  for (unsigned j = 1; j <= m; ++j) lhs_ratio[j] = lhs_ratio[j - 1] * (wp + (j - 1)) / (2 * wp + (j - 1));

  std::vector<std::vector<WideReal>> lhs_table(k, std::vector<WideReal>(m + 1));
  for (unsigned s = 0; s < k; ++s) {
    WideReal power = 1;
    const WideReal base = -2 * static_cast<WideReal>(c[s]);
    for (unsigned j = 0; j <= m; ++j, power *= base) lhs_table[s][j] = power * lhs_ratio[j];
  }
  std::vector<WideReal> csum_pow(m + 1);
  csum_pow[0] = 1;
  for (unsigned j = 1; j <= m; ++j) csum_pow[j] = csum_pow[j - 1] * csum;

  CompensatedSum<WideReal> lhs_sum;
  WideReal lhs_abs = 0;
  for (const auto& comp : WeakCompositions(m, k + 1)) {
    WideReal term = detail::to_wide(multinomial(m, comp.parts())) * csum_pow[comp[0]];
    for (unsigned s = 0; s < k; ++s) term *= lhs_table[s][comp[s + 1]];
    lhs_sum += term;
    lhs_abs += detail::wide_abs(term);
  }

  const double anchor =
      std::exp(log_gamma(0.5) + log_gamma(2 * p) - log_gamma(p + 0.5) - log_gamma(p));  // B(1/2,p)/B(p,p)
  std::vector<WideReal> rhs_ratio(n + 1);
  rhs_ratio[0] = anchor;
  for (unsigned i = 1; i <= n; ++i)
    rhs_ratio[i] = rhs_ratio[i - 1] * (static_cast<WideReal>(i) - WideReal(0.5)) / (wp + WideReal(0.5) + (i - 1));

  std::vector<std::vector<WideReal>> rhs_table(k, std::vector<WideReal>(n + 1));
  for (unsigned j = 0; j < k; ++j) {
    WideReal power = 1;
    const WideReal sq = static_cast<WideReal>(c[j]) * static_cast<WideReal>(c[j]);
    for (unsigned i = 0; i <= n; ++i, power *= sq) rhs_table[j][i] = power * rhs_ratio[i];
  }

  CompensatedSum<WideReal> rhs_sum;
  WideReal rhs_abs = 0;
  std::vector<unsigned> doubled(k);
  for (const auto& comp : WeakCompositions(n, k)) {
    for (unsigned j = 0; j < k; ++j) doubled[j] = 2 * comp[j];
    WideReal term = detail::to_wide(multinomial(m, doubled));
    for (unsigned j = 0; j < k; ++j) term *= rhs_table[j][comp[j]];
    rhs_sum += term;
    rhs_abs += detail::wide_abs(term);
  }
  const WideReal rhs_scale = std::exp2((2 * p - 1) * static_cast<double>(k));
  const WideReal rhs_value = rhs_sum.value() / rhs_scale;
  const WideReal lhs_value = lhs_sum.value();

  const double cond = std::max(detail::condition(lhs_abs, lhs_value), detail::condition(rhs_abs, rhs_sum.value()));
  return compare_values(static_cast<double>(lhs_value), static_cast<double>(rhs_value), cond, tolerance);
}

inline FloatVerification verify_master_float(unsigned n, const std::vector<double>& c, double p,
                                             double tolerance = 1e-10) {
  return verify_master_float(n, std::span<const double>(c), p, tolerance);
}

/// Normalizations of the Pochhammer series: the k-th term is divided by 1, k!, or (k!)^2.
enum class SeriesVariant { printed, over_k_factorial, over_k_factorial_squared };

inline const char* to_string(SeriesVariant v) {
  switch (v) {
    case SeriesVariant::printed:
      return "printed";
    case SeriesVariant::over_k_factorial:
      return "over-k-factorial";
    case SeriesVariant::over_k_factorial_squared:
      return "over-k-factorial-squared";
  }
  return "?";
}

inline SeriesVariant parse_series_variant(const std::string& s) {
  if (s == "printed") return SeriesVariant::printed;
  if (s == "over-k-factorial" || s == "overKFactorial") return SeriesVariant::over_k_factorial;
  if (s == "over-k-factorial-squared" || s == "overKFactorialSquared") return SeriesVariant::over_k_factorial_squared;
  throw std::invalid_argument("unknown series variant '" + s + "'");
}

struct SeriesEvaluation {
  std::string variant;
  unsigned n = 0;
  /// t_k and the running sums sum_{i<=k} t_i (not divided by pi), first `recorded` indices.
  std::vector<double> terms;
  std::vector<double> partial_sums;
  /// Exact rational t_k as "a/b" for the first few indices.
  std::vector<std::string> exact_terms;
  std::uint64_t term_count = 0;
  double last_term = 0;
  double last_partial_sum = 0;
  double last_term_ratio = 0;
  bool converged = false;
  bool diverged = false;
  /// Power-law tail estimate added to the last partial sum (0 when not applicable).
  double tail_estimate = 0;
  /// (last partial sum + tail estimate) / pi
  double limit_estimate = 0;
  /// C(2n,n)^2 / 16^n
  double target = 0;
  bool matches_target = false;
};

struct SeriesOptions {
  std::uint64_t max_terms = 1'000'000;
  double cutoff = 1e-12;
  std::size_t recorded = 64;
  std::size_t exact_recorded = 24;
  std::size_t window = 8;
  double match_tolerance = 1e-6;
};

/// Exact t_k = (1/2,k)^2 Gamma(n+1/2) / Gamma(n+k+3/2) / norm_k, with the
/// gamma ratio written as 1 / (n+1/2)_(k+1).
inline BigRational series402_term(unsigned n, std::uint64_t k, SeriesVariant variant) {
  const BigRational half = make_rational(1, 2);
  BigRational t = pow(pochhammer(half, k), 2) / pochhammer(BigRational(n) + half, k + 1);
  if (variant == SeriesVariant::over_k_factorial) t /= BigRational(factorial(k));
  if (variant == SeriesVariant::over_k_factorial_squared) t /= BigRational(factorial(k) * factorial(k));
  return t;
}

/// Partial sums of (1/pi) sum_k t_k. The first terms are exact rationals;
/// later terms follow the exact term ratio evaluated in long double.
inline SeriesEvaluation evaluate_series402(unsigned n, SeriesVariant variant, const SeriesOptions& opt = {}) {
  SeriesEvaluation out;
  out.variant = to_string(variant);
  out.n = n;
  out.target = to_double(make_rational(pow(binomial(2 * n, n), 2), pow(BigInt(16), n)));

  for (std::size_t k = 0; k < opt.exact_recorded && k < opt.max_terms; ++k)
    out.exact_terms.push_back(to_string(series402_term(n, k, variant)));

  CompensatedSum<long double> sum;
  long double term = to_double(series402_term(n, 0, variant));
  std::vector<long double> window;
  long double prev_term = 0;
  std::uint64_t k = 0;
  for (; k < opt.max_terms; ++k) {
    if (k > 0) {
      // t_k / t_(k-1) = (k-1/2)^2 / (n+k+1/2) / {1, k, k^2}
      const long double a = static_cast<long double>(k) - 0.5L;
      long double ratio = a * a / (static_cast<long double>(n) + static_cast<long double>(k) + 0.5L);
      if (variant == SeriesVariant::over_k_factorial) ratio /= static_cast<long double>(k);
      if (variant == SeriesVariant::over_k_factorial_squared) ratio /= static_cast<long double>(k) * k;
      prev_term = term;
      term *= ratio;
      out.last_term_ratio = static_cast<double>(ratio);
    }
    if (!std::isfinite(static_cast<double>(term)) || term > 1e300L) {
      out.diverged = true;
      break;
    }
    sum += term;
    if (k < opt.recorded) {
      out.terms.push_back(static_cast<double>(term));
      out.partial_sums.push_back(static_cast<double>(sum.value()));
    }
    window.push_back(term);
    if (window.size() > opt.window) window.erase(window.begin());

    const bool decaying =
        window.size() == opt.window && std::is_sorted(window.begin(), window.end(), std::greater<>());
    if (k >= 1 && term < opt.cutoff && prev_term < opt.cutoff && decaying) {
      out.converged = true;
      ++k;
      break;
    }
  }
  out.term_count = k;
  out.last_term = static_cast<double>(term);
  out.last_partial_sum = static_cast<double>(sum.value());
  if (!out.converged && !out.diverged && window.size() == opt.window &&
      std::is_sorted(window.begin(), window.end()))
    out.diverged = true;  // still increasing over the final window

  if (!out.diverged && !out.converged && k >= 2 && prev_term > 0 && term > 0) {
    // t_k ~ C k^-alpha  =>  tail ~ t_K * K / (alpha - 1)
    const double kk = static_cast<double>(k - 1);
    const double alpha = -std::log(static_cast<double>(term / prev_term)) / std::log(kk / (kk - 1));
    if (alpha > 1) out.tail_estimate = static_cast<double>(term) * kk / (alpha - 1);
  }
  if (!out.diverged) {
    out.limit_estimate = (out.last_partial_sum + out.tail_estimate) / std::numbers::pi;
    out.matches_target =
        std::fabs(out.limit_estimate - out.target) <= opt.match_tolerance * std::max(1.0, std::fabs(out.target));
  } else {
    out.limit_estimate = HUGE_VAL;
  }
  return out;
}

}  // namespace betawalk
