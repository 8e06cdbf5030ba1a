#pragma once

// Registry of standalone binomial / beta identities tied to walk return
// probabilities. Each entry verifies a corrected form over a fixed range; where
// the printed form of an identity fails at face value, that form is evaluated
// too and kept next to the corrected one.

#include <betawalk/compositions.hpp>
#include <betawalk/exact.hpp>
#include <betawalk/moments.hpp>
#include <betawalk/report.hpp>
#include <betawalk/walk.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace betawalk {

namespace detail {

/// sum_{j_1+..+j_(k+1)=2n} C(2n; j) prod_{s>=2} w^(j_s) C(2j_s, j_s)
inline BigRational weighted_central_sum(unsigned n, unsigned k, const BigRational& weight) {
  const unsigned m = 2 * n;
  std::vector<BigRational> factor(m + 1);
  BigRational power = 1;
  for (unsigned j = 0; j <= m; ++j, power *= weight) factor[j] = power * BigRational(binomial(2 * j, j));
  BigRational sum = 0;
  for (const auto& comp : WeakCompositions(m, k + 1)) {
    BigRational t(multinomial(m, comp.parts()));
    for (unsigned s = 1; s <= k; ++s) t *= factor[comp[s]];
    sum += t;
  }
  return sum;
}

/// sum_{i_1+..+i_k=n} (2n)! / prod i_j!^2
inline BigInt squared_multinomial_sum(unsigned n, unsigned k) { return return_path_count(k, n).count; }

inline IdentityReport make_report(std::string name) {
  IdentityReport r;
  r.identity = std::move(name);
  return r;
}

}  // namespace detail

/// sum_{k=0}^{n} C(2k,k) C(2n-2k,n-k) = 4^n. The printed lower index k=1 drops
/// the k=0 term and gives 4^n - C(2n,n).
inline IdentityReport verify_convolution(unsigned n) {
  if (n < 1) throw std::invalid_argument("verify_convolution: n must be >= 1");
  auto r = detail::make_report("convolution");
  r.add_parameter("n", std::to_string(n));
  const Stopwatch watch;
  BigInt from0 = 0, from1 = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const BigInt t = binomial(2 * k, k) * binomial(2 * (n - k), n - k);
    from0 += t;
    if (k >= 1) from1 += t;
  }
  r.lhs = PiRational(BigRational(from0));
  r.rhs = PiRational(BigRational(pow(BigInt(4), n)));
  r.verified = r.lhs == r.rhs;
  r.printed = PrintedForm{"convolution identity, lower index", "sum starts at k=1", PiRational(BigRational(from1)), r.rhs, false};
  r.printed->holds = r.printed->lhs == r.printed->rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// sum_{k=0}^{2n} (-1)^k C(2n,k) C(2k,k) / 2^k = C(2n,n)/4^n. The remark's
/// printed upper limit n truncates the sum.
inline IdentityReport verify_alternating(unsigned n) {
  if (n < 1) throw std::invalid_argument("verify_alternating: n must be >= 1");
  auto r = detail::make_report("alternating");
  r.add_parameter("n", std::to_string(n));
  const Stopwatch watch;
  BigRational full = 0, truncated = 0;
  for (unsigned k = 0; k <= 2 * n; ++k) {
    BigRational t(binomial(2 * n, k) * binomial(2 * k, k), pow(BigInt(2), k));
    t.canonicalize();
    if (k % 2) t = -t;
    full += t;
    if (k <= n) truncated += t;
  }
  r.lhs = PiRational(full);
  r.rhs = PiRational(closed_form_1d(n));
  r.verified = r.lhs == r.rhs;
  r.printed = PrintedForm{"Remark after the 1-D correspondence, upper limit", "sum stops at j=n", PiRational(truncated),
                          r.rhs, false};
  r.printed->holds = r.printed->lhs == r.printed->rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// sum_{j=0}^{2n} C(2n,j) (-2)^j B(j+p,p) = B(n+1/2,p) / 2^(2p-1), both sides
/// divided by B(p,p). The printed upper limit n is evaluated alongside.
inline IdentityReport verify_one_dim_general_p(unsigned n, const BetaParams& beta) {
  if (n < 1) throw std::invalid_argument("verify_one_dim_general_p: n must be >= 1");
  auto r = detail::make_report("one-dim-general-p");
  r.add_parameter("n", std::to_string(n));
  r.add_parameter("p", beta.str());
  const Stopwatch watch;
  const HalfInt p = beta.p();
  const PiRational bpp = beta_half(p, p);
  PiRational full, truncated;
  BigRational power = 1;
  for (unsigned j = 0; j <= 2 * n; ++j, power *= -2) {
    const PiRational t = PiRational(BigRational(binomial(2 * n, j)) * power) * beta_half(p + static_cast<long>(j), p);
    full += t;
    if (j <= n) truncated += t;
  }
  r.lhs = full / bpp;
  r.rhs = beta_half(HalfInt::half_odd(n), p) / (bpp * PiRational(pow(BigRational(2), beta.two_p_minus_one())));
  r.verified = r.lhs == r.rhs;
  r.printed = PrintedForm{"1-D special case, upper limit", "sum stops at j=n", truncated / bpp, r.rhs, false};
  r.printed->holds = r.printed->lhs == r.printed->rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// sum_{j_1+j_2+j_3=2n} (-1/4)^(j_2+j_3) C(2n; j) C(2j_2,j_2) C(2j_3,j_3) = C(2n,n)^2/16^n.
/// This is the p = 1/2 case of the two-coefficient identity; the remark
/// introducing it says p = 2, whose specialization is evaluated alongside.
inline IdentityReport verify_two_dim_remark(unsigned n) {
  if (n < 1) throw std::invalid_argument("verify_two_dim_remark: n must be >= 1");
  auto r = detail::make_report("two-dim-remark");
  r.add_parameter("n", std::to_string(n));
  r.add_parameter("p", "1/2");
  const Stopwatch watch;
  r.lhs = PiRational(detail::weighted_central_sum(n, 2, make_rational(-1, 4)));
  r.rhs = PiRational(closed_form_2d(n));
  r.verified = r.lhs == r.rhs;
  const auto half = CoefficientVector::uniform(2, make_rational(1, 2));
  r.printed = PrintedForm{"Remark label 'At p=2'",
                          "two-coefficient identity at p=2, c=1/2 (divided by B(2,2)^2) vs the displayed value",
                          lhs_master(n, half, BetaParams(HalfInt::integer(2))), r.rhs, false};
  r.printed->holds = r.printed->lhs == r.printed->rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// sum_{j_1+..+j_4=2n} C(2n; j) (-1/6)^(j_2+j_3+j_4) prod C(2j_s,j_s)
///   = (1/6)^(2n) sum_{i_1+i_2+i_3=n} (2n)! / prod i_j!^2
inline IdentityReport verify_three_dim_remark(unsigned n) {
  if (n < 1) throw std::invalid_argument("verify_three_dim_remark: n must be >= 1");
  auto r = detail::make_report("three-dim-remark");
  r.add_parameter("n", std::to_string(n));
  const Stopwatch watch;
  r.lhs = PiRational(detail::weighted_central_sum(n, 3, make_rational(-1, 6)));
  r.rhs = PiRational(make_rational(detail::squared_multinomial_sum(n, 3), pow(BigInt(6), 2 * n)));
  r.verified = r.lhs == r.rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// Corrected k-dimensional form with per-factor weight -1/(2k):
///   sum C(2n; j) prod (-1/(2k))^(j_s) C(2j_s,j_s) = (1/(2k))^(2n) sum (2n)! / prod i_j!^2.
/// The printed form uses weight -2/k and prefactor 1/k^(2n).
inline IdentityReport verify_k_dim_remark(unsigned n, unsigned k) {
  if (n < 1 || k < 1) throw std::invalid_argument("verify_k_dim_remark: n and k must be >= 1");
  auto r = detail::make_report("k-dim-remark");
  r.add_parameter("n", std::to_string(n));
  r.add_parameter("k", std::to_string(k));
  const Stopwatch watch;
  const BigInt count = detail::squared_multinomial_sum(n, k);
  r.lhs = PiRational(detail::weighted_central_sum(n, k, make_rational(-1, 2 * k)));
  r.rhs = PiRational(make_rational(count, pow(BigInt(2 * k), 2 * n)));
  r.verified = r.lhs == r.rhs;
  r.printed = PrintedForm{"k-dimensional remark coefficients", "weight (-2/k)^j and prefactor 1/k^(2n)",
                          PiRational(detail::weighted_central_sum(n, k, make_rational(-2, k))),
                          PiRational(make_rational(count, pow(BigInt(k), 2 * n))), false};
  r.printed->holds = r.printed->lhs == r.printed->rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// sum_{k=0}^{n} C(n,k) C(n,n-k) = C(2n,n)
inline IdentityReport verify_vandermonde(unsigned n) {
  if (n < 1) throw std::invalid_argument("verify_vandermonde: n must be >= 1");
  auto r = detail::make_report("vandermonde");
  r.add_parameter("n", std::to_string(n));
  const Stopwatch watch;
  BigInt sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += binomial(n, k) * binomial(n, n - k);
  r.lhs = PiRational(BigRational(sum));
  r.rhs = PiRational(BigRational(binomial(2 * n, n)));
  r.verified = r.lhs == r.rhs;
  r.elapsed = watch.elapsed();
  return r;
}

/// Gamma(n+1/2)/Gamma(1/2) = C(2n,n) n! / 4^n
inline IdentityReport verify_duplication(unsigned n) {
  auto r = detail::make_report("duplication");
  r.add_parameter("n", std::to_string(n));
  const Stopwatch watch;
  r.lhs = gamma_half(HalfInt::half_odd(n)) / gamma_half(HalfInt::half_odd(0));
  r.rhs = PiRational(make_rational(binomial(2 * n, n) * factorial(n), pow(BigInt(4), n)));
  r.verified = r.lhs == r.rhs;
  r.elapsed = watch.elapsed();
  return r;
}

enum class Variant { printed, corrected };

inline const char* to_string(Variant v) { return v == Variant::printed ? "printed" : "corrected"; }

struct CatalogEntry {
  std::string name;
  std::string location;
  /// `corrected` when the printed form fails and a corrected form is verified.
  Variant variant = Variant::printed;
  std::string parameter_range;
  std::optional<std::string> erratum;
  std::function<std::vector<IdentityReport>()> verify_range;
  /// Smallest point where the printed form fails, for corrected entries.
  std::function<IdentityReport()> counterexample;
};

namespace detail {

template <typename Fn>
std::vector<IdentityReport> over(unsigned first, unsigned last, Fn fn) {
  std::vector<IdentityReport> out;
  for (unsigned n = first; n <= last; ++n) out.push_back(fn(n));
  return out;
}

inline const std::vector<HalfInt>& one_dim_shapes() {
  static const std::vector<HalfInt> shapes{HalfInt{1}, HalfInt{2}, HalfInt{3}, HalfInt{4}, HalfInt{5}};
  return shapes;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    e.push_back({"convolution", "introduction: central binomial convolution", Variant::corrected, "n=1..50",
                 "printed lower index k=1 gives 4^n - C(2n,n); the sum must start at k=0",
                 [] { return detail::over(1, 50, verify_convolution); }, [] { return verify_convolution(1); }});
    e.push_back({"alternating", "introduction and the remark after the 1-D correspondence", Variant::corrected,
                 "n=1..50", "the remark's printed upper limit n must be 2n (the introduction's form is correct)",
                 [] { return detail::over(1, 50, verify_alternating); }, [] { return verify_alternating(1); }});
    e.push_back({"one-dim-general-p", "1-D special case of the master identity (c_s = 0 for s >= 2)",
                 Variant::corrected, "n=1..12 x p in {1/2,1,3/2,2,5/2}",
                 "printed upper limit n must be 2n (the 1-D multinomial index runs to 2n)",
                 [] {
                   std::vector<IdentityReport> out;
                   for (HalfInt p : detail::one_dim_shapes())
                     for (unsigned n = 1; n <= 12; ++n) out.push_back(verify_one_dim_general_p(n, BetaParams(p)));
                   return out;
                 },
                 [] { return verify_one_dim_general_p(1, BetaParams(HalfInt{1})); }});
    e.push_back({"two-dim-remark", "Remark in the 2-D section (new identity)", Variant::corrected, "n=1..12",
                 "remark says 'At p=2' but the displayed identity is the p=1/2 specialization",
                 [] { return detail::over(1, 12, verify_two_dim_remark); }, [] { return verify_two_dim_remark(1); }});
    e.push_back({"three-dim-remark", "Remark in the 3-D section (new identity)", Variant::printed, "n=1..8",
                 std::nullopt, [] { return detail::over(1, 8, verify_three_dim_remark); }, nullptr});
    e.push_back({"k-dim-remark", "Remark in the k-D section (new identity)", Variant::corrected, "n=1..6 x k=1..4",
                 "printed weight (-2/k)^j and prefactor 1/k^(2n) must be (-1/(2k))^j and (1/(2k))^(2n)",
                 [] {
                   std::vector<IdentityReport> out;
                   for (unsigned k = 1; k <= 4; ++k)
                     for (unsigned n = 1; n <= 6; ++n) out.push_back(verify_k_dim_remark(n, k));
                   return out;
                 },
                 [] { return verify_k_dim_remark(1, 1); }});
    e.push_back({"vandermonde", "Vandermonde step of the 2-D path count", Variant::printed, "n=1..100", std::nullopt,
                 [] { return detail::over(1, 100, verify_vandermonde); }, nullptr});
    e.push_back({"duplication", "Duplication formula Gamma(n+1/2)/Gamma(1/2)", Variant::printed, "n=0..100",
                 std::nullopt, [] { return detail::over(0, 100, verify_duplication); }, nullptr});
    return e;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  const auto& all = catalog();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace betawalk
