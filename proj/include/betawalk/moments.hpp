#pragma once

// Even moments of linear combinations of shifted symmetric beta variables.
//
// With X_i ~ Be(p,p) i.i.d. and U_i = 2X_i - 1, E[(sum c_i U_i)^(2n)] has two
// expansions: a multinomial expansion in the X_i (alternating in sign, over
// compositions of 2n into k+1 parts) and one in the even moments of the U_i
// (positive, over compositions of n into k parts). Both are evaluated exactly
// and divided by B(p,p)^k, so each equals the moment itself.

#include <betawalk/compositions.hpp>
#include <betawalk/exact.hpp>
#include <betawalk/numeric.hpp>
#include <betawalk/parallel.hpp>
#include <betawalk/report.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace betawalk {

/// Shape of the symmetric beta law Be(p,p); p must be a positive multiple of 1/2.
class BetaParams {
 public:
  explicit BetaParams(HalfInt p) : p_(p) {
    if (!p.positive()) throw std::domain_error("beta shape p must be > 0, got " + p.str());
  }
  static BetaParams from_rational(const BigRational& p) { return BetaParams(HalfInt::from_rational(p)); }

  HalfInt p() const { return p_; }
  /// 2p - 1, a non-negative integer for half-integer p.
  long two_p_minus_one() const { return p_.doubled - 1; }
  std::string str() const { return p_.str(); }

 private:
  HalfInt p_;
};

class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("coefficient vector must not be empty");
    for (auto& c : coeffs_) {
      c.canonicalize();
      if (c <= 0) throw std::invalid_argument("coefficients must be strictly positive, got " + c.get_str());
      sum_ += c;
    }
  }
  /// k copies of `value`.
  static CoefficientVector uniform(unsigned k, const BigRational& value) {
    return CoefficientVector(std::vector<BigRational>(k, value));
  }

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& sum() const { return sum_; }
  unsigned size() const { return static_cast<unsigned>(coeffs_.size()); }

  CoefficientVector scaled(const BigRational& lambda) const {
    std::vector<BigRational> v(coeffs_);
    for (auto& c : v) c *= lambda;
    return CoefficientVector(std::move(v));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? "," : "") + coeffs_[i].get_str();
    return s + "]";
  }
  std::vector<double> to_doubles() const {
    std::vector<double> d;
    for (const auto& c : coeffs_) d.push_back(to_double(c));
    return d;
  }

 private:
  std::vector<BigRational> coeffs_;
  BigRational sum_{0};
};

/// E[U^(2n)] = B(n+1/2, p) / (B(p,p) 2^(2p-1)); always rational.
inline PiRational moment_u2n(unsigned n, const BetaParams& beta) {
  const HalfInt p = beta.p();
  return beta_half(HalfInt::half_odd(n), p) / (beta_half(p, p) * PiRational(pow(BigRational(2), beta.two_p_minus_one())));
}

/// Odd moments of U vanish by symmetry.
inline PiRational odd_moment_u(unsigned /*n*/, const BetaParams& /*beta*/) { return PiRational(); }

namespace detail {

/// Sums term(comp) over compositions of `total` into `parts`, split into
/// `threads` contiguous rank windows. Partial sums are merged in window order.
template <typename Term>
PiRational sum_over_compositions(unsigned total, unsigned parts, unsigned threads, Term&& term) {
  const Rank count = count_weak_compositions_u64(total, parts);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<Rank>(count, 1024))));
  auto partials = run_workers(threads, [&](unsigned w) {
    const auto win = chunk_window(count, threads, w);
    PiRational acc;
    for (const auto& comp : WeakCompositions(total, parts, win.first, win.size)) acc += term(comp);
    return acc;
  });
  PiRational total_sum;
  for (const auto& s : partials) total_sum += s;
  return total_sum;
}

}  // namespace detail

/// Multinomial-in-X expansion:
/// (1/B(p,p)^k) sum_{j_1+..+j_(k+1)=2n} C(2n; j) c_(k)^(j_1) prod_s (-2 c_s)^(j_(s+1)) B(j_(s+1)+p, p).
inline PiRational lhs_master(unsigned n, const CoefficientVector& c, const BetaParams& beta, unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("lhs_master: n must be >= 1");
  const unsigned k = c.size();
  const unsigned m = 2 * n;
  const HalfInt p = beta.p();

  std::vector<PiRational> beta_cache(m + 1);
  for (unsigned j = 0; j <= m; ++j) beta_cache[j] = beta_half(p + static_cast<long>(j), p);

  std::vector<std::vector<PiRational>> table(k, std::vector<PiRational>(m + 1));
  for (unsigned s = 0; s < k; ++s) {
    const BigRational base = -2 * c.coeffs()[s];
    BigRational power = 1;
    for (unsigned j = 0; j <= m; ++j, power *= base) table[s][j] = PiRational(power) * beta_cache[j];
  }
  std::vector<BigRational> csum_pow(m + 1);
  csum_pow[0] = 1;
  for (unsigned j = 1; j <= m; ++j) csum_pow[j] = csum_pow[j - 1] * c.sum();

  const PiRational sum = detail::sum_over_compositions(m, k + 1, threads, [&](const Composition& j) {
    PiRational t(BigRational(multinomial(m, j.parts())) * csum_pow[j[0]]);
    for (unsigned s = 0; s < k; ++s) t *= table[s][j[s + 1]];
    return t;
  });
  return sum / pow(beta_half(p, p), static_cast<long>(k));
}

/// Even-moment expansion:
/// (1/(B(p,p)^k 2^((2p-1)k))) sum_{i_1+..+i_k=n} C(2n; 2i) prod_j c_j^(2 i_j) B(i_j+1/2, p).
inline PiRational rhs_master(unsigned n, const CoefficientVector& c, const BetaParams& beta, unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("rhs_master: n must be >= 1");
  const unsigned k = c.size();
  const HalfInt p = beta.p();

  std::vector<std::vector<PiRational>> table(k, std::vector<PiRational>(n + 1));
  for (unsigned s = 0; s < k; ++s) {
    const BigRational sq = c.coeffs()[s] * c.coeffs()[s];
    BigRational power = 1;
    for (unsigned i = 0; i <= n; ++i, power *= sq) table[s][i] = PiRational(power) * beta_half(HalfInt::half_odd(i), p);
  }

  const PiRational sum = detail::sum_over_compositions(n, k, threads, [&](const Composition& i) {
    PiRational t(BigRational(multinomial(2 * n, i.doubled().parts())));
    for (unsigned s = 0; s < k; ++s) t *= table[s][i[s]];
    return t;
  });
  const PiRational scale = pow(beta_half(p, p), static_cast<long>(k)) *
                           PiRational(pow(BigRational(2), beta.two_p_minus_one() * static_cast<long>(k)));
  return sum / scale;
}

/// Both expansions compared. Exact mode requires identical values; float mode
/// evaluates in floating point instead and keeps the exact sides empty.
inline IdentityReport verify_master(unsigned n, const CoefficientVector& c, const BetaParams& beta,
                                    Mode mode = Mode::exact, unsigned threads = 1, double tolerance = 1e-10) {
  IdentityReport r;
  r.identity = "master";
  r.mode = mode;
  r.add_parameter("n", std::to_string(n));
  r.add_parameter("k", std::to_string(c.size()));
  r.add_parameter("coeffs", c.str());
  r.add_parameter("p", beta.str());
  const Stopwatch watch;
  if (mode == Mode::exact) {
    r.lhs = lhs_master(n, c, beta, threads);
    r.rhs = rhs_master(n, c, beta, threads);
    r.verified = r.lhs == r.rhs;
  } else {
    r.float_check = verify_master_float(n, c.to_doubles(), beta.p().to_double(), tolerance);
    r.verified = r.float_check->passed;
  }
  r.elapsed = watch.elapsed();
  return r;
}

/// The equal-coefficient form (every c_j = 1, so c_(k) = k) plus the scaling
/// check: with c_j = c both sides equal c^(2n) times the c = 1 values.
inline IdentityReport verify_equal_coeff_form(unsigned n, unsigned k, const BetaParams& beta, unsigned threads = 1) {
  if (n < 1 || k < 1) throw std::invalid_argument("verify_equal_coeff_form: n and k must be >= 1");
  IdentityReport r;
  r.identity = "equal-coeff";
  r.add_parameter("n", std::to_string(n));
  r.add_parameter("k", std::to_string(k));
  r.add_parameter("p", beta.str());
  const Stopwatch watch;
  const auto ones = CoefficientVector::uniform(k, 1);
  r.lhs = lhs_master(n, ones, beta, threads);
  r.rhs = rhs_master(n, ones, beta, threads);
  bool ok = r.lhs == r.rhs;
  for (const BigRational& value : {make_rational(1, 4), BigRational(1), make_rational(7, 3)}) {
    const auto cv = CoefficientVector::uniform(k, value);
    const PiRational factor(pow(value, 2 * static_cast<long>(n)));
    const bool scaled_ok =
        lhs_master(n, cv, beta, threads) == factor * r.lhs && rhs_master(n, cv, beta, threads) == factor * r.rhs;
    r.add_parameter("scaling c=" + value.get_str(), scaled_ok ? "holds" : "fails");
    ok = ok && scaled_ok;
  }
  r.verified = ok;
  r.elapsed = watch.elapsed();
  return r;
}

}  // namespace betawalk
