#pragma once

// Exact arithmetic: big integers and rationals, values of the form q * pi^(e/2),
// and gamma / beta / Pochhammer at half-integer arguments.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace betawalk {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws on a zero denominator.
inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a/b" or "a". Decimals are rejected; the string must be fully consumed.
inline BigRational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return BigRational(to_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  return make_rational(to_int(num), to_int(den));
}

/// "numerator/denominator", always with both parts (integers render as "n/1").
inline std::string to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// q^e for any integer e; q must be nonzero when e < 0.
inline BigRational pow(const BigRational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("negative power of zero");
    return pow(BigRational(1) / q, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(num, den);  // powers of coprime parts stay coprime
}

inline BigInt pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Nearest double to q (GMP truncates; the difference is below 1 ulp).
inline double to_double(const BigRational& q) { return q.get_d(); }

/// Exact value coeff * pi^(half_pi_pow / 2). Zero is always stored with exponent 0.
class PiRational {
 public:
  PiRational() = default;
  PiRational(BigRational coeff, long half_pi_pow = 0) : coeff_(std::move(coeff)), half_pi_pow_(half_pi_pow) {
    coeff_.canonicalize();
    if (coeff_ == 0) half_pi_pow_ = 0;
  }
  PiRational(long value) : PiRational(BigRational(value)) {}

  static PiRational sqrt_pi_power(long e) { return PiRational(BigRational(1), e); }

  const BigRational& coeff() const { return coeff_; }
  long half_pi_pow() const { return half_pi_pow_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return half_pi_pow_ == 0; }

  friend PiRational operator*(const PiRational& a, const PiRational& b) {
    return PiRational(Canonical{}, a.coeff_ * b.coeff_, a.half_pi_pow_ + b.half_pi_pow_);
  }
  friend PiRational operator/(const PiRational& a, const PiRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero PiRational");
    return PiRational(Canonical{}, a.coeff_ / b.coeff_, a.half_pi_pow_ - b.half_pi_pow_);
  }
  friend PiRational operator+(const PiRational& a, const PiRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.half_pi_pow_ != b.half_pi_pow_)
      throw std::domain_error("adding PiRationals with different pi powers (" + std::to_string(a.half_pi_pow_) +
                              " vs " + std::to_string(b.half_pi_pow_) + ")");
    return PiRational(Canonical{}, a.coeff_ + b.coeff_, a.half_pi_pow_);
  }
  friend PiRational operator-(const PiRational& a) { return PiRational(-a.coeff_, a.half_pi_pow_); }
  friend PiRational operator-(const PiRational& a, const PiRational& b) { return a + (-b); }
  PiRational& operator+=(const PiRational& b) { return *this = *this + b; }
  PiRational& operator*=(const PiRational& b) { return *this = *this * b; }

  friend bool operator==(const PiRational& a, const PiRational& b) {
    return a.half_pi_pow_ == b.half_pi_pow_ && a.coeff_ == b.coeff_;
  }

  friend PiRational pow(const PiRational& a, long e) {
    if (e < 0 && a.is_zero()) throw std::domain_error("negative power of zero PiRational");
    return PiRational(betawalk::pow(a.coeff_, e), a.half_pi_pow_ * e);
  }

  /// Human-readable, e.g. "3/4*pi^(1/2)" or "5/72".
  std::string str() const {
    std::string s = coeff_.get_str();
    if (half_pi_pow_ == 0) return s;
    if (half_pi_pow_ % 2 == 0) return s + "*pi^" + std::to_string(half_pi_pow_ / 2);
    return s + "*pi^(" + std::to_string(half_pi_pow_) + "/2)";
  }

 private:
  // mpq arithmetic already yields lowest terms.
  struct Canonical {};
  PiRational(Canonical, BigRational coeff, long half_pi_pow) : coeff_(std::move(coeff)), half_pi_pow_(half_pi_pow) {
    if (coeff_ == 0) half_pi_pow_ = 0;
  }

  BigRational coeff_{0};
  long half_pi_pow_ = 0;
};

/// A number doubled/2. Gamma and beta need doubled >= 1.
struct HalfInt {
  long doubled = 1;

  static constexpr HalfInt integer(long m) { return HalfInt{2 * m}; }
  /// n + 1/2
  static constexpr HalfInt half_odd(long n) { return HalfInt{2 * n + 1}; }
  /// Accepts rationals whose double is an integer.
  static HalfInt from_rational(const BigRational& q) {
    const BigRational twice = q * 2;
    if (twice.get_den() != 1 || !twice.get_num().fits_slong_p())
      throw std::invalid_argument(q.get_str() + " is not a multiple of 1/2");
    return HalfInt{twice.get_num().get_si()};
  }

  bool is_integer() const { return doubled % 2 == 0; }
  bool positive() const { return doubled >= 1; }
  BigRational value() const { return make_rational(doubled, 2); }
  double to_double() const { return static_cast<double>(doubled) / 2.0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.doubled + b.doubled}; }
  friend constexpr HalfInt operator+(HalfInt a, long m) { return HalfInt{a.doubled + 2 * m}; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

  std::string str() const { return is_integer() ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2"; }
};

/// Memoized n! with synchronized growth. Entries past the cap are computed on
/// demand and not stored.
class FactorialTable {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  explicit FactorialTable(std::size_t cap = kDefaultCap) : cap_(cap) { table_.emplace_back(1); }

  BigInt operator()(unsigned long n) const {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    if (n >= cap_) {
      BigInt r;
      mpz_fac_ui(r.get_mpz_t(), n);
      return r;
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    return table_[n];
  }

  std::size_t cached() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<BigInt> table_;
};

inline FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

inline BigInt factorial(unsigned long n) { return factorial_table()(n); }

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// n! / prod(parts_i!). Throws when the parts do not sum to n.
template <typename Int>
BigInt multinomial(unsigned long n, std::span<const Int> parts) {
  unsigned long sum = 0;
  for (auto p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += static_cast<unsigned long>(p);
  }
  if (sum != n)
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(n));
  BigInt den = 1;
  for (auto p : parts) den *= factorial(static_cast<unsigned long>(p));
  BigInt r = factorial(n);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
  return r;
}

template <typename Int>
BigInt multinomial(unsigned long n, const std::vector<Int>& parts) {
  return multinomial(n, std::span<const Int>(parts));
}

/// Rising factorial a(a+1)...(a+m-1); 1 when m = 0.
inline BigRational pochhammer(const BigRational& a, unsigned long m) {
  BigRational r(1);
  BigRational x = a;
  for (unsigned long i = 0; i < m; ++i, x += 1) r *= x;
  return r;
}

/// Gamma(a) for a in (1/2)Z+. Integer m gives (m-1)!; n+1/2 gives (2n)!/(4^n n!) sqrt(pi).
inline PiRational gamma_half(HalfInt a) {
  if (!a.positive()) throw std::domain_error("gamma_half: argument " + a.str() + " is not positive");
  if (a.is_integer()) return PiRational(BigRational(factorial(static_cast<unsigned long>(a.doubled / 2 - 1))), 0);
  const auto n = static_cast<unsigned long>((a.doubled - 1) / 2);
  BigInt den = pow(BigInt(4), n) * factorial(n);
  return PiRational(make_rational(factorial(2 * n), den), 1);
}

/// B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b).
inline PiRational beta_half(HalfInt a, HalfInt b) {
  if (!a.positive() || !b.positive())
    throw std::domain_error("beta_half: arguments (" + a.str() + ", " + b.str() + ") must be positive");
  return gamma_half(a) * gamma_half(b) / gamma_half(a + b);
}

}  // namespace betawalk
