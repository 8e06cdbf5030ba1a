#pragma once

// Structured outcomes shared by the verifiers.

#include <betawalk/exact.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace betawalk {

enum class Mode { exact, floating };

inline const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "float"; }

/// Floating-point comparison of two evaluations of the same quantity.
struct FloatVerification {
  double lhs = 0;
  double rhs = 0;
  double abs_diff = 0;
  double rel_diff = 0;
  /// sum|terms| / |sum| on the worse-conditioned side.
  double condition_number = 1;
  double tolerance = 0;
  /// rel_diff <= tolerance * max(1, condition_number)
  bool passed = false;
};

/// Face-value evaluation of a printed formula that differs from the corrected one.
struct PrintedForm {
  std::string location;
  std::string description;
  PiRational lhs;
  PiRational rhs;
  bool holds = false;
};

struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  PiRational lhs;
  PiRational rhs;
  bool verified = false;
  Mode mode = Mode::exact;
  std::chrono::nanoseconds elapsed{0};
  std::optional<FloatVerification> float_check;
  std::optional<PrintedForm> printed;
  std::vector<std::string> notes;

  void add_parameter(std::string name, std::string value) {
    parameters.emplace_back(std::move(name), std::move(value));
  }
};

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace betawalk
