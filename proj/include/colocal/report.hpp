#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "colocal/graph_json.hpp"

namespace colocal {

/// Non-negative fraction in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1) {
    if (den == 0) throw Error(ErrorCode::InternalAssertion, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct RunReport {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  int delta = 0;
  std::size_t solution_size = 0;
  std::optional<std::size_t> optimal_size;
  std::optional<Rational> ratio;
  Rational bound;  // worst-case ratio guaranteed for the algorithm
  int rounds_used = 0;
  std::size_t max_message_bits = 0;
};

/// Ratios are emitted as numbers, with the exact fraction alongside.
inline json report_to_json(const RunReport& r) {
  json j;
  j["algorithm"] = r.algorithm;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["solution_size"] = r.solution_size;
  j["optimal_size"] = r.optimal_size ? json(*r.optimal_size) : json(nullptr);
  j["ratio"] = r.ratio ? json(r.ratio->value()) : json(nullptr);
  j["ratio_exact"] = r.ratio ? json(r.ratio->str()) : json(nullptr);
  j["paper_bound"] = r.bound.value();
  j["bound_exact"] = r.bound.str();
  j["rounds_used"] = r.rounds_used;
  j["max_message_bits"] = r.max_message_bits;
  return j;
}

}  // namespace colocal
