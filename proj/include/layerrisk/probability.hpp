#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace layerrisk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses `a/b` or a terminating decimal (`0.25`, `3`) into an exact rational.
/// Returns nullopt on any malformed input; the sign is never accepted.
std::optional<Rational> parse_rational(std::string_view text);

/// Lowest-terms text: `0`, `1`, `3/4`, `6/5`.
std::string to_string(const Rational& value);

/**
 * An exact probability: a rational number in [0,1], always in lowest terms.
 *
 * Products and complements stay inside [0,1] and are exposed as operators;
 * sums are not closed, so callers that need them go through value().
 */
class Probability {
 public:
  Probability() = default;
  Probability(std::int64_t numerator, std::int64_t denominator);
  explicit Probability(Rational value);

  static Probability zero() { return Probability(); }
  static Probability one() { return Probability(1, 1); }
  static Probability half() { return Probability(1, 2); }

  /// Accepts only values that parse exactly and lie in [0,1].
  static std::optional<Probability> parse(std::string_view text);

  const Rational& value() const { return value_; }
  Probability complement() const { return Probability(Rational(1) - value_); }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  std::string str() const { return to_string(value_); }

  friend Probability operator*(const Probability& a, const Probability& b) {
    return Probability(a.value_ * b.value_);
  }
  Probability& operator*=(const Probability& other) {
    value_ *= other.value_;
    return *this;
  }
  friend bool operator==(const Probability& a, const Probability& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Probability& a, const Probability& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

}  // namespace layerrisk
