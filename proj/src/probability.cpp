#include "layerrisk/probability.hpp"

#include <cctype>
#include <stdexcept>

namespace layerrisk {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt to_bigint(std::string_view digits) { return BigInt(std::string(digits)); }

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt d = to_bigint(den);
    if (d == 0) return std::nullopt;
    return Rational(to_bigint(num), d);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(text)) return std::nullopt;
    return Rational(to_bigint(text));
  }
  auto whole = text.substr(0, dot);
  auto frac = text.substr(dot + 1);
  if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  return Rational(to_bigint(whole) * scale + to_bigint(frac), scale);
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Probability::Probability(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("probability with zero denominator");
  *this = Probability(Rational(numerator, denominator));
}

Probability::Probability(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw std::domain_error("probability " + to_string(value_) + " outside [0,1]");
  }
}

std::optional<Probability> Probability::parse(std::string_view text) {
  auto value = parse_rational(text);
  if (!value || *value > 1) return std::nullopt;
  return Probability(std::move(*value));
}

}  // namespace layerrisk
