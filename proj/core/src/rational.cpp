// SPDX-License-Identifier: Apache-2.0
#include "efsched/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "efsched/errors.hpp"

namespace efsched {

namespace {

bool is_integer_token(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational parse_rational(std::string_view text) {
  const std::string token(text);
  if (auto slash = token.find('/'); slash != std::string::npos) {
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
      throw ParseError("invalid fraction \"" + token + "\"");
    }
    Rational value{mpq_class(mpz_class(num, 10), mpz_class(den, 10))};
    if (value.get_den() == 0) throw ParseError("zero denominator in \"" + token + "\"");
    value.canonicalize();
    return value;
  }
  if (auto dot = token.find('.'); dot != std::string::npos) {
    std::string digits = token.substr(0, dot) + token.substr(dot + 1);
    const std::size_t frac_digits = token.size() - dot - 1;
    if (frac_digits == 0 || !is_integer_token(digits, true)) {
      throw ParseError("invalid decimal \"" + token + "\"");
    }
    if (digits == "-" || digits == "+") throw ParseError("invalid decimal \"" + token + "\"");
    mpz_class scaled(digits, 10);  // explicit base: "025" is decimal, not octal
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 10, frac_digits);
    Rational value{mpq_class(scaled, denom)};
    value.canonicalize();
    return value;
  }
  if (!is_integer_token(token, true)) {
    throw ParseError("invalid rational \"" + token + "\"");
  }
  return Rational(mpz_class(token, 10));
}

std::string to_fraction_string(const Rational& value) {
  return value.get_str();
}

double to_double(const Rational& value) {
  return value.get_d();
}

ExtendedCost::ExtendedCost(Rational value) : infinite_(false), value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("negative cost");
}

ExtendedCost ExtendedCost::infinity() {
  ExtendedCost result;
  result.infinite_ = true;
  return result;
}

const Rational& ExtendedCost::finite() const {
  if (infinite_) throw std::logic_error("finite() on infinity");
  return value_;
}

ExtendedCost& ExtendedCost::operator+=(const ExtendedCost& other) {
  if (other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else if (!infinite_) {
    value_ += other.value_;
  }
  return *this;
}

std::string to_string(const ExtendedCost& value) {
  return value.is_infinite() ? "inf" : to_fraction_string(value.finite());
}

}  // namespace efsched
