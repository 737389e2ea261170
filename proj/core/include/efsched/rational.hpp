// SPDX-License-Identifier: Apache-2.0
#ifndef EFSCHED_RATIONAL_HPP
#define EFSCHED_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace efsched {

/// Exact rational arithmetic. All instance data, loads, payments and
/// matching totals are kept exact; doubles appear only in reports.
using Rational = mpq_class;

/// num/den reduced to canonical form. den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p", or a plain decimal like "-3.25" into an exact
/// rational. No exponent notation. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" rendering (the form parse_rational round-trips).
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

/// A nonnegative exact rational or +infinity. Infinity absorbs addition
/// and compares above every finite value. Used for cost entries, loads
/// and makespans.
class ExtendedCost {
 public:
  ExtendedCost() : infinite_(false), value_(0) {}
  ExtendedCost(Rational value);  // implicit; throws std::invalid_argument if negative
  static ExtendedCost infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Finite value accessor; throws std::logic_error on infinity.
  const Rational& finite() const;

  ExtendedCost& operator+=(const ExtendedCost& other);
  friend ExtendedCost operator+(ExtendedCost lhs, const ExtendedCost& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const ExtendedCost& a, const ExtendedCost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedCost& a, const ExtendedCost& b) { return !(a == b); }
  friend bool operator<(const ExtendedCost& a, const ExtendedCost& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtendedCost& a, const ExtendedCost& b) { return b < a; }
  friend bool operator<=(const ExtendedCost& a, const ExtendedCost& b) { return !(b < a); }
  friend bool operator>=(const ExtendedCost& a, const ExtendedCost& b) { return !(a < b); }

 private:
  bool infinite_;
  Rational value_;
};

/// "inf" or the fraction rendering.
std::string to_string(const ExtendedCost& value);

}  // namespace efsched

#endif  // EFSCHED_RATIONAL_HPP
