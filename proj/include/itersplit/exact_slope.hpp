#pragma once

// Exact rationals, simple-slope classes in Q/Z, and the complete tunnel
// invariant (slope sequence plus binary sequence).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace itersplit {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a rational would be built with denominator zero.
class ZeroDenominator : public std::domain_error {
public:
  ZeroDenominator() : std::domain_error("zero denominator") {}
};

/// Input values that violate a documented precondition.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations that should agree did not.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Exact fraction, always stored reduced with a positive denominator, so
/// structural equality is mathematical equality.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit
  Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT: implicit
  Rational(int n) : num_(n), den_(1) {}                // NOLINT: implicit
  Rational(BigInt n, BigInt d);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer not exceeding the value.
  BigInt floor() const;
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", e.g. "-5/3" or "0/1".
  std::string to_string() const;
  /// Accepts "num/den" or a bare integer "num".
  static Rational parse(std::string_view text);

private:
  BigInt num_;
  BigInt den_;
};

/// n/d reduced, with positive denominator. Throws ZeroDenominator if d == 0.
Rational reduce(const BigInt& n, const BigInt& d);

/// A slope value with the coordinate system it is measured in. The label is
/// metadata only and never takes part in arithmetic or equality.
struct Slope {
  Rational value;
  std::string coords;
};

/// Class of a rational in Q/Z, held by its representative in [0,1).
class SimpleSlope {
public:
  const Rational& representative() const { return rep_; }

  friend bool operator==(const SimpleSlope& a, const SimpleSlope& b) {
    return a.rep_ == b.rep_;
  }

  /// "[num/den]"
  std::string to_string() const;
  /// Accepts "[x]" where x is any rational; the result is its class.
  static SimpleSlope parse(std::string_view text);

private:
  friend SimpleSlope simple_class(const Rational& x);
  explicit SimpleSlope(Rational rep) : rep_(std::move(rep)) {}
  Rational rep_;
};

/// Representative of x mod 1 in [0,1).
SimpleSlope simple_class(const Rational& x);

/// Simple slope of a tunnel whose disk has slope x: the class of 1/x.
SimpleSlope slope_to_simple(const Rational& x);

using Bit = std::uint8_t;

/// True if bits holds at most two 1s, and the two are adjacent when there
/// are two.
bool binary_structure_ok(const std::vector<Bit>& bits);

/// Slope sequence plus binary invariants of a tunnel. The first entry is a
/// simple slope when the sequence starts from the trivial knot.
struct TunnelInvariants {
  std::variant<SimpleSlope, Slope> first;
  std::vector<Slope> rest;
  std::vector<Bit> binary;

  /// Builds a record after checking the length and binary-structure
  /// invariants; throws ValidationError on violation.
  static TunnelInvariants make(std::variant<SimpleSlope, Slope> first,
                               std::vector<Slope> rest,
                               std::vector<Bit> binary);

  bool first_is_simple() const {
    return std::holds_alternative<SimpleSlope>(first);
  }
};

/// Mixed first-entry tags compare unequal; slope values are compared as
/// exact rationals and labels are ignored.
bool invariants_equal(const TunnelInvariants& a, const TunnelInvariants& b);

/// Canonical text of the invariant values (labels excluded). Two records
/// have the same key iff invariants_equal holds.
std::string canonical_key(const TunnelInvariants& inv);

}  // namespace itersplit
