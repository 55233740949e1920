#include "itersplit/exact_slope.hpp"

#include <algorithm>

namespace itersplit {

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ValidationError("expected an integer, got '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw ValidationError("expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw ZeroDenominator();
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational reduce(const BigInt& n, const BigInt& d) { return Rational(n, d); }

BigInt Rational::floor() const {
  // Truncating division rounds toward zero; correct it for negatives.
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw ZeroDenominator();
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw ZeroDenominator();
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

std::string SimpleSlope::to_string() const { return "[" + rep_.to_string() + "]"; }

SimpleSlope SimpleSlope::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ValidationError("simple slope must be bracketed: '" + std::string(text) + "'");
  }
  return simple_class(Rational::parse(text.substr(1, text.size() - 2)));
}

SimpleSlope simple_class(const Rational& x) {
  return SimpleSlope(x - Rational(x.floor()));
}

SimpleSlope slope_to_simple(const Rational& x) {
  if (x.is_zero()) throw ValidationError("slope 0 has no simple-slope class");
  return simple_class(x.reciprocal());
}

bool binary_structure_ok(const std::vector<Bit>& bits) {
  const auto ones = std::count(bits.begin(), bits.end(), Bit{1});
  if (ones > 2) return false;
  if (ones == 2) {
    const auto first = std::find(bits.begin(), bits.end(), Bit{1});
    return std::next(first) != bits.end() && *std::next(first) == 1;
  }
  return true;
}

TunnelInvariants TunnelInvariants::make(std::variant<SimpleSlope, Slope> first,
                                        std::vector<Slope> rest,
                                        std::vector<Bit> binary) {
  if (binary.size() != rest.size() + 1) {
    throw ValidationError("binary invariants must have one bit per slope");
  }
  for (Bit b : binary) {
    if (b > 1) throw ValidationError("binary invariant entries must be 0 or 1");
  }
  if (!binary_structure_ok(binary)) {
    throw ValidationError("binary invariants hold more than two 1s or non-adjacent 1s");
  }
  return TunnelInvariants{std::move(first), std::move(rest), std::move(binary)};
}

bool invariants_equal(const TunnelInvariants& a, const TunnelInvariants& b) {
  if (a.first.index() != b.first.index()) return false;
  if (const auto* sa = std::get_if<SimpleSlope>(&a.first)) {
    if (!(*sa == std::get<SimpleSlope>(b.first))) return false;
  } else if (std::get<Slope>(a.first).value != std::get<Slope>(b.first).value) {
    return false;
  }
  if (a.rest.size() != b.rest.size()) return false;
  for (std::size_t i = 0; i < a.rest.size(); ++i) {
    if (a.rest[i].value != b.rest[i].value) return false;
  }
  return a.binary == b.binary;
}

std::string canonical_key(const TunnelInvariants& inv) {
  std::string key;
  if (const auto* s = std::get_if<SimpleSlope>(&inv.first)) {
    key = s->to_string();
  } else {
    key = std::get<Slope>(inv.first).value.to_string();
  }
  key += ';';
  for (std::size_t i = 0; i < inv.rest.size(); ++i) {
    if (i) key += ',';
    key += inv.rest[i].value.to_string();
  }
  key += ';';
  for (Bit b : inv.binary) key += static_cast<char>('0' + b);
  return key;
}

}  // namespace itersplit
