#include "itersplit/farey_frame.hpp"

#include <vector>

namespace itersplit {

namespace {

constexpr std::string_view kRhoCoords = "(ρ,ρ⁰)";
constexpr std::string_view kLambdaCoords = "(λ,λ⁰)";

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

bool coprime(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b)) == 1;
}

}  // namespace

std::string HomologyClass::to_string() const {
  return "(" + ell.str() + "," + m.str() + ")";
}

std::string_view split_kind_name(SplitKind k) {
  switch (k) {
    case SplitKind::DropLambda: return "drop-lambda";
    case SplitKind::LiftLambda: return "lift-lambda";
    case SplitKind::DropRho: return "drop-rho";
    case SplitKind::LiftRho: return "lift-rho";
  }
  return "?";
}

std::optional<SplitKind> parse_split_kind(std::string_view name) {
  for (SplitKind k : kAllSplitKinds) {
    if (split_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

bool splits_off_rho(SplitKind k) {
  return k == SplitKind::DropRho || k == SplitKind::LiftRho;
}

bool is_drop(SplitKind k) {
  return k == SplitKind::DropRho || k == SplitKind::DropLambda;
}

bool FareyFrame::degenerate() const {
  return abs_value(p_ + r_) <= 2 || abs_value(q_ + s_) <= 2;
}

bool FareyFrame::is_trivial_position() const {
  return q_ == 0 && r_ == 0 && abs_value(p_) == 1 && s_ == p_;
}

std::string FareyFrame::to_string() const {
  return p_.str() + "," + q_.str() + "," + r_.str() + "," + s_.str();
}

FareyFrame validate_frame(BigInt p, BigInt q, BigInt r, BigInt s) {
  if (!coprime(p, q)) {
    throw FrameError(FrameErrorCode::RhoPairNotCoprime,
                     "(p,q) = (" + p.str() + "," + q.str() + ") is not a relatively prime pair");
  }
  if (!coprime(r, s)) {
    throw FrameError(FrameErrorCode::LambdaPairNotCoprime,
                     "(r,s) = (" + r.str() + "," + s.str() + ") is not a relatively prime pair");
  }
  const BigInt det = p * s - q * r;
  if (abs_value(det) != 1) {
    throw FrameError(FrameErrorCode::DeterminantNotUnit,
                     "ps - qr = " + det.str() + ", expected +1 or -1");
  }
  return FareyFrame(std::move(p), std::move(q), std::move(r), std::move(s), true);
}

FareyFrame unchecked_frame(BigInt p, BigInt q, BigInt r, BigInt s) {
  bool ok = true;
  try {
    (void)validate_frame(p, q, r, s);
  } catch (const FrameError&) {
    ok = false;
  }
  return FareyFrame(std::move(p), std::move(q), std::move(r), std::move(s), ok);
}

FareyFrame parse_frame(std::string_view text, bool validate) {
  std::vector<BigInt> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    const Rational value = Rational::parse(piece);
    if (!value.is_integer()) {
      throw ValidationError("frame entries must be integers: '" + std::string(text) + "'");
    }
    parts.push_back(value.numerator());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw ValidationError("frame must be four integers p,q,r,s: '" + std::string(text) + "'");
  }
  if (validate) return validate_frame(parts[0], parts[1], parts[2], parts[3]);
  return unchecked_frame(parts[0], parts[1], parts[2], parts[3]);
}

Rational linking_slope(const HomologyClass& upper, const HomologyClass& lower) {
  return Rational(BigInt(2 * upper.m * lower.ell));
}

std::pair<HomologyClass, HomologyClass> splitting_linking_pair(const FareyFrame& f,
                                                               SplitKind k) {
  const HomologyClass split_off = splits_off_rho(k) ? f.rho() : f.lambda();
  if (is_drop(k)) return {f.tau(), split_off};
  return {split_off, f.tau()};
}

Slope splitting_disk_slope(const FareyFrame& f, SplitKind k) {
  const BigInt& p = f.p();
  const BigInt& q = f.q();
  const BigInt& r = f.r();
  const BigInt& s = f.s();
  switch (k) {
    case SplitKind::DropLambda:
      return {Rational(BigInt(2 * r * (q + s))), std::string(kRhoCoords)};
    case SplitKind::LiftLambda:
      return {Rational(BigInt(2 * s * (p + r))), std::string(kRhoCoords)};
    case SplitKind::DropRho:
      return {Rational(BigInt(2 * p * (q + s))), std::string(kLambdaCoords)};
    case SplitKind::LiftRho:
      return {Rational(BigInt(2 * q * (p + r))), std::string(kLambdaCoords)};
  }
  throw std::logic_error("unknown split kind");
}

Slope splitting_tunnel_slope(const FareyFrame& f, SplitKind k, const BigInt& n) {
  if (n == 0) {
    throw ValidationError("n = 0 half-twists does not give a cabling construction");
  }
  Slope slope = splitting_disk_slope(f, k);
  slope.value += Rational(BigInt(1), n);
  return slope;
}

}  // namespace itersplit
