#include "itersplit/iteration.hpp"

#include <stdexcept>

namespace itersplit {

SequenceTraits traits(SequenceKind kind) {
  using enum SequenceKind;
  switch (kind) {
    case DropRhoPure: return {SplitKind::DropRho, false, 'r', Direction::Down};
    case DropRhoMixedTau: return {SplitKind::DropRho, true, 't', Direction::Up};
    case DropLambdaPure: return {SplitKind::DropLambda, false, 'l', Direction::Down};
    case DropLambdaMixedTau: return {SplitKind::DropLambda, true, 't', Direction::Up};
    case LiftRhoPure: return {SplitKind::LiftRho, false, 'r', Direction::Up};
    case LiftRhoMixedTau: return {SplitKind::LiftRho, true, 't', Direction::Down};
    case LiftLambdaPure: return {SplitKind::LiftLambda, false, 'l', Direction::Up};
    case LiftLambdaMixedTau: return {SplitKind::LiftLambda, true, 't', Direction::Down};
  }
  throw std::logic_error("unknown sequence kind");
}

std::string_view sequence_kind_name(SequenceKind kind) {
  using enum SequenceKind;
  switch (kind) {
    case DropRhoPure: return "drop-rho-pure";
    case DropRhoMixedTau: return "drop-rho-mixed-tau";
    case DropLambdaPure: return "drop-lambda-pure";
    case DropLambdaMixedTau: return "drop-lambda-mixed-tau";
    case LiftRhoPure: return "lift-rho-pure";
    case LiftRhoMixedTau: return "lift-rho-mixed-tau";
    case LiftLambdaPure: return "lift-lambda-pure";
    case LiftLambdaMixedTau: return "lift-lambda-mixed-tau";
  }
  return "?";
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view name) {
  for (SequenceKind k : kAllSequenceKinds) {
    if (sequence_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

std::string_view arrow(Direction d) { return d == Direction::Down ? "↘" : "↗"; }

std::string_view disk_letter(char retained) {
  switch (retained) {
    case 'r': return "ρ";
    case 'l': return "λ";
    default: return "τ";
  }
}

}  // namespace

std::string arrow_notation(SequenceKind kind, std::size_t length) {
  const SequenceTraits tr = traits(kind);
  const Direction first = is_drop(tr.split) ? Direction::Down : Direction::Up;
  const char split_disk = splits_off_rho(tr.split) ? 'r' : 'l';
  std::string out = "τ";
  for (std::size_t k = 0; k < length; ++k) {
    out += ' ';
    if (k == 0) {
      out += arrow(first);
      out += disk_letter(split_disk);
    } else {
      out += arrow(tr.added);
      out += disk_letter(tr.retained);
    }
    out += " γ^" + std::to_string(k);
  }
  return out;
}

TwistSequence::TwistSequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("twist sequence must have at least one entry");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] == 0) {
      throw ValidationError("twist n_" + std::to_string(k) +
                            " = 0 does not give a cabling construction");
    }
  }
}

std::string TwistSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries_[k]);
  }
  return out;
}

TwistSequence TwistSequence::parse(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw ValidationError("bad twist entry '" + piece + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TwistSequence(std::move(values));
}

int epsilon(std::int64_t n) {
  if (n == 0) throw ValidationError("epsilon is undefined for n = 0");
  return n % 2 != 0 ? 1 : -1;
}

SignTables sign_tables(const TwistSequence& t) {
  SignTables tables;
  tables.a.push_back(1);
  tables.A.push_back(1);
  for (std::int64_t n : t.entries()) {
    const int e = epsilon(n);
    tables.eps.push_back(e);
    tables.a.push_back(e * tables.a.back());
    tables.A.push_back(1 + e * tables.A.back());
  }
  return tables;
}

std::string slope_coords(SplitKind initial, std::size_t k) {
  // Splitting disks are measured against the disk that is not split off.
  if (k == 0) return splits_off_rho(initial) ? "(λ,λ⁰)" : "(ρ,ρ⁰)";
  if (k == 1) return "(τ,τ⁰)";
  return "(γ^" + std::to_string(k - 2) + ")";
}

std::vector<Slope> closed_form_slopes(const FareyFrame& f, SequenceKind kind,
                                      const TwistSequence& t) {
  const SignTables tables = sign_tables(t);
  const BigInt& p = f.p();
  const BigInt& q = f.q();
  const BigInt& r = f.r();
  const BigInt& s = f.s();
  const SplitKind initial = traits(kind).split;

  std::vector<Slope> out;
  out.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const BigInt A = tables.A[k];
    const BigInt a = tables.a[k];
    const BigInt Ama = A - a;
    BigInt twice_link;
    using enum SequenceKind;
    switch (kind) {
      case DropRhoPure: twice_link = 2 * p * (A * q + a * s); break;
      case DropRhoMixedTau: twice_link = 2 * (q + s) * (A * p + Ama * r); break;
      case DropLambdaPure: twice_link = 2 * r * (A * s + a * q); break;
      case DropLambdaMixedTau: twice_link = 2 * (q + s) * (A * r + Ama * p); break;
      case LiftRhoPure: twice_link = 2 * q * (A * p + a * r); break;
      case LiftRhoMixedTau: twice_link = 2 * (p + r) * (A * q + Ama * s); break;
      case LiftLambdaPure: twice_link = 2 * s * (A * r + a * p); break;
      case LiftLambdaMixedTau: twice_link = 2 * (p + r) * (A * s + Ama * q); break;
    }
    out.push_back({Rational(twice_link) + Rational(BigInt(1), BigInt(t[k])),
                   slope_coords(initial, k)});
  }
  return out;
}

OracleResult oracle_slopes(const FareyFrame& f, SequenceKind kind, const TwistSequence& t) {
  const SequenceTraits tr = traits(kind);
  const HomologyClass base = splits_off_rho(tr.split) ? f.rho() : f.lambda();
  const HomologyClass tau = f.tau();
  const bool drop = is_drop(tr.split);

  OracleResult result;
  auto record = [&](std::size_t k, std::optional<HomologyClass> c_prev,
                    const HomologyClass& upper, const HomologyClass& lower) {
    Slope slope{linking_slope(upper, lower) + Rational(BigInt(1), BigInt(t[k])),
                slope_coords(tr.split, k)};
    result.slopes.push_back(slope);
    result.trace.push_back(TraceStep{k, std::move(c_prev), upper, lower,
                                     BigInt(upper.m * lower.ell), std::move(slope)});
  };

  // The splitting itself: K_tau over the split-off knot, or the reverse.
  if (drop) {
    record(0, std::nullopt, tau, base);
  } else {
    record(0, std::nullopt, base, tau);
  }

  // Each new knot joins a fresh copy of the repeated knot to the previous
  // one; the previous one's orientation flips exactly when n_k is even.
  const HomologyClass& repeated = tr.mixed ? tau : base;
  const HomologyClass& other = tr.mixed ? base : tau;
  HomologyClass c = repeated + epsilon(t[0]) * other;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!tr.mixed) {
      if (drop) {
        record(k, c, c, base);
      } else {
        record(k, c, base, c);
      }
    } else if (drop) {
      // Copies of K_tau are lifted above the previous knot.
      record(k, c, tau, c);
    } else {
      record(k, c, c, tau);
    }
    c = repeated + epsilon(t[k]) * c;
  }
  return result;
}

std::vector<Bit> binary_invariants(SequenceKind kind, std::size_t steps, Bit splitting_bit) {
  if (steps < 1) throw ValidationError("binary invariants need at least one step");
  if (splitting_bit > 1) throw ValidationError("splitting bit must be 0 or 1");
  std::vector<Bit> bits(steps, 0);
  bits[0] = splitting_bit;
  if (traits(kind).mixed && steps >= 2) bits[1] = 1;
  return bits;
}

TunnelInvariants assemble_invariants(const FareyFrame& f, SequenceKind kind,
                                     const TwistSequence& t, Bit splitting_bit,
                                     bool from_trivial, AssembleOptions opts) {
  if (from_trivial && !f.is_trivial_position()) {
    throw ValidationError("from-trivial requires the frame (1,0,0,1), got " + f.to_string());
  }
  std::vector<Slope> slopes = closed_form_slopes(f, kind, t);
  if (opts.verify) {
    const OracleResult oracle = oracle_slopes(f, kind, t);
    for (std::size_t k = 0; k < slopes.size(); ++k) {
      if (slopes[k].value != oracle.slopes[k].value) {
        throw ConsistencyError("closed form and oracle disagree at k=" + std::to_string(k) +
                               ": " + slopes[k].value.to_string() + " vs " +
                               oracle.slopes[k].value.to_string());
      }
    }
  }
  std::vector<Bit> bits = binary_invariants(kind, t.size(), splitting_bit);

  std::variant<SimpleSlope, Slope> first = slopes.front();
  if (from_trivial) first = slope_to_simple(slopes.front().value);
  std::vector<Slope> rest(std::make_move_iterator(slopes.begin() + 1),
                          std::make_move_iterator(slopes.end()));
  return TunnelInvariants::make(std::move(first), std::move(rest), std::move(bits));
}

}  // namespace itersplit
