#include "itersplit/two_bridge.hpp"

#include <algorithm>

namespace itersplit {

namespace {

std::int64_t k_value(int a_prev, int a_cur, std::int64_t b) {
  if (a_cur != a_prev) return 2 * b;
  return a_cur == 1 ? 2 * b + 1 : 2 * b - 1;
}

}  // namespace

ContinuedFraction2B validate_cf(std::vector<int> a, std::vector<std::int64_t> b) {
  if (a.size() != b.size()) {
    throw CfError(CfErrorCode::LengthMismatch,
                  "a has " + std::to_string(a.size()) + " entries but b has " +
                      std::to_string(b.size()));
  }
  if (a.empty()) throw CfError(CfErrorCode::Empty, "continued fraction has no terms");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 1 && a[i] != -1) {
      throw CfError(CfErrorCode::SignNotUnit,
                    "a_" + std::to_string(i) + " = " + std::to_string(a[i]) + ", expected +1 or -1");
    }
  }
  if (b[0] == 0) throw CfError(CfErrorCode::ZeroB0, "b_0 must be nonzero");

  ContinuedFraction2B cf;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const std::int64_t k = k_value(a[i - 1], a[i], b[i]);
    if (k == 0) {
      throw CfError(CfErrorCode::ZeroK, "k_" + std::to_string(i) +
                                            " = 0 (a_i and a_{i-1} differ and b_i = 0)");
    }
    cf.k_.push_back(k);
  }
  cf.a_ = std::move(a);
  cf.b_ = std::move(b);
  return cf;
}

bool ContinuedFraction2B::has_zero_b() const {
  return std::find(b_.begin() + 1, b_.end(), 0) != b_.end();
}

std::string ContinuedFraction2B::to_string() const {
  std::string out = "[";
  for (std::size_t j = a_.size(); j-- > 0;) {
    out += std::to_string(2 * a_[j]) + "," + std::to_string(2 * b_[j]);
    if (j) out += ',';
  }
  return out + "]";
}

ContinuedFraction2B ContinuedFraction2B::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ValidationError("continued fraction must look like [2a_d,2b_d,...,2a_0,2b_0]");
  }
  std::vector<std::int64_t> entries;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string piece(body.substr(0, comma));
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size() || v % 2 != 0) {
      throw ValidationError("continued fraction entries must be even integers, got '" +
                            piece + "'");
    }
    entries.push_back(v / 2);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (entries.empty() || entries.size() % 2 != 0) {
    throw CfError(CfErrorCode::LengthMismatch,
                  "continued fraction needs an even, nonzero number of entries");
  }
  std::vector<int> a;
  std::vector<std::int64_t> b;
  for (std::size_t j = entries.size(); j >= 2; j -= 2) {
    a.push_back(static_cast<int>(std::clamp<std::int64_t>(entries[j - 2], -1000, 1000)));
    b.push_back(entries[j - 1]);
  }
  return validate_cf(std::move(a), std::move(b));
}

TunnelInvariants semisimple_slopes(const ContinuedFraction2B& cf) {
  const std::int64_t b0 = cf.b()[0];
  const Rational m0 = cf.a()[0] == 1 ? Rational(BigInt(2 * b0), BigInt(4 * b0 + 1))
                                     : Rational(BigInt(2 * b0 - 1), BigInt(4 * b0 - 1));
  std::vector<Slope> rest;
  for (std::size_t i = 1; i <= cf.depth(); ++i) {
    rest.push_back({Rational(-2 * cf.a()[i - 1]) + Rational(BigInt(1), BigInt(cf.k(i))),
                    slope_coords(SplitKind::DropRho, i)});
  }
  return TunnelInvariants::make(simple_class(m0), std::move(rest),
                                std::vector<Bit>(cf.depth() + 1, 0));
}

TwistSequence cf_to_twists(const ContinuedFraction2B& cf) {
  std::vector<std::int64_t> n;
  const std::int64_t b0 = cf.b()[0];
  n.push_back(cf.a()[0] == 1 ? 2 * b0 : 2 * b0 - 1);
  for (std::size_t i = 1; i <= cf.depth(); ++i) n.push_back(cf.k(i));
  return TwistSequence(std::move(n));
}

ContinuedFraction2B twists_to_cf(const TwistSequence& t) {
  std::vector<int> a;
  std::vector<std::int64_t> b;
  const std::int64_t n0 = t[0];
  if (n0 % 2 == 0) {
    a.push_back(1);
    b.push_back(n0 / 2);
  } else {
    if (n0 == -1) {
      throw CfError(CfErrorCode::ZeroB0,
                    "n_0 = -1 would need b_0 = 0; it gives the trivial tunnel");
    }
    a.push_back(-1);
    b.push_back((n0 + 1) / 2);
  }
  for (std::size_t r = 1; r < t.size(); ++r) {
    const std::int64_t n = t[r];
    const int prev = a.back();
    const int cur = n % 2 == 0 ? -prev : prev;
    a.push_back(cur);
    if (cur != prev) {
      b.push_back(n / 2);
    } else {
      b.push_back(cur == 1 ? (n - 1) / 2 : (n + 1) / 2);
    }
  }
  return validate_cf(std::move(a), std::move(b));
}

CorrespondenceReport verify_correspondence(const ContinuedFraction2B& cf) {
  TwistSequence twists = cf_to_twists(cf);
  TunnelInvariants prop = semisimple_slopes(cf);
  TunnelInvariants iter = assemble_invariants(validate_frame(1, 0, 0, 1),
                                              SequenceKind::DropRhoPure, twists, 0, true);
  const bool match = invariants_equal(prop, iter);
  return CorrespondenceReport{cf, std::move(twists), std::move(prop), std::move(iter), match};
}

}  // namespace itersplit
