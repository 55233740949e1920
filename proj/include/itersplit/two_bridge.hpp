#pragma once

// 2-bridge knots in the position given by a continued fraction
// [2a_d,2b_d,...,2a_0,2b_0]: slope invariants of the upper semisimple
// tunnel, the map to drop-rho twist sequences on the trivial knot and back,
// and a check that both routes give the same tunnel invariants.

#include "itersplit/exact_slope.hpp"
#include "itersplit/iteration.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itersplit {

enum class CfErrorCode { SignNotUnit, ZeroB0, LengthMismatch, ZeroK, Empty };

class CfError : public ValidationError {
public:
  CfError(CfErrorCode code, const std::string& what) : ValidationError(what), code_(code) {}
  CfErrorCode code() const { return code_; }

private:
  CfErrorCode code_;
};

/// Stored in subscript order: a[0], b[0] are the innermost terms.
class ContinuedFraction2B {
public:
  std::span<const int> a() const { return a_; }
  std::span<const std::int64_t> b() const { return b_; }
  /// Number of terms beyond the first: d.
  std::size_t depth() const { return a_.size() - 1; }

  /// k_i for 1 <= i <= d: 2b_i+1, 2b_i or 2b_i-1 according as a_i = a_{i-1}
  /// = 1, the signs differ, or a_i = a_{i-1} = -1.
  std::int64_t k(std::size_t i) const { return k_.at(i - 1); }

  /// Some b_i with i >= 1 is zero (allowed when k_i != 0).
  bool has_zero_b() const;

  /// Display order, e.g. "[2,2,2,2]" for a = (1,1), b = (1,1).
  std::string to_string() const;
  /// Parses the display order back; entries must be even.
  static ContinuedFraction2B parse(std::string_view text);

  friend bool operator==(const ContinuedFraction2B& x, const ContinuedFraction2B& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

private:
  friend ContinuedFraction2B validate_cf(std::vector<int>, std::vector<std::int64_t>);
  ContinuedFraction2B() = default;
  std::vector<int> a_;
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> k_;
};

/// Throws CfError naming the failing condition.
ContinuedFraction2B validate_cf(std::vector<int> a, std::vector<std::int64_t> b);

/// Slope and binary invariants of the upper semisimple tunnel. The binary
/// invariants of a (1,1)-tunnel are all 0.
TunnelInvariants semisimple_slopes(const ContinuedFraction2B& cf);

/// [n_0, k_1, ..., k_d] with n_0 = 2b_0 for a_0 = 1 and 2b_0 - 1 for a_0 = -1.
TwistSequence cf_to_twists(const ContinuedFraction2B& cf);

/// Inverse of cf_to_twists. The parity of n_r decides whether a_r flips.
/// n_0 = -1 would need b_0 = 0 and is rejected with CfErrorCode::ZeroB0.
ContinuedFraction2B twists_to_cf(const TwistSequence& t);

struct CorrespondenceReport {
  ContinuedFraction2B cf;
  TwistSequence twists;
  TunnelInvariants prop_invariants;
  TunnelInvariants iter_invariants;
  bool match;
};

/// Runs the drop-rho iteration from the trivial knot on cf_to_twists(cf)
/// and compares with semisimple_slopes(cf).
CorrespondenceReport verify_correspondence(const ContinuedFraction2B& cf);

}  // namespace itersplit
