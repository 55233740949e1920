#pragma once

// Torus-knot frames (p,q,r,s) and the single-step slope primitives: the
// linking-number slope, the four splitting-disk slopes, and the slopes of
// the tunnels produced by one splitting.

#include "itersplit/exact_slope.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace itersplit {

/// Class l*ell + m*meridian in H_1(T x I), in the ordered (ell, m) basis.
struct HomologyClass {
  BigInt ell;
  BigInt m;

  friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    return {a.ell + b.ell, a.m + b.m};
  }
  friend HomologyClass operator*(int sign, const HomologyClass& c) {
    return {sign * c.ell, sign * c.m};
  }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  /// "(ell,m)"
  std::string to_string() const;
};

enum class SplitKind { DropLambda, LiftLambda, DropRho, LiftRho };

inline constexpr std::array<SplitKind, 4> kAllSplitKinds = {
    SplitKind::DropLambda, SplitKind::LiftLambda, SplitKind::DropRho,
    SplitKind::LiftRho};

std::string_view split_kind_name(SplitKind k);  // "drop-lambda", ...
std::optional<SplitKind> parse_split_kind(std::string_view name);

/// Lambda kinds split off K_lambda and are measured in (rho,rho0)
/// coordinates; rho kinds the other way round.
bool splits_off_rho(SplitKind k);
bool is_drop(SplitKind k);

enum class FrameErrorCode { RhoPairNotCoprime, LambdaPairNotCoprime, DeterminantNotUnit };

class FrameError : public ValidationError {
public:
  FrameError(FrameErrorCode code, const std::string& what)
      : ValidationError(what), code_(code) {}
  FrameErrorCode code() const { return code_; }

private:
  FrameErrorCode code_;
};

/// K_rho = T_{p,q}, K_lambda = T_{r,s}, K_tau = T_{p+r,q+s}.
class FareyFrame {
public:
  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  const BigInt& s() const { return s_; }

  HomologyClass rho() const { return {p_, q_}; }
  HomologyClass lambda() const { return {r_, s_}; }
  HomologyClass tau() const { return {p_ + r_, q_ + s_}; }

  /// False when the frame was built through unchecked_frame and fails the
  /// checks validate_frame performs.
  bool verified() const { return verified_; }

  /// K_tau is trivial or 2-bridge: |p+r| <= 2 or |q+s| <= 2.
  bool degenerate() const;

  /// (1,0,0,1) or (-1,0,0,-1): the trivial knot positioned as T_{1,1}.
  bool is_trivial_position() const;

  /// "p,q,r,s"
  std::string to_string() const;

  friend bool operator==(const FareyFrame& a, const FareyFrame& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
  }

private:
  friend FareyFrame validate_frame(BigInt, BigInt, BigInt, BigInt);
  friend FareyFrame unchecked_frame(BigInt, BigInt, BigInt, BigInt);
  FareyFrame(BigInt p, BigInt q, BigInt r, BigInt s, bool verified)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)),
        verified_(verified) {}

  BigInt p_, q_, r_, s_;
  bool verified_;
};

/// Requires gcd(|p|,|q|) = gcd(|r|,|s|) = 1 and |ps - qr| = 1; throws
/// FrameError with the failing condition otherwise.
FareyFrame validate_frame(BigInt p, BigInt q, BigInt r, BigInt s);

/// Exploratory bypass of validate_frame. The result reports verified() ==
/// false unless the frame would have passed anyway.
FareyFrame unchecked_frame(BigInt p, BigInt q, BigInt r, BigInt s);

/// Parses "p,q,r,s" and validates (or bypasses when validate is false).
FareyFrame parse_frame(std::string_view text, bool validate = true);

/// 2 Lk(K_U, K_L) = 2 m_U l_L.
Rational linking_slope(const HomologyClass& upper, const HomologyClass& lower);

/// Upper and lower knot classes whose linking slope is the splitting disk's
/// slope: drop kinds link K_tau over the split-off knot, lift kinds the
/// reverse.
std::pair<HomologyClass, HomologyClass> splitting_linking_pair(const FareyFrame& f,
                                                               SplitKind k);

/// Slope of the splitting disk itself, labeled with its coordinates.
Slope splitting_disk_slope(const FareyFrame& f, SplitKind k);

/// Slope of the tunnel from a splitting with n half-twists: disk slope + 1/n.
/// Throws ValidationError when n == 0.
Slope splitting_tunnel_slope(const FareyFrame& f, SplitKind k, const BigInt& n);

}  // namespace itersplit
