#pragma once

// Iterated splitting: the eight iteration sequences, the parity-driven sign
// tables a(k) and A(k), closed-form slopes, an independent slope oracle that
// tracks homology classes step by step, binary invariants, and assembly into
// a complete invariant.

#include "itersplit/exact_slope.hpp"
#include "itersplit/farey_frame.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itersplit {

enum class SequenceKind {
  DropRhoPure,
  DropRhoMixedTau,
  DropLambdaPure,
  DropLambdaMixedTau,
  LiftRhoPure,
  LiftRhoMixedTau,
  LiftLambdaPure,
  LiftLambdaMixedTau,
};

inline constexpr std::array<SequenceKind, 8> kAllSequenceKinds = {
    SequenceKind::DropRhoPure,    SequenceKind::DropRhoMixedTau,
    SequenceKind::DropLambdaPure, SequenceKind::DropLambdaMixedTau,
    SequenceKind::LiftRhoPure,    SequenceKind::LiftRhoMixedTau,
    SequenceKind::LiftLambdaPure, SequenceKind::LiftLambdaMixedTau};

enum class Direction { Down, Up };

/// Static description of a sequence: how it starts and what each iterative
/// step adds.
struct SequenceTraits {
  SplitKind split;
  /// Pure sequences repeat the split-off knot; mixed ones add copies of K_tau.
  bool mixed;
  /// Disk kept in every iterative principal pair: 'r' (rho), 'l' (lambda)
  /// or 't' (tau).
  char retained;
  /// Vertical direction of every added copy after the initial split.
  Direction added;
};

SequenceTraits traits(SequenceKind kind);
std::string_view sequence_kind_name(SequenceKind kind);  // "drop-rho-pure", ...
std::optional<SequenceKind> parse_sequence_kind(std::string_view name);

/// Arrow notation for the first `length` tunnels, e.g.
/// "τ ↘ρ γ^0 ↗τ γ^1 ↗τ γ^2".
std::string arrow_notation(SequenceKind kind, std::size_t length);

/// Half-twist counts n_0..n_d, all nonzero, at least one entry.
class TwistSequence {
public:
  explicit TwistSequence(std::vector<std::int64_t> entries);

  std::span<const std::int64_t> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t k) const { return entries_[k]; }

  /// "n_0,n_1,..."
  std::string to_string() const;
  static TwistSequence parse(std::string_view text);

  friend bool operator==(const TwistSequence&, const TwistSequence&) = default;

private:
  std::vector<std::int64_t> entries_;
};

/// (-1)^(1+n): +1 for odd n, -1 for even n. Throws ValidationError for 0.
int epsilon(std::int64_t n);

/// eps has d+1 entries; a and A have d+2, with a[0] = A[0] = 1,
/// a[k+1] = eps[k] a[k], A[k+1] = 1 + eps[k] A[k].
struct SignTables {
  std::vector<int> eps;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> A;
};

SignTables sign_tables(const TwistSequence& t);

/// Coordinate label of slope k in a sequence starting with split kind k0.
std::string slope_coords(SplitKind initial, std::size_t k);

/// Slopes of gamma^0..gamma^d from the closed-form table.
std::vector<Slope> closed_form_slopes(const FareyFrame& f, SequenceKind kind,
                                      const TwistSequence& t);

struct TraceStep {
  std::size_t k;
  /// Class of the previous iterated knot; empty at the splitting step.
  std::optional<HomologyClass> c_prev;
  HomologyClass upper;
  HomologyClass lower;
  /// Lk(upper, lower) = m_upper * l_lower.
  BigInt linking;
  Slope slope;
};

using IterationTrace = std::vector<TraceStep>;

struct OracleResult {
  std::vector<Slope> slopes;
  IterationTrace trace;
};

/// Slopes recomputed by orienting and summing homology classes step by step
/// and applying the linking-slope formula; never touches a(k) or A(k).
OracleResult oracle_slopes(const FareyFrame& f, SequenceKind kind, const TwistSequence& t);

/// Pure kinds give [bit, 0, 0, ...]; mixed kinds [bit, 1, 0, ...]. The
/// splitting bit depends on the cabling that preceded the splitting and must
/// be supplied.
std::vector<Bit> binary_invariants(SequenceKind kind, std::size_t steps, Bit splitting_bit);

struct AssembleOptions {
  /// Re-derive the slopes with oracle_slopes and throw ConsistencyError on
  /// any mismatch.
  bool verify = false;
};

/// Complete invariant for a tunnel in the sequence. With from_trivial the
/// frame must be the trivial position and the first slope is reported as
/// its simple-slope class.
TunnelInvariants assemble_invariants(const FareyFrame& f, SequenceKind kind,
                                     const TwistSequence& t, Bit splitting_bit,
                                     bool from_trivial, AssembleOptions opts = {});

}  // namespace itersplit
