#pragma once

// Tunnel descriptors, catalog entries, and their JSON forms. All JSON uses
// fixed key order and writes rationals as "num/den".

#include "itersplit/exact_slope.hpp"
#include "itersplit/farey_frame.hpp"
#include "itersplit/iteration.hpp"
#include "itersplit/two_bridge.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace itersplit {

using Json = nlohmann::ordered_json;

/// Everything needed to recompute a tunnel's invariants.
struct TunnelDescriptor {
  FareyFrame frame;
  SequenceKind kind;
  TwistSequence twists;
  Bit splitting_bit = 0;
  bool from_trivial = false;

  /// "p,q,r,s:kind:n_0,...,n_d:bit" with an optional trailing ":trivial".
  std::string to_string() const;
  static TunnelDescriptor parse(std::string_view text, bool validate = true);
};

inline constexpr std::string_view kFlagDegenerateFrame = "degenerate-frame";
inline constexpr std::string_view kFlagUnverifiedFrame = "unverified-frame";
inline constexpr std::string_view kFlagZeroB = "zero-b";

/// Warning tags that travel with a frame's results.
std::vector<std::string> frame_flags(const FareyFrame& f);

struct CatalogEntry {
  TunnelDescriptor descriptor;
  TunnelInvariants invariants;
  std::vector<std::string> flags;
};

/// Computes invariants and flags for a descriptor.
CatalogEntry make_entry(const TunnelDescriptor& d, bool verify = false);

Json to_json(const TunnelInvariants& inv);
TunnelInvariants invariants_from_json(const Json& j);

Json to_json(const TunnelDescriptor& d);
TunnelDescriptor descriptor_from_json(const Json& j);

inline constexpr int kCatalogSchemaVersion = 1;

/// {"descriptor", "invariants", "flags", "schema_version"}
Json to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j);

/// {"k", "c_prev", "upper", "lower", "linking", "slope"}
Json to_json(const TraceStep& step);

Json to_json(const ContinuedFraction2B& cf);
Json to_json(const CorrespondenceReport& report);

/// One compact line, UTF-8 kept as is.
std::string dump_line(const Json& j);

}  // namespace itersplit
