#include "itersplit/descriptor.hpp"

namespace itersplit {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

SequenceKind kind_or_throw(std::string_view name) {
  if (auto k = parse_sequence_kind(name)) return *k;
  throw ValidationError("unknown sequence kind '" + std::string(name) + "'");
}

}  // namespace

std::string TunnelDescriptor::to_string() const {
  std::string out = frame.to_string() + ":" + std::string(sequence_kind_name(kind)) + ":" +
                    twists.to_string() + ":" + std::to_string(splitting_bit);
  if (from_trivial) out += ":trivial";
  return out;
}

TunnelDescriptor TunnelDescriptor::parse(std::string_view text, bool validate) {
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 5) {
    throw ValidationError("descriptor must be frame:kind:twists[:bit][:trivial], got '" +
                          std::string(text) + "'");
  }
  Bit bit = 0;
  bool trivial = false;
  for (std::size_t i = 3; i < parts.size(); ++i) {
    if (parts[i] == "0" || parts[i] == "1") {
      bit = static_cast<Bit>(parts[i][0] - '0');
    } else if (parts[i] == "trivial") {
      trivial = true;
    } else {
      throw ValidationError("unexpected descriptor field '" + std::string(parts[i]) + "'");
    }
  }
  return TunnelDescriptor{parse_frame(parts[0], validate), kind_or_throw(parts[1]),
                          TwistSequence::parse(parts[2]), bit, trivial};
}

std::vector<std::string> frame_flags(const FareyFrame& f) {
  std::vector<std::string> flags;
  if (f.degenerate()) flags.emplace_back(kFlagDegenerateFrame);
  if (!f.verified()) flags.emplace_back(kFlagUnverifiedFrame);
  return flags;
}

CatalogEntry make_entry(const TunnelDescriptor& d, bool verify) {
  return CatalogEntry{d,
                      assemble_invariants(d.frame, d.kind, d.twists, d.splitting_bit,
                                          d.from_trivial, AssembleOptions{verify}),
                      frame_flags(d.frame)};
}

Json to_json(const TunnelInvariants& inv) {
  Json j;
  Json coords = Json::array();
  if (const auto* s = std::get_if<SimpleSlope>(&inv.first)) {
    j["first"] = s->to_string();
    coords.push_back(nullptr);
  } else {
    const Slope& first = std::get<Slope>(inv.first);
    j["first"] = first.value.to_string();
    coords.push_back(first.coords);
  }
  Json rest = Json::array();
  for (const Slope& s : inv.rest) {
    rest.push_back(s.value.to_string());
    coords.push_back(s.coords);
  }
  j["rest"] = std::move(rest);
  j["binary"] = inv.binary;
  j["coords"] = std::move(coords);
  return j;
}

TunnelInvariants invariants_from_json(const Json& j) {
  const Json& coords = j.at("coords");
  const std::string first_text = j.at("first").get<std::string>();
  std::variant<SimpleSlope, Slope> first = Slope{};
  if (!first_text.empty() && first_text.front() == '[') {
    first = SimpleSlope::parse(first_text);
  } else {
    first = Slope{Rational::parse(first_text), coords.at(0).get<std::string>()};
  }
  std::vector<Slope> rest;
  const Json& rest_json = j.at("rest");
  for (std::size_t i = 0; i < rest_json.size(); ++i) {
    rest.push_back(Slope{Rational::parse(rest_json[i].get<std::string>()),
                         coords.at(i + 1).get<std::string>()});
  }
  return TunnelInvariants::make(std::move(first), std::move(rest),
                                j.at("binary").get<std::vector<Bit>>());
}

Json to_json(const TunnelDescriptor& d) {
  Json j;
  j["frame"] = d.frame.to_string();
  j["kind"] = sequence_kind_name(d.kind);
  j["twists"] = d.twists.to_string();
  j["splitting_bit"] = d.splitting_bit;
  j["from_trivial"] = d.from_trivial;
  j["validated"] = d.frame.verified();
  return j;
}

TunnelDescriptor descriptor_from_json(const Json& j) {
  const bool validated = j.value("validated", true);
  const int bit = j.at("splitting_bit").get<int>();
  if (bit != 0 && bit != 1) throw ValidationError("splitting_bit must be 0 or 1");
  return TunnelDescriptor{parse_frame(j.at("frame").get<std::string>(), validated),
                          kind_or_throw(j.at("kind").get<std::string>()),
                          TwistSequence::parse(j.at("twists").get<std::string>()),
                          static_cast<Bit>(bit), j.at("from_trivial").get<bool>()};
}

Json to_json(const CatalogEntry& e) {
  Json j;
  j["descriptor"] = to_json(e.descriptor);
  j["invariants"] = to_json(e.invariants);
  j["flags"] = e.flags;
  j["schema_version"] = kCatalogSchemaVersion;
  return j;
}

CatalogEntry entry_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kCatalogSchemaVersion) {
    throw ValidationError("unsupported catalog schema_version " +
                          j.at("schema_version").dump());
  }
  return CatalogEntry{descriptor_from_json(j.at("descriptor")),
                      invariants_from_json(j.at("invariants")),
                      j.at("flags").get<std::vector<std::string>>()};
}

Json to_json(const TraceStep& step) {
  Json j;
  j["k"] = step.k;
  j["c_prev"] = step.c_prev ? Json(step.c_prev->to_string()) : Json(nullptr);
  j["upper"] = step.upper.to_string();
  j["lower"] = step.lower.to_string();
  j["linking"] = Rational(step.linking).to_string();
  j["slope"] = step.slope.value.to_string();
  return j;
}

Json to_json(const ContinuedFraction2B& cf) {
  Json j;
  j["cf"] = cf.to_string();
  j["a"] = std::vector<int>(cf.a().begin(), cf.a().end());
  j["b"] = std::vector<std::int64_t>(cf.b().begin(), cf.b().end());
  return j;
}

Json to_json(const CorrespondenceReport& report) {
  Json j = to_json(report.cf);
  j["twists"] = report.twists.to_string();
  j["prop_invariants"] = to_json(report.prop_invariants);
  j["iter_invariants"] = to_json(report.iter_invariants);
  j["match"] = report.match;
  Json flags = Json::array();
  if (report.cf.has_zero_b()) flags.push_back(kFlagZeroB);
  j["flags"] = std::move(flags);
  return j;
}

std::string dump_line(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

}  // namespace itersplit
