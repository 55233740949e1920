#include "itersplit/cli.hpp"

#include "itersplit/catalog.hpp"
#include "itersplit/descriptor.hpp"
#include "itersplit/grid.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace itersplit::cli {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw ValidationError("expected a comma-separated list of integers, got '" + text + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) return values;
    start = comma + 1;
  }
}

SplitKind split_kind_or_throw(const std::string& name) {
  if (auto k = parse_split_kind(name)) return *k;
  throw ValidationError("unknown split kind '" + name + "'");
}

SequenceKind sequence_kind_or_throw(const std::string& name) {
  if (auto k = parse_sequence_kind(name)) return *k;
  throw ValidationError("unknown sequence kind '" + name + "'");
}

Bit bit_or_throw(int value) {
  if (value != 0 && value != 1) throw ValidationError("splitting bit must be 0 or 1");
  return static_cast<Bit>(value);
}

struct CfInput {
  std::string a;
  std::string b;
  std::string cf;

  void attach(CLI::App* sub) {
    sub->add_option("--a", a, "signs a_0,...,a_d (each +1 or -1)");
    sub->add_option("--b", b, "b_0,...,b_d");
    sub->add_option("--cf", cf, "display form [2a_d,2b_d,...,2a_0,2b_0]");
  }

  ContinuedFraction2B get() const {
    if (!cf.empty()) {
      if (!a.empty() || !b.empty()) throw CLI::ValidationError("--cf", "excludes --a/--b");
      return ContinuedFraction2B::parse(cf);
    }
    if (a.empty() || b.empty()) throw CLI::RequiredError("--a and --b (or --cf)");
    std::vector<int> signs;
    for (std::int64_t v : parse_int_list(a)) {
      signs.push_back(static_cast<int>(std::clamp<std::int64_t>(v, -1000, 1000)));
    }
    return validate_cf(std::move(signs), parse_int_list(b));
  }
};

Json flags_json(const std::vector<std::string>& flags) { return Json(flags); }

// -- split ------------------------------------------------------------------

struct SplitArgs {
  std::string frame, kind, n;
  bool no_validate = false;
};

int do_split(const SplitArgs& args, std::ostream& out) {
  const FareyFrame f = parse_frame(args.frame, !args.no_validate);
  const SplitKind kind = split_kind_or_throw(args.kind);
  const Rational n = Rational::parse(args.n);
  if (!n.is_integer()) throw ValidationError("--n must be an integer");
  const Slope disk = splitting_disk_slope(f, kind);
  const Slope tunnel = splitting_tunnel_slope(f, kind, n.numerator());
  Json j;
  j["frame"] = f.to_string();
  j["kind"] = split_kind_name(kind);
  j["n"] = n.numerator().str();
  j["disk_slope"] = disk.value.to_string();
  j["slope"] = tunnel.value.to_string();
  j["coords"] = tunnel.coords;
  j["flags"] = flags_json(frame_flags(f));
  out << dump_line(j) << '\n';
  return kOk;
}

// -- iterate ----------------------------------------------------------------

struct IterateArgs {
  std::string frame, kind, twists;
  int splitting_bit = 0;
  bool from_trivial = false, trace = false, verify = false, no_validate = false;
};

int do_iterate(const IterateArgs& args, std::ostream& out) {
  const TunnelDescriptor d{parse_frame(args.frame, !args.no_validate),
                           sequence_kind_or_throw(args.kind), TwistSequence::parse(args.twists),
                           bit_or_throw(args.splitting_bit), args.from_trivial};
  if (args.trace) {
    for (const TraceStep& step : oracle_slopes(d.frame, d.kind, d.twists).trace) {
      out << dump_line(to_json(step)) << '\n';
    }
  }
  const CatalogEntry e = make_entry(d, args.verify);
  Json j;
  j["descriptor"] = to_json(d);
  j["sequence"] = arrow_notation(d.kind, d.twists.size());
  j["invariants"] = to_json(e.invariants);
  j["verified"] = args.verify;
  j["flags"] = flags_json(e.flags);
  out << dump_line(j) << '\n';
  return kOk;
}

// -- two-bridge -------------------------------------------------------------

int do_two_bridge_slopes(const CfInput& in, std::ostream& out) {
  const ContinuedFraction2B cf = in.get();
  Json j = to_json(cf);
  j["invariants"] = to_json(semisimple_slopes(cf));
  Json flags = Json::array();
  if (cf.has_zero_b()) flags.push_back(kFlagZeroB);
  j["flags"] = std::move(flags);
  out << dump_line(j) << '\n';
  return kOk;
}

int do_to_twists(const CfInput& in, std::ostream& out) {
  const ContinuedFraction2B cf = in.get();
  Json j = to_json(cf);
  j["twists"] = cf_to_twists(cf).to_string();
  out << dump_line(j) << '\n';
  return kOk;
}

int do_from_twists(const std::string& twists, std::ostream& out) {
  const TwistSequence t = TwistSequence::parse(twists);
  Json j;
  j["twists"] = t.to_string();
  const Json cf = to_json(twists_to_cf(t));
  for (const auto& [key, value] : cf.items()) j[key] = value;
  out << dump_line(j) << '\n';
  return kOk;
}

int do_two_bridge_verify(const CfInput& in, std::ostream& out) {
  const CorrespondenceReport report = verify_correspondence(in.get());
  out << dump_line(to_json(report)) << '\n';
  return report.match ? kOk : kVerificationFailed;
}

// -- verify-correspondence --------------------------------------------------

struct CorrespondenceArgs {
  std::size_t max_d = 4;
  std::int64_t b_range = 3;
  bool include_zero_b = false;
  bool all = false;
};

int do_verify_correspondence(const CorrespondenceArgs& args, std::ostream& out) {
  std::vector<std::int64_t> b_values = nonzero_range(args.b_range);
  if (args.include_zero_b) b_values.insert(b_values.begin() + args.b_range, 0);
  const auto cfs = continued_fractions(args.max_d, b_values);
  const auto reports = parallel_map<CorrespondenceReport>(
      cfs.size(), [&](std::size_t i) { return verify_correspondence(cfs[i]); });

  std::size_t failures = 0, flagged = 0;
  for (const CorrespondenceReport& r : reports) {
    const bool binary_ok = binary_structure_ok(r.iter_invariants.binary);
    if (!r.match || !binary_ok) ++failures;
    if (r.cf.has_zero_b()) ++flagged;
    if (args.all || !r.match || !binary_ok) out << dump_line(to_json(r)) << '\n';
  }
  Json summary;
  summary["command"] = "verify-correspondence";
  summary["max_d"] = args.max_d;
  summary["b_range"] = args.b_range;
  summary["include_zero_b"] = args.include_zero_b;
  summary["checked"] = reports.size();
  summary["failures"] = failures;
  summary["flagged"] = flagged;
  summary["status"] = failures == 0 ? "pass" : "fail";
  out << dump_line(summary) << '\n';
  return failures == 0 ? kOk : kVerificationFailed;
}

// -- verify-oracle ----------------------------------------------------------

struct OracleArgs {
  std::int64_t frame_bound = 5;
  std::size_t depth = 4;
  std::int64_t n_range = 3;
  std::uint64_t max_cases = 100000;
};

std::optional<Json> check_oracle_case(const FareyFrame& f, SequenceKind kind,
                                      const TwistSequence& t) {
  const std::vector<Slope> closed = closed_form_slopes(f, kind, t);
  const OracleResult oracle = oracle_slopes(f, kind, t);
  const Slope split = splitting_tunnel_slope(f, traits(kind).split, BigInt(t[0]));
  std::string problem;
  for (std::size_t k = 0; k < closed.size() && problem.empty(); ++k) {
    if (closed[k].value != oracle.slopes[k].value) problem = "closed form != oracle at k=" + std::to_string(k);
  }
  if (problem.empty() && closed[0].value != split.value) problem = "k=0 != splitting slope";
  for (Bit bit : {Bit{0}, Bit{1}}) {
    if (problem.empty() && !binary_structure_ok(binary_invariants(kind, t.size(), bit))) {
      problem = "binary structure";
    }
  }
  if (problem.empty()) return std::nullopt;
  Json j;
  j["frame"] = f.to_string();
  j["kind"] = sequence_kind_name(kind);
  j["twists"] = t.to_string();
  j["problem"] = problem;
  Json c = Json::array(), o = Json::array();
  for (const Slope& s : closed) c.push_back(s.value.to_string());
  for (const Slope& s : oracle.slopes) o.push_back(s.value.to_string());
  j["closed_form"] = std::move(c);
  j["oracle"] = std::move(o);
  return j;
}

int do_verify_oracle(const OracleArgs& args, std::ostream& out) {
  const auto frames = valid_frames(args.frame_bound);
  const auto seqs = twist_sequences(args.depth, nonzero_range(args.n_range));
  const std::uint64_t per_frame = kAllSequenceKinds.size() * seqs.size();
  const std::uint64_t total = frames.size() * per_frame;
  const auto picks = sample_indices(total, args.max_cases);

  const auto results = parallel_map<std::optional<Json>>(picks.size(), [&](std::size_t i) {
    const std::uint64_t idx = picks[i];
    const std::uint64_t rem = idx % per_frame;
    return check_oracle_case(frames[idx / per_frame], kAllSequenceKinds[rem / seqs.size()],
                             seqs[rem % seqs.size()]);
  });
  std::size_t failures = 0;
  for (const auto& r : results) {
    if (r) {
      ++failures;
      out << dump_line(*r) << '\n';
    }
  }
  Json summary;
  summary["command"] = "verify-oracle";
  summary["frame_bound"] = args.frame_bound;
  summary["depth"] = args.depth;
  summary["n_range"] = args.n_range;
  summary["frames"] = frames.size();
  summary["grid_size"] = total;
  summary["checked"] = picks.size();
  summary["failures"] = failures;
  summary["status"] = failures == 0 ? "pass" : "fail";
  out << dump_line(summary) << '\n';
  return failures == 0 ? kOk : kVerificationFailed;
}

// -- enumerate / check-catalog ----------------------------------------------

struct EnumerateArgs {
  std::string catalog;
  std::vector<std::string> frames;
  std::int64_t frame_bound = -1;
  std::string kinds = "all";
  std::size_t depth = 2;
  std::int64_t n_range = 3;
  int splitting_bit = 0;
  bool from_trivial = false;
  bool verify = false;
};

int do_enumerate(const EnumerateArgs& args, std::ostream& out) {
  std::vector<FareyFrame> frames;
  for (const std::string& f : args.frames) frames.push_back(parse_frame(f));
  if (args.frame_bound >= 0) {
    for (FareyFrame& f : valid_frames(args.frame_bound)) frames.push_back(std::move(f));
  }
  if (frames.empty()) throw CLI::RequiredError("--frame or --frame-bound");

  std::vector<SequenceKind> kinds;
  if (args.kinds == "all") {
    kinds.assign(kAllSequenceKinds.begin(), kAllSequenceKinds.end());
  } else {
    std::size_t start = 0;
    while (true) {
      const auto comma = args.kinds.find(',', start);
      kinds.push_back(sequence_kind_or_throw(args.kinds.substr(
          start, comma == std::string::npos ? comma : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  const Bit bit = bit_or_throw(args.splitting_bit);
  const auto seqs = twist_sequences(args.depth, nonzero_range(args.n_range));

  std::vector<TunnelDescriptor> descriptors;
  for (const FareyFrame& f : frames) {
    for (SequenceKind k : kinds) {
      for (const TwistSequence& t : seqs) {
        descriptors.push_back(TunnelDescriptor{f, k, t, bit, args.from_trivial});
      }
    }
  }
  const auto entries = parallel_map<CatalogEntry>(
      descriptors.size(), [&](std::size_t i) { return make_entry(descriptors[i], args.verify); });

  Catalog catalog(args.catalog);
  const std::size_t before = catalog.entries().size();
  std::size_t added = 0;
  for (const CatalogEntry& e : entries) added += catalog.add(e) ? 1 : 0;

  Json summary;
  summary["command"] = "enumerate";
  summary["catalog"] = args.catalog;
  summary["existing"] = before;
  summary["considered"] = entries.size();
  summary["added"] = added;
  summary["duplicates"] = entries.size() - added;
  summary["total"] = catalog.entries().size();
  out << dump_line(summary) << '\n';
  return kOk;
}

int do_check_catalog(const std::string& path, std::ostream& out) {
  const CatalogCheck check = check_catalog(path);
  Json summary;
  summary["command"] = "check-catalog";
  summary["catalog"] = path;
  summary["entries"] = check.entries;
  summary["mismatched_lines"] = check.mismatched_lines;
  summary["status"] = check.mismatched_lines.empty() ? "pass" : "fail";
  out << dump_line(summary) << '\n';
  return check.mismatched_lines.empty() ? kOk : kVerificationFailed;
}

// -- compare ----------------------------------------------------------------

struct CompareArgs {
  std::string left, right;
  bool no_validate = false;
};

int do_compare(const CompareArgs& args, std::ostream& out) {
  const CatalogEntry left = make_entry(TunnelDescriptor::parse(args.left, !args.no_validate));
  const CatalogEntry right = make_entry(TunnelDescriptor::parse(args.right, !args.no_validate));
  std::vector<std::string> flags = left.flags;
  for (const std::string& f : right.flags) {
    if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
  }
  Json j;
  j["left"] = to_json(left.descriptor);
  j["right"] = to_json(right.descriptor);
  j["left_invariants"] = to_json(left.invariants);
  j["right_invariants"] = to_json(right.invariants);
  j["result"] = invariants_equal(left.invariants, right.invariants) ? "equal" : "distinct";
  // Distinctness of the eight sequences is only guaranteed when K_tau is
  // neither trivial nor 2-bridge.
  j["distinctness_guaranteed"] =
      !left.descriptor.frame.degenerate() && !right.descriptor.frame.degenerate();
  j["flags"] = flags_json(flags);
  out << dump_line(j) << '\n';
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slope and binary invariants of iterated-splitting knot tunnels", "itersplit"};
  app.require_subcommand(1);

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "slope of a single splitting tunnel");
  split_cmd->add_option("--frame", split.frame, "p,q,r,s")->required();
  split_cmd->add_option("--kind", split.kind, "drop-lambda|lift-lambda|drop-rho|lift-rho")->required();
  split_cmd->add_option("--n", split.n, "nonzero half-twist count")->required();
  split_cmd->add_flag("--no-validate", split.no_validate, "skip frame validation (flags output)");

  IterateArgs iterate;
  auto* iterate_cmd = app.add_subcommand("iterate", "invariants of an iterated splitting tunnel");
  iterate_cmd->add_option("--frame", iterate.frame, "p,q,r,s")->required();
  iterate_cmd->add_option("--kind", iterate.kind, "sequence kind, e.g. drop-rho-pure")->required();
  iterate_cmd->add_option("--twists", iterate.twists, "n_0,...,n_d")->required();
  iterate_cmd->add_option("--splitting-bit", iterate.splitting_bit, "binary invariant of the splitting");
  iterate_cmd->add_flag("--from-trivial", iterate.from_trivial, "report the first slope as a simple slope");
  iterate_cmd->add_flag("--trace", iterate.trace, "emit the oracle trace before the result");
  iterate_cmd->add_flag("--verify", iterate.verify, "cross-check closed form against the oracle");
  iterate_cmd->add_flag("--no-validate", iterate.no_validate, "skip frame validation (flags output)");

  auto* tb_cmd = app.add_subcommand("two-bridge", "2-bridge knot continued fractions");
  tb_cmd->require_subcommand(1);
  CfInput tb_slopes, tb_to, tb_verify;
  std::string from_twists;
  auto* tb_slopes_cmd = tb_cmd->add_subcommand("slopes", "invariants of the upper semisimple tunnel");
  tb_slopes.attach(tb_slopes_cmd);
  auto* tb_to_cmd = tb_cmd->add_subcommand("to-twists", "continued fraction to twist sequence");
  tb_to.attach(tb_to_cmd);
  auto* tb_from_cmd = tb_cmd->add_subcommand("from-twists", "twist sequence to continued fraction");
  tb_from_cmd->add_option("--twists", from_twists, "n_0,...,n_d")->required();
  auto* tb_verify_cmd = tb_cmd->add_subcommand("verify", "check one continued fraction");
  tb_verify.attach(tb_verify_cmd);

  CorrespondenceArgs corr;
  auto* corr_cmd = app.add_subcommand("verify-correspondence",
                                      "exhaustive 2-bridge versus drop-rho iteration grid");
  corr_cmd->add_option("--max-d", corr.max_d, "largest depth d");
  corr_cmd->add_option("--b-range", corr.b_range, "b_i ranges over [-B,B] without 0")
      ->check(CLI::NonNegativeNumber);
  corr_cmd->add_flag("--include-zero-b", corr.include_zero_b, "also allow b_i = 0 for i >= 1");
  corr_cmd->add_flag("--all", corr.all, "emit every report, not only failures");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("verify-oracle", "closed form versus homology oracle grid");
  oracle_cmd->add_option("--frame-bound", oracle.frame_bound, "frame entries in [-F,F]")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--depth", oracle.depth, "largest twist sequence length");
  oracle_cmd->add_option("--n-range", oracle.n_range, "twists in [-N,N] without 0")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-cases", oracle.max_cases, "deterministic sample size");

  EnumerateArgs enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "append a family of tunnels to a catalog");
  enum_cmd->add_option("--catalog", enumerate.catalog, "catalog path (JSON lines)")->required();
  enum_cmd->add_option("--frame", enumerate.frames, "p,q,r,s (repeatable)");
  enum_cmd->add_option("--frame-bound", enumerate.frame_bound, "all valid frames in [-F,F]");
  enum_cmd->add_option("--kinds", enumerate.kinds, "comma-separated sequence kinds or 'all'");
  enum_cmd->add_option("--depth", enumerate.depth, "largest twist sequence length");
  enum_cmd->add_option("--n-range", enumerate.n_range, "twists in [-N,N] without 0")
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--splitting-bit", enumerate.splitting_bit, "binary invariant of the splitting");
  enum_cmd->add_flag("--from-trivial", enumerate.from_trivial, "trivial-knot frame, simple first slope");
  enum_cmd->add_flag("--verify", enumerate.verify, "cross-check every entry against the oracle");

  std::string check_path;
  auto* check_cmd = app.add_subcommand("check-catalog", "recompute every catalog entry");
  check_cmd->add_option("--catalog", check_path, "catalog path")->required();

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "decide whether two tunnels are equal");
  compare_cmd->add_option("--left", compare.left, "frame:kind:twists[:bit][:trivial]")->required();
  compare_cmd->add_option("--right", compare.right, "frame:kind:twists[:bit][:trivial]")->required();
  compare_cmd->add_flag("--no-validate", compare.no_validate, "skip frame validation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (*split_cmd) return do_split(split, out);
    if (*iterate_cmd) return do_iterate(iterate, out);
    if (*tb_slopes_cmd) return do_two_bridge_slopes(tb_slopes, out);
    if (*tb_to_cmd) return do_to_twists(tb_to, out);
    if (*tb_from_cmd) return do_from_twists(from_twists, out);
    if (*tb_verify_cmd) return do_two_bridge_verify(tb_verify, out);
    if (*corr_cmd) return do_verify_correspondence(corr, out);
    if (*oracle_cmd) return do_verify_oracle(oracle, out);
    if (*enum_cmd) return do_enumerate(enumerate, out);
    if (*check_cmd) return do_check_catalog(check_path, out);
    if (*compare_cmd) return do_compare(compare, out);
    return kUsageError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const ZeroDenominator& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace itersplit::cli
