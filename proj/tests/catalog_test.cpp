#include "itersplit/catalog.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace itersplit;

namespace {

class TempFile {
public:
  explicit TempFile(const std::string& name)
      : path_(std::filesystem::temp_directory_path() /
              (name + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
               ".jsonl")) {
    std::filesystem::remove(path_);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
};

TunnelDescriptor desc(const std::string& text) { return TunnelDescriptor::parse(text); }

}  // namespace

TEST(Descriptor, TextRoundTrip) {
  const TunnelDescriptor d = desc("1,0,0,1:drop-rho-pure:2,3:0:trivial");
  EXPECT_TRUE(d.from_trivial);
  EXPECT_EQ(d.splitting_bit, 0);
  EXPECT_EQ(d.to_string(), "1,0,0,1:drop-rho-pure:2,3:0:trivial");
  EXPECT_EQ(desc("2,3,1,2:lift-rho-mixed-tau:1:1").splitting_bit, 1);
  EXPECT_EQ(desc("2,3,1,2:lift-rho-mixed-tau:-1,2").twists, TwistSequence({-1, 2}));
  EXPECT_THROW(desc("2,3,1,2:lift-tau:1"), ValidationError);
  EXPECT_THROW(desc("2,3,1,2:drop-rho-pure:1:2"), ValidationError);
  EXPECT_THROW(desc("2,4,1,2:drop-rho-pure:1"), FrameError);
  EXPECT_FALSE(TunnelDescriptor::parse("2,4,1,2:drop-rho-pure:1", false).frame.verified());
}

TEST(Serialization, InvariantsJsonRoundTrip) {
  for (const std::string& text :
       {"1,0,0,1:drop-rho-pure:2,3,-1:0:trivial", "2,3,1,2:lift-lambda-mixed-tau:3,-2,1,2:1",
        "2,3,1,2:drop-lambda-pure:1:0"}) {
    const CatalogEntry e = make_entry(desc(text), true);
    const Json j = to_json(e);
    const CatalogEntry back = entry_from_json(Json::parse(dump_line(j)));
    EXPECT_TRUE(invariants_equal(back.invariants, e.invariants));
    EXPECT_EQ(dump_line(to_json(back)), dump_line(j));
  }
}

TEST(Serialization, FixedShape) {
  const CatalogEntry e = make_entry(desc("1,0,0,1:drop-rho-pure:2,3:0:trivial"));
  EXPECT_EQ(dump_line(to_json(e)),
            R"j({"descriptor":{"frame":"1,0,0,1","kind":"drop-rho-pure","twists":"2,3",)j"
            R"j("splitting_bit":0,"from_trivial":true,"validated":true},)j"
            R"j("invariants":{"first":"[2/5]","rest":["-5/3"],"binary":[0,0],)j"
            R"j("coords":[null,"(τ,τ⁰)"]},"flags":["degenerate-frame"],"schema_version":1})j");
}

TEST(Serialization, TraceRecord) {
  const auto trace =
      oracle_slopes(validate_frame(2, 3, 1, 2), SequenceKind::DropRhoPure, TwistSequence({2, 1})).trace;
  EXPECT_EQ(dump_line(to_json(trace[0])),
            R"j({"k":0,"c_prev":null,"upper":"(3,5)","lower":"(2,3)","linking":"10/1","slope":"41/2"})j");
  EXPECT_EQ(dump_line(to_json(trace[1])),
            R"j({"k":1,"c_prev":"(-1,-2)","upper":"(-1,-2)","lower":"(2,3)","linking":"-4/1","slope":"-7/1"})j");
}

TEST(Serialization, RejectsUnknownSchema) {
  Json j = to_json(make_entry(desc("2,3,1,2:drop-lambda-pure:1")));
  j["schema_version"] = 99;
  EXPECT_THROW(entry_from_json(j), ValidationError);
}

TEST(FrameFlags, DegenerateAndUnverified) {
  EXPECT_TRUE(frame_flags(validate_frame(2, 3, 1, 2)).empty());
  EXPECT_EQ(frame_flags(validate_frame(1, 0, 0, 1)), (std::vector<std::string>{"degenerate-frame"}));
  EXPECT_EQ(frame_flags(unchecked_frame(3, 6, 1, 5)),
            (std::vector<std::string>{"unverified-frame"}));
}

TEST(Catalog, DedupAndReload) {
  TempFile tmp("itersplit-catalog");
  {
    Catalog cat(tmp.path());
    EXPECT_TRUE(cat.add(make_entry(desc("2,3,1,2:drop-rho-pure:2,3"))));
    EXPECT_FALSE(cat.add(make_entry(desc("2,3,1,2:drop-rho-pure:2,3"))));
    EXPECT_TRUE(cat.add(make_entry(desc("2,3,1,2:drop-rho-pure:2,3:1"))));
    EXPECT_TRUE(cat.add(make_entry(desc("1,0,0,1:drop-rho-pure:2,3:0:trivial"))));
    EXPECT_EQ(cat.entries().size(), 3u);
  }
  {
    Catalog cat(tmp.path());
    EXPECT_EQ(cat.entries().size(), 3u);
    EXPECT_FALSE(cat.add(make_entry(desc("2,3,1,2:drop-rho-pure:2,3:1"))));
    EXPECT_TRUE(cat.add(make_entry(desc("2,3,1,2:drop-rho-pure:4,3"))));
  }
  const CatalogCheck check = check_catalog(tmp.path());
  EXPECT_EQ(check.entries, 4u);
  EXPECT_TRUE(check.mismatched_lines.empty());
}

TEST(Catalog, TamperedEntryIsDetected) {
  TempFile tmp("itersplit-tamper");
  {
    Catalog cat(tmp.path());
    cat.add(make_entry(desc("2,3,1,2:drop-rho-pure:2,3")));
    cat.add(make_entry(desc("2,3,1,2:lift-rho-pure:2,3")));
  }
  std::string contents;
  {
    std::ifstream in(tmp.path());
    contents.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = contents.find("-23/3");
  ASSERT_NE(pos, std::string::npos);
  contents.replace(pos, 5, "-22/3");
  {
    std::ofstream out(tmp.path(), std::ios::trunc);
    out << contents;
  }
  const CatalogCheck check = check_catalog(tmp.path());
  EXPECT_EQ(check.mismatched_lines, (std::vector<std::size_t>{1}));
}
