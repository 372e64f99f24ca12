// The report layer and input parsing, in process.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mackey/io.hpp"
#include "mackey/suite.hpp"

using namespace mackey;

namespace {

SuiteConfig config(std::string command, std::string group, std::string ring = "Z") {
  SuiteConfig c;
  c.command = std::move(command);
  c.group = std::move(group);
  c.ring = std::move(ring);
  return c;
}

const ReportCheck* find_check(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

std::string fixture(const char* name) { return std::string(MACKEY_FIXTURES) + "/" + name; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InputError;
}

}  // namespace

TEST(Suite, AxiomsOnS3OverGaussianIntegers) {
  auto cfg = config("axioms", "S3", "Z[i]");
  cfg.seed = 7;
  auto r = run_suite(cfg);
  EXPECT_EQ(r.exit_code(), 0);
  std::size_t axioms = 0;
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, CheckStatus::Pass) << c.name;
    axioms += c.name.rfind("axiom", 0) == 0;
  }
  EXPECT_EQ(axioms, 7u);
}

TEST(Suite, ReportsAreDeterministic) {
  auto cfg = config("frobenius", "S3", "Z[C3]");
  cfg.seed = 3;
  cfg.samples = 4;
  EXPECT_EQ(run_suite(cfg).to_json().dump(), run_suite(cfg).to_json().dump());
  EXPECT_EQ(run_suite(cfg).to_text(), run_suite(cfg).to_text());
  auto other = cfg;
  other.seed = 4;
  EXPECT_EQ(run_suite(other).exit_code(), 0);
}

TEST(Suite, EmptyReportIsWellFormed) {
  auto r = run_suite(config("none", "S3"));
  auto j = r.to_json();
  EXPECT_EQ(j["tool"], kToolName);
  EXPECT_EQ(j["summary"]["checks"], 0);
  EXPECT_TRUE(j["checks"].is_array());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_FALSE(r.to_text().empty());
}

TEST(Suite, DressCertificateOnA4) {
  auto r = run_suite(config("dress", "A4"));
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_NE(r.to_json().dump().find("gcd{3,4,6,12} = 1"), std::string::npos);
}

TEST(Suite, DressBurnsideProperIsAVerdictNotAFailure) {
  auto cfg = config("dress", "A4");
  cfg.functor = "burnside";
  cfg.family = "proper";
  auto r = run_suite(cfg);
  EXPECT_EQ(r.exit_code(), 0);
  bool hyp = false;
  for (const auto& c : r.checks) hyp = hyp || c.status == CheckStatus::HypothesisFailure;
  EXPECT_TRUE(hyp);
  EXPECT_NE(r.to_json().dump().find("hypothesis_failure"), std::string::npos);
}

TEST(Suite, ArtinReportsS3Coefficients) {
  auto r = run_suite(config("artin", "S3"));
  EXPECT_EQ(r.exit_code(), 0);
  const auto j = r.to_json().dump();
  EXPECT_NE(j.find("-3"), std::string::npos);
}

TEST(Suite, CorruptedFixtureFails) {
  auto cfg = config("axioms", "S3");
  cfg.fixture = fixture("corrupted_fixed_point.json");
  auto r = run_suite(cfg);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(r.to_json().dump().find("axiom 7"), std::string::npos);
}

TEST(Suite, TwistedFixturePairs) {
  auto cfg = config("twisted", "C2", "Z[i]");
  cfg.samples = 3;
  cfg.fixture = fixture("inverse_pair.json");
  auto good = run_suite(cfg);
  ASSERT_NE(find_check(good, "fixture"), nullptr);
  EXPECT_EQ(find_check(good, "fixture")->status, CheckStatus::Pass);
  EXPECT_EQ(good.exit_code(), 0);
  cfg.fixture = fixture("not_inverse_pair.json");
  auto bad = run_suite(cfg);
  EXPECT_EQ(find_check(bad, "fixture")->status, CheckStatus::Fail);
  EXPECT_EQ(bad.exit_code(), 1);
}

TEST(Suite, CoefficientModesForDress) {
  for (const char* coeff : {"Z", "Zp:2", "Zp:3", "Q", "Z-half"}) {
    auto cfg = config("dress", "S3");
    cfg.coeff = coeff;
    EXPECT_EQ(run_suite(cfg).exit_code(), 0) << coeff;
  }
}

TEST(Suite, EmitWritesFiles) {
  auto r = run_suite(config("group", "D4"));
  const auto path = std::filesystem::temp_directory_path() / "mackey_report_test.json";
  emit_report(r, "structured", path.string());
  auto j = read_json_file(path.string());
  EXPECT_EQ(j["config"]["group"], "D4");
  std::filesystem::remove(path);
  EXPECT_EQ(code_of([&] { emit_report(r, "text", "/nonexistent-dir/x/y.txt"); }), ErrorCode::IoError);
}

TEST(Inputs, ErrorsAreClassified) {
  EXPECT_EQ(code_of([] { run_suite(config("group", "Z7")); }), ErrorCode::InputError);
  EXPECT_EQ(code_of([] { run_suite(config("group", "C500")); }), ErrorCode::OrderCapExceeded);
  EXPECT_EQ(code_of([] { run_suite(config("group", fixture("malformed_group.json"))); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { run_suite(config("axioms", "S3", "Z[j]")); }), ErrorCode::InputError);
  EXPECT_EQ(code_of([] { run_suite(config("bogus", "S3")); }), ErrorCode::InputError);
  EXPECT_EQ(code_of([] { CoefficientMode::parse("Zp:4"); }), ErrorCode::InputError);
  EXPECT_EQ(code_of([] {
              auto cfg = config("families", "S3");
              cfg.family = "Hp:6";
              run_suite(cfg);
            }),
            ErrorCode::InputError);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/file.json"); }), ErrorCode::InputError);
  for (auto c : {ErrorCode::InputError, ErrorCode::IoError, ErrorCode::InvalidPermutation, ErrorCode::OrderCapExceeded})
    EXPECT_TRUE(is_input_error(c));
  EXPECT_FALSE(is_input_error(ErrorCode::PreconditionViolated));
}

TEST(Inputs, GroupAndRingFiles) {
  auto G = load_group(fixture("group_c4.json"));
  EXPECT_EQ(G->order(), 4u);
  auto rs = load_ring(fixture("ring_zc3.json"), named_group("C2"));
  EXPECT_EQ(rs.ring->rank(), 3u);
  auto cfg = config("axioms", "C2", fixture("ring_zc3.json"));
  cfg.samples = 2;
  EXPECT_EQ(run_suite(cfg).exit_code(), 0);
}

TEST(Inputs, FixtureKeysAreChecked) {
  const auto tmp = std::filesystem::temp_directory_path() / "mackey_bad_fixture.json";
  auto write = [&](const std::string& body) {
    std::ofstream(tmp) << body;
    return tmp.string();
  };
  EXPECT_EQ(code_of([&] { mackey_fixture_from_json(read_json_file(write(R"({"group": "S3", "base": "nope"})"))); }),
            ErrorCode::InputError);
  EXPECT_EQ(code_of([&] {
              mackey_fixture_from_json(read_json_file(write(R"({"group": "S3", "base": "fixed_point", "overrides": {"ind": {"9,0": [[1]]}}})")));
            }),
            ErrorCode::InputError);
  EXPECT_EQ(code_of([&] { read_json_file(write("{ not json")); }), ErrorCode::InputError);
  std::filesystem::remove(tmp);
}
