#include <gtest/gtest.h>

#include "mspat/verify.hpp"

using namespace mspat;

namespace {

std::size_t count_status(const VerifyReport& r, CheckStatus s) {
  return static_cast<std::size_t>(
      std::count_if(r.lines.begin(), r.lines.end(), [&](const CheckLine& l) { return l.status == s; }));
}

std::string failures(const VerifyReport& r) {
  std::string out;
  for (const auto& l : r.lines)
    if (l.status == CheckStatus::Fail) out += l.name + ": " + l.detail + "\n";
  return out;
}

}  // namespace

TEST(VerifyCatalog, PassesAndReports) {
  VerifyOptions opt;
  opt.n_max = 4;
  opt.m_max = 3;
  const auto report = verify_table1(opt);
  EXPECT_TRUE(report.ok()) << failures(report);
  EXPECT_GT(count_status(report, CheckStatus::Pass), 0u);
  EXPECT_GT(count_status(report, CheckStatus::Report), 0u);
  EXPECT_EQ(report.first_failure(), nullptr);
}

TEST(VerifyGentree, SmallRunPasses) {
  GentreeOptions opt;
  opt.height_max = 20;
  opt.m_max = 3;
  opt.oracle_length = 9;
  opt.structure_length = 8;
  const auto report = verify_gentree(opt);
  EXPECT_TRUE(report.ok()) << failures(report);
  EXPECT_EQ(report.lines.size(), 3 * builtin_rules_up_to(3).size());
}

TEST(VerifyGentree, DetectsAWrongProduction) {
  SuccessionRule broken = builtin_rule("122-213", 3);
  const auto original = broken.children;
  broken.children = [original](const Label& l) {
    auto kids = original(l);
    if (!l.dead && l.value == 3) kids.pop_back();  // drop one (m) child
    return kids;
  };
  std::string found;
  for (std::size_t n = 1; n <= 3 && found.empty(); ++n) found = rule_structure_counterexample(broken, n);
  EXPECT_NE(found.find("rule gives"), std::string::npos) << found;
  EXPECT_TRUE(rule_structure_counterexample(builtin_rule("122-213", 3), 3).empty());
}

TEST(VerifyBijections, SmallRunPasses) {
  BijectionOptions opt;
  opt.dyck_n_max = 4;
  opt.labels_length = 8;
  opt.path_n_max = 3;
  opt.path_m_max = 2;
  opt.dyck_count_n_max = 6;
  opt.path_count_n_max = 4;
  const auto report = verify_bijections(opt);
  EXPECT_TRUE(report.ok()) << failures(report);
}

TEST(VerifyGrowth, SmallRunPasses) {
  GrowthOptions opt;
  opt.max_length = 8;
  opt.word_max = 8;
  const auto report = verify_growth(opt);
  EXPECT_TRUE(report.ok()) << failures(report);
}

TEST(RunSuite, UnknownSuite) {
  try {
    run_suite("nope");
    FAIL() << "expected Unsupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
  EXPECT_EQ(suite_names().size(), 4u);
}
