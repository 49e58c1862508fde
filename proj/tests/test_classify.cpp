#include <gtest/gtest.h>

#include <set>

#include "mspat/classify.hpp"
#include "oracles.hpp"

using namespace mspat;

namespace {

PatternSet set(const char* s) { return PatternSet::parse(s); }

std::set<std::string> member_text(const PatternPairClass& c) {
  std::set<std::string> out;
  for (const auto& p : c.members) out.insert(p.str());
  return out;
}

const PatternPairClass* find_class(const std::vector<PatternPairClass>& classes, const char* rep) {
  for (const auto& c : classes)
    if (c.representative == canonical_representative(set(rep))) return &c;
  return nullptr;
}

}  // namespace

TEST(SymmetryClosure, Examples) {
  EXPECT_EQ(member_text(symmetry_closure(set("122,123"))),
            (std::set<std::string>{"122,123", "221,321", "211,321", "112,123"}));
  EXPECT_EQ(member_text(symmetry_closure(set("212,121"))), (std::set<std::string>{"121,212"}));
  EXPECT_EQ(member_text(symmetry_closure(set("111,123"))), (std::set<std::string>{"111,123", "111,321"}));
  EXPECT_EQ(canonical_representative(set("221,321")), set("112,123"));
}

TEST(SymmetryClosure, RepresentativeIsLeastAndOrbitIsClosed) {
  for (const PatternSet& pair : all_length3_pairs()) {
    const auto c = symmetry_closure(pair);
    EXPECT_EQ(c.representative, *std::min_element(c.members.begin(), c.members.end()));
    EXPECT_EQ(4 % c.members.size(), 0u) << pair.str();
    for (const auto& member : c.members) EXPECT_EQ(canonical_representative(member), c.representative);
  }
}

TEST(ClassifyAll, PairUniverse) {
  EXPECT_EQ(length3_patterns(false).size(), 12u);
  EXPECT_EQ(length3_patterns(true).size(), 13u);
  EXPECT_EQ(all_length3_pairs().size(), 66u);
  std::size_t members = 0;
  for (const auto& c : classify_all_length3()) members += c.members.size();
  EXPECT_EQ(members, 66u);
}

// The orbit count under the four symmetries, computed independently by
// Burnside's lemma over the 66 unordered pairs.
TEST(ClassifyAll, ClassCountMatchesBurnside) {
  const auto pairs = all_length3_pairs();
  std::size_t fixed_total = 0;
  for (Symmetry s : kAllSymmetries)
    for (const PatternSet& p : pairs) fixed_total += symmetry(p, s) == p ? 1 : 0;
  EXPECT_EQ(fixed_total % 4, 0u);
  EXPECT_EQ(classify_all_length3().size(), fixed_total / 4);
  EXPECT_EQ(classify_all_length3().size(), 21u);
}

TEST(ClassifyAll, MixedRepresentativesArePresent) {
  const auto classes = classify_all_length3();
  for (const char* rep : {"212,123", "212,132", "122,123", "122,132", "211,213", "122,213", "122,312", "122,321"})
    EXPECT_NE(find_class(classes, rep), nullptr) << rep;
  // Representatives are distinct and deterministic.
  std::set<std::string> reps;
  for (const auto& c : classes) reps.insert(c.representative.str());
  EXPECT_EQ(reps.size(), classes.size());
  const auto again = classify_all_length3();
  ASSERT_EQ(again.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) EXPECT_EQ(again[i].representative, classes[i].representative);
}

TEST(ClassifyAll, MembersShareOracleCounts) {
  for (const auto& c : classify_all_length3()) {
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t n = 1; n * m <= 10; ++n) {
        std::vector<std::size_t> counts;
        for (const auto& member : c.members) {
          std::vector<oracle::Word> ps;
          for (const Pattern& p : member) ps.emplace_back(p.letters().begin(), p.letters().end());
          if (n * m <= 8) counts.push_back(oracle::count(n, m, ps));
          else counts.push_back(count_avoiders(n, m, member).get_ui());
        }
        ASSERT_TRUE(std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end())
            << c.representative.str() << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(EmpiricalWilf, CatalanPairsGroupTogether) {
  const auto classes = classify_all_length3();
  std::vector<PatternPairClass> pick{*find_class(classes, "122,123"), *find_class(classes, "122,132")};
  EXPECT_EQ(empirical_wilf_classes(pick, make_grid(12, 2, 4, 12)).size(), 1u);
}

TEST(EmpiricalWilf, ZeroClassesGroupOnlyWithZeros) {
  const auto grid = make_grid(6, 2, 3, 12);
  std::vector<GridCell> tail;
  for (const auto& cell : grid)
    if (cell.n >= 2) tail.push_back(cell);
  for (const auto& group : empirical_wilf_classes(tail)) {
    const bool has_122_211 = std::any_of(group.classes.begin(), group.classes.end(), [](const PatternPairClass& c) {
      return c.representative == canonical_representative(set("122,211"));
    });
    if (!has_122_211) continue;
    for (const BigCount& v : group.counts) EXPECT_EQ(v, 0);
  }
}

TEST(EmpiricalWilf, RecurrencePairsSplitAtMThree) {
  const auto classes = classify_all_length3();
  std::vector<PatternPairClass> pick{*find_class(classes, "211,213"), *find_class(classes, "122,213")};
  EXPECT_EQ(empirical_wilf_classes(pick, make_grid(6, 2, 2, 12)).size(), 1u);
  EXPECT_EQ(empirical_wilf_classes(pick, make_grid(6, 2, 3, 12)).size(), 2u);
}

TEST(MakeGrid, RespectsBounds) {
  const auto grid = make_grid(5, 2, 3, 12);
  for (const auto& cell : grid) {
    EXPECT_LE(cell.n * cell.m, 12u);
    EXPECT_GE(cell.m, 2u);
    EXPECT_LE(cell.m, 3u);
  }
  EXPECT_EQ(grid.size(), 9u);  // 5 cells at m = 2, 4 at m = 3
}
