#include <gtest/gtest.h>

#include <set>

#include "mspat/bijections.hpp"
#include "mspat/enumerate.hpp"
#include "mspat/formulas.hpp"
#include "oracles.hpp"

using namespace mspat;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidPattern;
}

MultisetPermutation perm(const char* s) { return MultisetPermutation::parse(s); }

const PatternSet& p112_122() {
  static const PatternSet p = PatternSet::parse("112,122");
  return p;
}
const PatternSet& p122_123() {
  static const PatternSet p = PatternSet::parse("122,123");
  return p;
}
const PatternSet& p122_132() {
  static const PatternSet p = PatternSet::parse("122,132");
  return p;
}

const char* kWorkedPath = "UURRRURRRURRRRRRR";

}  // namespace

TEST(Dyck, Examples) {
  EXPECT_EQ(dyck_to_perm(DyckWord::parse("XYXXYXYY")).str(), "44323121");
  EXPECT_EQ(dyck_to_perm(DyckWord::parse("XXYY")).str(), "2121");
  EXPECT_EQ(dyck_to_perm(DyckWord::parse("XYXY")).str(), "2211");
  EXPECT_EQ(perm_to_dyck(perm("44323121")).str(), "XYXXYXYY");
  EXPECT_EQ(perm_to_dyck(perm("2121")).str(), "XXYY");
  EXPECT_EQ(perm_to_dyck(perm("11")).str(), "XY");
}

TEST(Dyck, Errors) {
  EXPECT_EQ(kind_of([] { DyckWord::parse("YX"); }), ErrorKind::InvalidDyck);
  EXPECT_EQ(kind_of([] { DyckWord::parse("XXY"); }), ErrorKind::InvalidDyck);
  EXPECT_EQ(kind_of([] { DyckWord::parse("XAYB"); }), ErrorKind::InvalidDyck);
  EXPECT_EQ(kind_of([] { perm_to_dyck(perm("1122")); }), ErrorKind::NotInDomain);  // 112
  EXPECT_EQ(kind_of([] { perm_to_dyck(perm("112233")); }), ErrorKind::NotInDomain);
  EXPECT_EQ(kind_of([] { perm_to_dyck(perm("111")); }), ErrorKind::NotInDomain);  // m = 3
}

TEST(Dyck, RoundTripOnEveryWord) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto words = oracle::dyck_words(n);
    EXPECT_EQ(BigCount(static_cast<unsigned long>(words.size())), catalan(n));
    std::set<std::string> images;
    for (const auto& text : words) {
      const auto sigma = dyck_to_perm(DyckWord::parse(text));
      ASSERT_TRUE(avoids_all(sigma, p112_122())) << text;
      ASSERT_EQ(perm_to_dyck(sigma).str(), text);
      images.insert(sigma.str());
    }
    EXPECT_EQ(images.size(), words.size());
  }
}

TEST(Dyck, RoundTripOnEveryAvoider) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto avoiders = list_avoiders(n, 2, p112_122());
    EXPECT_EQ(BigCount(static_cast<unsigned long>(avoiders.size())), catalan(n));
    for (const auto& sigma : avoiders) ASSERT_EQ(dyck_to_perm(perm_to_dyck(sigma)), sigma) << sigma.str();
  }
}

TEST(Labels, Examples) {
  EXPECT_EQ(perm_to_labels(perm("443322421311")).str(), "1,4,7,7,7");
  EXPECT_EQ(perm_to_labels(perm("2211")).str(), "1,3,5");
  EXPECT_EQ(perm_to_labels(perm("1111")).str(), "1,5");
  EXPECT_EQ(labels_to_perm(LabelSequence::parse("1,4,7,7,7", 3)).str(), "443322421311");
  EXPECT_EQ(labels_to_perm(LabelSequence::parse("1,3,5", 2)).str(), "2211");
  EXPECT_EQ(labels_to_perm(LabelSequence::parse("1,5", 4)).str(), "1111");
}

TEST(Labels, Errors) {
  EXPECT_EQ(kind_of([] { LabelSequence::parse("2,4", 3); }), ErrorKind::InvalidLabelSequence);
  EXPECT_EQ(kind_of([] { LabelSequence::parse("1,3", 3); }), ErrorKind::InvalidLabelSequence);
  EXPECT_EQ(kind_of([] { LabelSequence::parse("1,4,8", 3); }), ErrorKind::InvalidLabelSequence);
  EXPECT_EQ(kind_of([] { LabelSequence::parse("1,4,3", 3); }), ErrorKind::InvalidLabelSequence);
  EXPECT_EQ(kind_of([] { LabelSequence::parse("1,x", 3); }), ErrorKind::InvalidLabelSequence);
  EXPECT_EQ(kind_of([] { perm_to_labels(perm("112233")); }), ErrorKind::NotInDomain);
  EXPECT_EQ(kind_of([] { perm_to_labels(perm("1212")); }), ErrorKind::NotInDomain);
}

TEST(Labels, RoundTripOnEveryAvoider) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n * m <= 12; ++n) {
      for (const auto& sigma : list_avoiders(n, m, p122_123())) {
        const LabelSequence seq = perm_to_labels(sigma);
        ASSERT_EQ(seq.values().size(), n + 1);
        const auto back = labels_to_perm(LabelSequence(seq.values(), m));
        ASSERT_EQ(back, sigma) << sigma.str() << " -> " << seq.str();
      }
    }
  }
}

TEST(Paths, Examples) {
  EXPECT_EQ(path_to_labels(LatticePath::parse(kWorkedPath, 1, 3)).str(), "1,4,7,7,7");
  EXPECT_EQ(labels_to_path(LabelSequence::parse("1,4,7,7,7", 3)).str(), kWorkedPath);
  EXPECT_EQ(path_to_labels(LatticePath::parse("URRR", 1, 2)).str(), "1,3");
}

TEST(Paths, Errors) {
  EXPECT_EQ(kind_of([] { LatticePath::parse("RURR", 1, 2); }), ErrorKind::InvalidPath);   // touches at (1,0)
  EXPECT_EQ(kind_of([] { LatticePath::parse("URR", 1, 2); }), ErrorKind::InvalidPath);    // wrong end
  EXPECT_EQ(kind_of([] { LatticePath::parse("UXRR", 1, 2); }), ErrorKind::InvalidPath);
}

TEST(Paths, EnumerationMatchesBruteForce) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 5; ++n) {
      std::vector<std::string> mine;
      for (const auto& p : enumerate_paths(n, 1, m)) mine.push_back(p.str());
      auto expected = oracle::paths(n, m);
      std::sort(mine.begin(), mine.end());
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(mine, expected) << n << "," << m;
      EXPECT_EQ(BigCount(static_cast<unsigned long>(expected.size())), generalized_catalan(n, m));
      if (n * m <= 12) {
        EXPECT_EQ(BigCount(static_cast<unsigned long>(expected.size())), count_avoiders(n, m, p122_123()));
      }
    }
  }
}

TEST(Paths, RoundTripThroughLabels) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::set<std::string> seen;
      for (const auto& text : oracle::paths(n, m)) {
        const auto path = LatticePath::parse(text, 1, m);
        const LabelSequence seq = path_to_labels(path);
        ASSERT_EQ(seq.values()[0], 1);
        ASSERT_EQ(seq.values()[1], static_cast<std::int64_t>(m + 1));
        ASSERT_EQ(labels_to_path(seq).str(), text);
        seen.insert(labels_to_perm(seq).str());
      }
      EXPECT_EQ(seen.size(), oracle::paths(n, m).size());
    }
  }
}

TEST(SimionSchmidt, Examples) {
  EXPECT_EQ(simion_schmidt_f(perm("43421231")).str(), "43421321");
  EXPECT_EQ(simion_schmidt_g(perm("43421321")).str(), "43421231");
  EXPECT_EQ(simion_schmidt_f(perm("2211")).str(), "2211");
}

TEST(SimionSchmidt, Errors) {
  EXPECT_EQ(kind_of([] { simion_schmidt_f(perm("132")); }), ErrorKind::NotInDomain);
  EXPECT_EQ(kind_of([] { simion_schmidt_g(perm("112323")); }), ErrorKind::NotInDomain);
  try {
    simion_schmidt_f(perm("132213"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("["), std::string::npos) << e.what();
  }
}

TEST(SimionSchmidt, MutualInversesPreservingMinima) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n * m <= 12; ++n) {
      const auto from = list_avoiders(n, m, p122_132());
      const auto to = list_avoiders(n, m, p122_123());
      ASSERT_EQ(from.size(), to.size());
      std::set<std::string> images;
      for (const auto& sigma : from) {
        const auto tau = simion_schmidt_f(sigma);
        ASSERT_TRUE(avoids_all(tau, p122_123())) << sigma.str();
        ASSERT_EQ(simion_schmidt_g(tau), sigma);
        ASSERT_EQ(left_to_right_minima(tau), left_to_right_minima(sigma));
        for (std::size_t i : left_to_right_minima(sigma)) ASSERT_EQ(tau[i - 1], sigma[i - 1]);
        images.insert(tau.str());
      }
      ASSERT_EQ(images.size(), to.size());
      for (const auto& tau : to) {
        const auto sigma = simion_schmidt_g(tau);
        ASSERT_TRUE(avoids_all(sigma, p122_132())) << tau.str();
        ASSERT_EQ(simion_schmidt_f(sigma), tau);
      }
    }
  }
}

TEST(DomainCheck, OffSkipsTheAvoidanceTest) {
  EXPECT_NO_THROW(perm_to_dyck(perm("2121"), DomainCheck::Off));
  EXPECT_NO_THROW(simion_schmidt_f(perm("43421231"), DomainCheck::Off));
  EXPECT_EQ(simion_schmidt_f(perm("43421231"), DomainCheck::Off), simion_schmidt_f(perm("43421231")));
}

// n^{m-1}, (n-1)^{m-1}, ..., 1^{m-1} occur in this order as left-to-right minima.
TEST(Structure, LeadingCopiesAreMinimaInOrder) {
  for (const char* second : {"123", "132", "213", "231", "312", "321"}) {
    const PatternSet pair = PatternSet::parse(std::string("122,") + second);
    for (std::size_t m = 2; m <= 4; ++m) {
      for (std::size_t n = 1; n * m <= 12; ++n) {
        for (const auto& sigma : list_avoiders(n, m, pair)) {
          std::vector<Letter> minima_values;
          for (std::size_t i : left_to_right_minima(sigma)) minima_values.push_back(sigma[i - 1]);
          Word expected;
          for (Letter k = static_cast<Letter>(n); k >= 1; --k) expected.insert(expected.end(), m - 1, k);
          // The first m-1 copies of each letter are exactly those minima.
          Word first_copies;
          std::vector<std::size_t> seen(n + 1, 0);
          for (Letter x : sigma.letters())
            if (++seen[x] <= m - 1) first_copies.push_back(x);
          ASSERT_EQ(first_copies, expected) << sigma.str();
          ASSERT_TRUE(std::includes(minima_values.rbegin(), minima_values.rend(), expected.rbegin(), expected.rend()))
              << sigma.str();
        }
      }
    }
  }
}
