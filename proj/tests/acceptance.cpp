// Acceptance checks, one per criterion. Usage: acceptance <1..8>
// Prints detail lines, then "criterion N: PASS" or "criterion N: FAIL".

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "mspat/mspat.hpp"
#include "oracles.hpp"

using namespace mspat;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= kShown) std::cout << "  mismatch: " << what << "\n";
  }
  void note(const std::string& text) { std::cout << "  " << text << "\n"; }
  bool ok() const { return failed_ == 0; }
  void summary(const std::string& label) const {
    std::cout << "  " << label << ": " << total_ - failed_ << "/" << total_ << " checks hold";
    if (failed_ > kShown) std::cout << " (" << failed_ - kShown << " further mismatches not shown)";
    std::cout << "\n";
  }

 private:
  static constexpr std::size_t kShown = 12;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

std::string cell(std::size_t n, std::size_t m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

PatternSet set(const char* s) { return PatternSet::parse(s); }

std::vector<GridCell> grid_m23() { return make_grid(12, 2, 3, 12); }

std::vector<GridCell> grid_all_m() { return make_grid(12, 1, 12, 12); }

// 1. Proved-here rows against the oracle on m in {2,3}, n m <= 12.
bool criterion1() {
  Check c;
  for (const char* p : {"112,122", "122,123", "122,132", "122,312", "122,321"}) {
    for (const GridCell& g : grid_m23()) {
      const BigCount oracle = count_avoiders(g.n, g.m, set(p));
      try {
        const BigCount formula = closed_count(set(p), g.n, g.m);
        c.expect(formula == oracle, std::string(p) + " " + cell(g.n, g.m) + " formula " + formula.get_str() +
                                        " oracle " + oracle.get_str());
      } catch (const Error& e) {
        c.expect(false, std::string(p) + " " + cell(g.n, g.m) + ": " + e.what());
      }
    }
  }
  for (const char* p : {"211,213", "122,213"}) {
    for (const GridCell& g : grid_m23()) {
      const BigCount oracle = count_avoiders(g.n, g.m, set(p));
      const BigCount rec = recurrence_count(set(p), g.n, g.m);
      const BigCount closed = closed_count(set(p), g.n, g.m);
      c.expect(rec == oracle && closed == oracle, std::string(p) + " " + cell(g.n, g.m) + " recurrence " +
                                                      rec.get_str() + " oracle " + oracle.get_str());
    }
  }
  c.summary("seven proved-here pairs");

  // Pairs with 111: the stated value is c_n for m = 2 and 0 for m >= 3.
  Check c111;
  for (const Pattern& p : length3_patterns(false)) {
    const PatternSet pair{Pattern::parse("111"), p};
    for (const GridCell& g : grid_m23()) {
      const BigCount oracle = count_avoiders(g.n, g.m, pair);
      const BigCount stated = g.m == 2 ? catalan(g.n) : BigCount(0);
      std::string served;
      try {
        served = closed_count(pair, g.n, g.m).get_str();
      } catch (const Error& e) {
        served = std::string(to_string(e.kind()));
      }
      c111.expect(oracle == stated && served == oracle.get_str(),
                  "{" + pair.str() + "} " + cell(g.n, g.m) + " oracle " + oracle.get_str() + " stated " +
                      stated.get_str() + " closed_count " + served);
    }
  }
  c111.note("with m = 2 no permutation of [n]_2 contains 111, so the pair count is the count for the other pattern alone");
  c111.summary("111-pairs");

  Check spot;
  spot.expect(count_avoiders(2, 3, set("122,321")) == 4 && closed_count(set("122,321"), 2, 3) == 4,
              "s_{2,3}(122,321) = 4");
  spot.expect(count_avoiders(4, 3, set("112,122")) == 8 && closed_count(set("112,122"), 4, 3) == 8,
              "s_{4,3}(112,122) = 8");
  spot.expect(count_avoiders(3, 2, set("112,122")) == 5 && catalan(3) == 5, "s_{3,2}(112,122) = 5 = c_3");
  spot.summary("spot values");
  return c.ok() && c111.ok() && spot.ok();
}

// 2. Generating trees against the oracle and the closed forms.
bool criterion2() {
  Check c;
  std::vector<SuccessionRule> rules{builtin_rule("112-122@m2")};
  for (std::size_t m = 2; m <= 3; ++m)
    for (const char* name : {"122-123", "211-213", "122-213"}) rules.push_back(builtin_rule(name, m));
  for (const auto& rule : rules) {
    for (std::size_t n = 1; n * rule.m <= 12; ++n) {
      const BigCount tree = count_at_height(rule, n);
      const BigCount oracle = count_avoiders(n, rule.m, rule_pattern_pair(rule));
      c.expect(tree == oracle, rule.name + " " + cell(n, rule.m) + " tree " + tree.get_str() + " oracle " +
                                   oracle.get_str());
    }
  }
  const auto r1 = builtin_rule("112-122@m2");
  for (std::size_t n = 0; n <= 60; ++n) c.expect(count_at_height(r1, n) == catalan(n), "112-122@m2 n=" + std::to_string(n));
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto a = builtin_rule("122-123", m), b = builtin_rule("211-213", m), d = builtin_rule("122-213", m);
    LevelProfile pa = root_profile(a), pb = root_profile(b), pd = root_profile(d);
    for (std::size_t n = 0; n <= 60; ++n) {
      c.expect(pa.total() == generalized_catalan(n, m), "122-123 " + cell(n, m));
      if (n >= 1) {
        c.expect(pb.total() == recurrence_count(RecurrenceFamily::Pair211_213, n, m), "211-213 " + cell(n, m));
        c.expect(pd.total() == recurrence_count(RecurrenceFamily::Pair122_213, n, m), "122-213 " + cell(n, m));
      }
      pa = next_level(a, pa);
      pb = next_level(b, pb);
      pd = next_level(d, pd);
    }
  }
  c.summary("tree counts");
  return c.ok();
}

// 3. Binet forms equal the recurrences.
bool criterion3() {
  Check c;
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 200; ++n) {
      for (RecurrenceFamily f : {RecurrenceFamily::Pair211_213, RecurrenceFamily::Pair122_213}) {
        const QuadraticInteger v = explicit_value(f, n, m);
        c.expect(v.is_rational() && v.rational_part().get_den() == 1 &&
                     v.rational_part().get_num() == recurrence_count(f, n, m),
                 std::string(f == RecurrenceFamily::Pair211_213 ? "211,213 " : "122,213 ") + cell(n, m) + " value " +
                     v.str());
      }
    }
  }
  c.summary("explicit versus recurrence");
  return c.ok();
}

// 4. Bijection round trips, image avoidance and the worked examples.
bool criterion4() {
  Check c;
  const PatternSet d = set("112,122"), l = set("122,123"), s = set("122,132");
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& sigma : list_avoiders(n, 2, d)) {
      const DyckWord w = perm_to_dyck(sigma);
      const auto back = dyck_to_perm(w);
      c.expect(back == sigma && avoids_all(back, d), "dyck " + sigma.str());
    }
    for (const auto& text : oracle::dyck_words(n)) {
      const auto sigma = dyck_to_perm(DyckWord::parse(text));
      c.expect(avoids_all(sigma, d) && perm_to_dyck(sigma).str() == text, "dyck word " + text);
    }
  }
  for (std::size_t m = 1; m <= 12; ++m) {
    for (std::size_t n = 1; n * m <= 12; ++n) {
      for (const auto& tau : list_avoiders(n, m, l)) {
        const auto seq = perm_to_labels(tau);
        const auto back = labels_to_perm(seq);
        c.expect(back == tau && avoids_all(back, l), "labels " + tau.str());
        const auto sigma = simion_schmidt_g(tau);
        c.expect(avoids_all(sigma, s) && simion_schmidt_f(sigma) == tau, "g then f " + tau.str());
      }
      for (const auto& sigma : list_avoiders(n, m, s)) {
        const auto tau = simion_schmidt_f(sigma);
        c.expect(avoids_all(tau, l) && simion_schmidt_g(tau) == sigma &&
                     left_to_right_minima(tau) == left_to_right_minima(sigma),
                 "f then g " + sigma.str());
      }
    }
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& text : oracle::paths(n, m)) {
        const auto seq = path_to_labels(LatticePath::parse(text, 1, m));
        c.expect(labels_to_path(seq).str() == text && avoids_all(labels_to_perm(seq), l), "path " + text);
      }
    }
  }
  c.summary("round trips");

  Check ex;
  ex.expect(dyck_to_perm(DyckWord::parse("XYXXYXYY")).str() == "44323121", "XYXXYXYY -> 44323121");
  ex.expect(perm_to_dyck(MultisetPermutation::parse("44323121")).str() == "XYXXYXYY", "44323121 -> XYXXYXYY");
  ex.expect(simion_schmidt_f(MultisetPermutation::parse("43421231")).str() == "43421321", "f(43421231) = 43421321");
  ex.expect(labels_to_perm(LabelSequence::parse("1,4,7,7,7", 3)).str() == "443322421311", "14777 -> 443322421311");
  ex.expect(perm_to_labels(MultisetPermutation::parse("443322421311")).str() == "1,4,7,7,7", "443322421311 -> 14777");
  ex.summary("worked examples");
  return c.ok() && ex.ok();
}

// 5. Cardinalities by direct enumeration.
bool criterion5() {
  Check c;
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto brute = oracle::dyck_words(n).size();
    const auto lib = enumerate_dyck_words(n).size();
    c.expect(BigCount(static_cast<unsigned long>(brute)) == catalan(n) && brute == lib,
             "Dyck n=" + std::to_string(n) + " brute " + std::to_string(brute) + " library " + std::to_string(lib));
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto brute = oracle::paths(n, m).size();
      const auto lib = enumerate_paths(n, 1, m).size();
      const BigCount b(static_cast<unsigned long>(brute));
      c.expect(b == rothe(1, m + 1, n) && b == generalized_catalan(n, m) && brute == lib,
               "paths " + cell(n, m) + " brute " + std::to_string(brute) + " library " + std::to_string(lib));
    }
  }
  c.summary("cardinalities");
  return c.ok();
}

// 6. 66 pairs in 20 classes, with equal counts inside each class.
bool criterion6() {
  Check c;
  const auto pairs = all_length3_pairs();
  const auto classes = classify_all_length3();
  c.expect(pairs.size() == 66, "pair count " + std::to_string(pairs.size()));
  c.expect(classes.size() == 20, "class count " + std::to_string(classes.size()) + ", expected 20");
  for (const auto& k : classes) {
    std::string members;
    for (const auto& p : k.members) members += (members.empty() ? "" : " ") + ("(" + p.str() + ")");
    c.note("class " + k.representative.str() + ": " + members);
  }
  for (const auto& k : classes) {
    for (std::size_t m = 1; m <= 10; ++m) {
      for (std::size_t n = 1; n * m <= 10; ++n) {
        const BigCount base = count_avoiders(n, m, k.representative);
        for (const auto& p : k.members)
          c.expect(count_avoiders(n, m, p) == base, "class " + k.representative.str() + " member " + p.str() + " " +
                                                        cell(n, m));
      }
    }
  }
  c.summary("classification");
  return c.ok();
}

// 7. Stirling identity, n! row, and 12-avoiding words.
bool criterion7() {
  Check c;
  for (const GridCell& g : grid_all_m()) {
    const auto v = check_stirling_identity(g.n, g.m);
    c.expect(v.equal(), "stirling " + cell(g.n, g.m) + " avoiders " + v.avoiders.get_str() + " formula " +
                            v.formula.get_str());
    const BigCount fact = count_avoiders(g.n, g.m, set("212,121"));
    c.expect(fact == factorial(g.n), "(212,121) " + cell(g.n, g.m) + " oracle " + fact.get_str());
  }
  c.expect(check_stirling_identity(2, 2).avoiders == 3, "s_{2,2}(212) = 3");
  for (std::size_t l = 1; l <= 12; ++l)
    for (std::size_t n = 1; n <= 12; ++n)
      c.expect(word_counterexample_probe(l, n) == binomial(n + l - 1, l), "words l=" + std::to_string(l) + " " +
                                                                             "n=" + std::to_string(n));
  c.summary("probes");
  return c.ok();
}

// 8. The table1 report covers the imported rows without failing.
bool criterion8() {
  VerifyOptions opt;
  opt.n_max = 12;
  opt.m_max = 12;
  opt.max_length = 12;
  const VerifyReport report = verify_table1(opt);
  Check c;
  c.expect(report.ok(), std::string("table1 report has a failing line: ") +
                            (report.first_failure() ? report.first_failure()->name : ""));
  for (const char* p : {"123,231", "123,321", "132,231", "132,312", "212,123", "212,132"}) {
    const std::string key = "{" + set(p).str() + "}";
    std::size_t reported = 0;
    for (const auto& line : report.lines) {
      if (line.name.rfind(key, 0) != 0) continue;
      c.note(std::string(to_string(line.status)) + " " + line.name + ": " + line.detail);
      c.expect(line.status == CheckStatus::Report, line.name + " is " + std::string(to_string(line.status)));
      ++reported;
    }
    c.expect(reported > 0, std::string("no report line for ") + p);
  }
  c.summary("imported-row report");
  return c.ok();
}

struct Criterion {
  std::function<bool()> run;
  double limit_seconds;  // 0: no runtime target
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {criterion1, 60}, {criterion2, 5}, {criterion3, 5}, {criterion4, 60},
      {criterion5, 0},  {criterion6, 0}, {criterion7, 0}, {criterion8, 0},
  };
  const int which = argc == 2 ? std::atoi(argv[1]) : 0;
  if (which < 1 || which > 8) {
    std::cerr << "usage: acceptance <1..8>\n";
    return 2;
  }
  const Criterion& crit = criteria[which - 1];
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = crit.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = crit.limit_seconds == 0 || seconds < crit.limit_seconds;
  char timing[96];
  if (crit.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, crit.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s, no runtime target", seconds);
  }
  if (!error.empty()) std::cout << "  exception: " << error << "\n";
  if (!in_time) std::cout << "  runtime target missed\n";
  const bool pass = ok && in_time && error.empty();
  std::cout << "criterion " << which << ": " << (pass ? "PASS" : "FAIL") << " (" << timing << ")\n";
  return pass ? 0 : 1;
}
