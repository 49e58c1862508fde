#pragma once

// Invariant suites behind `mspat verify`. Each check yields one line:
// PASS and FAIL for hard assertions, REPORT for rows that are only compared.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mspat/bijections.hpp"
#include "mspat/classify.hpp"
#include "mspat/core.hpp"
#include "mspat/enumerate.hpp"
#include "mspat/error.hpp"
#include "mspat/formulas.hpp"
#include "mspat/gentree.hpp"
#include "mspat/growth.hpp"

namespace mspat {

enum class CheckStatus { Pass, Fail, Report };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Report: return "REPORT";
  }
  return "?";
}

struct CheckLine {
  CheckStatus status = CheckStatus::Pass;
  std::string name;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool ok() const {
    return std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == CheckStatus::Fail; });
  }
  const CheckLine* first_failure() const {
    for (const auto& l : lines)
      if (l.status == CheckStatus::Fail) return &l;
    return nullptr;
  }
};

struct VerifyOptions {
  std::size_t n_max = 4;
  std::size_t m_max = 3;
  /// Largest n*m handed to the avoider search.
  std::size_t max_length = 12;
  EnumerationOptions enumeration{};
};

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"table1", "gentree", "bijections", "growth"};
  return names;
}

namespace detail {

/// Accumulates one hard check; keeps the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& counterexample) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = counterexample();
  }

  CheckLine line() const {
    if (failure_.empty()) return {CheckStatus::Pass, name_, std::to_string(cases_) + " cases"};
    return {CheckStatus::Fail, name_, failure_};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::string failure_;
};

inline std::string cell_text(std::size_t n, std::size_t m) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

template <typename F>
CheckLine guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {CheckStatus::Fail, name, std::string("exception: ") + e.what()};
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// table1

inline VerifyReport verify_table1(const VerifyOptions& opt = {}) {
  VerifyReport report{"table1", {}};
  const std::vector<GridCell> grid = make_grid(opt.n_max, 1, opt.m_max, opt.max_length);
  std::map<std::pair<std::string, GridCell>, BigCount> oracle;
  auto oracle_count = [&](const PatternSet& pair, const GridCell& c) {
    auto key = std::make_pair(pair.str(), c);
    auto it = oracle.find(key);
    if (it == oracle.end()) it = oracle.emplace(key, count_avoiders(c.n, c.m, pair, opt.enumeration)).first;
    return it->second;
  };

  for (const FormulaEntry& e : formula_catalog()) {
    const std::string name = "{" + e.pair.str() + "} " + e.formula + " [" + std::string(to_string(e.trust)) + ", " +
                             e.validity + "]";
    report.lines.push_back(detail::guarded(name, [&]() -> CheckLine {
      std::size_t cells = 0;
      std::string disagreements;
      for (const GridCell& c : grid) {
        if (!e.in_domain(c.n, c.m)) continue;
        ++cells;
        const BigCount want = e.evaluate(c.n, c.m);
        const BigCount got = oracle_count(e.pair, c);
        if (want != got) {
          if (!disagreements.empty()) disagreements += "; ";
          disagreements += detail::cell_text(c.n, c.m) + " formula " + to_string(want) + " oracle " + to_string(got);
        }
      }
      if (e.trust == Trust::ProvedHere) {
        if (!disagreements.empty()) return {CheckStatus::Fail, name, disagreements};
        return {CheckStatus::Pass, name, std::to_string(cells) + " cells"};
      }
      if (disagreements.empty()) return {CheckStatus::Report, name, "agrees on " + std::to_string(cells) + " cells"};
      return {CheckStatus::Report, name, "disagrees at " + disagreements};
    }));
  }

  for (RecurrenceFamily family : {RecurrenceFamily::Pair211_213, RecurrenceFamily::Pair122_213}) {
    const PatternSet pair = family == RecurrenceFamily::Pair211_213 ? detail::pair_211_213() : detail::pair_122_213();
    const std::string name = "{" + pair.str() + "} recurrence and explicit form";
    report.lines.push_back(detail::guarded(name, [&]() -> CheckLine {
      detail::Tally t(name);
      for (const GridCell& c : grid) {
        if (c.m < 2) continue;
        const BigCount o = oracle_count(pair, c);
        const BigCount r = recurrence_count(family, c.n, c.m);
        const BigCount x = explicit_count(family, c.n, c.m);
        t.expect(o == r && r == x, [&] {
          return detail::cell_text(c.n, c.m) + " oracle " + to_string(o) + " recurrence " + to_string(r) +
                 " explicit " + to_string(x);
        });
      }
      return t.line();
    }));
  }

  // With m = 2 no permutation contains 111, so the pair count is the
  // single-pattern count; compared against c_n for the record.
  for (const Pattern& p : length3_patterns(false)) {
    if (!p.is_ordinary()) continue;
    const PatternSet pair{Pattern::parse("111"), p};
    std::string mismatches;
    for (const GridCell& c : grid) {
      if (c.m != 2) continue;
      const BigCount got = oracle_count(pair, c);
      if (got != catalan(c.n)) {
        if (!mismatches.empty()) mismatches += "; ";
        mismatches += detail::cell_text(c.n, c.m) + " oracle " + to_string(got) + " c_n " + to_string(catalan(c.n));
      }
    }
    report.lines.push_back({CheckStatus::Report, "{" + pair.str() + "} against c_n at m = 2",
                            mismatches.empty() ? "agrees" : "disagrees at " + mismatches});
  }

  for (const UnsupportedEntry& u : unsupported_catalog()) {
    std::string counts;
    for (const GridCell& c : grid) {
      if (c.m < 2) continue;
      if (!counts.empty()) counts += " ";
      counts += detail::cell_text(c.n, c.m) + "=" + to_string(oracle_count(u.pair, c));
    }
    report.lines.push_back({CheckStatus::Report, "{" + u.pair.str() + "} " + u.reason, "oracle " + counts});
  }
  return report;
}

// ---------------------------------------------------------------------------
// gentree

struct GentreeOptions {
  std::size_t height_max = 60;
  std::size_t m_max = 5;
  /// Oracle comparison grid (n*m bound).
  std::size_t oracle_length = 12;
  /// Children-label comparison grid (n*m bound).
  std::size_t structure_length = 10;
};

/// Closed-form count for the avoiders a built-in rule enumerates.
inline BigCount rule_reference_count(const SuccessionRule& rule, std::size_t n) {
  if (rule.name == "112-122@m2") return catalan(n);
  if (rule.name == "122-123") return generalized_catalan(n, rule.m);
  if (n == 0) return BigCount(1);
  if (rule.name == "211-213") return recurrence_count(RecurrenceFamily::Pair211_213, n, rule.m);
  return recurrence_count(RecurrenceFamily::Pair122_213, n, rule.m);
}

/// Every avoider of [n]_m is a child of its restriction to [n-1]; the
/// multiset of child labels must equal the rule's production.
inline std::string rule_structure_counterexample(const SuccessionRule& rule, std::size_t n) {
  const PatternSet pair = rule_pattern_pair(rule);
  std::map<Word, std::vector<Label>> children;
  for (const Word& parent : [&] {
         std::vector<Word> out;
         for (const auto& s : list_avoiders(n - 1, rule.m, pair)) out.push_back(s.letters());
         return out;
       }()) {
    children[parent];
  }
  for (const auto& sigma : list_avoiders(n, rule.m, pair)) {
    Word parent = restrict_to_alphabet(sigma.view(), static_cast<Letter>(n - 1));
    auto it = children.find(parent);
    if (it == children.end()) return sigma.str() + " restricts to " + format_word(parent) + ", which is not an avoider";
    it->second.push_back(tree_label(rule, sigma));
  }
  for (auto& [parent, labels] : children) {
    const MultisetPermutation p(parent, std::vector<std::size_t>(n - 1, rule.m));
    const Label parent_label = tree_label(rule, p);
    std::vector<Label> expected = rule.children(parent_label);
    std::sort(expected.begin(), expected.end());
    std::sort(labels.begin(), labels.end());
    if (expected != labels) {
      auto text = [](const std::vector<Label>& v) {
        std::string s;
        for (const Label& l : v) s += "(" + l.str() + ")";
        return s;
      };
      return "parent " + (parent.empty() ? std::string("(empty)") : format_word(parent)) + " label " +
             parent_label.str() + ": children " + text(labels) + ", rule gives " + text(expected);
    }
  }
  return {};
}

inline std::vector<SuccessionRule> builtin_rules_up_to(std::size_t m_max) {
  std::vector<SuccessionRule> rules{builtin_rule("112-122@m2")};
  for (std::string_view name : {"122-123", "211-213", "122-213"})
    for (std::size_t m = 2; m <= m_max; ++m) rules.push_back(builtin_rule(name, m));
  return rules;
}

inline VerifyReport verify_gentree(const GentreeOptions& opt = {}) {
  VerifyReport report{"gentree", {}};
  for (const SuccessionRule& rule : builtin_rules_up_to(opt.m_max)) {
    const std::string tag = rule.name + " m=" + std::to_string(rule.m);
    const PatternSet pair = rule_pattern_pair(rule);

    report.lines.push_back(detail::guarded(tag + " oracle", [&]() -> CheckLine {
      detail::Tally t(tag + " oracle");
      for (std::size_t n = 0; n * rule.m <= opt.oracle_length; ++n) {
        const BigCount tree = count_at_height(rule, n);
        const BigCount o = count_avoiders(n, rule.m, pair);
        t.expect(tree == o, [&] { return "height " + std::to_string(n) + ": tree " + to_string(tree) + " oracle " + to_string(o); });
      }
      return t.line();
    }));

    report.lines.push_back(detail::guarded(tag + " closed form", [&]() -> CheckLine {
      detail::Tally t(tag + " closed form");
      LevelProfile level = root_profile(rule);
      for (std::size_t n = 0; n <= opt.height_max; ++n) {
        if (n > 0) level = next_level(rule, level);
        const BigCount tree = level.total();
        const BigCount want = rule_reference_count(rule, n);
        t.expect(tree == want,
                 [&] { return "height " + std::to_string(n) + ": tree " + to_string(tree) + " closed form " + to_string(want); });
      }
      return t.line();
    }));

    report.lines.push_back(detail::guarded(tag + " children labels", [&]() -> CheckLine {
      detail::Tally t(tag + " children labels");
      for (std::size_t n = 1; n * rule.m <= opt.structure_length; ++n) {
        const std::string bad = rule_structure_counterexample(rule, n);
        t.expect(bad.empty(), [&] { return bad; });
      }
      return t.line();
    }));
  }
  return report;
}

// ---------------------------------------------------------------------------
// bijections

struct BijectionOptions {
  std::size_t dyck_n_max = 6;
  std::size_t labels_length = 12;
  std::size_t path_n_max = 5;
  std::size_t path_m_max = 3;
  std::size_t dyck_count_n_max = 10;
  std::size_t path_count_n_max = 6;
};

inline VerifyReport verify_bijections(const BijectionOptions& opt = {}) {
  VerifyReport report{"bijections", {}};
  auto add = [&](const std::string& name, auto&& body) {
    report.lines.push_back(detail::guarded(name, [&]() -> CheckLine {
      detail::Tally t(name);
      body(t);
      return t.line();
    }));
  };
  const PatternSet p112_122 = PatternSet::parse("112,122");
  const PatternSet p122_123 = PatternSet::parse("122,123");
  const PatternSet p122_132 = PatternSet::parse("122,132");

  add("worked examples", [&](detail::Tally& t) {
    const std::string a = dyck_to_perm(DyckWord::parse("XYXXYXYY")).str();
    t.expect(a == "44323121", [&] { return "dyck XYXXYXYY -> " + a; });
    const std::string b = perm_to_dyck(MultisetPermutation::parse("44323121")).str();
    t.expect(b == "XYXXYXYY", [&] { return "dyck inverse 44323121 -> " + b; });
    const std::string c = simion_schmidt_f(MultisetPermutation::parse("43421231")).str();
    t.expect(c == "43421321", [&] { return "f(43421231) -> " + c; });
    const std::string d = simion_schmidt_g(MultisetPermutation::parse("43421321")).str();
    t.expect(d == "43421231", [&] { return "g(43421321) -> " + d; });
    const std::string e = labels_to_perm(LabelSequence::parse("1,4,7,7,7", 3)).str();
    t.expect(e == "443322421311", [&] { return "labels 1,4,7,7,7 -> " + e; });
    const std::string f = perm_to_labels(MultisetPermutation::parse("443322421311")).str();
    t.expect(f == "1,4,7,7,7", [&] { return "labels of 443322421311 -> " + f; });
    const std::string g = path_to_labels(LatticePath::parse("UURRRURRRURRRRRRR", 1, 3)).str();
    t.expect(g == "1,4,7,7,7", [&] { return "path labels -> " + g; });
  });

  add("dyck round trips", [&](detail::Tally& t) {
    for (std::size_t n = 0; n <= opt.dyck_n_max; ++n) {
      for (const DyckWord& w : enumerate_dyck_words(n)) {
        const MultisetPermutation s = dyck_to_perm(w);
        t.expect(avoids_all(s, p112_122) && perm_to_dyck(s) == w, [&] { return w.str() + " -> " + s.str(); });
      }
      for (const auto& s : list_avoiders(n, 2, p112_122)) {
        const DyckWord w = perm_to_dyck(s);
        t.expect(dyck_to_perm(w) == s, [&] { return s.str() + " -> " + w.str(); });
      }
    }
  });

  add("labels round trips", [&](detail::Tally& t) {
    for (std::size_t m = 1; m <= opt.labels_length; ++m) {
      for (std::size_t n = 1; n * m <= opt.labels_length; ++n) {
        for (const auto& s : list_avoiders(n, m, p122_123)) {
          const LabelSequence seq = perm_to_labels(s);
          const MultisetPermutation back = labels_to_perm(seq);
          t.expect(back == s && avoids_all(back, p122_123), [&] { return s.str() + " -> " + seq.str() + " -> " + back.str(); });
        }
      }
    }
  });

  add("path round trips", [&](detail::Tally& t) {
    for (std::size_t m = 1; m <= opt.path_m_max; ++m) {
      for (std::size_t n = 0; n <= opt.path_n_max; ++n) {
        for (const LatticePath& p : enumerate_paths(n, 1, m)) {
          const LabelSequence seq = path_to_labels(p);
          const bool second_ok = seq.values().size() < 2 || seq.values()[1] == static_cast<std::int64_t>(m + 1);
          t.expect(labels_to_path(seq) == p && second_ok, [&] { return p.str() + " -> " + seq.str(); });
          if (n >= 1) {
            const MultisetPermutation s = labels_to_perm(seq);
            t.expect(perm_to_labels(s) == seq, [&] { return seq.str() + " -> " + s.str(); });
          }
        }
      }
    }
  });

  add("simion-schmidt round trips", [&](detail::Tally& t) {
    for (std::size_t m = 1; m <= opt.labels_length; ++m) {
      for (std::size_t n = 1; n * m <= opt.labels_length; ++n) {
        for (const auto& s : list_avoiders(n, m, p122_132)) {
          const MultisetPermutation fs = simion_schmidt_f(s);
          const bool minima = left_to_right_minima(fs) == left_to_right_minima(s);
          t.expect(avoids_all(fs, p122_123) && minima && simion_schmidt_g(fs) == s,
                   [&] { return "f(" + s.str() + ") = " + fs.str(); });
        }
        for (const auto& s : list_avoiders(n, m, p122_123)) {
          const MultisetPermutation gs = simion_schmidt_g(s);
          const bool minima = left_to_right_minima(gs) == left_to_right_minima(s);
          t.expect(avoids_all(gs, p122_132) && minima && simion_schmidt_f(gs) == s,
                   [&] { return "g(" + s.str() + ") = " + gs.str(); });
        }
      }
    }
  });

  add("dyck cardinality", [&](detail::Tally& t) {
    for (std::size_t n = 0; n <= opt.dyck_count_n_max; ++n) {
      const BigCount got(enumerate_dyck_words(n).size());
      t.expect(got == catalan(n), [&] { return "n=" + std::to_string(n) + ": " + to_string(got) + " words"; });
    }
  });

  add("path cardinality", [&](detail::Tally& t) {
    for (std::size_t m = 1; m <= opt.path_m_max; ++m) {
      for (std::size_t n = 0; n <= opt.path_count_n_max; ++n) {
        const BigCount got(enumerate_paths(n, 1, m).size());
        t.expect(got == rothe(1, m + 1, n) && got == generalized_catalan(n, m),
                 [&] { return detail::cell_text(n, m) + ": " + to_string(got) + " paths"; });
      }
    }
  });

  return report;
}

// ---------------------------------------------------------------------------
// growth

struct GrowthOptions {
  std::size_t max_length = 12;
  std::size_t word_max = 12;
};

inline VerifyReport verify_growth(const GrowthOptions& opt = {}) {
  VerifyReport report{"growth", {}};
  auto add = [&](const std::string& name, auto&& body) {
    report.lines.push_back(detail::guarded(name, [&]() -> CheckLine {
      detail::Tally t(name);
      body(t);
      return t.line();
    }));
  };

  add("stirling identity", [&](detail::Tally& t) {
    for (std::size_t m = 1; m <= opt.max_length; ++m) {
      for (std::size_t n = 1; n * m <= opt.max_length; ++n) {
        const StirlingVerdict v = check_stirling_identity(n, m);
        t.expect(v.equal(), [&] {
          return detail::cell_text(n, m) + " avoiders " + to_string(v.avoiders) + " formula " + to_string(v.formula);
        });
      }
    }
  });

  add("(212,121) equals n!", [&](detail::Tally& t) {
    const PatternSet pair = PatternSet::parse("212,121");
    for (std::size_t m = 1; m <= opt.max_length; ++m) {
      for (std::size_t n = 1; n * m <= opt.max_length; ++n) {
        const BigCount got = count_avoiders(n, m, pair);
        t.expect(got == factorial(n), [&] { return detail::cell_text(n, m) + " oracle " + to_string(got); });
      }
    }
  });

  add("12-avoiding words", [&](detail::Tally& t) {
    for (std::size_t l = 1; l <= opt.word_max; ++l) {
      for (std::size_t n = 1; n <= opt.word_max; ++n) {
        const BigCount got = word_counterexample_probe(l, n);
        t.expect(got == binomial(n + l - 1, l),
                 [&] { return "l=" + std::to_string(l) + ", n=" + std::to_string(n) + ": " + to_string(got); });
      }
    }
  });

  add("212 ratios increase at m = 2", [&](detail::Tally& t) {
    std::vector<GridCell> grid;
    for (std::size_t n = 2; n <= 5; ++n) grid.push_back({n, 2});
    const auto rows = growth_table(PatternSet{Pattern::parse("212")}, grid);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      t.expect(rows[i].ratio > rows[i - 1].ratio, [&] { return "n=" + std::to_string(rows[i].n) + " ratio does not increase"; });
    }
  });

  return report;
}

inline VerifyReport run_suite(std::string_view suite, const VerifyOptions& opt = {}) {
  if (suite == "table1") return verify_table1(opt);
  if (suite == "gentree") return verify_gentree();
  if (suite == "bijections") return verify_bijections();
  if (suite == "growth") return verify_growth();
  throw Error(ErrorKind::Unsupported, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace mspat
