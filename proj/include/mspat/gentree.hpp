#pragma once

// Generating trees given by succession rules, counted level by level.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mspat/bigcount.hpp"
#include "mspat/core.hpp"
#include "mspat/error.hpp"

namespace mspat {

/// A node label: a nonnegative integer, or the dead label N.
struct Label {
  std::int64_t value = 0;
  bool dead = false;

  static constexpr Label of(std::int64_t v) { return Label{v, false}; }
  static constexpr Label dead_label() { return Label{0, true}; }

  std::string str() const { return dead ? "N" : std::to_string(value); }

  friend constexpr bool operator==(const Label&, const Label&) = default;
  friend constexpr auto operator<=>(const Label& a, const Label& b) {
    if (a.dead != b.dead) return a.dead <=> b.dead;
    return a.value <=> b.value;
  }
};

/// Children of a label are {low, low+1, ..., label+offset} as a multiset.
struct IntervalForm {
  std::int64_t low = 0;
  std::int64_t offset = 0;
};

struct SuccessionRule {
  std::string name;
  std::size_t m = 0;
  Label root;
  /// Child labels in the order they are written in the rule.
  std::function<std::vector<Label>(const Label&)> children;
  std::optional<IntervalForm> interval;
  /// Productions in text form: root line, then one line per label class.
  std::string description;
};

inline const std::vector<std::string_view>& builtin_rule_names() {
  static const std::vector<std::string_view> names = {"112-122@m2", "122-123", "211-213", "122-213"};
  return names;
}

inline SuccessionRule builtin_rule(std::string_view name, std::size_t m = 2) {
  SuccessionRule rule;
  rule.name = std::string(name);
  rule.root = Label::of(1);
  const auto M = static_cast<std::int64_t>(m);

  if (name == "112-122@m2") {
    rule.m = 2;
    rule.interval = IntervalForm{2, 1};
    rule.children = [](const Label& r) {
      if (r.dead || r.value < 1) throw std::logic_error("label " + r.str() + " is not reachable in rule 112-122@m2");
      std::vector<Label> out;
      for (std::int64_t c = 2; c <= r.value + 1; ++c) out.push_back(Label::of(c));
      return out;
    };
    rule.description = "rule 112-122@m2\nroot (1)\n(r) -> (2)(3)...(r)(r+1)\n";
    return rule;
  }
  if (name != "122-123" && name != "211-213" && name != "122-213") {
    throw Error(ErrorKind::UnknownRule, "unknown rule '" + std::string(name) + "'");
  }
  if (m < 2) throw Error(ErrorKind::OutOfDomain, "rule " + std::string(name) + " needs m >= 2");
  rule.m = m;
  const std::string ms = std::to_string(m);

  if (name == "122-123") {
    rule.interval = IntervalForm{M + 1, M};
    rule.children = [M](const Label& a) {
      if (a.dead || a.value < 1) throw std::logic_error("label " + a.str() + " is not reachable in rule 122-123");
      std::vector<Label> out{Label::of(M + a.value)};
      for (std::int64_t c = M + 1; c <= M + a.value - 1; ++c) out.push_back(Label::of(c));
      return out;
    };
    rule.description = "rule 122-123 m=" + ms + "\nroot (1)\n(a) -> (a+" + ms + ")(" + std::to_string(m + 1) +
                       ")...(a+" + std::to_string(m - 1) + ")\n";
    return rule;
  }
  if (name == "211-213") {
    rule.children = [M](const Label& a) -> std::vector<Label> {
      if (a.dead) return {};
      if (a.value == 1) return {Label::of(2)};
      if (a.value == 2) {
        std::vector<Label> out{Label::of(2), Label::of(1)};
        out.insert(out.end(), static_cast<std::size_t>(M - 2), Label::dead_label());
        out.push_back(Label::of(2));
        return out;
      }
      // A difference of 0 (or anything above 2) never occurs.
      throw std::logic_error("label " + a.str() + " is not reachable in rule 211-213");
    };
    std::string two = "(2)(1)";
    for (std::size_t i = 0; i + 2 < m; ++i) two += "(N)";
    two += "(2)";
    rule.description = "rule 211-213 m=" + ms + "\nroot (1)\n(1) -> (2)\n(2) -> " + two + "\n(N) ->\n";
    return rule;
  }
  // 122-213, labelled by the first descent
  rule.children = [M](const Label& d) -> std::vector<Label> {
    if (!d.dead && d.value == 1) return {Label::of(M + 1)};
    if (!d.dead && (d.value == M + 1 || d.value == M)) {
      std::vector<Label> out{Label::of(M + 1)};
      const std::size_t copies = static_cast<std::size_t>(d.value == M + 1 ? M : M - 1);
      out.insert(out.end(), copies, Label::of(M));
      return out;
    }
    throw std::logic_error("label " + d.str() + " is not reachable in rule 122-213");
  };
  const std::string up = std::to_string(m + 1);
  std::string big = "(" + up + ")";
  for (std::size_t i = 0; i < m; ++i) big += "(" + ms + ")";
  std::string small = "(" + up + ")";
  for (std::size_t i = 0; i + 1 < m; ++i) small += "(" + ms + ")";
  rule.description = "rule 122-213 m=" + ms + "\nroot (1)\n(1) -> (" + up + ")\n(" + up + ") -> " + big + "\n(" + ms +
                     ") -> " + small + "\n";
  return rule;
}

/// Pattern pair whose avoiders the built-in rule enumerates.
inline PatternSet rule_pattern_pair(const SuccessionRule& rule) {
  if (rule.name == "112-122@m2") return PatternSet::parse("112,122");
  if (rule.name == "122-123") return PatternSet::parse("122,123");
  if (rule.name == "211-213") return PatternSet::parse("211,213");
  if (rule.name == "122-213") return PatternSet::parse("122,213");
  throw Error(ErrorKind::UnknownRule, "no pattern pair for rule '" + rule.name + "'");
}

/// The statistic a built-in rule labels a permutation with.
inline Label tree_label(const SuccessionRule& rule, const MultisetPermutation& sigma) {
  if (rule.name == "112-122@m2") return Label::of(static_cast<std::int64_t>(first_repetition(sigma.view())));
  if (rule.name == "122-123") return Label::of(static_cast<std::int64_t>(first_ascent(sigma.view())));
  if (rule.name == "122-213") return Label::of(static_cast<std::int64_t>(first_descent(sigma.view())));
  if (rule.name == "211-213") {
    const auto diff = static_cast<std::int64_t>(first_descent(sigma.view())) -
                      static_cast<std::int64_t>(largest_letter_occurrence(sigma));
    return diff < 0 ? Label::dead_label() : Label::of(diff);
  }
  throw Error(ErrorKind::UnknownRule, "no labelling statistic for rule '" + rule.name + "'");
}

struct LevelProfile {
  std::size_t height = 0;
  std::map<Label, BigCount> counts;

  BigCount total() const {
    BigCount sum = 0;
    for (const auto& [label, count] : counts) sum += count;
    return sum;
  }
};

inline LevelProfile root_profile(const SuccessionRule& rule) {
  LevelProfile p;
  p.counts[rule.root] = 1;
  return p;
}

inline LevelProfile next_level(const SuccessionRule& rule, const LevelProfile& level) {
  LevelProfile next;
  next.height = level.height + 1;
  if (rule.interval) {
    // Child L collects every parent a with a + offset >= L (and L >= low).
    const IntervalForm iv = *rule.interval;
    std::vector<std::pair<std::int64_t, BigCount>> parents;
    for (const auto& [label, count] : level.counts) {
      if (label.dead) continue;
      parents.emplace_back(label.value, count);
    }
    if (parents.empty()) return next;
    std::vector<BigCount> suffix(parents.size() + 1, BigCount(0));
    for (std::size_t i = parents.size(); i-- > 0;) suffix[i] = suffix[i + 1] + parents[i].second;
    std::size_t first = 0;
    const std::int64_t top = parents.back().first + iv.offset;
    for (std::int64_t child = iv.low; child <= top; ++child) {
      while (first < parents.size() && parents[first].first + iv.offset < child) ++first;
      if (first == parents.size()) break;
      if (suffix[first] != 0) next.counts[Label::of(child)] = suffix[first];
    }
    return next;
  }
  for (const auto& [label, count] : level.counts) {
    for (const Label& child : rule.children(label)) next.counts[child] += count;
  }
  return next;
}

inline LevelProfile level_profile(const SuccessionRule& rule, std::size_t height) {
  LevelProfile p = root_profile(rule);
  for (std::size_t h = 0; h < height; ++h) p = next_level(rule, p);
  return p;
}

/// Number of nodes at `height`.
inline BigCount count_at_height(const SuccessionRule& rule, std::size_t height) {
  return level_profile(rule, height).total();
}

/// Labels seen at heights 0..max_height.
inline std::set<Label> reachable_labels(const SuccessionRule& rule, std::size_t max_height) {
  std::set<Label> out;
  LevelProfile p = root_profile(rule);
  for (std::size_t h = 0;; ++h) {
    for (const auto& [label, count] : p.counts) out.insert(label);
    if (h == max_height) break;
    p = next_level(rule, p);
  }
  return out;
}

/// Streams every root-to-height branch, children in rule order.
/// `visit(const std::vector<Label>&)` returns false to stop.
template <typename Visit>
void for_each_branch(const SuccessionRule& rule, std::size_t height, Visit visit) {
  std::vector<Label> branch{rule.root};
  bool stop = false;
  std::function<void()> descend = [&] {
    if (stop) return;
    if (branch.size() == height + 1) {
      if (!visit(branch)) stop = true;
      return;
    }
    for (const Label& child : rule.children(branch.back())) {
      branch.push_back(child);
      descend();
      branch.pop_back();
      if (stop) return;
    }
  };
  descend();
}

/// All branches of length `height`; raises ExplosionGuard past `limit`.
inline std::vector<std::vector<Label>> expand_branches(const SuccessionRule& rule, std::size_t height,
                                                       std::size_t limit) {
  std::vector<std::vector<Label>> out;
  bool exploded = false;
  for_each_branch(rule, height, [&](const std::vector<Label>& branch) {
    if (out.size() == limit) {
      exploded = true;
      return false;
    }
    out.push_back(branch);
    return true;
  });
  if (exploded) {
    throw Error(ErrorKind::ExplosionGuard, "more than " + std::to_string(limit) + " branches at height " +
                                               std::to_string(height) + "; stream them with for_each_branch");
  }
  return out;
}

inline std::string format_branch(const std::vector<Label>& branch) {
  std::string out;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    if (i) out += ',';
    out += branch[i].str();
  }
  return out;
}

}  // namespace mspat
