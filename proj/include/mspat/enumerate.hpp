#pragma once

// Brute-force ground truth: permutations of a multiset in lexicographic
// order and pruned depth-first counting of pattern avoiders.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mspat/bigcount.hpp"
#include "mspat/core.hpp"
#include "mspat/error.hpp"

namespace mspat {

inline constexpr std::size_t kDefaultLengthBudget = 14;
inline constexpr std::size_t kOverrideLengthBudget = 18;

struct EnumerationOptions {
  std::size_t length_budget = kDefaultLengthBudget;
  /// Raises the budget to kOverrideLengthBudget.
  bool override_budget = false;
  /// Split the search by first letter across threads.
  bool parallel = false;

  std::size_t effective_budget() const {
    return override_budget ? std::max(length_budget, kOverrideLengthBudget) : length_budget;
  }
};

inline std::vector<std::size_t> regular_multiplicity(std::size_t n, std::size_t m) {
  return std::vector<std::size_t>(n, m);
}

namespace detail {

inline void check_budget(const std::vector<std::size_t>& mu, const EnumerationOptions& options) {
  const std::size_t l = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
  if (std::find(mu.begin(), mu.end(), std::size_t{0}) != mu.end()) {
    throw Error(ErrorKind::InvalidPermutation, "multiplicities must be positive");
  }
  if (l > options.effective_budget()) {
    throw Error(ErrorKind::BudgetExceeded, "length " + std::to_string(l) + " exceeds the budget of " +
                                               std::to_string(options.effective_budget()) +
                                               (options.override_budget ? "" : " (override raises it to " +
                                                                                   std::to_string(kOverrideLengthBudget) + ")"));
  }
}

}  // namespace detail

/// Single-pass range over every permutation of a multiset, in
/// lexicographic order.
class PermutationStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MultisetPermutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const MultisetPermutation*;
    using reference = const MultisetPermutation&;

    iterator() = default;
    explicit iterator(PermutationStream* owner) : owner_(owner) {}

    reference operator*() const { return owner_->current_; }
    pointer operator->() const { return &owner_->current_; }
    iterator& operator++() {
      if (!owner_->advance()) owner_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.owner_ == b.owner_; }

   private:
    PermutationStream* owner_ = nullptr;
  };

  PermutationStream(std::vector<std::size_t> mu, const EnumerationOptions& options) {
    detail::check_budget(mu, options);
    Word letters;
    for (std::size_t i = 0; i < mu.size(); ++i) letters.insert(letters.end(), mu[i], static_cast<Letter>(i + 1));
    current_ = MultisetPermutation(std::move(letters), std::move(mu));
  }

  iterator begin() {
    if (started_) throw Error(ErrorKind::InvalidPermutation, "permutation stream is single-pass");
    started_ = true;
    return iterator(this);
  }
  iterator end() { return iterator(); }

 private:
  bool advance() {
    Word letters = current_.letters();
    if (!std::next_permutation(letters.begin(), letters.end())) return false;
    current_ = MultisetPermutation(std::move(letters), current_.multiplicity());
    return true;
  }

  MultisetPermutation current_;
  bool started_ = false;
};

inline PermutationStream generate_all(std::vector<std::size_t> mu, const EnumerationOptions& options = {}) {
  return PermutationStream(std::move(mu), options);
}

inline PermutationStream generate_all(std::size_t n, std::size_t m, const EnumerationOptions& options = {}) {
  return PermutationStream(regular_multiplicity(n, m), options);
}

namespace detail {

// Depth-first extension of avoiding prefixes. `visit` receives every
// complete avoider and returns false to stop the search.
template <typename Visit>
class AvoiderSearch {
 public:
  AvoiderSearch(const std::vector<std::size_t>& mu, const PatternSet& patterns, Visit& visit)
      : remaining_(mu), patterns_(patterns), visit_(visit) {
    length_ = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
    prefix_.reserve(length_);
  }

  /// Runs the subtree where the first letter is `first` (0 = all subtrees).
  bool run(Letter first = 0) {
    if (first == 0) return descend();
    return push(first) ? descend_after_push(first) : true;
  }

 private:
  bool push(Letter x) {
    if (remaining_[x - 1] == 0) return false;
    prefix_.push_back(x);
    for (const Pattern& p : patterns_) {
      if (ends_with_occurrence(prefix_, p)) {
        prefix_.pop_back();
        return false;
      }
    }
    --remaining_[x - 1];
    return true;
  }

  void pop(Letter x) {
    prefix_.pop_back();
    ++remaining_[x - 1];
  }

  bool descend_after_push(Letter x) {
    const bool go_on = descend();
    pop(x);
    return go_on;
  }

  bool descend() {
    if (prefix_.size() == length_) return visit_(prefix_);
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      const Letter x = static_cast<Letter>(i + 1);
      if (!push(x)) continue;
      if (!descend_after_push(x)) return false;
    }
    return true;
  }

  std::vector<std::size_t> remaining_;
  const PatternSet& patterns_;
  Visit& visit_;
  std::size_t length_ = 0;
  Word prefix_;
};

}  // namespace detail

/// Visits every avoider of `patterns` over the multiset `mu` in
/// lexicographic order. `visit(const Word&)` returns false to stop.
template <typename Visit>
void for_each_avoider(const std::vector<std::size_t>& mu, const PatternSet& patterns, Visit visit,
                      const EnumerationOptions& options = {}) {
  detail::check_budget(mu, options);
  detail::AvoiderSearch<Visit> search(mu, patterns, visit);
  search.run();
}

namespace detail {

/// False when no word with multiplicities `mu` can contain `p`: the k-th
/// most repeated pattern letter needs a letter of mu at least as repeated.
inline bool can_occur(const std::vector<std::size_t>& mu, const Pattern& p) {
  std::vector<std::size_t> need(p.max_letter(), 0);
  for (Letter x : p.letters()) ++need[x - 1];
  std::vector<std::size_t> have = mu;
  if (need.size() > have.size()) return false;
  std::sort(need.begin(), need.end(), std::greater<>());
  std::sort(have.begin(), have.end(), std::greater<>());
  for (std::size_t i = 0; i < need.size(); ++i)
    if (need[i] > have[i]) return false;
  return true;
}

inline BigCount multinomial(const std::vector<std::size_t>& mu) {
  std::size_t total = 0;
  BigCount out = 1;
  for (std::size_t k : mu) {
    total += k;
    out *= binomial(total, k);
  }
  return out;
}

}  // namespace detail

inline BigCount count_avoiders(const std::vector<std::size_t>& mu, const PatternSet& all_patterns,
                               const EnumerationOptions& options = {}) {
  detail::check_budget(mu, options);
  std::vector<Pattern> live;
  for (const Pattern& p : all_patterns)
    if (detail::can_occur(mu, p)) live.push_back(p);
  if (live.empty()) return detail::multinomial(mu);
  const PatternSet patterns(live);
  auto count_subtree = [&mu, &patterns](Letter first) -> BigCount {
    unsigned long count = 0;
    auto visit = [&count](const Word&) {
      ++count;
      return true;
    };
    detail::AvoiderSearch<decltype(visit)> search(mu, patterns, visit);
    search.run(first);
    return BigCount(count);
  };
  if (mu.empty()) return BigCount(1);
  if (!options.parallel || std::thread::hardware_concurrency() < 2) return count_subtree(0);
  std::vector<std::future<BigCount>> parts;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    parts.push_back(std::async(std::launch::async, count_subtree, static_cast<Letter>(i + 1)));
  }
  BigCount total;
  for (auto& part : parts) total += part.get();
  return total;
}

/// s_{n,m}(patterns).
inline BigCount count_avoiders(std::size_t n, std::size_t m, const PatternSet& patterns,
                               const EnumerationOptions& options = {}) {
  return count_avoiders(regular_multiplicity(n, m), patterns, options);
}

/// Up to `limit` avoiders in lexicographic order (no limit when empty).
inline std::vector<MultisetPermutation> list_avoiders(std::size_t n, std::size_t m, const PatternSet& patterns,
                                                      std::optional<std::size_t> limit = std::nullopt,
                                                      const EnumerationOptions& options = {}) {
  std::vector<MultisetPermutation> out;
  if (limit && *limit == 0) return out;
  const auto mu = regular_multiplicity(n, m);
  for_each_avoider(
      mu, patterns,
      [&](const Word& w) {
        out.emplace_back(w, mu);
        return !limit || out.size() < *limit;
      },
      options);
  return out;
}

}  // namespace mspat
