#pragma once

// Constructive correspondences:
//   Dyck words            <-> S_{n,2}(112,122)
//   lattice paths P_n(1,m) <-> label sequences B_{n,m} <-> S_{n,m}(122,123)
//   S_{n,m}(122,132)       <-> S_{n,m}(122,123)  (left-to-right minima fixed)

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mspat/core.hpp"
#include "mspat/error.hpp"

namespace mspat {

enum class DomainCheck { On, Off };

// ---------------------------------------------------------------------------
// Domain types

/// n X's and n Y's, no prefix with more Y's than X's.
class DyckWord {
 public:
  static DyckWord parse(std::string_view text) {
    long balance = 0;
    for (char c : text) {
      if (c == 'X') {
        ++balance;
      } else if (c == 'Y') {
        if (--balance < 0) throw Error(ErrorKind::InvalidDyck, std::string(text) + ": prefix with more Y than X");
      } else {
        throw Error(ErrorKind::InvalidDyck, std::string(text) + ": letters must be X or Y");
      }
    }
    if (balance != 0) throw Error(ErrorKind::InvalidDyck, std::string(text) + ": unequal numbers of X and Y");
    DyckWord w;
    w.letters_ = std::string(text);
    return w;
  }

  const std::string& str() const noexcept { return letters_; }
  std::size_t semilength() const noexcept { return letters_.size() / 2; }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string letters_;
};

/// Up/right path from (0,0) to (a + b n, n) meeting y = (x - a)/b only at
/// the endpoint. Steps are 'U' and 'R'.
class LatticePath {
 public:
  static LatticePath parse(std::string_view steps, std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw Error(ErrorKind::InvalidPath, "a and b must be >= 1");
    std::int64_t x = 0, y = 0;
    const auto A = static_cast<std::int64_t>(a), B = static_cast<std::int64_t>(b);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] == 'U') {
        ++y;
      } else if (steps[i] == 'R') {
        ++x;
      } else {
        throw Error(ErrorKind::InvalidPath, "steps must be U or R");
      }
      if (x - A == B * y && i + 1 != steps.size()) {
        throw Error(ErrorKind::InvalidPath, std::string(steps) + " touches the line at (" + std::to_string(x) + "," +
                                                std::to_string(y) + ") before the end");
      }
    }
    if (x != A + B * y) {
      throw Error(ErrorKind::InvalidPath, std::string(steps) + " ends at (" + std::to_string(x) + "," + std::to_string(y) +
                                              "), expected (" + std::to_string(A + B * y) + "," + std::to_string(y) + ")");
    }
    LatticePath p;
    p.steps_ = std::string(steps);
    p.a_ = a;
    p.b_ = b;
    p.n_ = static_cast<std::size_t>(y);
    return p;
  }

  const std::string& str() const noexcept { return steps_; }
  std::size_t a() const noexcept { return a_; }
  std::size_t b() const noexcept { return b_; }
  std::size_t n() const noexcept { return n_; }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::string steps_;
  std::size_t a_ = 1, b_ = 1, n_ = 0;
};

/// (1, m+1, a_3, ..., a_{n+1}) with m+1 <= a_{i+1} <= a_i + m.
class LabelSequence {
 public:
  LabelSequence(std::vector<std::int64_t> values, std::size_t m) : values_(std::move(values)), m_(m) {
    const auto M = static_cast<std::int64_t>(m);
    if (m < 1) throw Error(ErrorKind::InvalidLabelSequence, "m must be >= 1");
    if (values_.empty() || values_.front() != 1) {
      throw Error(ErrorKind::InvalidLabelSequence, "sequence must start with 1");
    }
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] < M + 1 || values_[i] > values_[i - 1] + M) {
        throw Error(ErrorKind::InvalidLabelSequence,
                    "entry " + std::to_string(i + 1) + " = " + std::to_string(values_[i]) + " outside [" +
                        std::to_string(M + 1) + ", " + std::to_string(values_[i - 1] + M) + "]");
      }
    }
  }

  static LabelSequence parse(std::string_view text, std::size_t m) {
    std::vector<std::int64_t> values;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      if (i == text.size()) break;
      std::int64_t v = 0;
      std::size_t digits = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
        ++digits;
      }
      if (digits == 0) throw Error(ErrorKind::InvalidLabelSequence, "expected comma-separated integers");
      values.push_back(v);
    }
    return LabelSequence(std::move(values), m);
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return values_.size() - 1; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::size_t m_;
};

namespace detail {

inline std::string occurrence_text(const MultisetPermutation& sigma, const Pattern& p,
                                   const std::vector<std::size_t>& at) {
  std::string where;
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (i) where += ",";
    where += std::to_string(at[i] + 1);
  }
  std::string marked;
  for (std::size_t i = 0; i < sigma.length(); ++i) {
    const bool hit = std::find(at.begin(), at.end(), i) != at.end();
    if (i && sigma.alphabet_size() > 9) marked += ',';
    marked += hit ? "[" + std::to_string(sigma[i]) + "]" : std::to_string(sigma[i]);
  }
  return "contains " + p.str() + " at positions " + where + ": " + marked;
}

inline void require_avoids(const MultisetPermutation& sigma, std::string_view patterns) {
  for (const Pattern& p : PatternSet::parse(patterns)) {
    if (auto at = find_occurrence(sigma.view(), p)) {
      throw Error(ErrorKind::NotInDomain, sigma.str() + " " + occurrence_text(sigma, p, *at));
    }
  }
}

inline std::size_t require_regular(const MultisetPermutation& sigma) {
  if (sigma.empty()) return 0;
  auto m = sigma.regular_multiplicity();
  if (!m) throw Error(ErrorKind::NotInDomain, sigma.str() + " is not a permutation of a regular multiset");
  return *m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration

/// All Dyck words of semilength n in lexicographic order (X < Y).
inline std::vector<DyckWord> enumerate_dyck_words(std::size_t n) {
  std::vector<DyckWord> out;
  std::string w;
  auto descend = [&](auto&& self, std::size_t open, std::size_t close) -> void {
    if (close == n) {
      out.push_back(DyckWord::parse(w));
      return;
    }
    if (open < n) {
      w += 'X';
      self(self, open + 1, close);
      w.pop_back();
    }
    if (close < open) {
      w += 'Y';
      self(self, open, close + 1);
      w.pop_back();
    }
  };
  descend(descend, 0, 0);
  return out;
}

/// All paths of P_n(a, b), up-steps first.
inline std::vector<LatticePath> enumerate_paths(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<LatticePath> out;
  std::string steps;
  const std::size_t end_x = a + b * n;
  auto descend = [&](auto&& self, std::size_t x, std::size_t y) -> void {
    if (x == end_x && y == n) {
      out.push_back(LatticePath::parse(steps, a, b));
      return;
    }
    if (y < n) {
      steps += 'U';
      self(self, x, y + 1);
      steps.pop_back();
    }
    // Stay strictly left of the line, except for the final step.
    if (x + 1 < a + b * y || (y == n && x + 1 == end_x)) {
      steps += 'R';
      self(self, x + 1, y);
      steps.pop_back();
    }
  };
  descend(descend, 0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Dyck words

/// X's become n, n-1, ..., 1 left to right; the Y's likewise.
inline MultisetPermutation dyck_to_perm(const DyckWord& w) {
  const std::size_t n = w.semilength();
  Word letters;
  letters.reserve(2 * n);
  Letter next_x = static_cast<Letter>(n), next_y = static_cast<Letter>(n);
  for (char c : w.str()) letters.push_back(c == 'X' ? next_x-- : next_y--);
  MultisetPermutation sigma(std::move(letters), std::vector<std::size_t>(n, 2));
  if (!avoids_all(sigma, PatternSet::parse("112,122"))) {
    throw std::logic_error("dyck_to_perm produced " + sigma.str() + " outside S(112,122)");
  }
  return sigma;
}

/// First occurrences become X, second occurrences Y.
inline DyckWord perm_to_dyck(const MultisetPermutation& sigma, DomainCheck check = DomainCheck::On) {
  const std::size_t m = detail::require_regular(sigma);
  if (!sigma.empty() && m != 2) throw Error(ErrorKind::NotInDomain, sigma.str() + " does not have multiplicity 2");
  if (check == DomainCheck::On) detail::require_avoids(sigma, "112,122");
  std::vector<bool> seen(sigma.alphabet_size() + 1, false);
  std::string letters;
  long balance = 0;
  for (Letter x : sigma.letters()) {
    const bool first = !seen[x];
    seen[x] = true;
    letters += first ? 'X' : 'Y';
    balance += first ? 1 : -1;
    if (balance < 0) throw std::logic_error("perm_to_dyck: unbalanced prefix for " + sigma.str());
  }
  return DyckWord::parse(letters);
}

// ---------------------------------------------------------------------------
// Label sequences

/// First-ascent labels of the restrictions to letters <= k, k = 0..n.
inline LabelSequence perm_to_labels(const MultisetPermutation& sigma, DomainCheck check = DomainCheck::On) {
  const std::size_t m = detail::require_regular(sigma);
  if (sigma.empty()) throw Error(ErrorKind::NotInDomain, "the multiplicity of the empty permutation is undetermined");
  if (check == DomainCheck::On) detail::require_avoids(sigma, "122,123");
  std::vector<std::int64_t> values;
  for (std::size_t k = 0; k <= sigma.alphabet_size(); ++k) {
    values.push_back(static_cast<std::int64_t>(first_ascent(restrict_to_alphabet(sigma.view(), static_cast<Letter>(k)))));
  }
  return LabelSequence(std::move(values), m);
}

/// Replays the insertion history: for parent label a and child label c,
/// m-1 copies of the new letter go in front and one copy goes before
/// parent position j, with j = 1 when c = a + m and j = c - m + 1 otherwise.
inline MultisetPermutation labels_to_perm(const LabelSequence& seq) {
  const auto& a = seq.values();
  const std::size_t m = seq.m();
  const auto M = static_cast<std::int64_t>(m);
  Word sigma;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Letter letter = static_cast<Letter>(i);
    const std::int64_t parent = a[i - 1], child = a[i];
    const std::size_t j = child == parent + M ? 1 : static_cast<std::size_t>(child - M + 1);
    Word next(m - 1, letter);
    next.insert(next.end(), sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(j - 1));
    next.push_back(letter);
    next.insert(next.end(), sigma.begin() + static_cast<std::ptrdiff_t>(j - 1), sigma.end());
    sigma = std::move(next);
  }
  return MultisetPermutation(std::move(sigma), std::vector<std::size_t>(seq.n(), m));
}

// ---------------------------------------------------------------------------
// Lattice paths P_n(1, m)

/// Records the label m*y - x + 1 of the origin and of every point reached
/// by an up-step.
inline LabelSequence path_to_labels(const LatticePath& path) {
  if (path.a() != 1) throw Error(ErrorKind::InvalidPath, "label sequences need a = 1");
  const auto M = static_cast<std::int64_t>(path.b());
  std::int64_t x = 0, y = 0;
  std::vector<std::int64_t> values{1};
  for (char c : path.str()) {
    if (c == 'R') {
      ++x;
    } else {
      ++y;
      values.push_back(M * y - x + 1);
    }
  }
  return LabelSequence(std::move(values), path.b());
}

inline LatticePath labels_to_path(const LabelSequence& seq) {
  const auto M = static_cast<std::int64_t>(seq.m());
  const auto& a = seq.values();
  std::string steps;
  std::int64_t x = 0;
  for (std::size_t level = 1; level < a.size(); ++level) {
    // The up-step into `level` lands on x = m*level + 1 - label.
    const std::int64_t target = M * static_cast<std::int64_t>(level) + 1 - a[level];
    steps.append(static_cast<std::size_t>(target - x), 'R');
    steps += 'U';
    x = target;
  }
  const std::int64_t end = 1 + M * static_cast<std::int64_t>(seq.n());
  steps.append(static_cast<std::size_t>(end - x), 'R');
  return LatticePath::parse(steps, 1, seq.m());
}

// ---------------------------------------------------------------------------
// Simion-Schmidt map

/// S_{n,m}(122,132) -> S_{n,m}(122,123): non-minima are refilled in
/// decreasing order.
inline MultisetPermutation simion_schmidt_f(const MultisetPermutation& sigma, DomainCheck check = DomainCheck::On) {
  detail::require_regular(sigma);
  if (check == DomainCheck::On) detail::require_avoids(sigma, "122,132");
  const auto minima = left_to_right_minima(sigma);
  std::vector<bool> fixed(sigma.length(), false);
  for (std::size_t pos : minima) fixed[pos - 1] = true;
  Word rest;
  for (std::size_t i = 0; i < sigma.length(); ++i)
    if (!fixed[i]) rest.push_back(sigma[i]);
  std::sort(rest.begin(), rest.end(), std::greater<>());
  Word out = sigma.letters();
  std::size_t next = 0;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!fixed[i]) out[i] = rest[next++];
  return MultisetPermutation(std::move(out), sigma.multiplicity());
}

/// S_{n,m}(122,123) -> S_{n,m}(122,132): each free position takes the
/// smallest unused letter above the nearest left-to-right minimum to its left.
inline MultisetPermutation simion_schmidt_g(const MultisetPermutation& tau, DomainCheck check = DomainCheck::On) {
  detail::require_regular(tau);
  if (check == DomainCheck::On) detail::require_avoids(tau, "122,123");
  const auto minima = left_to_right_minima(tau);
  std::vector<bool> fixed(tau.length(), false);
  for (std::size_t pos : minima) fixed[pos - 1] = true;
  std::multiset<Letter> rest;
  for (std::size_t i = 0; i < tau.length(); ++i)
    if (!fixed[i]) rest.insert(tau[i]);
  Word out = tau.letters();
  Letter current_min = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (fixed[i]) {
      current_min = out[i];
      continue;
    }
    auto it = rest.upper_bound(current_min);
    if (it == rest.end()) throw std::logic_error("simion_schmidt_g: no letter above " + std::to_string(current_min));
    out[i] = *it;
    rest.erase(it);
  }
  return MultisetPermutation(std::move(out), tau.multiplicity());
}

}  // namespace mspat
