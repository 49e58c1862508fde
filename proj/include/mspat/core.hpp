#pragma once

// Multiset permutations, patterns, containment with repeated letters,
// the reverse/complement symmetries and the positional statistics that
// label the generating trees.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mspat/error.hpp"

namespace mspat {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// ---------------------------------------------------------------------------
// Text encoding

/// Parses "11242334" (digits, alphabet <= 9) or "1,10,2" / "1 10 2".
inline Word parse_word(std::string_view text, ErrorKind on_error = ErrorKind::InvalidPermutation) {
  Word out;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(on_error, "unexpected character '" + std::string(1, c) + "'");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    if (i == text.size()) break;
    Letter value = 0;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + static_cast<Letter>(text[i] - '0');
      ++i;
      ++digits;
    }
    if (digits == 0) {
      throw Error(on_error, "unexpected character '" + std::string(1, text[i]) + "'");
    }
    out.push_back(value);
  }
  return out;
}

/// Compact digit string when every letter is <= 9, comma separated otherwise.
inline std::string format_word(std::span<const Letter> word) {
  const bool compact = std::all_of(word.begin(), word.end(), [](Letter x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MultisetPermutation

/// A sequence over [n] in which letter i occurs exactly mu(i) >= 1 times.
class MultisetPermutation {
 public:
  MultisetPermutation() = default;

  /// Infers n as the largest letter; every letter in [n] must occur.
  static MultisetPermutation from_letters(Word letters) {
    Letter n = 0;
    for (Letter x : letters) {
      if (x == 0) throw Error(ErrorKind::InvalidPermutation, "letters must be positive");
      n = std::max(n, x);
    }
    std::vector<std::size_t> mu(n, 0);
    for (Letter x : letters) ++mu[x - 1];
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] == 0) {
        throw Error(ErrorKind::InvalidPermutation,
                    "letter " + std::to_string(i + 1) + " is missing from " + format_word(letters));
      }
    }
    MultisetPermutation out;
    out.letters_ = std::move(letters);
    out.multiplicity_ = std::move(mu);
    return out;
  }

  static MultisetPermutation parse(std::string_view text) { return from_letters(parse_word(text)); }

  /// Checks the letters against an explicit multiplicity vector.
  MultisetPermutation(Word letters, std::vector<std::size_t> multiplicity)
      : letters_(std::move(letters)), multiplicity_(std::move(multiplicity)) {
    std::vector<std::size_t> seen(multiplicity_.size(), 0);
    for (Letter x : letters_) {
      if (x == 0 || x > multiplicity_.size()) {
        throw Error(ErrorKind::InvalidPermutation, "letter " + std::to_string(x) + " outside the alphabet");
      }
      ++seen[x - 1];
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (multiplicity_[i] == 0 || seen[i] != multiplicity_[i]) {
        throw Error(ErrorKind::InvalidPermutation,
                    "letter " + std::to_string(i + 1) + " occurs " + std::to_string(seen[i]) +
                        " times, expected " + std::to_string(multiplicity_[i]));
      }
    }
  }

  const Word& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t alphabet_size() const noexcept { return multiplicity_.size(); }
  const std::vector<std::size_t>& multiplicity() const noexcept { return multiplicity_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// The common multiplicity m when the multiset is [n]_m.
  std::optional<std::size_t> regular_multiplicity() const {
    if (multiplicity_.empty()) return std::nullopt;
    const std::size_t m = multiplicity_.front();
    for (std::size_t x : multiplicity_) {
      if (x != m) return std::nullopt;
    }
    return m;
  }

  bool is_regular(std::size_t m) const {
    if (multiplicity_.empty()) return true;
    auto r = regular_multiplicity();
    return r && *r == m;
  }

  std::string str() const { return format_word(letters_); }

  friend bool operator==(const MultisetPermutation&, const MultisetPermutation&) = default;
  friend auto operator<=>(const MultisetPermutation& a, const MultisetPermutation& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  Word letters_;
  std::vector<std::size_t> multiplicity_;
};

// ---------------------------------------------------------------------------
// Patterns

/// Relabels a word so that its value set becomes [k], keeping order and ties.
inline Word reduce_word(std::span<const Letter> raw) {
  Word values(raw.begin(), raw.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Word out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    out.push_back(static_cast<Letter>(std::lower_bound(values.begin(), values.end(), x) - values.begin() + 1));
  }
  return out;
}

/// A forbidden pattern in reduced form (value set [k]).
class Pattern {
 public:
  static Pattern normalize(std::span<const Letter> raw) {
    if (raw.empty()) throw Error(ErrorKind::InvalidPattern, "pattern must be nonempty");
    Pattern p;
    p.letters_ = reduce_word(raw);
    return p;
  }

  static Pattern parse(std::string_view text) { return normalize(parse_word(text, ErrorKind::InvalidPattern)); }

  const Word& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter max_letter() const { return *std::max_element(letters_.begin(), letters_.end()); }

  /// All letters distinct.
  bool is_ordinary() const { return max_letter() == letters_.size(); }

  std::string str() const { return format_word(letters_); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.letters_ <=> b.letters_; }

 private:
  Word letters_;
};

inline Pattern normalize_pattern(std::span<const Letter> raw) { return Pattern::normalize(raw); }

/// Deduplicated, sorted set of patterns.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> patterns) : patterns_(patterns) { canonicalize(); }
  explicit PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) { canonicalize(); }

  /// "122,123" or "122 123"; an empty string gives the empty set.
  static PatternSet parse(std::string_view text) {
    std::vector<Pattern> out;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == ';')) ++i;
      const std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ' ' && text[i] != ';') ++i;
      if (i > start) out.push_back(Pattern::parse(text.substr(start, i - start)));
    }
    return PatternSet(std::move(out));
  }

  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }
  const Pattern& operator[](std::size_t i) const { return patterns_[i]; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (i) out += ',';
      out += patterns_[i].str();
    }
    return out;
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
  friend auto operator<=>(const PatternSet& a, const PatternSet& b) { return a.patterns_ <=> b.patterns_; }

 private:
  void canonicalize() {
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  }

  std::vector<Pattern> patterns_;
};

// ---------------------------------------------------------------------------
// Containment

namespace detail {

constexpr int compare3(Letter a, Letter b) { return (a > b) - (a < b); }

// Chosen positions [0, depth) are consistent; try to extend to the full pattern.
inline bool extend_occurrence(std::span<const Letter> word, const Word& pi, std::vector<std::size_t>& chosen,
                              std::size_t next_position, std::size_t last_limit) {
  const std::size_t depth = chosen.size();
  if (depth == pi.size()) return true;
  const std::size_t remaining = pi.size() - depth;
  for (std::size_t pos = next_position; pos + remaining <= last_limit; ++pos) {
    bool ok = true;
    for (std::size_t a = 0; a < depth && ok; ++a) {
      ok = compare3(word[chosen[a]], word[pos]) == compare3(pi[a], pi[depth]);
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (extend_occurrence(word, pi, chosen, pos + 1, last_limit)) return true;
    chosen.pop_back();
  }
  return false;
}

inline bool matches3(Letter x, Letter y, Letter z, const Word& pi) {
  return compare3(x, y) == compare3(pi[0], pi[1]) && compare3(x, z) == compare3(pi[0], pi[2]) &&
         compare3(y, z) == compare3(pi[1], pi[2]);
}

}  // namespace detail

/// Indices (0-based) of the first occurrence of `pi` in `word`, if any.
/// Equal pattern letters must map to equal word letters and distinct
/// pattern letters to distinct word letters in the same order.
inline std::optional<std::vector<std::size_t>> find_occurrence(std::span<const Letter> word, const Pattern& pi) {
  const Word& p = pi.letters();
  const std::size_t l = word.size();
  if (l < p.size()) return std::nullopt;
  if (p.size() == 3) {
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j)
        for (std::size_t k = j + 1; k < l; ++k)
          if (detail::matches3(word[i], word[j], word[k], p)) return std::vector<std::size_t>{i, j, k};
    return std::nullopt;
  }
  std::vector<std::size_t> chosen;
  chosen.reserve(p.size());
  if (detail::extend_occurrence(word, p, chosen, 0, l)) return chosen;
  return std::nullopt;
}

inline bool contains(std::span<const Letter> word, const Pattern& pi) {
  return find_occurrence(word, pi).has_value();
}

inline bool contains(const MultisetPermutation& sigma, const Pattern& pi) { return contains(sigma.view(), pi); }

/// True iff some occurrence of `pi` uses the last letter of `word`.
/// Used to re-test a prefix after appending one letter.
inline bool ends_with_occurrence(std::span<const Letter> word, const Pattern& pi) {
  const Word& p = pi.letters();
  const std::size_t l = word.size();
  if (l < p.size() || l == 0) return false;
  const Letter last = word[l - 1];
  if (p.size() == 1) return true;
  if (p.size() == 3) {
    const int rel02 = detail::compare3(p[0], p[2]);
    const int rel12 = detail::compare3(p[1], p[2]);
    const int rel01 = detail::compare3(p[0], p[1]);
    for (std::size_t j = 1; j + 1 < l; ++j) {
      if (detail::compare3(word[j], last) != rel12) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (detail::compare3(word[i], last) == rel02 && detail::compare3(word[i], word[j]) == rel01) return true;
      }
    }
    return false;
  }
  // General length: fix the last pattern letter on the last position.
  std::vector<std::size_t> chosen;
  chosen.reserve(p.size());
  struct Search {
    std::span<const Letter> word;
    const Word& p;
    Letter last;
    std::vector<std::size_t>& chosen;
    bool run(std::size_t next) {
      const std::size_t depth = chosen.size();
      if (depth + 1 == p.size()) return true;
      const std::size_t remaining = p.size() - 1 - depth;
      for (std::size_t pos = next; pos + remaining <= word.size() - 1; ++pos) {
        if (detail::compare3(word[pos], last) != detail::compare3(p[depth], p.back())) continue;
        bool ok = true;
        for (std::size_t a = 0; a < depth && ok; ++a) {
          ok = detail::compare3(word[chosen[a]], word[pos]) == detail::compare3(p[a], p[depth]);
        }
        if (!ok) continue;
        chosen.push_back(pos);
        if (run(pos + 1)) return true;
        chosen.pop_back();
      }
      return false;
    }
  };
  return Search{word, p, last, chosen}.run(0);
}

inline bool avoids_all(std::span<const Letter> word, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Pattern& p) { return contains(word, p); });
}

inline bool avoids_all(const MultisetPermutation& sigma, const PatternSet& patterns) {
  return avoids_all(sigma.view(), patterns);
}

// ---------------------------------------------------------------------------
// Symmetries

enum class Symmetry { Identity, Reverse, Complement, ReverseComplement };

inline constexpr Symmetry kAllSymmetries[] = {Symmetry::Identity, Symmetry::Reverse, Symmetry::Complement,
                                              Symmetry::ReverseComplement};

namespace detail {

inline Word apply_symmetry(std::span<const Letter> word, Letter k, Symmetry which) {
  Word out(word.begin(), word.end());
  if (which == Symmetry::Complement || which == Symmetry::ReverseComplement) {
    for (Letter& x : out) x = k + 1 - x;
  }
  if (which == Symmetry::Reverse || which == Symmetry::ReverseComplement) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Reverse reads right to left; complement maps i to n-i+1 and is only
/// offered on regular multisets, where it stays inside [n]_m.
inline MultisetPermutation symmetry(const MultisetPermutation& sigma, Symmetry which) {
  const bool complements = which == Symmetry::Complement || which == Symmetry::ReverseComplement;
  if (complements && !sigma.empty() && !sigma.regular_multiplicity()) {
    throw Error(ErrorKind::UnsupportedSymmetry, "complement of a permutation on a non-regular multiset");
  }
  return MultisetPermutation(detail::apply_symmetry(sigma.view(), static_cast<Letter>(sigma.alphabet_size()), which),
                             sigma.multiplicity());
}

inline Pattern symmetry(const Pattern& pi, Symmetry which) {
  return Pattern::normalize(detail::apply_symmetry(pi.letters(), pi.max_letter(), which));
}

inline PatternSet symmetry(const PatternSet& set, Symmetry which) {
  std::vector<Pattern> out;
  for (const Pattern& p : set) out.push_back(symmetry(p, which));
  return PatternSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Statistics. Positions are 1-based; a missing event is reported as length+1
// and the empty word reports 1.

inline std::size_t first_repetition(std::span<const Letter> word) {
  if (word.empty()) return 1;
  std::vector<bool> seen;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= seen.size()) seen.resize(word[i] + 1, false);
    if (seen[word[i]]) return i + 1;
    seen[word[i]] = true;
  }
  return word.size() + 1;
}

/// Smallest i >= 2 with word[i-1] < word[i] (strict).
inline std::size_t first_ascent(std::span<const Letter> word) {
  if (word.empty()) return 1;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] < word[i]) return i + 1;
  return word.size() + 1;
}

/// Smallest i >= 2 with word[i-1] > word[i] (strict).
inline std::size_t first_descent(std::span<const Letter> word) {
  if (word.empty()) return 1;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] > word[i]) return i + 1;
  return word.size() + 1;
}

/// Position of the (m-1)-th occurrence of the largest letter n in a
/// permutation of [n]_m; 0 for the empty word and for m = 1.
inline std::size_t largest_letter_occurrence(const MultisetPermutation& sigma) {
  if (sigma.empty()) return 0;
  const auto m = sigma.regular_multiplicity();
  if (!m) throw Error(ErrorKind::UnsupportedStatistic, "o is defined on regular multisets only");
  if (*m == 1) return 0;
  const Letter n = static_cast<Letter>(sigma.alphabet_size());
  std::size_t seen = 0;
  for (std::size_t i = 0; i < sigma.length(); ++i) {
    if (sigma[i] == n && ++seen == *m - 1) return i + 1;
  }
  return 0;  // unreachable for a valid permutation
}

struct Statistics {
  std::size_t first_repetition = 1;
  std::size_t first_ascent = 1;
  std::size_t first_descent = 1;
  std::optional<std::size_t> largest_occurrence;

  std::size_t occurrence() const {
    if (!largest_occurrence) throw Error(ErrorKind::UnsupportedStatistic, "o is defined on regular multisets only");
    return *largest_occurrence;
  }
};

inline Statistics statistics(const MultisetPermutation& sigma) {
  Statistics s;
  s.first_repetition = first_repetition(sigma.view());
  s.first_ascent = first_ascent(sigma.view());
  s.first_descent = first_descent(sigma.view());
  if (sigma.empty() || sigma.regular_multiplicity()) s.largest_occurrence = largest_letter_occurrence(sigma);
  return s;
}

/// 1-based positions i with word[i] <= word[j] for all j < i.
inline std::vector<std::size_t> left_to_right_minima(std::span<const Letter> word) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (out.empty() || word[i] <= word[out.back() - 1]) out.push_back(i + 1);
  }
  return out;
}

inline std::vector<std::size_t> left_to_right_minima(const MultisetPermutation& sigma) {
  return left_to_right_minima(sigma.view());
}

/// Subsequence of letters <= k, order preserved.
inline Word restrict_to_alphabet(std::span<const Letter> word, Letter k) {
  Word out;
  for (Letter x : word)
    if (x <= k) out.push_back(x);
  return out;
}

}  // namespace mspat
