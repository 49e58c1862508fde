#pragma once

// Symmetry classes of pattern pairs and empirical Wilf grouping.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mspat/bigcount.hpp"
#include "mspat/core.hpp"
#include "mspat/enumerate.hpp"

namespace mspat {

/// Orbit of a pattern set under reverse, complement and their composition,
/// applied to every member at once.
struct PatternPairClass {
  PatternSet representative;
  std::vector<PatternSet> members;  // sorted, representative first
};

inline PatternPairClass symmetry_closure(const PatternSet& pair) {
  PatternPairClass out;
  for (Symmetry s : kAllSymmetries) out.members.push_back(symmetry(pair, s));
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  out.representative = out.members.front();
  return out;
}

inline PatternSet canonical_representative(const PatternSet& pair) { return symmetry_closure(pair).representative; }

/// Reduced words of length 3 in lexicographic order, optionally with 111.
inline std::vector<Pattern> length3_patterns(bool include_111 = false) {
  std::vector<Pattern> out;
  for (Letter a = 1; a <= 3; ++a)
    for (Letter b = 1; b <= 3; ++b)
      for (Letter c = 1; c <= 3; ++c) {
        const Word w{a, b, c};
        if (reduce_word(w) != w) continue;
        if (!include_111 && a == 1 && b == 1 && c == 1) continue;
        out.push_back(Pattern::normalize(w));
      }
  return out;
}

inline std::vector<PatternSet> all_length3_pairs() {
  const auto patterns = length3_patterns(false);
  std::vector<PatternSet> out;
  for (std::size_t i = 0; i < patterns.size(); ++i)
    for (std::size_t j = i + 1; j < patterns.size(); ++j) out.push_back(PatternSet{patterns[i], patterns[j]});
  return out;
}

/// The 66 unordered pairs of distinct length-3 patterns (111 excluded)
/// grouped into symmetry classes, ordered by representative.
inline std::vector<PatternPairClass> classify_all_length3() {
  std::map<PatternSet, PatternPairClass> classes;
  for (const PatternSet& pair : all_length3_pairs()) {
    PatternPairClass c = symmetry_closure(pair);
    classes.emplace(c.representative, std::move(c));
  }
  std::vector<PatternPairClass> out;
  for (auto& [rep, c] : classes) out.push_back(std::move(c));
  return out;
}

struct GridCell {
  std::size_t n = 0;
  std::size_t m = 0;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// Cells with 1 <= n <= n_max, m_min <= m <= m_max and n*m <= max_length.
inline std::vector<GridCell> make_grid(std::size_t n_max, std::size_t m_min, std::size_t m_max,
                                       std::size_t max_length) {
  std::vector<GridCell> out;
  for (std::size_t m = m_min; m <= m_max; ++m)
    for (std::size_t n = 1; n <= n_max; ++n)
      if (n * m <= max_length) out.push_back({n, m});
  return out;
}

struct CountVectorLess {
  bool operator()(const std::vector<BigCount>& a, const std::vector<BigCount>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const BigCount& x, const BigCount& y) { return cmp(x, y) < 0; });
  }
};

struct WilfGroup {
  std::vector<BigCount> counts;  // one per grid cell
  std::vector<PatternPairClass> classes;
};

/// Groups classes whose representatives have identical oracle counts on
/// `grid`. Equality on a finite grid is evidence, not a proof.
inline std::vector<WilfGroup> empirical_wilf_classes(const std::vector<PatternPairClass>& classes,
                                                     const std::vector<GridCell>& grid,
                                                     const EnumerationOptions& options = {}) {
  std::map<std::vector<BigCount>, std::vector<PatternPairClass>, CountVectorLess> groups;
  for (const auto& c : classes) {
    std::vector<BigCount> counts;
    for (const GridCell& cell : grid) counts.push_back(count_avoiders(cell.n, cell.m, c.representative, options));
    groups[counts].push_back(c);
  }
  std::vector<WilfGroup> out;
  for (auto& [counts, members] : groups) out.push_back({counts, members});
  return out;
}

inline std::vector<WilfGroup> empirical_wilf_classes(const std::vector<GridCell>& grid,
                                                     const EnumerationOptions& options = {}) {
  return empirical_wilf_classes(classify_all_length3(), grid, options);
}

}  // namespace mspat
