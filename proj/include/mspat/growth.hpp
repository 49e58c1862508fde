#pragma once

// Growth probes: ratio tables, the Stirling-permutation identity, and
// pattern avoidance in words.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mspat/bigcount.hpp"
#include "mspat/classify.hpp"
#include "mspat/core.hpp"
#include "mspat/enumerate.hpp"
#include "mspat/error.hpp"
#include "mspat/formulas.hpp"

namespace mspat {

struct GrowthRow {
  std::size_t n = 0;
  std::size_t m = 0;
  BigCount count;
  /// count^(1/(n m)); display only, never compared exactly.
  double ratio = 0.0;
  std::string source;  // "formula" or "oracle"
};

inline double growth_ratio(const BigCount& count, std::size_t length) {
  if (length == 0 || count == 0) return 0.0;
  // log via mpz_get_d_2exp keeps huge counts finite.
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, count.get_mpz_t());
  const double log_count = std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
  return std::exp(log_count / static_cast<double>(length));
}

/// Exact counts for each cell: the catalog when a pair has an entry for
/// (n, m), the avoider search otherwise.
inline std::vector<GrowthRow> growth_table(const PatternSet& patterns, const std::vector<GridCell>& grid,
                                           const EnumerationOptions& options = {}) {
  std::vector<GrowthRow> rows;
  for (const GridCell& cell : grid) {
    GrowthRow row;
    row.n = cell.n;
    row.m = cell.m;
    bool done = false;
    if (patterns.size() == 2 && cell.n >= 1) {
      for (const FormulaEntry* e : catalog_entries(patterns)) {
        if (e->served && e->trust != Trust::ReportOnly && e->in_domain(cell.n, cell.m)) {
          row.count = e->evaluate(cell.n, cell.m);
          row.source = "formula";
          done = true;
          break;
        }
      }
    }
    if (!done) {
      row.count = count_avoiders(cell.n, cell.m, patterns, options);
      row.source = "oracle";
    }
    row.ratio = growth_ratio(row.count, cell.n * cell.m);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct StirlingVerdict {
  std::size_t n = 0;
  std::size_t m = 0;
  BigCount avoiders;
  BigCount formula;
  bool equal() const { return avoiders == formula; }
};

/// 212-avoiders of [n]_m against n! m^n C(n-1+1/m, n).
inline StirlingVerdict check_stirling_identity(std::size_t n, std::size_t m, const EnumerationOptions& options = {}) {
  StirlingVerdict v;
  v.n = n;
  v.m = m;
  v.avoiders = count_avoiders(n, m, PatternSet{Pattern::parse("212")}, options);
  v.formula = stirling_count(n, m);
  return v;
}

/// Words of length `length` over [n] avoiding every pattern. Letters may
/// repeat up to `length` times.
inline BigCount count_avoiding_words(std::size_t length, std::size_t n, const PatternSet& patterns) {
  if (n == 0) return BigCount(length == 0 ? 1 : 0);
  std::vector<std::size_t> cap(n, length);
  BigCount total = 0;
  Word word;
  word.reserve(length);
  auto descend = [&](auto&& self) -> void {
    if (word.size() == length) {
      ++total;
      return;
    }
    for (Letter x = 1; x <= n; ++x) {
      if (cap[x - 1] == 0) continue;
      word.push_back(x);
      bool ok = true;
      for (const Pattern& p : patterns) {
        if (ends_with_occurrence(word, p)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        --cap[x - 1];
        self(self);
        ++cap[x - 1];
      }
      word.pop_back();
    }
  };
  descend(descend);
  return total;
}

/// 12-avoiding words of length l over [n], i.e. the weakly decreasing ones.
inline BigCount word_counterexample_probe(std::size_t length, std::size_t n) {
  if (length < 1 || n < 1) throw Error(ErrorKind::OutOfDomain, "word probe needs l >= 1 and n >= 1");
  return count_avoiding_words(length, n, PatternSet{Pattern::parse("12")});
}

}  // namespace mspat
