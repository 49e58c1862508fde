#pragma once

// Exact evaluators for the closed formulas, recurrences and Binet-style
// expressions, plus the catalog that dispatches on the symmetry class of
// a pattern pair.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mspat/bigcount.hpp"
#include "mspat/classify.hpp"
#include "mspat/core.hpp"
#include "mspat/error.hpp"
#include "mspat/quadratic.hpp"

namespace mspat {

// ---------------------------------------------------------------------------
// Number sequences

inline BigCount catalan(std::size_t n) { return binomial(2 * n, n) / BigCount(n + 1); }

/// c_{n,m} = C((m+1)n, n) / (mn + 1).
inline BigCount generalized_catalan(std::size_t n, std::size_t m) {
  return binomial((m + 1) * n, n) / BigCount(m * n + 1);
}

/// A_n(a,b) = a/(a+bn) * C(a+bn, n).
inline BigCount rothe(std::size_t a, std::size_t b, std::size_t n) {
  if (a == 0 || b == 0) throw Error(ErrorKind::OutOfDomain, "rothe numbers need a, b >= 1");
  const std::size_t top = a + b * n;
  return BigCount(a) * binomial(top, n) / BigCount(top);
}

/// n! m^n C(n - 1 + 1/m, n), the m-Stirling permutation count.
inline BigCount stirling_count(std::size_t n, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::OutOfDomain, "m must be >= 1");
  Rational generalized_binomial = 1;
  const Rational top = Rational(static_cast<long>(n) - 1) + Rational(1, m);
  for (std::size_t k = 0; k < n; ++k) {
    generalized_binomial *= (top - Rational(static_cast<long>(k))) / Rational(static_cast<long>(n - k));
  }
  Rational value = Rational(factorial(n) * power(BigCount(m), n)) * generalized_binomial;
  value.canonicalize();
  if (value.get_den() != 1 || value < 0) throw Error(ErrorKind::ArithmeticBug, "stirling count " + value.get_str());
  return value.get_num();
}

// ---------------------------------------------------------------------------
// Recurrences and their explicit forms

enum class RecurrenceFamily {
  Pair211_213,  // s(n) = 2 s(n-1) + s(n-2)
  Pair122_213,  // s(n) = m s(n-1) + s(n-2)
};

namespace detail {

inline const PatternSet& pair_211_213() {
  static const PatternSet p = PatternSet::parse("211,213");
  return p;
}
inline const PatternSet& pair_122_213() {
  static const PatternSet p = PatternSet::parse("122,213");
  return p;
}

inline RecurrenceFamily recurrence_family(const PatternSet& pair) {
  const PatternSet rep = canonical_representative(pair);
  if (rep == canonical_representative(pair_211_213())) return RecurrenceFamily::Pair211_213;
  if (rep == canonical_representative(pair_122_213())) return RecurrenceFamily::Pair122_213;
  throw Error(ErrorKind::Unsupported, "no recurrence is known for {" + pair.str() + "}");
}

inline void check_recurrence_domain(std::size_t n, std::size_t m) {
  if (n < 1 || m < 2) {
    throw Error(ErrorKind::OutOfDomain, "recurrence is valid for n >= 1, m >= 2 (got n=" + std::to_string(n) +
                                            ", m=" + std::to_string(m) + ")");
  }
}

}  // namespace detail

/// Iterates the linear recurrence from s(1) = 1, s(2) = m + 1.
inline BigCount recurrence_count(RecurrenceFamily family, std::size_t n, std::size_t m) {
  detail::check_recurrence_domain(n, m);
  const BigCount factor = family == RecurrenceFamily::Pair211_213 ? BigCount(2) : BigCount(m);
  BigCount previous = 1;       // s(1)
  BigCount current = m + 1;    // s(2)
  if (n == 1) return previous;
  for (std::size_t k = 3; k <= n; ++k) {
    BigCount next = factor * current + previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

inline BigCount recurrence_count(const PatternSet& pair, std::size_t n, std::size_t m) {
  return recurrence_count(detail::recurrence_family(pair), n, m);
}

/// Binet-style evaluation in exact quadratic arithmetic.
///   (211,213): 1/4 [(2 - m r2)(1 - r2)^{n-1} + (2 + m r2)(1 + r2)^{n-1}],  r2 = sqrt 2
///   (122,213): 2^{-n}/rD [(2 + rD + m)(m + rD)^{n-1} - (2 - rD + m)(m - rD)^{n-1}],  rD = sqrt(m^2+4)
inline QuadraticInteger explicit_value(RecurrenceFamily family, std::size_t n, std::size_t m) {
  detail::check_recurrence_domain(n, m);
  const Rational mq(static_cast<long>(m));
  if (family == RecurrenceFamily::Pair211_213) {
    const BigCount d = 2;
    const QuadraticInteger plus(2, mq, d);   // 2 + m sqrt2
    const QuadraticInteger base(1, 1, d);    // 1 + sqrt2
    const QuadraticInteger sum = plus * base.pow(n - 1) + plus.conjugate() * base.conjugate().pow(n - 1);
    return sum / Rational(4);
  }
  const BigCount d = BigCount(m * m + 4);
  const QuadraticInteger lead(mq + 2, 1, d);  // 2 + m + rD
  const QuadraticInteger base(mq, 1, d);      // m + rD
  const QuadraticInteger difference = lead * base.pow(n - 1) - lead.conjugate() * base.conjugate().pow(n - 1);
  // divide by rD: x / rD = x rD / D
  QuadraticInteger value = difference * QuadraticInteger::root(d) / Rational(d);
  return value / Rational(power(BigCount(2), n));
}

inline BigCount explicit_count(RecurrenceFamily family, std::size_t n, std::size_t m) {
  return explicit_value(family, n, m).to_count();
}

inline BigCount explicit_count(const PatternSet& pair, std::size_t n, std::size_t m) {
  return explicit_count(detail::recurrence_family(pair), n, m);
}

// ---------------------------------------------------------------------------
// Catalog

enum class Trust { ProvedHere, Imported, ReportOnly };

constexpr std::string_view to_string(Trust t) {
  switch (t) {
    case Trust::ProvedHere: return "proved-here";
    case Trust::Imported: return "imported";
    case Trust::ReportOnly: return "report-only";
  }
  return "unknown";
}

struct FormulaEntry {
  PatternSet pair;            // pair as conventionally named
  PatternSet representative;  // lexicographically least member of its class
  std::string formula;
  std::string provenance;
  Trust trust = Trust::Imported;
  /// False for rows kept only for the report: closed_count never returns them.
  bool served = true;
  std::string validity;
  std::function<bool(std::size_t n, std::size_t m)> in_domain;
  std::function<BigCount(std::size_t n, std::size_t m)> evaluate;
};

/// Pairs with no closed formula in the catalog.
struct UnsupportedEntry {
  PatternSet pair;
  PatternSet representative;
  std::string reason;
};

namespace detail {

inline FormulaEntry entry(std::string_view pair, std::string formula, std::string provenance, Trust trust,
                          std::string validity, std::function<bool(std::size_t, std::size_t)> in_domain,
                          std::function<BigCount(std::size_t, std::size_t)> evaluate) {
  FormulaEntry e;
  e.pair = PatternSet::parse(pair);
  e.representative = canonical_representative(e.pair);
  e.formula = std::move(formula);
  e.provenance = std::move(provenance);
  e.trust = trust;
  e.validity = std::move(validity);
  e.in_domain = std::move(in_domain);
  e.evaluate = std::move(evaluate);
  return e;
}

inline bool multiset_domain(std::size_t n, std::size_t m) { return n >= 1 && m >= 2; }
inline bool ordinary_domain(std::size_t n, std::size_t m) { return n >= 1 && m == 1; }

inline BigCount pow2(std::size_t e) { return power(BigCount(2), e); }

// Sum_{j=0}^{n} C(n,j) C(n+(m-1)j-1, n-j) / (n+1-j)
inline BigCount kuba_panholzer_sum(std::size_t n, std::size_t m) {
  Rational total = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t top = n + (m - 1) * j;  // n + (m-1)j - 1 >= 0 for n >= 1
    total += Rational(binomial(n, j) * binomial(top - 1, n - j)) / Rational(static_cast<long>(n + 1 - j));
  }
  total.canonicalize();
  if (total.get_den() != 1) throw Error(ErrorKind::ArithmeticBug, "non-integral sum " + total.get_str());
  return total.get_num();
}

inline std::vector<FormulaEntry> build_catalog() {
  std::vector<FormulaEntry> c;
  const auto md = multiset_domain;
  const std::string md_text = "n >= 1, m >= 2";
  const auto md2 = [](std::size_t n, std::size_t m) { return n >= 2 && m >= 2; };

  // Results proved with generating trees, bijections and direct arguments.
  c.push_back(entry("112,122", "2^(n-1) for m >= 3; c_n for m = 2", "generating tree r -> 2..r+1 (m = 2); two insertion sites (m >= 3)",
                    Trust::ProvedHere, md_text, md, [](std::size_t n, std::size_t m) -> BigCount {
                      return m == 2 ? catalan(n) : pow2(n - 1);
                    }));
  c.push_back(entry("122,123", "c_{n,m}", "generating tree a -> m+a, m+1..m+a-1; lattice paths P_n(1,m)", Trust::ProvedHere,
                    md_text, md, [](std::size_t n, std::size_t m) -> BigCount { return generalized_catalan(n, m); }));
  c.push_back(entry("122,132", "c_{n,m}", "Simion-Schmidt map onto (122,123)", Trust::ProvedHere, md_text, md,
                    [](std::size_t n, std::size_t m) -> BigCount { return generalized_catalan(n, m); }));
  c.push_back(entry("211,213", "s(n) = 2 s(n-1) + s(n-2), s(1) = 1, s(2) = m+1", "generating tree (1)->(2), (2)->(2)(1)N^(m-2)(2)",
                    Trust::ProvedHere, md_text, md, [](std::size_t n, std::size_t m) -> BigCount {
                      return explicit_count(RecurrenceFamily::Pair211_213, n, m);
                    }));
  c.push_back(entry("122,213", "s(n) = m s(n-1) + s(n-2), s(1) = 1, s(2) = m+1", "generating tree labelled by first descent",
                    Trust::ProvedHere, md_text, md, [](std::size_t n, std::size_t m) -> BigCount {
                      return explicit_count(RecurrenceFamily::Pair122_213, n, m);
                    }));
  c.push_back(entry("122,312", "(n-1) m + 1", "decreasing tail with one free n", Trust::ProvedHere, md_text, md,
                    [](std::size_t n, std::size_t m) -> BigCount { return BigCount((n - 1) * m + 1); }));
  c.push_back(entry("122,321", "1 (n = 1), m+1 (n = 2), 0 (n >= 3)", "forced n(n-1)(n-2) subsequence", Trust::ProvedHere, md_text,
                    md, [](std::size_t n, std::size_t m) -> BigCount {
                      return n == 1 ? BigCount(1) : n == 2 ? BigCount(m + 1) : BigCount(0);
                    }));
  // 111 together with anything: every permutation of [n]_m contains 111 once m >= 3.
  for (const Pattern& p : length3_patterns(false)) {
    c.push_back(entry("111," + p.str(), "0", "111 occurs in every permutation when m >= 3", Trust::ProvedHere, "n >= 1, m >= 3",
                      [](std::size_t n, std::size_t m) { return n >= 1 && m >= 3; },
                      [](std::size_t, std::size_t) -> BigCount { return BigCount(0); }));
  }

  // Multiset-pattern pairs and Kuba-Panholzer pairs from the literature.
  c.push_back(entry("212,221", "1", "Heubach-Mansour", Trust::Imported, md_text, md,
                    [](std::size_t, std::size_t) -> BigCount { return BigCount(1); }));
  c.push_back(entry("212,121", "n!", "Heubach-Mansour", Trust::Imported, md_text, md,
                    [](std::size_t n, std::size_t) -> BigCount { return factorial(n); }));
  c.push_back(entry("122,121", "c_n", "Heubach-Mansour", Trust::Imported, md_text, md,
                    [](std::size_t n, std::size_t) -> BigCount { return catalan(n); }));
  // The two zero rows hold from n = 2 on; 1^m avoids both pairs.
  c.push_back(entry("122,211", "0", "Heubach-Mansour", Trust::Imported, "n >= 2, m >= 2", md2,
                    [](std::size_t, std::size_t) -> BigCount { return BigCount(0); }));
  c.push_back(entry("122,221", "1 (m = 2), 0 (m >= 3)", "Heubach-Mansour", Trust::Imported, "n >= 2, m >= 2", md2,
                    [](std::size_t, std::size_t m) -> BigCount { return BigCount(m == 2 ? 1 : 0); }));
  c.push_back(entry("212,123", "sum_j C(n,j) C(n+(m-1)j-1, n-j) / (n+1-j)", "Kuba-Panholzer", Trust::Imported, md_text, md,
                    kuba_panholzer_sum));
  // Attributed to (212,132), whose class the oracle counts as 1, 3, 10, 37, ...
  // at m = 2; the sequence belongs to the class of (212,213).
  c.push_back(entry("212,132", "c_{n,m}", "Kuba-Panholzer c_{n,m}", Trust::ReportOnly, md_text, md,
                    [](std::size_t n, std::size_t m) -> BigCount { return generalized_catalan(n, m); }));
  c.back().served = false;
  c.push_back(entry("212,213", "c_{n,m}", "Kuba-Panholzer c_{n,m} row, matched to this class by the oracle", Trust::Imported,
                    md_text, md, [](std::size_t n, std::size_t m) -> BigCount { return generalized_catalan(n, m); }));

  // Ordinary pairs: summary rows whose validity range is not stated.
  c.push_back(entry("123,231", "C(nm, m) + C(n-1, 2) m^2", "Albert et al.", Trust::ReportOnly, md_text, md,
                    [](std::size_t n, std::size_t m) -> BigCount {
                      return binomial(n * m, m) + binomial(n - 1, 2) * BigCount(m * m);
                    }));
  c.push_back(entry("123,321", "1 (n = 1), C(2m, m) (n = 2), (m+1)^2 c_m (n = 3), 2(m+1) c_m (n = 4), 0 (n >= 5)",
                    "Albert et al.; n <= 2 added here", Trust::ReportOnly, md_text, md, [](std::size_t n, std::size_t m) -> BigCount {
                      switch (n) {
                        case 1: return BigCount(1);
                        case 2: return binomial(2 * m, m);
                        case 3: return BigCount((m + 1) * (m + 1)) * catalan(m);
                        case 4: return BigCount(2 * (m + 1)) * catalan(m);
                        default: return BigCount(0);
                      }
                    }));
  c.push_back(entry("132,231", "c_m (m+1)^(n-2)", "Albert et al.", Trust::ReportOnly, "n >= 2, m >= 2",
                    [](std::size_t n, std::size_t m) { return n >= 2 && m >= 2; },
                    [](std::size_t n, std::size_t m) -> BigCount { return catalan(m) * power(BigCount(m + 1), n - 2); }));
  // The oracle gives c_m (m+1)^(n-1) on every tested cell.
  c.back().served = false;
  c.push_back(entry("132,312", "sum_{i=1}^{n-1} C(mn, mi) - sum_{i=1}^{n-2} C(mn-m, mi)", "Albert et al.", Trust::ReportOnly,
                    "n >= 2, m >= 2", md2, [](std::size_t n, std::size_t m) -> BigCount {
                      BigCount total = 0;
                      for (std::size_t i = 1; i + 1 <= n; ++i) total += binomial(m * n, m * i);
                      for (std::size_t i = 1; i + 2 <= n; ++i) total -= binomial(m * n - m, m * i);
                      return total;
                    }));

  // m = 1: ordinary permutations.
  const std::string od_text = "n >= 1, m = 1";
  for (std::string_view pair : {"123,132", "132,213", "132,231", "132,312"}) {
    c.push_back(entry(pair, "2^(n-1)", "Simion-Schmidt", Trust::Imported, od_text, ordinary_domain,
                      [](std::size_t n, std::size_t) -> BigCount { return pow2(n - 1); }));
  }
  c.push_back(entry("123,231", "C(n, 2) + 1", "Simion-Schmidt", Trust::Imported, od_text, ordinary_domain,
                    [](std::size_t n, std::size_t) -> BigCount { return binomial(n, 2) + 1; }));
  c.push_back(entry("123,321", "1, 2, 4, 4 for n = 1..4; 0 for n >= 5", "Erdos-Szekeres / Simion-Schmidt", Trust::Imported, od_text,
                    ordinary_domain, [](std::size_t n, std::size_t) -> BigCount {
                      static const unsigned small[] = {1, 1, 2, 4, 4};
                      return BigCount(n <= 4 ? small[n] : 0);
                    }));
  // A pattern with a repeated letter never occurs in an ordinary permutation.
  const auto patterns = length3_patterns(true);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      const Pattern& a = patterns[i];
      const Pattern& b = patterns[j];
      if (a.is_ordinary() && b.is_ordinary()) continue;
      const std::string name = a.str() + "," + b.str();
      if (!a.is_ordinary() && !b.is_ordinary()) {
        c.push_back(entry(name, "n!", "repeated letters never occur when m = 1", Trust::Imported, od_text, ordinary_domain,
                          [](std::size_t n, std::size_t) -> BigCount { return factorial(n); }));
      } else {
        c.push_back(entry(name, "c_n", "reduces to a single ordinary pattern when m = 1", Trust::Imported, od_text,
                          ordinary_domain, [](std::size_t n, std::size_t) -> BigCount { return catalan(n); }));
      }
    }
  }

  // One entry per (class, domain): drop members of a class already covered
  // on the same domain text.
  std::vector<FormulaEntry> unique;
  for (auto& e : c) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const FormulaEntry& u) {
      return u.representative == e.representative && u.validity == e.validity;
    });
    if (!seen) unique.push_back(std::move(e));
  }
  return unique;
}

}  // namespace detail

/// Immutable after first use.
inline const std::vector<FormulaEntry>& formula_catalog() {
  static const std::vector<FormulaEntry> catalog = detail::build_catalog();
  return catalog;
}

inline const std::vector<UnsupportedEntry>& unsupported_catalog() {
  static const std::vector<UnsupportedEntry> entries = [] {
    std::vector<UnsupportedEntry> out;
    for (std::string_view pair : {"123,132", "132,213"}) {
      UnsupportedEntry e;
      e.pair = PatternSet::parse(pair);
      e.representative = canonical_representative(e.pair);
      e.reason = "no explicit formula for m >= 2, only a recursion";
      out.push_back(std::move(e));
    }
    UnsupportedEntry w;
    w.pair = PatternSet::parse("132,231");
    w.representative = canonical_representative(w.pair);
    w.reason = "the formula c_m (m+1)^(n-2) disagrees with the oracle for m >= 2";
    out.push_back(std::move(w));
    UnsupportedEntry e;
    e.pair = PatternSet::parse("121,213");
    e.representative = canonical_representative(e.pair);
    e.reason = "no formula known; c_{n,m}, attributed to (212,132), disagrees with the oracle";
    out.push_back(std::move(e));
    return out;
  }();
  return entries;
}

/// Bumped whenever an evaluator changes; keys the CLI result cache.
inline constexpr std::string_view kCatalogVersion = "1";

/// Entries covering the class of `pair`, in catalog order.
inline std::vector<const FormulaEntry*> catalog_entries(const PatternSet& pair) {
  const PatternSet rep = canonical_representative(pair);
  std::vector<const FormulaEntry*> out;
  for (const auto& e : formula_catalog())
    if (e.representative == rep) out.push_back(&e);
  return out;
}

/// Entry that evaluates the class of `pair` at (n, m), or the reason none does.
inline const FormulaEntry& find_formula(const PatternSet& pair, std::size_t n, std::size_t m) {
  const auto entries = catalog_entries(pair);
  for (const FormulaEntry* e : entries)
    if (e->served && e->in_domain(n, m)) return *e;
  const PatternSet rep = canonical_representative(pair);
  for (const auto& u : unsupported_catalog()) {
    if (u.representative == rep && m >= 2) {
      throw Error(ErrorKind::Unsupported, "{" + pair.str() + "}: " + u.reason);
    }
  }
  if (std::none_of(entries.begin(), entries.end(), [](const FormulaEntry* e) { return e->served; })) throw Error(ErrorKind::Unsupported, "{" + pair.str() + "} has no catalog formula");
  std::string domains;
  for (const FormulaEntry* e : entries)
    if (e->served) domains += (domains.empty() ? "" : " or ") + e->validity;
  std::string extra;
  if (m == 2 && std::any_of(pair.begin(), pair.end(), [](const Pattern& p) { return p.str() == "111"; })) {
    extra = "; with m = 2 the pattern 111 is avoided automatically and the count is the single-pattern count";
  }
  throw Error(ErrorKind::OutOfDomain, "{" + pair.str() + "} is covered for " + domains + " (got n=" + std::to_string(n) +
                                          ", m=" + std::to_string(m) + ")" + extra);
}

/// s_{n,m}(pair) from the catalog. For n <= 1 the count is read off the
/// single permutation (empty, or 1^m) for every cataloged class.
inline BigCount closed_count(const PatternSet& pair, std::size_t n, std::size_t m) {
  if (pair.size() != 2) throw Error(ErrorKind::Unsupported, "closed_count expects a pair of patterns");
  if (m == 0) throw Error(ErrorKind::OutOfDomain, "m must be >= 1");
  if (n == 0) {
    if (catalog_entries(pair).empty()) find_formula(pair, 1, m);  // raises Unsupported
    return BigCount(1);
  }
  if (n == 1) {
    if (catalog_entries(pair).empty()) find_formula(pair, 1, m);
    return BigCount(avoids_all(Word(m, 1), pair) ? 1 : 0);
  }
  return find_formula(pair, n, m).evaluate(n, m);
}

}  // namespace mspat
