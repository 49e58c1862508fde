// mspat: counting, verification and bijections for pattern-avoiding
// permutations of regular multisets.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "mspat/mspat.hpp"

namespace {

using namespace mspat;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitOutOfDomain = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerification = 5;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unsupported:
    case ErrorKind::UnsupportedSymmetry:
    case ErrorKind::UnsupportedStatistic:
    case ErrorKind::UnknownRule:
      return kExitUnsupported;
    case ErrorKind::OutOfDomain:
    case ErrorKind::NotInDomain:
      return kExitOutOfDomain;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ExplosionGuard:
      return kExitBudget;
    default:
      return kExitOther;
  }
}

enum class Format { Human, Csv, Records, Bfile };

/// Writes one result line in the selected format. CSV takes its header
/// from the first row's keys.
class Emitter {
 public:
  explicit Emitter(Format format) : format_(format) {}

  Format format() const { return format_; }

  void row(const Json& fields, const std::string& human, const std::string& bfile = {}) {
    switch (format_) {
      case Format::Human:
        std::cout << human << "\n";
        break;
      case Format::Records:
        std::cout << fields.dump() << "\n";
        break;
      case Format::Csv: {
        if (!header_done_) {
          std::string header;
          for (const auto& [key, value] : fields.items()) header += (header.empty() ? "" : ",") + key;
          std::cout << header << "\n";
          header_done_ = true;
        }
        std::string line;
        bool first = true;
        for (const auto& [key, value] : fields.items()) {
          if (!first) line += ",";
          first = false;
          line += csv_field(value.is_string() ? value.get<std::string>() : value.dump());
        }
        std::cout << line << "\n";
        break;
      }
      case Format::Bfile:
        if (bfile.empty()) throw Error(ErrorKind::Unsupported, "this output has no b-file form");
        std::cout << bfile << "\n";
        break;
    }
  }

 private:
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }

  Format format_;
  bool header_done_ = false;
};

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// count

const std::vector<std::string> kMethods = {"oracle", "formula", "recurrence", "explicit", "gentree"};

/// Built-in rule whose tree counts the class of `pair` at multiplicity m.
SuccessionRule rule_for_pair(const PatternSet& pair, std::size_t m) {
  const PatternSet rep = canonical_representative(pair);
  for (std::string_view name : builtin_rule_names()) {
    if (name == "112-122@m2" && m != 2) continue;
    if (name != "112-122@m2" && m < 2) continue;
    SuccessionRule rule = builtin_rule(name, m);
    const PatternSet own = canonical_representative(rule_pattern_pair(rule));
    // (122,132) is equinumerous with (122,123) through the Simion-Schmidt map.
    const bool via_map = name == "122-123" && rep == canonical_representative(PatternSet::parse("122,132"));
    if (own == rep || via_map) return rule;
  }
  throw Error(ErrorKind::Unsupported, "no generating tree for {" + pair.str() + "} at m=" + std::to_string(m));
}

struct CountContext {
  EnumerationOptions enumeration;
  std::optional<cli::ResultCache> cache;
  std::mt19937_64 rng{std::random_device{}()};
};

BigCount compute(const std::string& method, const PatternSet& pair, std::size_t n, std::size_t m,
                 const EnumerationOptions& opts) {
  if (method == "oracle") return count_avoiders(n, m, pair, opts);
  if (method == "formula") return closed_count(pair, n, m);
  if (method == "recurrence") return recurrence_count(pair, n, m);
  if (method == "explicit") return explicit_count(pair, n, m);
  if (method == "gentree") return count_at_height(rule_for_pair(pair, m), n);
  throw Error(ErrorKind::Unsupported, "unknown method '" + method + "'");
}

/// compute() behind the cache; 5% of hits are recomputed and compared.
BigCount cached_compute(CountContext& ctx, const std::string& method, const PatternSet& pair, std::size_t n,
                        std::size_t m) {
  if (!ctx.cache) return compute(method, pair, n, m, ctx.enumeration);
  const cli::CacheKey key{canonical_representative(pair).str(), n, m, method};
  if (auto hit = ctx.cache->lookup(key)) {
    if (std::bernoulli_distribution(0.05)(ctx.rng)) {
      const BigCount fresh = compute(method, pair, n, m, ctx.enumeration);
      if (fresh != *hit) {
        ctx.cache->disable("cache audit failed for {" + key.pair + "} n=" + std::to_string(n) + " m=" +
                           std::to_string(m) + " " + method);
        return fresh;
      }
    }
    return *hit;
  }
  BigCount value = compute(method, pair, n, m, ctx.enumeration);
  ctx.cache->store(key, value);
  return value;
}

struct Resolved {
  std::string method;
  BigCount count;
};

/// formula, then recurrence, then generating tree, then the oracle.
Resolved auto_count(CountContext& ctx, const PatternSet& pair, std::size_t n, std::size_t m) {
  for (const std::string method : {"formula", "recurrence", "gentree"}) {
    try {
      return {method, cached_compute(ctx, method, pair, n, m)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unsupported && e.kind() != ErrorKind::OutOfDomain) throw;
    }
  }
  return {"oracle", cached_compute(ctx, "oracle", pair, n, m)};
}

Json count_record(const PatternSet& pair, std::size_t n, std::size_t m, const std::string& method, const std::string& count) {
  return Json{{"pair", pair.str()}, {"n", n}, {"m", m}, {"method", method}, {"count", count}};
}

int run_count(Emitter& out, CountContext& ctx, const PatternSet& pair, std::size_t n, std::size_t m,
              const std::string& method, std::optional<std::size_t> n_max) {
  if (pair.size() != 2) throw Error(ErrorKind::Unsupported, "--pair expects two patterns");

  if (n_max) {  // sequence over n at fixed m
    for (std::size_t k = n; k <= *n_max; ++k) {
      Resolved r = method == "auto" ? auto_count(ctx, pair, k, m) : Resolved{method, cached_compute(ctx, method, pair, k, m)};
      const std::string v = to_string(r.count);
      out.row(count_record(pair, k, m, r.method, v), std::to_string(k) + " " + v, std::to_string(k) + " " + v);
    }
    return kExitOk;
  }

  if (method == "auto") {
    const Resolved r = auto_count(ctx, pair, n, m);
    const std::string v = to_string(r.count);
    out.row(count_record(pair, n, m, r.method, v), v, std::to_string(n) + " " + v);
    return kExitOk;
  }
  if (method != "all") {
    const std::string v = to_string(cached_compute(ctx, method, pair, n, m));
    out.row(count_record(pair, n, m, method, v), v, std::to_string(n) + " " + v);
    return kExitOk;
  }

  std::optional<BigCount> first;
  bool agree = true;
  std::size_t available = 0;
  for (const std::string& name : kMethods) {
    try {
      const BigCount v = cached_compute(ctx, name, pair, n, m);
      ++available;
      if (first && *first != v) agree = false;
      if (!first) first = v;
      out.row(count_record(pair, n, m, name, to_string(v)), name + std::string(12 - name.size(), ' ') + to_string(v));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unsupported && e.kind() != ErrorKind::OutOfDomain &&
          e.kind() != ErrorKind::BudgetExceeded) {
        throw;
      }
      Json rec = count_record(pair, n, m, name, "");
      rec["unavailable"] = e.what();
      out.row(rec, name + std::string(12 - name.size(), ' ') + "n/a (" + e.what() + ")");
    }
  }
  if (available == 0) throw Error(ErrorKind::Unsupported, "no method is available for {" + pair.str() + "}");
  const std::string verdict = agree ? "OK" : "MISMATCH";
  Json rec = count_record(pair, n, m, "verdict", first ? to_string(*first) : "");
  rec["verdict"] = verdict;
  out.row(rec, "verdict     " + verdict);
  return agree ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(Emitter& out, const std::string& suite, std::size_t n_max, std::size_t m_max) {
  VerifyOptions opt;
  opt.n_max = n_max;
  opt.m_max = m_max;
  std::vector<std::string> suites;
  if (suite == "all") {
    for (auto s : suite_names()) suites.emplace_back(s);
  } else {
    suites.push_back(suite);
  }
  const CheckLine* failure = nullptr;
  std::vector<VerifyReport> reports;
  reports.reserve(suites.size());
  for (const std::string& s : suites) {
    reports.push_back(run_suite(s, opt));
    for (const CheckLine& line : reports.back().lines) {
      out.row(Json{{"suite", s}, {"status", std::string(to_string(line.status))}, {"check", line.name}, {"detail", line.detail}},
              std::string(to_string(line.status)) + "  " + line.name + ": " + line.detail);
    }
    if (!failure) failure = reports.back().first_failure();
  }
  if (failure) {
    std::cerr << "verification failed: " << failure->name << ": " << failure->detail << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bijection

std::size_t infer_path_m(const std::string& steps) {
  std::size_t ups = 0, rights = 0;
  for (char c : steps) (c == 'U' ? ups : rights) += 1;
  if (ups == 0 || rights < 1 || (rights - 1) % ups != 0) {
    throw Error(ErrorKind::InvalidPath, "cannot infer m from " + steps + "; pass --m");
  }
  return (rights - 1) / ups;
}

int run_bijection(Emitter& out, const std::string& kind, const std::string& direction, const std::string& input,
                  std::optional<std::size_t> m) {
  const bool fwd = direction == "fwd";
  std::string result;
  if (kind == "dyck") {
    result = fwd ? dyck_to_perm(DyckWord::parse(input)).str() : perm_to_dyck(MultisetPermutation::parse(input)).str();
  } else if (kind == "labels") {
    if (fwd) {
      result = perm_to_labels(MultisetPermutation::parse(input)).str();
    } else {
      if (!m) throw Error(ErrorKind::InvalidLabelSequence, "--m is required for label sequences");
      result = labels_to_perm(LabelSequence::parse(input, *m)).str();
    }
  } else if (kind == "path") {
    if (fwd) {
      result = path_to_labels(LatticePath::parse(input, 1, m ? *m : infer_path_m(input))).str();
    } else {
      if (!m) throw Error(ErrorKind::InvalidLabelSequence, "--m is required for label sequences");
      result = labels_to_path(LabelSequence::parse(input, *m)).str();
    }
  } else {
    const auto sigma = MultisetPermutation::parse(input);
    result = fwd ? simion_schmidt_f(sigma).str() : simion_schmidt_g(sigma).str();
  }
  out.row(Json{{"kind", kind}, {"direction", direction}, {"input", input}, {"output", result}}, result);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify, table, catalog

std::string trust_summary(const PatternSet& rep) {
  std::string s;
  for (const FormulaEntry* e : catalog_entries(rep)) {
    if (!s.empty()) s += "; ";
    s += std::string(to_string(e->trust)) + (e->served ? "" : " (not served)") + " [" + e->validity + "]";
  }
  for (const UnsupportedEntry& u : unsupported_catalog()) {
    if (u.representative == rep) s += (s.empty() ? "" : "; ") + std::string("unsupported for m >= 2");
  }
  return s.empty() ? "none" : s;
}

int run_classify(Emitter& out, bool wilf, std::size_t n_max, std::size_t m_max, const EnumerationOptions& opts) {
  const auto classes = classify_all_length3();
  std::size_t pairs = 0;
  for (const auto& c : classes) {
    pairs += c.members.size();
    Json members = Json::array();
    std::string text;
    for (const auto& p : c.members) {
      members.push_back(p.str());
      text += (text.empty() ? "" : " ") + std::string("{") + p.str() + "}";
    }
    out.row(Json{{"representative", c.representative.str()}, {"size", c.members.size()}, {"members", members},
                 {"catalog", trust_summary(c.representative)}},
            "{" + c.representative.str() + "}  " + std::to_string(c.members.size()) + "  " + text + "  catalog: " +
                trust_summary(c.representative));
  }
  if (out.format() == Format::Human) {
    std::cout << pairs << " pairs, " << classes.size() << " classes\n";
  }
  if (!wilf) return kExitOk;

  const auto grid = make_grid(n_max, 1, m_max, opts.effective_budget());
  const auto groups = empirical_wilf_classes(classes, grid, opts);
  if (out.format() == Format::Human) {
    std::cout << "count vectors on " << grid.size() << " cells (n <= " << n_max << ", m <= " << m_max
              << "); equal vectors are evidence, not proof\n";
  }
  std::size_t index = 0;
  for (const auto& g : groups) {
    ++index;
    Json reps = Json::array();
    std::string text;
    for (const auto& c : g.classes) {
      reps.push_back(c.representative.str());
      text += (text.empty() ? "" : " ") + std::string("{") + c.representative.str() + "}";
    }
    std::string counts;
    for (const auto& v : g.counts) counts += (counts.empty() ? "" : ",") + to_string(v);
    out.row(Json{{"group", index}, {"classes", reps}, {"counts", counts}}, "group " + std::to_string(index) + ": " + text + "  [" + counts + "]");
  }
  return kExitOk;
}

int run_table(Emitter& out, CountContext& ctx, std::size_t n_max, std::size_t m_min, std::size_t m_max) {
  for (const auto& c : classify_all_length3()) {
    for (std::size_t m = m_min; m <= m_max; ++m) {
      std::string line = "{" + c.representative.str() + "} m=" + std::to_string(m) + ":";
      for (std::size_t n = 1; n <= n_max; ++n) {
        std::string value = "-", source = "unavailable", trust;
        try {
          const Resolved r = auto_count(ctx, c.representative, n, m);
          value = to_string(r.count);
          source = r.method;
          if (n == 1 && r.method == "formula") {
            trust = "direct";
          } else if (r.method == "formula") {
            trust = std::string(to_string(find_formula(c.representative, n, m).trust));
          } else if (r.method == "oracle") {
            trust = "computed";
          } else {
            trust = "proved-here";
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BudgetExceeded) throw;
        }
        if (out.format() != Format::Human) {
          out.row(Json{{"pair", c.representative.str()}, {"n", n}, {"m", m}, {"count", value}, {"source", source}, {"trust", trust}},
                  "");
        }
        line += " " + value + (trust.empty() ? "" : "[" + trust + "]");
      }
      if (out.format() == Format::Human) std::cout << line << "\n";
    }
  }
  return kExitOk;
}

int run_catalog(Emitter& out) {
  if (out.format() == Format::Human) std::cout << "# pair\trepresentative\ttrust\tserved\tvalidity\tformula\tprovenance\n";
  for (const FormulaEntry& e : formula_catalog()) {
    const Json rec{{"pair", e.pair.str()},        {"representative", e.representative.str()},
                   {"trust", std::string(to_string(e.trust))}, {"served", e.served},
                   {"validity", e.validity},      {"formula", e.formula},
                   {"provenance", e.provenance}};
    out.row(rec, e.pair.str() + "\t" + e.representative.str() + "\t" + std::string(to_string(e.trust)) + "\t" +
                     (e.served ? "yes" : "no") + "\t" + e.validity + "\t" + e.formula + "\t" + e.provenance);
  }
  for (const UnsupportedEntry& u : unsupported_catalog()) {
    const Json rec{{"pair", u.pair.str()}, {"representative", u.representative.str()}, {"trust", "unsupported"},
                   {"served", false},      {"validity", "m >= 2"},                    {"formula", ""},
                   {"provenance", u.reason}};
    out.row(rec, u.pair.str() + "\t" + u.representative.str() + "\tunsupported\tno\tm >= 2\t-\t" + u.reason);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// growth, gentree

int run_growth(Emitter& out, const PatternSet& patterns, std::size_t n_min, std::size_t n_max,
               const std::vector<std::size_t>& ms, const EnumerationOptions& opts) {
  std::vector<GridCell> grid;
  for (std::size_t m : ms)
    for (std::size_t n = n_min; n <= n_max; ++n) grid.push_back({n, m});
  if (out.format() == Format::Human) std::cout << "n\tm\tcount\tratio (display only)\tsource\n";
  for (const GrowthRow& r : growth_table(patterns, grid, opts)) {
    const std::string v = to_string(r.count);
    out.row(Json{{"n", r.n}, {"m", r.m}, {"count", v}, {"ratio", fixed6(r.ratio)}, {"source", r.source}},
            std::to_string(r.n) + "\t" + std::to_string(r.m) + "\t" + v + "\t" + fixed6(r.ratio) + "\t" + r.source,
            std::to_string(r.n) + " " + v);
  }
  return kExitOk;
}

int run_words(Emitter& out, std::size_t l_max, std::size_t n_max) {
  if (out.format() == Format::Human) std::cout << "l\tn\t12-avoiding words\tC(n+l-1,l)\t(n/l)^l\n";
  for (std::size_t l = 1; l <= l_max; ++l) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const BigCount got = word_counterexample_probe(l, n);
      const BigCount want = binomial(n + l - 1, l);
      const double bound = std::pow(static_cast<double>(n) / static_cast<double>(l), static_cast<double>(l));
      out.row(Json{{"l", l}, {"n", n}, {"count", to_string(got)}, {"binomial", to_string(want)}, {"bound", fixed6(bound)}},
              std::to_string(l) + "\t" + std::to_string(n) + "\t" + to_string(got) + "\t" + to_string(want) + "\t" + fixed6(bound));
    }
  }
  return kExitOk;
}

int run_stirling(Emitter& out, std::size_t max_length, const EnumerationOptions& opts) {
  bool ok = true;
  for (std::size_t m = 1; m <= max_length; ++m) {
    for (std::size_t n = 1; n * m <= max_length; ++n) {
      const StirlingVerdict v = check_stirling_identity(n, m, opts);
      ok = ok && v.equal();
      out.row(Json{{"n", n}, {"m", m}, {"avoiders", to_string(v.avoiders)}, {"formula", to_string(v.formula)},
                   {"equal", v.equal()}},
              std::to_string(n) + "\t" + std::to_string(m) + "\t" + to_string(v.avoiders) + "\t" + to_string(v.formula) +
                  "\t" + (v.equal() ? "equal" : "DIFFERENT"));
    }
  }
  return ok ? kExitOk : kExitVerification;
}

int run_gentree(Emitter& out, const std::string& name, std::size_t m, std::size_t height, bool describe, bool branches,
                std::size_t limit) {
  const SuccessionRule rule = builtin_rule(name, m);
  if (describe) {
    std::cout << rule.description;
    return kExitOk;
  }
  if (branches) {
    for (const auto& b : expand_branches(rule, height, limit)) {
      const std::string text = format_branch(b);
      out.row(Json{{"rule", rule.name}, {"m", rule.m}, {"height", height}, {"branch", text}}, text);
    }
    return kExitOk;
  }
  LevelProfile level = root_profile(rule);
  for (std::size_t h = 0; h <= height; ++h) {
    if (h > 0) level = next_level(rule, level);
    std::string labels;
    Json counts = Json::object();
    for (const auto& [label, count] : level.counts) {
      labels += " " + label.str() + ":" + to_string(count);
      counts[label.str()] = to_string(count);
    }
    const std::string total = to_string(level.total());
    out.row(Json{{"rule", rule.name}, {"m", rule.m}, {"height", h}, {"total", total}, {"labels", counts}},
            std::to_string(h) + "\t" + total + "\t" + labels, std::to_string(h) + " " + total);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in permutations of regular multisets"};
  app.require_subcommand(1);
  app.fallthrough();

  bool csv = false, records = false, bfile = false, override_budget = false, parallel = false;
  auto* csv_flag = app.add_flag("--csv", csv, "CSV output");
  auto* rec_flag = app.add_flag("--records", records, "one JSON object per result line");
  auto* bfile_flag = app.add_flag("--bfile", bfile, "OEIS b-file lines \"n value\"");
  csv_flag->excludes(rec_flag)->excludes(bfile_flag);
  rec_flag->excludes(bfile_flag);
  app.add_flag("--override-budget", override_budget, "allow enumeration up to length 18");
  app.add_flag("--parallel", parallel, "split searches by first letter across threads");

  std::string pair_text, method = "auto";
  std::size_t n = 1, m = 2;
  std::optional<std::size_t> count_nmax;
  auto* count = app.add_subcommand("count", "count avoiders of a pattern pair");
  count->add_option("--pair", pair_text, "two patterns, e.g. 122,312")->required();
  count->add_option("--n", n, "alphabet size (first index with --nmax)");
  count->add_option("--m", m, "multiplicity");
  count->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "all", "oracle", "formula", "recurrence", "explicit", "gentree"}));
  count->add_option("--nmax", count_nmax, "emit the sequence for n..nmax");

  std::string suite;
  std::size_t v_nmax = 4, v_mmax = 3;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"table1", "gentree", "bijections", "growth", "all"}));
  verify->add_option("--nmax", v_nmax, "table1 grid: largest n");
  verify->add_option("--mmax", v_mmax, "table1 grid: largest m");

  std::string kind, direction, input;
  std::optional<std::size_t> b_m;
  auto* bij = app.add_subcommand("bijection", "apply a bijection");
  bij->add_option("--kind", kind)->required()->check(CLI::IsMember({"dyck", "labels", "path", "simion"}));
  bij->add_option("--direction", direction)->required()->check(CLI::IsMember({"fwd", "inv"}));
  bij->add_option("--input", input)->required();
  bij->add_option("--m", b_m, "multiplicity for label sequences and paths");

  bool wilf = false;
  std::size_t c_nmax = 4, c_mmax = 3;
  auto* classify = app.add_subcommand("classify", "symmetry classes of pattern pairs");
  classify->add_flag("--wilf", wilf, "group classes by counting vectors");
  classify->add_option("--nmax", c_nmax);
  classify->add_option("--mmax", c_mmax);

  std::vector<std::string> g_patterns;
  std::vector<std::size_t> g_ms{2};
  std::size_t g_nmin = 1, g_nmax = 4, g_lmax = 12;
  bool g_words = false, g_stirling = false;
  auto* growth = app.add_subcommand("growth", "growth-ratio tables and probes");
  growth->add_option("--pattern", g_patterns, "pattern(s); commas separate several");
  growth->add_option("--m", g_ms, "multiplicities")->delimiter(',');
  growth->add_option("--nmin", g_nmin);
  growth->add_option("--nmax", g_nmax);
  growth->add_flag("--words", g_words, "12-avoiding word counts for l <= lmax, n <= nmax");
  growth->add_option("--lmax", g_lmax);
  growth->add_flag("--stirling", g_stirling, "212-avoiders against the Stirling count for n*m <= 12");

  std::size_t t_nmax = 4, t_mmin = 2, t_mmax = 3;
  auto* table = app.add_subcommand("table", "counts for every class with trust flags");
  table->add_option("--nmax", t_nmax);
  table->add_option("--mmin", t_mmin);
  table->add_option("--mmax", t_mmax);

  auto* catalog = app.add_subcommand("catalog", "export the formula catalog");

  std::string rule_name;
  std::size_t r_m = 2, r_height = 6, r_limit = 10000;
  bool r_describe = false, r_branches = false;
  auto* gentree = app.add_subcommand("gentree", "generating-tree rules");
  gentree->add_option("--rule", rule_name, "112-122@m2, 122-123, 211-213 or 122-213")->required();
  gentree->add_option("--m", r_m);
  gentree->add_option("--height", r_height);
  gentree->add_flag("--describe", r_describe, "print the rule in text form");
  gentree->add_flag("--branches", r_branches, "list root-to-height branches");
  gentree->add_option("--limit", r_limit, "largest branch list --branches will build");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the generic exit code; --help still exits 0.
    return app.exit(e) == 0 ? 0 : 1;
  }

  const Format format = csv ? Format::Csv : records ? Format::Records : bfile ? Format::Bfile : Format::Human;
  Emitter out(format);
  CountContext ctx;
  ctx.enumeration.override_budget = override_budget;
  ctx.enumeration.parallel = parallel;

  try {
    if (count->parsed()) {
      ctx.cache = cli::ResultCache::from_env();
      return run_count(out, ctx, PatternSet::parse(pair_text), n, m, method, count_nmax);
    }
    if (verify->parsed()) return run_verify(out, suite, v_nmax, v_mmax);
    if (bij->parsed()) return run_bijection(out, kind, direction, input, b_m);
    if (classify->parsed()) return run_classify(out, wilf, c_nmax, c_mmax, ctx.enumeration);
    if (table->parsed()) {
      ctx.cache = cli::ResultCache::from_env();
      return run_table(out, ctx, t_nmax, t_mmin, t_mmax);
    }
    if (catalog->parsed()) return run_catalog(out);
    if (growth->parsed()) {
      if (g_words) return run_words(out, g_lmax, g_nmax);
      if (g_stirling) return run_stirling(out, 12, ctx.enumeration);
      std::string joined;
      for (const auto& p : g_patterns) joined += (joined.empty() ? "" : ",") + p;
      const PatternSet patterns = joined.empty() ? PatternSet{} : PatternSet::parse(joined);
      return run_growth(out, patterns, g_nmin, g_nmax, g_ms, ctx.enumeration);
    }
    if (gentree->parsed()) return run_gentree(out, rule_name, r_m, r_height, r_describe, r_branches, r_limit);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
