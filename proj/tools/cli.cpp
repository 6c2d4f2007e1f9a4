#include "cli.hpp"

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "palstar/asymptotics.hpp"
#include "palstar/counting.hpp"
#include "palstar/decimal.hpp"
#include "palstar/factorizer.hpp"
#include "palstar/gf_analysis.hpp"
#include "palstar/oracles.hpp"
#include "palstar/reference_data.hpp"
#include "palstar/words.hpp"

namespace palstar::cli {

namespace {

using nlohmann::json;

enum class Format { plain, json, csv };

const std::map<std::string, Format> kFormats = {
    {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

struct RunConfig {
  Format format = Format::plain;
  int k = 2;
  bool k_given = false;
  int N = 10;
  int digits = 20;
  std::string kind = "palstar";
  bool symbolic = false;
  std::string word;
  int terms = 9;
  std::string as = "both";
  int max_n = 256;
  std::string suite = "all";
  int oracle_max_n = 6;
  int k_max = 64;
  int gf_degree = 200;
  int max_len = 12;
  int samples = 360;
  EnumerationBudget budget;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(", \"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---- count -----------------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> terms;
  const auto N = static_cast<std::size_t>(cfg.N);
  if (cfg.symbolic) {
    const auto polys = cfg.kind == "palstar" ? p_poly(N) : u_poly(N);
    for (const KPolynomial& p : polys) terms.push_back(p.to_string());
  } else {
    const CountSequence s =
        cfg.kind == "palstar" ? p_sequence(cfg.k, N) : u_sequence(cfg.k, N);
    for (const mpz_class& t : s.terms) terms.push_back(t.get_str());
  }

  switch (cfg.format) {
    case Format::plain:
      for (std::size_t n = 0; n < terms.size(); ++n) {
        out << (n == 0 ? "" : cfg.symbolic ? ", " : " ") << terms[n];
      }
      out << '\n';
      break;
    case Format::json: {
      json doc = {{"kind", cfg.kind}, {"N", cfg.N}, {"terms", terms}};
      doc["k"] = cfg.symbolic ? json("symbolic") : json(cfg.k);
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,value\n";
      for (std::size_t n = 0; n < terms.size(); ++n) {
        out << n << ',' << csv_field(terms[n]) << '\n';
      }
      break;
  }
  return kSuccess;
}

// ---- factor ----------------------------------------------------------------

int cmd_factor(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Word> word;
  try {
    word = cfg.k_given ? Word::from_letters(cfg.word, Alphabet(cfg.k))
                       : Word::from_letters(cfg.word);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Factorization f;
  try {
    f = factor_palstar(*word);
  } catch (const NotAPalstar& e) {
    err << e.what() << '\n';
    return kNotAPalstar;
  }

  switch (cfg.format) {
    case Format::plain:
      out << f.to_string('|') << '\n';
      break;
    case Format::json: {
      json factors = json::array();
      for (const Word& w : f.factors) factors.push_back(w.to_letters());
      out << json{{"word", cfg.word},
                  {"factors", factors},
                  {"prime", f.factors.size() == 1}}
                 .dump()
          << '\n';
      break;
    }
    case Format::csv:
      out << "index,factor\n";
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        out << i << ',' << f.factors[i].to_letters() << '\n';
      }
      break;
  }
  return kSuccess;
}

// ---- alpha -----------------------------------------------------------------

struct Rendered {
  std::string value;   // truncated to the requested digits
  bool exact = false;  // lo and hi truncate to the same string
  std::string lo;
  std::string hi;
  std::size_t terms_used = 0;
};

Rendered render(const RationalEnclosure& e, int digits, int extra) {
  const auto places = static_cast<unsigned>(digits);
  Rendered r;
  r.value = to_decimal(e.lo, places, Rounding::down);
  r.exact = r.value == to_decimal(e.hi, places, Rounding::down);
  r.lo = to_decimal(e.lo, places + static_cast<unsigned>(extra), Rounding::down);
  r.hi = to_decimal(e.hi, places + static_cast<unsigned>(extra), Rounding::up);
  r.terms_used = e.terms_used;
  return r;
}

int cmd_alpha(const RunConfig& cfg, std::ostream& out) {
  std::map<std::string, Rendered> values;
  // Guard digits until every enclosure truncates unambiguously; a true value
  // sitting on a digit boundary keeps the last attempt with a +1 caveat.
  for (int extra = 4; extra <= 64; extra *= 2) {
    const RationalEnclosure rho = solve_rho(cfg.k, cfg.digits + extra);
    const RationalEnclosure alpha = alpha_from_rho(rho);
    const RationalEnclosure C = compute_C(cfg.k, rho, cfg.digits + extra);
    values = {{"rho", render(rho, cfg.digits, extra)},
              {"alpha", render(alpha, cfg.digits, extra)},
              {"C", render(C, cfg.digits, extra)}};
    if (values["rho"].exact && values["alpha"].exact && values["C"].exact) break;
  }
  const std::array<std::pair<const char*, const char*>, 3> order = {
      {{"rho", "rho_k"}, {"alpha", "alpha_k"}, {"C", "C_k"}}};

  switch (cfg.format) {
    case Format::plain:
      out << "k        " << cfg.k << '\n';
      for (const auto& [key, label] : order) {
        const Rendered& r = values[key];
        out << label << std::string(9 - std::string(label).size(), ' ')
            << r.value << (r.exact ? "" : " (+1 in last digit)") << '\n';
      }
      out << "N_used   " << values["rho"].terms_used << " (rho), "
          << values["C"].terms_used << " (C)\n";
      out << "digits   " << cfg.digits
          << " (truncated; each true value lies in [shown, shown + 10^-"
          << cfg.digits << "))\n";
      break;
    case Format::json: {
      json doc = {{"k", cfg.k},
                  {"digits", cfg.digits},
                  {"N_used", values["rho"].terms_used}};
      for (const auto& [key, label] : order) {
        const Rendered& r = values[key];
        doc[key] = {{"value", r.value},
                    {"lo", r.lo},
                    {"hi", r.hi},
                    {"exact_truncation", r.exact},
                    {"N_used", r.terms_used}};
      }
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "quantity,value,lo,hi,N_used\n";
      for (const auto& [key, label] : order) {
        const Rendered& r = values[key];
        out << label << ',' << r.value << ',' << r.lo << ',' << r.hi << ','
            << r.terms_used << '\n';
      }
      break;
  }
  return kSuccess;
}

// ---- expand ----------------------------------------------------------------

struct NamedSeries {
  std::string name;
  std::string label;
  InverseKSeries series;
  std::size_t stabilized_at;
};

int remainder_power(const InverseKSeries& s) {
  return s.power(s.order() - 1) - 1;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const auto terms = static_cast<std::size_t>(cfg.terms);
  const auto max_n = static_cast<std::size_t>(cfg.max_n);
  std::vector<NamedSeries> shown;
  if (cfg.as != "alpha") {
    StabilizedSeries inv = alpha_inv_series(terms, max_n);
    shown.push_back({"inverse", "1/alpha_k", inv.series, inv.stabilized_at});
  }
  if (cfg.as != "inverse") {
    // --terms T for alpha keeps every term above O(k^-T): T + 1 coefficients,
    // the leading 2k plus T corrections.
    StabilizedSeries inv = alpha_inv_series(terms + 1, max_n);
    shown.push_back({"alpha", "alpha_k", series_reciprocal(inv.series),
                     inv.stabilized_at});
  }

  switch (cfg.format) {
    case Format::plain:
      for (const NamedSeries& s : shown) {
        out << s.label << " = " << s.series.to_string() << " + O(k^"
            << remainder_power(s.series) << ")\n";
        out << "  stabilized at n = " << s.stabilized_at << '\n';
      }
      break;
    case Format::json: {
      json doc = json::object();
      for (const NamedSeries& s : shown) {
        json list = json::array();
        for (std::size_t i = 0; i < s.series.order(); ++i) {
          const mpq_class& c = s.series.coefficients()[i];
          list.push_back({{"power", s.series.power(i)},
                          {"numerator", c.get_num().get_str()},
                          {"denominator", c.get_den().get_str()}});
        }
        doc[s.name] = {{"terms", list},
                       {"text", s.series.to_string()},
                       {"remainder_power", remainder_power(s.series)},
                       {"stabilized_at", s.stabilized_at}};
      }
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "series,power,numerator,denominator\n";
      for (const NamedSeries& s : shown) {
        for (std::size_t i = 0; i < s.series.order(); ++i) {
          const mpq_class& c = s.series.coefficients()[i];
          out << s.name << ',' << s.series.power(i) << ','
              << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
        }
      }
      break;
  }
  return kSuccess;
}

// ---- verify ----------------------------------------------------------------

class Reporter {
 public:
  Reporter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void check(const std::string& suite, const std::string& name, bool pass,
             const std::string& detail) {
    ++suite_total_;
    if (pass) {
      ++passed_;
      ++suite_passed_;
    } else {
      ++failed_;
      if (!first_failure_) first_failure_ = suite + ": " + name;
    }
    emit(suite, name, pass, detail);
  }

  void end_suite(const std::string& suite, const std::string& unit) {
    emit(suite, "summary", suite_passed_ == suite_total_,
         std::to_string(suite_passed_) + "/" + std::to_string(suite_total_) +
             " " + unit);
    suite_passed_ = suite_total_ = 0;
  }

  void finish() {
    if (format_ == Format::json) {
      out_ << json{{"summary", true}, {"passed", passed_}, {"failed", failed_}}
                  .dump()
           << '\n';
    } else {
      out_ << (failed_ == 0 ? "ALL PASS" : "FAILURES") << ": " << passed_
           << " passed, " << failed_ << " failed\n";
    }
  }

  const std::optional<std::string>& first_failure() const {
    return first_failure_;
  }

 private:
  void emit(const std::string& suite, const std::string& name, bool pass,
            const std::string& detail) {
    if (format_ == Format::json) {
      out_ << json{{"suite", suite},
                   {"check", name},
                   {"pass", pass},
                   {"detail", detail}}
                  .dump()
           << '\n';
    } else {
      out_ << (pass ? "PASS  " : "FAIL  ") << suite << "  " << name << "  "
           << detail << '\n';
    }
  }

  std::ostream& out_;
  Format format_;
  int passed_ = 0;
  int failed_ = 0;
  int suite_passed_ = 0;
  int suite_total_ = 0;
  std::optional<std::string> first_failure_;
};

std::string label(const char* f, int k, std::size_t n) {
  return std::string(f) + "_" + std::to_string(k) + "(" + std::to_string(n) + ")";
}

void suite_table(Reporter& rep) {
  for (std::size_t row = 0; row < reference::kTableAlphabets.size(); ++row) {
    const int k = reference::kTableAlphabets[row];
    const CountSequence p = p_sequence(k, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      const std::string expected(reference::kPalstarTable[row][n]);
      rep.check("table", label("p", k, n), p.terms[n].get_str() == expected,
                p.terms[n].get_str());
    }
  }
  rep.end_suite("table", "table cells");
}

void suite_oracle(Reporter& rep, const RunConfig& cfg) {
  const Alphabet a(cfg.k);
  const auto max_n = static_cast<std::size_t>(cfg.oracle_max_n);
  const CountSequence u = u_sequence(cfg.k, max_n);
  const CountSequence p = p_sequence(cfg.k, max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const mpz_class brute = count_unbordered_bruteforce(a, n, cfg.budget);
    rep.check("oracle", label("u", cfg.k, n), brute == u.terms[n],
              brute.get_str());
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    const mpz_class brute = count_palstars_bruteforce(a, n, cfg.budget);
    rep.check("oracle", label("p", cfg.k, n), brute == p.terms[n],
              brute.get_str());
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    const mpz_class brute = count_prime_palstars_bruteforce(a, n, cfg.budget);
    rep.check("oracle", label("prime", cfg.k, n), brute == u.terms[n],
              brute.get_str());
  }
  rep.end_suite("oracle", "oracle comparisons");
}

void suite_bounds(Reporter& rep, const RunConfig& cfg) {
  for (int k = 2; k <= cfg.k_max; ++k) {
    const bool closed_form = check_bounds(k);
    const RationalEnclosure alpha = alpha_from_rho(solve_rho(k, 10));
    const bool strict =
        alpha.lo > 2 * k - 1 && alpha.hi < mpq_class(4 * k - 1, 2);
    rep.check("bounds", "k=" + std::to_string(k), closed_form && strict,
              "alpha_k in [" + to_decimal(alpha.lo, 10) + ", " +
                  to_decimal(alpha.hi, 10, Rounding::up) + "]");
  }
  rep.end_suite("bounds", "alphabet sizes");
}

void suite_gf(Reporter& rep, const RunConfig& cfg) {
  const std::vector<int> ks =
      cfg.k_given ? std::vector<int>{cfg.k} : std::vector<int>{2, 3, 4};
  for (int k : ks) {
    rep.check("gf", "U*P = 2P-1, k=" + std::to_string(k),
              verify_gf_identity(k, static_cast<std::size_t>(cfg.gf_degree)),
              "degree " + std::to_string(cfg.gf_degree));
  }
  rep.end_suite("gf", "identities");
}

void suite_structure(Reporter& rep, const RunConfig& cfg) {
  const oracle::StructureReport r = oracle::check_structure(
      Alphabet(cfg.k), static_cast<std::size_t>(cfg.max_len), cfg.budget);
  const std::string scope = std::to_string(r.palstars_checked) + " palstars, " +
                            std::to_string(r.primes_checked) + " primes";
  rep.check("structure", "round trip", r.round_trip_failures == 0,
            std::to_string(r.round_trip_failures) + " violations over " + scope);
  rep.check("structure", "unique factorization", r.uniqueness_failures == 0,
            std::to_string(r.uniqueness_failures) + " violations over " + scope);
  rep.check("structure", "prefix code", r.prefix_failures == 0,
            std::to_string(r.prefix_failures) + " violations over " + scope);
  rep.end_suite("structure", "properties");
}

void suite_circle(Reporter& rep, const RunConfig& cfg) {
  const CircleScanReport r = circle_scan(cfg.k, cfg.samples);
  std::ostringstream detail;
  detail << "min |U-2| = " << r.min_distance << " at psi = " << r.argmin_psi
         << ", |U(-rho)-2| = " << r.distance_at_pi;
  rep.check("circle", "k=" + std::to_string(cfg.k), r.passed, detail.str());
  rep.end_suite("circle", "scans");
}

void suite_constants(Reporter& rep) {
  const RationalEnclosure rho = solve_rho(2, 50);
  const RationalEnclosure alpha = alpha_from_rho(rho);
  const RationalEnclosure C = compute_C(2, rho, 30);
  rep.check("constants", "rho_2",
            rho.contains(parse_decimal(std::string(reference::kRho2))),
            to_decimal(rho.lo, 50));
  rep.check("constants", "alpha_2",
            alpha.contains(parse_decimal(std::string(reference::kAlpha2))),
            to_decimal(alpha.lo, 49));
  rep.check("constants", "C_2",
            C.contains(parse_decimal(std::string(reference::kC2))),
            to_decimal(C.lo, 30));
  rep.end_suite("constants", "constants");
}

void suite_expansion(Reporter& rep) {
  const InverseKSeries inv = alpha_inv_series(9).series;
  const InverseKSeries alpha = series_reciprocal(inv);
  auto matches = [](const InverseKSeries& s, const auto& expected) {
    if (s.order() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      mpq_class e(expected[i].numerator, expected[i].denominator);
      e.canonicalize();
      if (s.coefficients()[i] != e) return false;
    }
    return true;
  };
  rep.check("expansion", "1/alpha_k", matches(inv, reference::kAlphaInverseSeries),
            inv.to_string());
  rep.check("expansion", "alpha_k", matches(alpha, reference::kAlphaSeries),
            alpha.to_string());
  rep.end_suite("expansion", "expansions");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Reporter rep(out, cfg.format == Format::plain ? Format::plain : Format::json);
  const std::string& s = cfg.suite;
  const bool all = s == "all";
  if (all || s == "table") suite_table(rep);
  if (all || s == "oracle") suite_oracle(rep, cfg);
  if (all || s == "gf") suite_gf(rep, cfg);
  if (all || s == "structure") suite_structure(rep, cfg);
  if (all || s == "bounds") suite_bounds(rep, cfg);
  if (all || s == "constants") suite_constants(rep);
  if (all || s == "expansion") suite_expansion(rep);
  if (all || s == "circle") suite_circle(rep, cfg);
  rep.finish();
  if (rep.first_failure()) {
    err << "verification failed: " << *rep.first_failure() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

void add_format(CLI::App* sub, std::optional<Format>& format) {
  sub->add_option("--format", format, "Output format: plain, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  std::optional<Format> format;
  cfg.budget = EnumerationBudget::from_environment();

  CLI::App app{"Counting, factoring and asymptotics of palstars"};
  app.require_subcommand(1);
  const auto alphabet = CLI::Range(2, 1 << 20);

  CLI::App* count = app.add_subcommand("count", "Print p_k(0..N) or u_k(0..N)");
  count->add_option("--kind", cfg.kind, "palstar or unbordered")
      ->check(CLI::IsMember({"palstar", "unbordered"}));
  count->add_option("-k", cfg.k, "Alphabet size")->check(alphabet);
  count->add_option("-N", cfg.N, "Highest index")->check(CLI::Range(0, 1 << 16));
  count->add_flag("--symbolic", cfg.symbolic, "Polynomials in k instead of integers");
  add_format(count, format);

  CLI::App* factor = app.add_subcommand("factor", "Factor a palstar into prime palstars");
  factor->add_option("word", cfg.word, "Lowercase letters, a = 0, b = 1, ...")
      ->required();
  factor->add_option("-k", cfg.k, "Alphabet size (default: smallest covering the word)")
      ->check(alphabet);
  add_format(factor, format);

  CLI::App* alpha = app.add_subcommand("alpha", "Certified rho_k, alpha_k and C_k");
  alpha->add_option("-k", cfg.k, "Alphabet size")->check(alphabet);
  alpha->add_option("--digits", cfg.digits, "Decimal digits")
      ->check(CLI::Range(1, 2000));
  add_format(alpha, format);

  CLI::App* expand = app.add_subcommand("expand", "Expansions of 1/alpha_k and alpha_k in 1/k");
  expand->add_option("--terms", cfg.terms,
                     "Terms of 1/alpha_k; for alpha_k, the remainder order O(k^-terms)")
      ->check(CLI::Range(1, 64));
  expand->add_option("--as", cfg.as, "inverse, alpha or both")
      ->check(CLI::IsMember({"inverse", "alpha", "both"}));
  expand->add_option("--max-n", cfg.max_n, "Ceiling on the ratio order n")
      ->check(CLI::Range(2, 4096));
  add_format(expand, format);

  CLI::App* verify = app.add_subcommand("verify", "Run invariant checks");
  verify->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"all", "table", "oracle", "gf", "structure",
                             "bounds", "constants", "expansion", "circle"}));
  verify->add_option("-k", cfg.k, "Alphabet size for oracle, gf, structure and circle")
      ->check(alphabet);
  verify->add_option("--max-n", cfg.oracle_max_n, "Largest n for oracle comparisons")
      ->check(CLI::Range(1, 64));
  verify->add_option("--k-max", cfg.k_max, "Largest alphabet for bounds")
      ->check(CLI::Range(2, 100000));
  verify->add_option("-N", cfg.gf_degree, "Degree for the GF identity")
      ->check(CLI::Range(0, 1 << 14));
  verify->add_option("--max-len", cfg.max_len, "Longest word for structure checks")
      ->check(CLI::Range(0, 64));
  verify->add_option("--samples", cfg.samples, "Circle scan grid size")
      ->check(CLI::Range(8, 1 << 20));
  verify->add_option("--budget", cfg.budget.max_words,
                     "Enumeration budget in words (env PALSTAR_BUDGET)")
      ->check(CLI::PositiveNumber);
  add_format(verify, format);

  std::vector<const char*> argv{"palstar"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  // verify defaults to JSON lines; everything else to plain.
  cfg.format = format.value_or(app.got_subcommand(verify) ? Format::json
                                                          : Format::plain);
  const CLI::Option* k_option =
      app.get_subcommands().front()->get_option_no_throw("-k");
  cfg.k_given = k_option != nullptr && k_option->count() > 0;

  try {
    if (app.got_subcommand(count)) return cmd_count(cfg, out);
    if (app.got_subcommand(factor)) return cmd_factor(cfg, out, err);
    if (app.got_subcommand(alpha)) return cmd_alpha(cfg, out);
    if (app.got_subcommand(expand)) return cmd_expand(cfg, out);
    return cmd_verify(cfg, out, err);
  } catch (const BudgetExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const ComputationLimit& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const NoStabilization& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace palstar::cli
