#include "descent_poset/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "descent_poset/bijection.hpp"
#include "descent_poset/checked.hpp"
#include "descent_poset/config.hpp"
#include "descent_poset/enumerate.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/moebius.hpp"
#include "descent_poset/parallel.hpp"
#include "descent_poset/scan_record.hpp"
#include "descent_poset/topology.hpp"
#include "descent_poset/verify.hpp"
#include "descent_poset/word.hpp"

namespace descent_poset {

using json = nlohmann::ordered_json;

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string flat_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + flat_cell(v[i]);
    return out;
  }
  return v.dump();
}

// Writes flat objects in the selected format. CSV columns come from the
// first record unless preset.
class Emitter {
 public:
  Emitter(std::ostream& os, OutputFormat format, std::vector<std::string> columns = {})
      : os_(os), format_(format), columns_(std::move(columns)) {}

  void record(const json& obj) {
    switch (format_) {
      case OutputFormat::kJson:
        os_ << obj.dump() << '\n';
        break;
      case OutputFormat::kCsv: {
        if (!header_done_) {
          if (columns_.empty())
            for (const auto& [k, v] : obj.items()) columns_.push_back(k);
          for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << columns_[i];
          os_ << '\n';
          header_done_ = true;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i)
          os_ << (i ? "," : "") << (obj.contains(columns_[i]) ? csv_escape(flat_cell(obj[columns_[i]])) : "");
        os_ << '\n';
        break;
      }
      case OutputFormat::kText:
        if (header_done_) os_ << '\n';
        for (const auto& [k, v] : obj.items()) os_ << k << ": " << flat_cell(v) << '\n';
        header_done_ = true;
        break;
    }
  }

  void header() {
    if (format_ != OutputFormat::kCsv || header_done_) return;
    for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << columns_[i];
    os_ << '\n';
    header_done_ = true;
  }

  // Raw line, for listings.
  void line(const std::string& text) { os_ << text << '\n'; }
  void flush() { os_.flush(); }

 private:
  std::ostream& os_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  bool header_done_ = false;
};

std::string interval_text(const Permutation& a, const Permutation& b) { return a.to_string() + "/" + b.to_string(); }

// -- mobius ------------------------------------------------------------------

struct MobiusResult {
  std::string method;
  std::int64_t value = 0;
  std::optional<std::string> case_label;
};

std::optional<TopKind> top_kind_of(const Permutation& top) {
  const int n = static_cast<int>(top.size());
  if (n >= 2 && top == m_permutation(n)) return TopKind::kM;
  if (n >= 3 && top == w_permutation(n)) return TopKind::kW;
  return std::nullopt;
}

MobiusResult mobius_by(const std::string& method, const Permutation& sigma, const Permutation& pi,
                       const RunConfig& config) {
  const Permutation one({1});
  const Permutation two_one({2, 1});
  if (method == "recursive") return {"recursive", mobius_recursive(sigma, pi, config.max_interval_top_length), {}};
  if (method == "normal-embedding") return {"normal-embedding", mobius_fixed_descent(sigma, pi), {}};
  if (method == "classifier") {
    if (sigma != one && sigma != two_one) throw PreconditionError("classifier needs bottom 1 or 21");
    const auto c = classify_one_descent(pi);
    return {"classifier", sigma == one ? c.value : checked_neg(c.value), std::string(c.label())};
  }
  if (method == "closed-form") {
    const auto kind = top_kind_of(pi);
    if (!kind) throw PreconditionError("closed form needs a top of the form 246...135... or 135...246...");
    return {"closed-form", mobius_bottom_closed_form(sigma, static_cast<int>(pi.size()), *kind), {}};
  }
  throw ParseError("unknown method '" + method + "'");
}

std::string cheapest_method(const Permutation& sigma, const Permutation& pi) {
  if (sigma == pi || !contains(pi, sigma)) return "recursive";
  if (pi.descent_count() == 1 && sigma.descent_count() == 1 && top_kind_of(pi)) return "closed-form";
  if (pi.descent_count() == 1 && pi.size() > 2 && (sigma == Permutation({1}) || sigma == Permutation({2, 1})))
    return "classifier";
  if (sigma.descent_count() == pi.descent_count()) return "normal-embedding";
  return "recursive";
}

json mobius_record(const Permutation& sigma, const Permutation& pi, const std::string& requested,
                   const RunConfig& config) {
  const std::string method = requested == "auto" ? cheapest_method(sigma, pi) : requested;
  const MobiusResult r = mobius_by(method, sigma, pi, config);
  bool cross_checked = false;
  if (r.method != "recursive" && pi.size() <= config.verify_threshold) {
    const std::int64_t oracle = mobius_recursive(sigma, pi, config.max_interval_top_length);
    if (oracle != r.value)
      throw VerificationFailure(r.method + " gave " + std::to_string(r.value) + " but the recursion gives " +
                                std::to_string(oracle) + " on " + interval_text(sigma, pi));
    cross_checked = true;
  }
  json out = {{"bottom", sigma.to_string()}, {"top", pi.to_string()}, {"method_used", r.method}, {"value", r.value},
              {"cross_checked", cross_checked}};
  if (r.case_label) out["case"] = *r.case_label;
  return out;
}

// -- scan-conjecture -----------------------------------------------------------

const std::vector<std::string>& conjecture_columns() {
  static const std::vector<std::string> cols{"subject",         "length",          "mu",
                                             "case",            "contains_456123",
                                             "contains_356124", "avoids_obstructions",
                                             "disconnected",    "disconnected_count",
                                             "betti",           "betti_top_concentrated"};
  return cols;
}

ScanRecord conjecture_record(const Permutation& pi, const RunConfig& config, std::size_t scan_limit,
                             std::size_t betti_max_length) {
  ScanRecord rec;
  rec.subject = pi.to_string();
  const auto n = static_cast<std::int64_t>(pi.size());
  rec.set("length", n);
  const auto cls = classify_one_descent(pi);
  if (pi.size() <= config.verify_threshold) {
    const std::int64_t oracle = mobius_recursive(Permutation({1}), pi, config.max_interval_top_length);
    if (oracle != cls.value)
      throw VerificationFailure("classifier gave " + std::to_string(cls.value) + " but the recursion gives " +
                                std::to_string(oracle) + " for " + pi.to_string());
  }
  rec.set("mu", cls.value);
  rec.set("case", std::string(cls.label()));
  const auto found = shellability_obstruction(pi);
  const auto has = [&](const Permutation& p) { return std::find(found.begin(), found.end(), p) != found.end(); };
  rec.set("contains_456123", has(obstruction_patterns()[0]));
  rec.set("contains_356124", has(obstruction_patterns()[1]));
  rec.set("avoids_obstructions", found.empty());
  std::vector<std::string> disconnected;
  for (const auto& d : scan_disconnected_subintervals(Permutation({1}), pi, 3, scan_limit))
    disconnected.push_back(interval_text(d.lower, d.upper));
  const auto count = static_cast<std::int64_t>(disconnected.size());
  rec.set("disconnected", std::move(disconnected));
  rec.set("disconnected_count", count);
  if (pi.size() <= betti_max_length) {
    const BettiVector b = betti_gf2(order_complex(Permutation({1}), pi, config.max_interval_top_length));
    rec.set("betti", b.reduced);
    rec.set("betti_top_concentrated", b.concentrated_in(static_cast<int>(pi.size()) - 3));
  }
  return rec;
}

std::vector<Permutation> conjecture_subjects(std::size_t max_length) {
  std::vector<Permutation> out;
  for (std::size_t n = 3; n <= max_length; ++n)
    for (auto& p : permutations_with_descents(static_cast<int>(n), 1)) out.push_back(std::move(p));
  return out;
}

// Reads the complete records of an earlier run, drops a torn last line, and
// checks that they form a prefix of the subject order. Returns how many
// subjects are done.
std::size_t resume_prefix(const std::string& path, const std::vector<Permutation>& subjects) {
  std::ifstream in(path);
  if (!in) return 0;
  std::vector<std::string> kept;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("subject")) {
      if (in.peek() == std::char_traits<char>::eof()) break;  // torn write
      throw ParseError("cannot resume: malformed record in " + path);
    }
    const std::size_t idx = kept.size();
    if (idx >= subjects.size() || j["subject"] != subjects[idx].to_string())
      throw PreconditionError("cannot resume: " + path + " does not match this scan at record " + std::to_string(idx + 1));
    kept.push_back(line);
  }
  in.close();
  std::ofstream rewrite(path, std::ios::trunc);
  for (const auto& k : kept) rewrite << k << '\n';
  return kept.size();
}

// -- output target -------------------------------------------------------------

class Output {
 public:
  Output(std::ostream& fallback, const std::optional<std::string>& path, bool append) : stream_(&fallback) {
    if (!path) return;
    file_ = std::make_unique<std::ofstream>(*path, append ? std::ios::app : std::ios::trunc);
    if (!*file_) throw PreconditionError("cannot open output file " + *path);
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  bool max_len_from_env = false;
  try {
    config = RunConfig::from_environment();
    max_len_from_env = std::getenv(kMaxLenEnv) != nullptr;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  CLI::App app{"Exact computations in the permutation pattern poset", "descent-poset"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text = "json";
  std::optional<std::string> out_path;
  std::optional<std::size_t> max_len;
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--max-len", max_len, "Size guard on interval tops (default 14, or $" + std::string(kMaxLenEnv) + ")");
  auto* threshold_opt = app.add_option("--verify-threshold", config.verify_threshold,
                 "Cross-check fast paths against the recursion up to this top length");
  app.add_option("--jobs", config.parallel_width, "Worker threads for scans and verify suites");

  std::string bottom_text;
  std::string top_text;
  std::string method = "auto";
  auto* mobius = app.add_subcommand("mobius", "Moebius function mu(bottom, top)");
  mobius->add_option("--bottom", bottom_text)->required();
  mobius->add_option("--top", top_text)->required();
  mobius->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "recursive", "normal-embedding", "classifier", "closed-form"}));

  std::optional<std::string> to_word;
  std::optional<std::string> to_perm;
  auto* bijection = app.add_subcommand("bijection", "Permutation <-> word bijection");
  auto* to_word_opt = bijection->add_option("--to-word", to_word, "Permutation to map to its word");
  bijection->add_option("--to-perm", to_perm, "Word to map to its permutation")->excludes(to_word_opt);
  bijection->require_option(1);

  std::string perm_text;
  auto* classify = app.add_subcommand("classify-one-descent", "Case and mu(1, pi) for a one-descent permutation");
  classify->add_option("--perm", perm_text)->required();

  bool want_euler = false;
  bool want_betti = false;
  bool want_facets = false;
  auto* complex = app.add_subcommand("complex", "Order complex of the open interval (bottom, top)");
  complex->add_option("--bottom", bottom_text)->required();
  complex->add_option("--top", top_text)->required();
  complex->add_flag("--euler", want_euler, "Reduced Euler characteristic");
  complex->add_flag("--betti", want_betti, "Reduced Betti numbers over GF(2)");
  complex->add_flag("--facets", want_facets, "List the maximal chains");

  std::size_t min_rank = 3;
  auto* scan_disc = app.add_subcommand("scan-disconnected", "Disconnected subintervals of [bottom, top]");
  scan_disc->add_option("--top", top_text)->required();
  scan_disc->add_option("--bottom", bottom_text);
  scan_disc->add_option("--min-rank", min_rank)->check(CLI::PositiveNumber);

  std::size_t scan_max_length = 0;
  std::size_t betti_max_length = 7;
  bool resume = false;
  auto* scan_conj = app.add_subcommand("scan-conjecture", "Scan one-descent permutations up to a length");
  scan_conj->add_option("--max-length", scan_max_length)->required()->check(CLI::PositiveNumber);
  scan_conj->add_option("--betti-max-length", betti_max_length, "Compute Betti numbers up to this length");
  scan_conj->add_flag("--resume", resume, "Continue an interrupted JSON-lines scan in --out");

  int enum_length = 0;
  int enum_descents = 0;
  bool enum_words = false;
  auto* enumerate = app.add_subcommand("enumerate", "Permutations with a given number of descents");
  enumerate->add_option("--length", enum_length)->required();
  enumerate->add_option("--descents", enum_descents)->required();
  enumerate->add_flag("--words", enum_words, "List the corresponding words instead");

  std::string suite = "all";
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run a self-verification suite");
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--max-length", vopt.max_length)->check(CLI::PositiveNumber);
  verify->add_option("--samples", vopt.random_samples, "Random pairs for prop-mob beyond length 7");
  verify->add_option("--seed", vopt.seed);

  std::vector<std::string> argv_store(args.begin() + (args.empty() ? 0 : 1), args.end());
  try {
    std::reverse(argv_store.begin(), argv_store.end());
    app.parse(argv_store);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    const OutputFormat format = parse_output_format(format_text);
    if (max_len) config.max_interval_top_length = *max_len;
    // A lowered size guard pulls the default threshold down with it.
    if (threshold_opt->count() == 0)
      config.verify_threshold = std::min(config.verify_threshold, config.max_interval_top_length);
    config.output_path = out_path;
    config.format = format;
    config.validate();
    const std::size_t scan_limit =
        (max_len || max_len_from_env) ? config.max_interval_top_length : kDefaultScanMaxTopLength;

    if (mobius->parsed()) {
      Output o(out, out_path, false);
      Emitter(o.stream(), format)
          .record(mobius_record(parse_permutation(bottom_text), parse_permutation(top_text), method, config));
    } else if (bijection->parsed()) {
      Output o(out, out_path, false);
      if (to_word) {
        const Permutation pi = parse_permutation(*to_word);
        Emitter(o.stream(), format).record({{"perm", pi.to_string()}, {"word", perm_to_word(pi).to_string()}});
      } else {
        const Word w = parse_word(*to_perm);
        Emitter(o.stream(), format).record({{"word", w.to_string()}, {"perm", word_to_perm(w).to_string()}});
      }
    } else if (classify->parsed()) {
      const Permutation pi = parse_permutation(perm_text);
      const auto hits = one_descent_case_hits(pi);
      json labels = json::array();
      for (const auto& h : hits) labels.push_back(std::string(h.label()));
      Output o(out, out_path, false);
      Emitter(o.stream(), format)
          .record({{"perm", pi.to_string()},
                   {"case", std::string(hits.front().label())},
                   {"value", hits.front().value},
                   {"cases_hit", labels}});
    } else if (complex->parsed()) {
      const Permutation sigma = parse_permutation(bottom_text);
      const Permutation pi = parse_permutation(top_text);
      const OrderComplex c = order_complex(sigma, pi, config.max_interval_top_length);
      json rec = {{"bottom", sigma.to_string()},      {"top", pi.to_string()},
                  {"rank", c.rank()},                 {"dimension", c.dimension()},
                  {"vertices", c.vertices().size()},  {"facet_count", c.facets().size()},
                  {"face_counts", c.face_counts()}};
      if (want_euler) rec["euler"] = euler_characteristic(c);
      if (want_betti) {
        const BettiVector b = betti_gf2(c);
        rec["betti"] = b.reduced;
        rec["betti_field"] = BettiVector::kField;
      }
      if (want_facets) {
        json facets = json::array();
        for (const auto& f : c.facets()) {
          std::string chain;
          for (std::size_t i = 0; i < f.size(); ++i) chain += (i ? "<" : "") + c.vertices()[f[i]].to_string();
          facets.push_back(chain);
        }
        rec["facets"] = facets;
      }
      Output o(out, out_path, false);
      Emitter(o.stream(), format).record(rec);
    } else if (scan_disc->parsed()) {
      const Permutation sigma = bottom_text.empty() ? Permutation({1}) : parse_permutation(bottom_text);
      const Permutation pi = parse_permutation(top_text);
      json list = json::array();
      for (const auto& d : scan_disconnected_subintervals(sigma, pi, min_rank, scan_limit))
        list.push_back(interval_text(d.lower, d.upper));
      Output o(out, out_path, false);
      Emitter(o.stream(), format)
          .record({{"bottom", sigma.to_string()},
                   {"top", pi.to_string()},
                   {"min_rank", min_rank},
                   {"disconnected", list},
                   {"count", list.size()}});
    } else if (scan_conj->parsed()) {
      if (resume && !out_path) throw PreconditionError("--resume needs --out");
      if (resume && format != OutputFormat::kJson) throw PreconditionError("--resume works on JSON-lines output only");
      const auto subjects = conjecture_subjects(scan_max_length);
      const std::size_t done = resume ? resume_prefix(*out_path, subjects) : 0;
      Output o(out, out_path, resume);
      Emitter emit(o.stream(), format, conjecture_columns());
      emit.header();
      const std::size_t batch = std::max<std::size_t>(8, 4 * config.parallel_width);
      for (std::size_t start = done; start < subjects.size(); start += batch) {
        const std::vector<Permutation> chunk(subjects.begin() + static_cast<std::ptrdiff_t>(start),
                                             subjects.begin() + static_cast<std::ptrdiff_t>(std::min(start + batch, subjects.size())));
        const auto records = ordered_map(
            chunk, [&](const Permutation& pi) { return conjecture_record(pi, config, scan_limit, betti_max_length); },
            config.parallel_width);
        for (const auto& r : records) emit.record(r.to_json());
        emit.flush();
      }
    } else if (enumerate->parsed()) {
      if (enum_length < 1 || enum_descents < 0 || enum_descents >= enum_length)
        throw PreconditionError("enumerate needs length >= 1 and 0 <= descents < length");
      std::vector<std::string> items;
      if (enum_words) {
        for (const auto& w : enumerate_ahat_k(enum_descents + 1, enum_length)) items.push_back(w.to_string());
      } else {
        for (const auto& p : permutations_with_descents(enum_length, enum_descents)) items.push_back(p.to_string());
      }
      Output o(out, out_path, false);
      Emitter emit(o.stream(), format);
      if (format == OutputFormat::kJson) {
        emit.record({{"length", enum_length},
                     {"descents", enum_descents},
                     {"kind", enum_words ? "words" : "permutations"},
                     {"items", items},
                     {"count", items.size()}});
      } else {
        if (format == OutputFormat::kCsv) emit.line("item");
        for (const auto& i : items) emit.line(format == OutputFormat::kCsv ? csv_escape(i) : i);
        if (format == OutputFormat::kText) emit.line("count: " + std::to_string(items.size()));
      }
    } else if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
        names.push_back(suite);
      } else {
        throw ParseError("unknown suite '" + suite + "'");
      }
      vopt.parallel_width = config.parallel_width;
      Output o(out, out_path, false);
      Emitter emit(o.stream(), format);
      bool all_passed = true;
      for (const auto& name : names) {
        const SuiteReport report = run_suite(name, vopt);
        all_passed = all_passed && report.passed();
        if (format == OutputFormat::kJson) {
          emit.record(report.to_json());
        } else {
          emit.record({{"suite", report.suite},
                       {"max_length", report.max_length},
                       {"checked", report.checked},
                       {"passed", report.passed()},
                       {"failure_count", report.failure_count}});
        }
        emit.flush();
      }
      if (!all_passed) return kExitVerification;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace descent_poset
