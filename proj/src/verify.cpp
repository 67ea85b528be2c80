#include "descent_poset/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "descent_poset/bijection.hpp"
#include "descent_poset/enumerate.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/moebius.hpp"
#include "descent_poset/parallel.hpp"
#include "descent_poset/topology.hpp"
#include "descent_poset/word.hpp"

namespace descent_poset {

using json = nlohmann::ordered_json;

json SuiteReport::to_json() const {
  json failures_json = json::array();
  for (const auto& f : failures) failures_json.push_back({{"what", f.what}, {"payload", f.payload}});
  return {{"suite", suite},           {"max_length", max_length}, {"checked", checked},
          {"passed", passed()},       {"failure_count", failure_count}, {"failures", failures_json},
          {"notes", notes}};
}

namespace {

// Per-task tally, merged into the report in input order.
struct Tally {
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  std::vector<CheckFailure> failures;

  void check(bool ok, const std::string& what, json payload) {
    ++checked;
    if (ok) return;
    ++failure_count;
    if (failures.size() < 20) failures.push_back({what, std::move(payload)});
  }
};

void merge(SuiteReport& report, const Tally& t, std::size_t cap) {
  report.checked += t.checked;
  report.failure_count += t.failure_count;
  for (const auto& f : t.failures)
    if (report.failures.size() < cap) report.failures.push_back(f);
}

std::vector<Permutation> permutations_up_to(std::size_t max_length, std::size_t min_length = 1) {
  std::vector<Permutation> out;
  for (std::size_t n = min_length; n <= max_length; ++n)
    for (auto& p : all_permutations(static_cast<int>(n))) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> one_descent_up_to(std::size_t max_length, std::size_t min_length) {
  std::vector<Permutation> out;
  for (std::size_t n = std::max<std::size_t>(min_length, 2); n <= max_length; ++n)
    for (auto& p : permutations_with_descents(static_cast<int>(n), 1)) out.push_back(std::move(p));
  return out;
}

const Permutation& one() {
  static const Permutation p({1});
  return p;
}

// Runs fn(pi, [1, pi]) for every pi in tops, in parallel, merging tallies.
void over_downsets(SuiteReport& report, const VerifyOptions& opt, const std::vector<Permutation>& tops,
                   const std::function<void(const Permutation&, const Interval&, Tally&)>& fn) {
  auto tallies = ordered_map(
      tops,
      [&](const Permutation& pi) {
        Tally t;
        const Interval down = Interval::build(one(), pi, std::max(pi.size(), kDefaultMaxTopLength));
        fn(pi, down, t);
        return t;
      },
      opt.parallel_width);
  for (const auto& t : tallies) merge(report, t, opt.max_failures_reported);
}

json pair_payload(const Permutation& sigma, const Permutation& pi) {
  return {{"bottom", sigma.to_string()}, {"top", pi.to_string()}};
}

// -- suites -----------------------------------------------------------------

void suite_bijection(SuiteReport& r, const VerifyOptions& opt) {
  Tally t;
  for (const auto& pi : permutations_up_to(opt.max_length)) {
    const Word w = perm_to_word(pi);
    t.check(word_to_perm(w) == pi, "g(f(pi)) = pi", {{"pi", pi.to_string()}, {"f", w.to_string()}});
    t.check(is_ahat_k_member(w, static_cast<int>(pi.descent_count()) + 1), "f(pi) in class with max = des + 1",
            {{"pi", pi.to_string()}, {"f", w.to_string()}});
  }
  for (std::size_t n = 1; n <= opt.max_length; ++n) {
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      for (const auto& w : enumerate_ahat_k(k, static_cast<int>(n))) {
        const Permutation p = word_to_perm(w);
        t.check(perm_to_word(p) == w, "f(g(w)) = w", {{"w", w.to_string()}, {"g", p.to_string()}});
        t.check(static_cast<int>(p.descent_count()) == k - 1, "des(g(w)) = max(w) - 1",
                {{"w", w.to_string()}, {"g", p.to_string()}});
      }
    }
  }
  merge(r, t, opt.max_failures_reported);

  // Order isomorphism at fixed descent count: containment from the deletion
  // closure of pi versus subword order on the images.
  const std::size_t iso_length = std::min<std::size_t>(opt.max_length, 7);
  std::map<std::size_t, std::vector<Permutation>> by_descents;
  for (auto& p : permutations_up_to(iso_length)) by_descents[p.descent_count()].push_back(std::move(p));
  r.notes["order_isomorphism_max_length"] = iso_length;
  over_downsets(r, opt, permutations_up_to(iso_length), [&](const Permutation& pi, const Interval& down, Tally& tt) {
    const Word fpi = perm_to_word(pi);
    for (const auto& sigma : by_descents[pi.descent_count()]) {
      if (sigma.size() > pi.size()) break;
      const bool below = down.index_of(sigma).has_value();
      tt.check(below == is_subword(perm_to_word(sigma), fpi), "sigma <= pi iff f(sigma) <= f(pi)",
               pair_payload(sigma, pi));
    }
  });
  // f fails to preserve order across descent counts. Under the generalised
  // word order (letters compared as integers) f is order-preserving while g
  // is not.
  const auto dominated = [](const Word& v, const Word& w) {
    std::size_t j = 0;
    for (int a : v.letters()) {
      while (j < w.size() && w.letters()[j] < a) ++j;
      if (j++ == w.size()) return false;
    }
    return true;
  };
  const Permutation p132({1, 3, 2});
  const Permutation p2143({2, 1, 4, 3});
  const Word w211({2, 1, 1});
  const Word w212({2, 1, 2});
  Tally reg;
  reg.check(contains(p2143, p132) && !is_subword(perm_to_word(p132), perm_to_word(p2143)),
            "132 <= 2143 while f(132) is not a subword of f(2143)", {});
  reg.check(dominated(w211, w212) && !contains(word_to_perm(w212), word_to_perm(w211)),
            "211 <= 212 in the generalised order while g(211) is not <= g(212)", {});
  merge(r, reg, opt.max_failures_reported);
}

void suite_counting(SuiteReport& r, const VerifyOptions& opt) {
  Tally t;
  json table = json::array();
  for (std::size_t n = 1; n <= opt.max_length; ++n) {
    json row = json::array();
    for (int k = 0; k < static_cast<int>(n); ++k) {
      const auto perms = permutations_with_descents(static_cast<int>(n), k);
      const auto words = enumerate_ahat_k(k + 1, static_cast<int>(n));
      std::vector<Word> images;
      for (const auto& p : perms) images.push_back(perm_to_word(p));
      std::sort(images.begin(), images.end());
      auto sorted_words = words;
      std::sort(sorted_words.begin(), sorted_words.end());
      t.check(perms.size() == words.size(), "|P(n,k)| = |A(k+1,n)|",
              {{"n", n}, {"k", k}, {"perms", perms.size()}, {"words", words.size()}});
      t.check(images == sorted_words, "f maps P(n,k) onto A(k+1,n)", {{"n", n}, {"k", k}});
      row.push_back(perms.size());
    }
    table.push_back(row);
  }
  r.notes["eulerian_by_enumeration"] = table;
  merge(r, t, opt.max_failures_reported);
}

std::int64_t filtered_normal_count(const std::vector<Embedding>& embs, const std::vector<std::size_t>& tails) {
  std::int64_t c = 0;
  for (const auto& e : embs)
    if (std::all_of(tails.begin(), tails.end(), [&](std::size_t pos) { return e.slots[pos - 1] != 0; })) ++c;
  return c;
}

void suite_normal_embeddings(SuiteReport& r, const VerifyOptions& opt) {
  over_downsets(r, opt, permutations_up_to(opt.max_length), [&](const Permutation& pi, const Interval& down, Tally& t) {
    const auto tails = tail_positions(pi);
    for (const auto& sigma : down.elements()) {
      const auto embs = embeddings(sigma, pi);
      const std::int64_t oracle = filtered_normal_count(embs, tails);
      t.check(count_normal_embeddings(sigma, pi) == oracle, "normal embedding count = filtered enumeration",
              pair_payload(sigma, pi));
      t.check(embs.size() == occurrences(sigma, pi).size(), "|embeddings| = |occurrences|", pair_payload(sigma, pi));
      if (sigma.descent_count() == pi.descent_count()) {
        const Word fs = perm_to_word(sigma);
        const Word fp = perm_to_word(pi);
        t.check(filtered_normal_count(word_embeddings(fs, fp), word_tail_positions(fp)) == oracle,
                "normality transports through f", pair_payload(sigma, pi));
      }
    }
    // Adjacency blocks of pi are the equal-letter blocks of f(pi).
    std::vector<std::size_t> lengths_perm;
    for (const auto& b : adjacency_blocks(pi)) lengths_perm.push_back(b.length);
    std::vector<std::size_t> lengths_word;
    const Word fp = perm_to_word(pi);
    for (std::size_t i = 0; i < fp.size();) {
      std::size_t j = i;
      while (j + 1 < fp.size() && fp.letters()[j + 1] == fp.letters()[i]) ++j;
      if (j > i) lengths_word.push_back(j - i + 1);
      i = j + 1;
    }
    std::sort(lengths_perm.begin(), lengths_perm.end());
    std::sort(lengths_word.begin(), lengths_word.end());
    t.check(lengths_perm == lengths_word, "adjacency blocks match equal-letter blocks of f(pi)", {{"pi", pi.to_string()}});
  });
}

void suite_fixed_descent(SuiteReport& r, const VerifyOptions& opt) {
  const std::size_t exhaustive = std::min<std::size_t>(opt.max_length, 7);
  over_downsets(r, opt, permutations_up_to(exhaustive), [&](const Permutation& pi, const Interval& down, Tally& t) {
    for (std::size_t i = 0; i < down.size(); ++i) {
      const auto& sigma = down.element(i);
      if (sigma.descent_count() != pi.descent_count()) continue;
      const std::int64_t oracle = mobius_recursive(down.subinterval(i, down.top_index()));
      const std::int64_t fast = mobius_fixed_descent(sigma, pi);
      t.check(fast == oracle, "fixed-descent formula = recursion",
              {{"bottom", sigma.to_string()}, {"top", pi.to_string()}, {"formula", fast}, {"recursive", oracle}});
    }
  });
  r.notes["exhaustive_max_length"] = exhaustive;

  if (opt.max_length >= 8 && opt.random_samples > 0) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<Permutation, Permutation>> samples;
    std::uniform_int_distribution<std::size_t> pick_len(8, opt.max_length);
    while (samples.size() < opt.random_samples) {
      const std::size_t n = pick_len(rng);
      std::vector<int> letters(n);
      std::iota(letters.begin(), letters.end(), 1);
      std::shuffle(letters.begin(), letters.end(), rng);
      const Permutation pi(letters);
      std::vector<int> sub;
      for (int v : letters)
        if (rng() & 1U) sub.push_back(v);
      if (sub.empty()) continue;
      const Permutation sigma = standardize(sub);
      if (sigma.descent_count() != pi.descent_count()) continue;
      samples.emplace_back(sigma, pi);
    }
    auto tallies = ordered_map(
        samples,
        [&](const std::pair<Permutation, Permutation>& s) {
          Tally t;
          const std::int64_t oracle = mobius_recursive(s.first, s.second, std::max<std::size_t>(s.second.size(), 14));
          const std::int64_t fast = mobius_fixed_descent(s.first, s.second);
          t.check(fast == oracle, "fixed-descent formula = recursion (random)",
                  {{"bottom", s.first.to_string()}, {"top", s.second.to_string()}, {"formula", fast}, {"recursive", oracle}});
          return t;
        },
        opt.parallel_width);
    for (const auto& t : tallies) merge(r, t, opt.max_failures_reported);
    r.notes["random_samples"] = samples.size();
    r.notes["seed"] = opt.seed;
  }
}

void suite_classifier(SuiteReport& r, const VerifyOptions& opt) {
  const Permutation two_one({2, 1});
  std::size_t overlaps = 0;
  auto tops = one_descent_up_to(opt.max_length, 3);
  auto tallies = ordered_map(
      tops,
      [&](const Permutation& pi) {
        Tally t;
        const Interval down = Interval::build(one(), pi, std::max(pi.size(), kDefaultMaxTopLength));
        const auto mu_bottom = mobius_from_bottom(down);
        const std::int64_t mu1 = mu_bottom.back();
        const std::int64_t mu21 = mobius_recursive(down.subinterval(*down.index_of(two_one), down.top_index()));
        const auto hits = one_descent_case_hits(pi);
        const auto& first = hits.front();
        const json payload = {{"pi", pi.to_string()}, {"case", std::string(first.label())}, {"classifier", first.value},
                              {"mu(1,pi)", mu1},      {"mu(21,pi)", mu21}};
        t.check(first.value == mu1, "classifier = mu(1, pi)", payload);
        t.check(mu1 == -mu21, "mu(1, pi) = -mu(21, pi)", payload);
        t.check(mobius_from_one(pi) == mu1, "mobius_from_one = mu(1, pi)", payload);
        if (mu1 != 0) t.check((mu1 > 0) == (pi.size() % 2 == 1), "sign positive iff n odd", payload);
        for (const auto& h : hits)
          t.check(h.value == first.value, "overlapping cases agree",
                  {{"pi", pi.to_string()}, {"case", std::string(h.label())}, {"value", h.value}});
        return std::make_pair(t, hits.size() > 1);
      },
      opt.parallel_width);
  for (const auto& [t, overlapped] : tallies) {
    merge(r, t, opt.max_failures_reported);
    overlaps += overlapped ? 1 : 0;
  }
  r.notes["permutations"] = tops.size();
  r.notes["overlapping_case_hits"] = overlaps;
}

void suite_closed_form(SuiteReport& r, const VerifyOptions& opt) {
  std::vector<std::pair<std::size_t, TopKind>> tops;
  for (std::size_t n = 2; n <= opt.max_length; ++n) {
    tops.emplace_back(n, TopKind::kM);
    if (n >= 3) tops.emplace_back(n, TopKind::kW);
  }
  auto tallies = ordered_map(
      tops,
      [&](const std::pair<std::size_t, TopKind>& tk) {
        Tally t;
        const auto [n, kind] = tk;
        const Permutation top = kind == TopKind::kM ? m_permutation(static_cast<int>(n)) : w_permutation(static_cast<int>(n));
        const Interval down = Interval::build(one(), top, std::max(n, kDefaultMaxTopLength));
        for (std::size_t i = 0; i < down.size(); ++i) {
          const auto& sigma = down.element(i);
          if (sigma.descent_count() != 1 || sigma.size() > 7) continue;
          const std::int64_t oracle = mobius_recursive(down.subinterval(i, down.top_index()));
          const std::int64_t closed = mobius_bottom_closed_form(sigma, static_cast<int>(n), kind);
          t.check(closed == oracle, "closed form = recursion",
                  {{"bottom", sigma.to_string()}, {"top", top.to_string()}, {"closed_form", closed}, {"recursive", oracle}});
        }
        return t;
      },
      opt.parallel_width);
  for (const auto& t : tallies) merge(r, t, opt.max_failures_reported);

  Tally parity;
  for (const auto& sigma : one_descent_up_to(opt.max_length, 2)) {
    const auto m = static_cast<std::int64_t>(sigma.size());
    const auto i = static_cast<std::int64_t>(adjacency_pairs(sigma));
    parity.check(max_side_parity(sigma) == ((m - i) % 2 != 0), "max letter beside 1 iff m - i odd",
                 {{"sigma", sigma.to_string()}});
  }
  merge(r, parity, opt.max_failures_reported);
}

void suite_euler(SuiteReport& r, const VerifyOptions& opt) {
  over_downsets(r, opt, permutations_up_to(opt.max_length), [&](const Permutation& pi, const Interval& down, Tally& t) {
    for (std::size_t i = 0; i + 1 < down.size(); ++i) {
      const Interval sub = down.subinterval(i, down.top_index());
      const std::int64_t mu = mobius_recursive(sub);
      const OrderComplex complex = OrderComplex::of(sub);
      const std::int64_t chi = euler_characteristic(complex);
      t.check(chi == mu, "reduced Euler characteristic = mu",
              {{"bottom", down.element(i).to_string()}, {"top", pi.to_string()}, {"euler", chi}, {"mu", mu}});
      const auto expected = sub.rank() - 1;
      for (const auto& facet : complex.facets())
        t.check(facet.size() == expected, "order complex is pure", pair_payload(down.element(i), pi));
      if (pi.size() <= 6) {
        const BettiVector b = betti_gf2(complex);
        t.check(b.euler == chi, "alternating Betti sum = Euler characteristic", pair_payload(down.element(i), pi));
      }
    }
  });
}

void suite_wedge(SuiteReport& r, const VerifyOptions& opt) {
  over_downsets(r, opt, permutations_up_to(opt.max_length), [&](const Permutation& pi, const Interval& down, Tally& t) {
    for (std::size_t i = 0; i + 1 < down.size(); ++i) {
      const auto& sigma = down.element(i);
      if (sigma.descent_count() != pi.descent_count()) continue;
      const Interval sub = down.subinterval(i, down.top_index());
      const BettiVector b = betti_gf2(OrderComplex::of(sub));
      json reduced = b.reduced;
      t.check(wedge_check(sigma, pi, b), "Betti numbers concentrated in top dimension with value |mu|",
              {{"bottom", sigma.to_string()}, {"top", pi.to_string()}, {"betti_from_-1", reduced}});
    }
  });
}

void suite_suspension(SuiteReport& r, const VerifyOptions& opt) {
  auto tops = one_descent_up_to(opt.max_length, 3);
  auto tallies = ordered_map(
      tops,
      [&](const Permutation& pi) {
        Tally t;
        t.check(suspension_betti_check(pi, std::max(pi.size(), kDefaultMaxTopLength)),
                "Betti numbers of (1, pi) are those of (21, pi) shifted by one", {{"pi", pi.to_string()}});
        return t;
      },
      opt.parallel_width);
  for (const auto& t : tallies) merge(r, t, opt.max_failures_reported);
}

void suite_zero_set(SuiteReport& r, const VerifyOptions& opt) {
  std::size_t disconnected = 0;
  auto tops = permutations_up_to(opt.max_length, 4);
  auto tallies = ordered_map(
      tops,
      [&](const Permutation& beta) {
        Tally t;
        std::size_t found = 0;
        const Interval down = Interval::build(one(), beta, std::max(beta.size(), kDefaultMaxTopLength));
        for (std::size_t i = 0; i < down.size(); ++i) {
          const auto& alpha = down.element(i);
          if (alpha.size() + 3 > beta.size()) break;
          if (interior_connected(down, i, down.top_index())) continue;
          ++found;
          t.check(zero_set_partition_exists(alpha, beta), "disconnected interval has a zero-set partition",
                  pair_payload(alpha, beta));
        }
        return std::make_pair(t, found);
      },
      opt.parallel_width);
  for (const auto& [t, found] : tallies) {
    merge(r, t, opt.max_failures_reported);
    disconnected += found;
  }
  r.notes["disconnected_intervals_rank_ge_3"] = disconnected;
}

void suite_no_disconnected(SuiteReport& r, const VerifyOptions& opt) {
  auto tops = one_descent_up_to(opt.max_length, 2);
  auto tallies = ordered_map(
      tops,
      [&](const Permutation& pi) {
        Tally t;
        const bool avoids = shellability_obstruction(pi).empty();
        const auto found = scan_disconnected_subintervals(one(), pi, 3, std::max(pi.size(), kDefaultScanMaxTopLength));
        if (avoids) {
          json list = json::array();
          for (const auto& d : found) list.push_back(d.lower.to_string() + "/" + d.upper.to_string());
          t.check(found.empty(), "avoiding pi has no disconnected subinterval of rank >= 3",
                  {{"pi", pi.to_string()}, {"found", list}});
        } else {
          t.check(!found.empty(), "pi containing an obstruction has a disconnected subinterval", {{"pi", pi.to_string()}});
        }
        return std::make_pair(t, avoids);
      },
      opt.parallel_width);
  std::size_t avoiding = 0;
  for (const auto& [t, avoids] : tallies) {
    merge(r, t, opt.max_failures_reported);
    avoiding += avoids ? 1 : 0;
  }
  r.notes["one_descent_permutations"] = tops.size();
  r.notes["avoiding_obstructions"] = avoiding;
}

void suite_tails(SuiteReport& r, const VerifyOptions& opt) {
  over_downsets(r, opt, permutations_up_to(opt.max_length), [&](const Permutation& pi, const Interval& down, Tally& t) {
    for (std::size_t i = 0; i < down.size(); ++i) {
      const auto& sigma = down.element(i);
      if (sigma.descent_count() != pi.descent_count()) continue;
      t.check(occurrence_bound_holds(sigma, pi), "|mu| <= occurrences", pair_payload(sigma, pi));
      if (mobius_zero_by_tails(sigma, pi)) {
        const std::int64_t mu = mobius_recursive(down.subinterval(i, down.top_index()));
        t.check(mu == 0, "more tail letters than |sigma| forces mu = 0", pair_payload(sigma, pi));
      }
    }
  });

  const Permutation s213({2, 1, 3});
  const Permutation p9({5, 6, 9, 3, 4, 1, 2, 7, 8});
  bool rejected = false;
  try {
    (void)mobius_zero_by_tails(s213, p9);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  Tally t;
  t.check(rejected, "cross-descent pair is rejected by the tail test", pair_payload(s213, p9));
  merge(r, t, opt.max_failures_reported);
  r.notes["cross_descent_pair"] = {{"bottom", s213.to_string()},
                                   {"top", p9.to_string()},
                                   {"descents", {s213.descent_count(), p9.descent_count()}},
                                   {"tail_total", tail_total(p9)},
                                   {"rejected", rejected},
                                   {"mu_recursive", mobius_recursive(s213, p9)}};
  r.notes["mu(312,6745123)"] = mobius_recursive(Permutation({3, 1, 2}), Permutation({6, 7, 4, 5, 1, 2, 3}));
}

using SuiteFn = void (*)(SuiteReport&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"bijection", suite_bijection},
      {"counting", suite_counting},
      {"normal-embeddings", suite_normal_embeddings},
      {"prop-mob", suite_fixed_descent},
      {"thm-main", suite_classifier},
      {"closed-form", suite_closed_form},
      {"euler", suite_euler},
      {"wedge", suite_wedge},
      {"suspension", suite_suspension},
      {"zero-set", suite_zero_set},
      {"no-disconnected", suite_no_disconnected},
      {"tails", suite_tails},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name != name) continue;
    SuiteReport report;
    report.suite = suite_name;
    report.max_length = options.max_length;
    fn(report, options);
    return report;
  }
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

}  // namespace descent_poset
