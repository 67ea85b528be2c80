#include "descent_poset/moebius.hpp"

#include "descent_poset/checked.hpp"
#include "descent_poset/enumerate.hpp"
#include "descent_poset/errors.hpp"

namespace descent_poset {

std::vector<std::int64_t> mobius_from_bottom(const Interval& interval) {
  std::vector<std::int64_t> mu(interval.size(), 0);
  mu[0] = 1;
  for (std::size_t z = 1; z < interval.size(); ++z) {
    const auto& below = interval.below(z);
    std::int64_t sum = 0;
    for (std::size_t y = below.find_first(); y != Interval::Bits::npos; y = below.find_next(y))
      if (y != z) sum = checked_add(sum, mu[y]);
    mu[z] = checked_neg(sum);
  }
  return mu;
}

std::int64_t mobius_recursive(const Interval& interval) { return mobius_from_bottom(interval).back(); }

std::int64_t mobius_recursive(const Permutation& sigma, const Permutation& pi, std::size_t max_top_length) {
  if (sigma == pi) return 1;
  if (!contains(pi, sigma)) return 0;
  return mobius_recursive(Interval::build(sigma, pi, max_top_length));
}

namespace {

void require_same_descents(const Permutation& sigma, const Permutation& pi) {
  if (sigma.descent_count() != pi.descent_count())
    throw PreconditionError("descent counts differ: " + sigma.to_string() + " has " +
                            std::to_string(sigma.descent_count()) + ", " + pi.to_string() + " has " +
                            std::to_string(pi.descent_count()));
}

void require_one_descent(const Permutation& p) {
  if (p.descent_count() != 1)
    throw PreconditionError(p.to_string() + " has " + std::to_string(p.descent_count()) +
                            " descents, exactly one required");
}

}  // namespace

std::int64_t mobius_fixed_descent(const Permutation& sigma, const Permutation& pi) {
  require_same_descents(sigma, pi);
  if (sigma.size() > pi.size()) return 0;
  const auto gap = static_cast<std::int64_t>(pi.size() - sigma.size());
  return checked_mul(sign_power(gap), count_normal_embeddings(sigma, pi));
}

bool mobius_zero_by_tails(const Permutation& sigma, const Permutation& pi) {
  require_same_descents(sigma, pi);
  return tail_total(pi) > sigma.size();
}

bool occurrence_bound_holds(const Permutation& sigma, const Permutation& pi) {
  require_same_descents(sigma, pi);
  const std::int64_t mu = mobius_fixed_descent(sigma, pi);
  const auto occ = static_cast<std::int64_t>(occurrences(sigma, pi).size());
  return (mu < 0 ? -mu : mu) <= occ;
}

std::string_view case_label(OneDescentCase c) {
  switch (c) {
    case OneDescentCase::kBeginsOrEndsWithPair: return "begins-12-or-ends-(n-1)n";
    case OneDescentCase::kTripleAdjacency: return "triple-adjacency";
    case OneDescentCase::kMoreThanTwoPairs: return "more-than-two-pairs";
    case OneDescentCase::kTwoPairsDecreasing: return "two-pairs-decreasing";
    case OneDescentCase::kTwoPairsIncreasing: return "two-pairs-increasing";
    case OneDescentCase::kOnePairBeforeDescent: return "one-pair-before-descent";
    case OneDescentCase::kOnePairBeforeDescentStarts1: return "one-pair-before-descent-starts-1";
    case OneDescentCase::kOnePairAfterDescent: return "one-pair-after-descent";
    case OneDescentCase::kOnePairAfterDescentEndsN: return "one-pair-after-descent-ends-n";
    case OneDescentCase::kNoAdjacencyEvenW: return "no-adjacency-even-W";
    case OneDescentCase::kNoAdjacencyEvenM: return "no-adjacency-even-M";
    case OneDescentCase::kNoAdjacencyOdd: return "no-adjacency-odd";
  }
  return "unknown";
}

std::vector<OneDescentClassification> one_descent_case_hits(const Permutation& pi) {
  require_one_descent(pi);
  const auto n = static_cast<std::int64_t>(pi.size());
  if (n <= 2) throw PreconditionError("classification needs length > 2");
  const auto d = static_cast<std::int64_t>(pi.descents().front());
  const std::int64_t sign = (n % 2 == 1) ? 1 : -1;
  const auto& p = pi.letters();

  // Adjacency pairs as (position, value) of their first letter, by position.
  struct Pair {
    std::int64_t pos;
    int value;
  };
  std::vector<Pair> pairs;
  bool triple = false;
  for (const auto& b : adjacency_blocks(pi)) {
    triple = triple || b.length >= 3;
    for (std::size_t k = 0; k + 1 < b.length; ++k)
      pairs.push_back({static_cast<std::int64_t>(b.start_pos + k), b.start_value + static_cast<int>(k)});
  }

  std::vector<OneDescentClassification> hits;
  const bool begins12 = p[0] == 1 && p[1] == 2;
  const bool ends_top = p[p.size() - 2] == n - 1 && p.back() == n;
  if (begins12 || ends_top) hits.push_back({OneDescentCase::kBeginsOrEndsWithPair, 0});
  if (triple) hits.push_back({OneDescentCase::kTripleAdjacency, 0});

  if (pairs.size() > 2) {
    hits.push_back({OneDescentCase::kMoreThanTwoPairs, 0});
  } else if (pairs.size() == 2) {
    if (pairs[0].value > pairs[1].value)
      hits.push_back({OneDescentCase::kTwoPairsDecreasing, sign});
    else
      hits.push_back({OneDescentCase::kTwoPairsIncreasing, 0});
  } else if (pairs.size() == 1) {
    const std::int64_t i = pairs[0].pos;
    if (i < d) {
      if (p[0] != 1)
        hits.push_back({OneDescentCase::kOnePairBeforeDescent, sign * i});
      else
        hits.push_back({OneDescentCase::kOnePairBeforeDescentStarts1, sign * (i - 1)});
    } else {
      if (p.back() != n)
        hits.push_back({OneDescentCase::kOnePairAfterDescent, sign * (n - i)});
      else
        hits.push_back({OneDescentCase::kOnePairAfterDescentEndsN, sign * (n - i - 1)});
    }
  } else if (n % 2 == 1) {
    hits.push_back({OneDescentCase::kNoAdjacencyOdd, binomial((n + 1) / 2, 2)});
  } else if (p[0] == 1) {
    hits.push_back({OneDescentCase::kNoAdjacencyEvenW, -binomial(n / 2, 2)});
  } else if (p[0] == 2) {
    hits.push_back({OneDescentCase::kNoAdjacencyEvenM, -binomial(n / 2 + 1, 2)});
  } else {
    throw VerificationFailure("adjacency-free one-descent permutation " + pi.to_string() + " is neither M_n nor W_n");
  }
  return hits;
}

OneDescentClassification classify_one_descent(const Permutation& pi) { return one_descent_case_hits(pi).front(); }

std::int64_t mobius_from_one(const Permutation& pi) {
  require_one_descent(pi);
  return checked_neg(mobius_fixed_descent(Permutation({2, 1}), pi));
}

namespace {

// Letter `value` sits at or before the descent.
bool before_descent(const Permutation& p, int value) { return p.position_of(value) <= p.descents().front(); }

}  // namespace

bool related(const Permutation& a, const Permutation& b) {
  require_one_descent(a);
  require_one_descent(b);
  return before_descent(a, 1) == before_descent(b, 1);
}

std::int64_t mobius_bottom_closed_form(const Permutation& sigma, int n, TopKind top_kind) {
  require_one_descent(sigma);
  if (n < 2) throw PreconditionError("top length must be >= 2");
  const Permutation top = top_kind == TopKind::kM ? m_permutation(n) : w_permutation(n);
  require_one_descent(top);
  if (!contains(top, sigma)) throw PreconditionError(sigma.to_string() + " is not contained in " + top.to_string());
  const auto m = static_cast<std::int64_t>(sigma.size());
  const auto i = static_cast<std::int64_t>(adjacency_pairs(sigma));
  const std::int64_t a = related(sigma, top) ? 0 : 1;
  return checked_mul(sign_power(n - m), binomial((n + m - i - a) / 2, m));
}

bool max_side_parity(const Permutation& sigma) {
  require_one_descent(sigma);
  return before_descent(sigma, 1) == before_descent(sigma, static_cast<int>(sigma.size()));
}

}  // namespace descent_poset
