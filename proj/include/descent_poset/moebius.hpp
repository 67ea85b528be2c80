#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "descent_poset/interval.hpp"
#include "descent_poset/permutation.hpp"

namespace descent_poset {

// ---------------------------------------------------------------------------
// Recursive oracle
// ---------------------------------------------------------------------------

// mu(bottom, z) for every element z of the interval, by the defining
// recursion mu(a, a) = 1, mu(a, b) = -sum_{a <= z < b} mu(a, z). The vector
// is the memo table for one evaluation.
std::vector<std::int64_t> mobius_from_bottom(const Interval& interval);

// mu(bottom, top) of a materialized interval.
std::int64_t mobius_recursive(const Interval& interval);

// mu(sigma, pi) by the recursion over [sigma, pi]; 0 when sigma is not
// contained in pi. This is the reference every faster path is checked
// against.
std::int64_t mobius_recursive(const Permutation& sigma, const Permutation& pi,
                              std::size_t max_top_length = kDefaultMaxTopLength);

// ---------------------------------------------------------------------------
// Equal descent counts
// ---------------------------------------------------------------------------

// (-1)^{|pi| - |sigma|} times the number of normal embeddings. Throws
// PreconditionError when des(sigma) != des(pi).
std::int64_t mobius_fixed_descent(const Permutation& sigma, const Permutation& pi);

// Sufficient zero test: the tails of pi hold more letters than |sigma|.
// Throws PreconditionError when des(sigma) != des(pi).
bool mobius_zero_by_tails(const Permutation& sigma, const Permutation& pi);

// |mu(sigma, pi)| <= number of occurrences of sigma in pi. Always holds;
// exposed as a checkable predicate. Throws on unequal descent counts.
bool occurrence_bound_holds(const Permutation& sigma, const Permutation& pi);

// ---------------------------------------------------------------------------
// One descent, bottom 1
// ---------------------------------------------------------------------------

enum class OneDescentCase {
  kBeginsOrEndsWithPair,        // begins 12 or ends (n-1)n
  kTripleAdjacency,
  kMoreThanTwoPairs,
  kTwoPairsDecreasing,          // first pair has greater value
  kTwoPairsIncreasing,          // first pair has lower value
  kOnePairBeforeDescent,
  kOnePairBeforeDescentStarts1,
  kOnePairAfterDescent,
  kOnePairAfterDescentEndsN,
  kNoAdjacencyEvenW,
  kNoAdjacencyEvenM,
  kNoAdjacencyOdd,
};

std::string_view case_label(OneDescentCase c);

struct OneDescentClassification {
  OneDescentCase case_id;
  std::int64_t value = 0;  // mu(1, pi)

  std::string_view label() const { return case_label(case_id); }
};

// Structural classification of pi (one descent, |pi| > 2) from the number and
// positions of its adjacencies. Returns the first matching case in the order
// begins/ends, triple, >2 pairs, 2 pairs, 1 pair, none.
OneDescentClassification classify_one_descent(const Permutation& pi);

// Every case whose predicate pi satisfies, with the value that case assigns.
// Used to check that overlapping cases agree.
std::vector<OneDescentClassification> one_descent_case_hits(const Permutation& pi);

// mu(1, pi) = -mu(21, pi) for pi with one descent.
std::int64_t mobius_from_one(const Permutation& pi);

// ---------------------------------------------------------------------------
// Bottom with one descent, top M_n or W_n
// ---------------------------------------------------------------------------

enum class TopKind { kM, kW };

// Two one-descent permutations are related when letter 1 lies on the same
// side of the descent in both.
bool related(const Permutation& a, const Permutation& b);

// (-1)^{n-m} C(floor((n + m - i - a) / 2), m) with m = |sigma|, i the
// adjacency pairs of sigma and a = 0 iff sigma is related to the top.
std::int64_t mobius_bottom_closed_form(const Permutation& sigma, int n, TopKind top_kind);

// Whether the largest letter and the letter 1 of sigma lie on the same side
// of its descent. Throws unless sigma has exactly one descent.
bool max_side_parity(const Permutation& sigma);

}  // namespace descent_poset
