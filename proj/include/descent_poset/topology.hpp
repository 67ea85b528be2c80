#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "descent_poset/interval.hpp"
#include "descent_poset/permutation.hpp"

namespace descent_poset {

// The order complex of the open interval (bottom, top): faces are the chains
// of interior elements. Facets are the maximal chains; lower faces are
// generated from the interior order relation on demand.
class OrderComplex {
 public:
  using Bits = boost::dynamic_bitset<>;

  // Requires rank >= 1. A rank-1 interval gives the empty complex, whose
  // only face is the empty face.
  static OrderComplex of(const Interval& interval);

  const std::vector<Permutation>& vertices() const { return vertices_; }
  // Each facet lists vertex indices from bottom to top of the chain.
  const std::vector<std::vector<std::size_t>>& facets() const { return facets_; }
  std::size_t rank() const { return rank_; }
  // rank - 2; -1 for the empty complex.
  int dimension() const { return static_cast<int>(rank_) - 2; }
  // less(u, v): vertex u lies strictly below vertex v.
  bool less(std::size_t u, std::size_t v) const { return above_[u].test(v); }
  const Bits& strictly_above(std::size_t u) const { return above_[u]; }

  // f[s] = number of faces with s vertices, s = 0 .. dimension + 1, counted
  // by a chain DP over the interior (f[0] = 1 for the empty face).
  std::vector<std::int64_t> face_counts() const;

 private:
  std::vector<Permutation> vertices_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<Bits> above_;
  std::size_t rank_ = 0;
};

// Throws PreconditionError unless bottom < top (rank >= 1).
OrderComplex order_complex(const Permutation& bottom, const Permutation& top,
                           std::size_t max_top_length = kDefaultMaxTopLength);

// Reduced Euler characteristic: sum over faces of (-1)^dim, with the empty
// face in dimension -1.
std::int64_t euler_characteristic(const OrderComplex& complex);

struct BettiVector {
  // reduced[k] is the reduced Betti number in dimension k - 1.
  std::vector<std::int64_t> reduced;
  std::int64_t euler = 0;
  static constexpr const char* kField = "GF(2)";

  // Betti number in dimension dim >= -1; 0 past the top.
  std::int64_t at(int dim) const;
  int top_dimension() const { return static_cast<int>(reduced.size()) - 2; }
  // Zero in every dimension except possibly dim.
  bool concentrated_in(int dim) const;
};

// Reduced Betti numbers over GF(2) from the ranks of the boundary maps of
// the augmented chain complex: b_i = dim C_i - rank d_i - rank d_{i+1}.
BettiVector betti_gf2(const OrderComplex& complex);

// Connectivity of the comparability graph on the interior (bottom, top).
// Throws PreconditionError when the rank is below 2.
bool is_connected_open(const Permutation& bottom, const Permutation& top,
                       std::size_t max_top_length = kDefaultMaxTopLength);
// Same test on a subinterval [element(lo), element(hi)] of an interval.
bool interior_connected(const Interval& interval, std::size_t lo, std::size_t hi);

// Positions where an embedding holds a zero, as a bit mask (bit i-1 for
// position i).
struct ZeroSet {
  std::uint64_t mask = 0;

  static ZeroSet of(const Embedding& e) { return {e.zero_mask()}; }
  std::vector<std::size_t> positions() const;
  bool intersects(const ZeroSet& other) const { return (mask & other.mask) != 0; }
  ZeroSet operator|(const ZeroSet& other) const { return {mask | other.mask}; }

  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
};

// Whether the zero sets split into two non-empty groups whose unions are
// disjoint. Equivalent to the "zero sets intersect" graph being
// disconnected.
bool zero_sets_splittable(std::span<const ZeroSet> zero_sets);

// The same question for all embeddings of alpha in beta. Throws
// PreconditionError when alpha is not contained in beta.
bool zero_set_partition_exists(const Permutation& alpha, const Permutation& beta);

struct DisconnectedSubinterval {
  Permutation lower;
  Permutation upper;
  std::size_t rank = 0;

  friend bool operator==(const DisconnectedSubinterval&, const DisconnectedSubinterval&) = default;
};

inline constexpr std::size_t kDefaultScanMaxTopLength = 10;

// Every [alpha, beta] inside [bottom, top] with rank >= min_rank (and >= 2)
// whose interior is disconnected, sorted by (|beta|, beta, alpha).
std::vector<DisconnectedSubinterval> scan_disconnected_subintervals(const Interval& interval,
                                                                    std::size_t min_rank = 3);
std::vector<DisconnectedSubinterval> scan_disconnected_subintervals(
    const Permutation& bottom, const Permutation& top, std::size_t min_rank = 3,
    std::size_t max_top_length = kDefaultScanMaxTopLength);

// The two obstruction patterns 456123 and 356124.
const std::vector<Permutation>& obstruction_patterns();

// Which obstruction patterns occur in pi. Requires one descent.
std::vector<Permutation> shellability_obstruction(const Permutation& pi);

// For pi with one descent and |pi| >= 3: the Betti numbers of Delta(1, pi)
// are those of Delta(21, pi) shifted up by one dimension, and the
// dimension -1 number of Delta(1, pi) vanishes. The dimension 0 number
// vanishes as soon as Delta(21, pi) is non-empty (|pi| >= 4).
bool suspension_betti_check(const Permutation& pi, std::size_t max_top_length = kDefaultMaxTopLength);

// For sigma < pi with equal descent counts: Betti numbers vanish below the
// top dimension rank - 2, and the top one equals |mu(sigma, pi)|.
bool wedge_check(const Permutation& sigma, const Permutation& pi,
                 std::size_t max_top_length = kDefaultMaxTopLength);
// Same check against an already computed Betti vector.
bool wedge_check(const Permutation& sigma, const Permutation& pi, const BettiVector& betti);

}  // namespace descent_poset
