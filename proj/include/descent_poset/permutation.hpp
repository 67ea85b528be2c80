#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descent_poset {

// A permutation of {1, ..., n}, n >= 1, in one-line notation.
//
// Positions and values are 1-based in every public accessor. Ordering is
// by length first and then lexicographic on letters, which is the order in
// which intervals list their elements.
class Permutation {
 public:
  // Validates that letters are a rearrangement of 1..n; throws ParseError.
  explicit Permutation(std::vector<int> letters);

  // The identity permutation 12...n.
  static Permutation identity(int n);

  std::size_t size() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }

  // Letter at 1-based position.
  int at(std::size_t pos) const { return letters_[pos - 1]; }
  // 1-based position of a value.
  std::size_t position_of(int value) const;

  // Ascending 1-based descent positions i with pi_i > pi_{i+1}.
  std::vector<std::size_t> descents() const;
  std::size_t descent_count() const;

  // Index of the run holding value c: one plus the descents strictly
  // before c's position. Throws PreconditionError if c is out of range.
  int run_index(int c) const;

  // Canonical text: compact digits when n <= 9, otherwise comma-separated.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Trusted {};
  Permutation(std::vector<int> letters, Trusted) : letters_(std::move(letters)) {}
  friend Permutation standardize(std::span<const int> letters);

  std::vector<int> letters_;
};

// Accepts compact digits ("23514", only for n <= 9) or integers separated by
// commas and/or whitespace ("10,2,3,..."). Throws ParseError.
Permutation parse_permutation(std::string_view text);

// Order-isomorphic permutation of distinct integers. Throws ParseError on
// repeated letters or empty input.
Permutation standardize(std::span<const int> letters);

// sigma followed by pi shifted up by |sigma|.
Permutation direct_sum(const Permutation& sigma, const Permutation& pi);

// One set of 1-based positions per occurrence of sigma in pi, in
// lexicographic order. Empty iff sigma is not contained in pi.
std::vector<std::vector<std::size_t>> occurrences(const Permutation& sigma, const Permutation& pi);

// Pattern containment sigma <= pi (early-exit search).
bool contains(const Permutation& pi, const Permutation& sigma);

// A padded occurrence: slots has the host's length, zeros at unused
// positions and the host's letter at used ones. Removing the zeros gives
// the guest. The same type serves permutations and words.
struct Embedding {
  std::vector<int> slots;

  // 1-based positions holding a zero.
  std::vector<std::size_t> zero_positions() const;
  // Zero positions as a bit mask (bit i-1 for position i); hosts up to 64.
  std::uint64_t zero_mask() const;
  // Compact digits when all slots are <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

// One embedding per occurrence, in the same order as occurrences().
std::vector<Embedding> embeddings(const Permutation& sigma, const Permutation& pi);

// A maximal run of consecutive values in consecutive increasing positions,
// e.g. 234 in 52341. Only increasing adjacencies are modelled.
struct AdjacencyBlock {
  std::size_t start_pos = 0;  // 1-based
  std::size_t length = 0;     // >= 2
  int start_value = 0;

  friend bool operator==(const AdjacencyBlock&, const AdjacencyBlock&) = default;
};

std::vector<AdjacencyBlock> adjacency_blocks(const Permutation& pi);

// Total number of letters in adjacency tails: sum of (length - 1).
std::size_t tail_total(const Permutation& pi);
// Adjacency pairs, where a length-k adjacency counts as k - 1 pairs.
// Numerically equal to tail_total.
std::size_t adjacency_pairs(const Permutation& pi);
// 1-based positions of tail letters (every block letter but the first).
std::vector<std::size_t> tail_positions(const Permutation& pi);

// Number of embeddings of sigma in pi that are nonzero at every tail
// position of pi. 0 when sigma is not contained in pi.
std::int64_t count_normal_embeddings(const Permutation& sigma, const Permutation& pi);

// Distinct standardized one-letter deletions of pi, sorted. These are the
// elements covered by pi. Throws PreconditionError when |pi| = 1.
std::vector<Permutation> deletions(const Permutation& pi);

}  // namespace descent_poset

template <>
struct std::hash<descent_poset::Permutation> {
  std::size_t operator()(const descent_poset::Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p.letters()) h = h * 131 + static_cast<std::size_t>(v);
    return h;
  }
};
