#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "descent_poset/permutation.hpp"

namespace descent_poset {

inline constexpr std::size_t kDefaultMaxTopLength = 14;

// The closed interval [bottom, top] of the pattern poset, materialized.
//
// Elements are indexed in (length, lexicographic) order, so index 0 is the
// bottom and the last index is the top. Both the Hasse diagram (covers) and
// the full order relation (reflexive down/up sets as bitsets) are stored.
class Interval {
 public:
  using Bits = boost::dynamic_bitset<>;

  // Generates the down-set of top by repeated one-letter deletions, level by
  // level, and keeps the elements that contain bottom. Throws
  // PreconditionError if bottom is not contained in top or if |top| exceeds
  // max_top_length.
  static Interval build(const Permutation& bottom, const Permutation& top,
                        std::size_t max_top_length = kDefaultMaxTopLength);

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  const Permutation& bottom() const { return elements_.front(); }
  const Permutation& top() const { return elements_.back(); }
  std::size_t top_index() const { return elements_.size() - 1; }
  std::size_t rank() const { return top().size() - bottom().size(); }

  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  // Reflexive down-set / up-set of element i within the interval.
  const Bits& below(std::size_t i) const { return below_[i]; }
  const Bits& above(std::size_t i) const { return above_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return below_[j].test(i); }
  bool less(std::size_t i, std::size_t j) const { return i != j && below_[j].test(i); }

  // [element(i), element(j)] as a standalone interval. Requires leq(i, j).
  Interval subinterval(std::size_t i, std::size_t j) const;

 private:
  Interval() = default;
  void index_elements();
  void close_relations();

  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<Bits> below_;
  std::vector<Bits> above_;
};

}  // namespace descent_poset
