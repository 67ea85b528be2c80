#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "descent_poset/permutation.hpp"

namespace descent_poset {

// A nonempty word over the positive integers, ordered by subword order.
class Word {
 public:
  // Throws ParseError on an empty word or a letter < 1.
  explicit Word(std::vector<int> letters);

  std::size_t size() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }
  int at(std::size_t pos) const { return letters_[pos - 1]; }
  int max_letter() const;

  // Compact digits when every letter is <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<int> letters_;
};

Word parse_word(std::string_view text);

// v <= w in subword order, by greedy left-to-right matching.
bool is_subword(const Word& v, const Word& w);

// Ascending 1-based positions of letter j in w.
std::vector<std::size_t> positions(const Word& w, int j);

// AC1: every letter 1..max(w) occurs. AC2: the rightmost occurrence of each
// i < max(w) has an occurrence of i + 1 somewhere to its left.
bool is_ahat_member(const Word& w);
bool is_ahat_k_member(const Word& w, int k);

// Every way to place v inside w, as zero-padded length-|w| sequences, in
// lexicographic order of the chosen positions.
std::vector<Embedding> word_embeddings(const Word& v, const Word& w);

// Tails of maximal blocks of equal consecutive letters in w (every block
// position after the first), as ascending 1-based positions.
std::vector<std::size_t> word_tail_positions(const Word& w);

// Embeddings of v in w that are nonzero on every tail position of w.
// Linear-time DP over positions of w.
std::int64_t count_normal_word_embeddings(const Word& v, const Word& w);

// All words of length n in the max-letter-k class, lexicographic.
std::vector<Word> enumerate_ahat_k(int k, int n);

}  // namespace descent_poset
