#include "descent_poset/word.hpp"

#include <algorithm>

#include "descent_poset/checked.hpp"
#include "descent_poset/errors.hpp"
#include "text.hpp"

namespace descent_poset {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ParseError("word must have at least one letter");
  for (int v : letters_)
    if (v < 1) throw ParseError("word letters must be positive, got " + std::to_string(v));
}

int Word::max_letter() const { return *std::max_element(letters_.begin(), letters_.end()); }

std::string Word::to_string() const { return detail::render_letters(letters_); }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

Word parse_word(std::string_view text) { return Word(detail::parse_letters(text, "word")); }

bool is_subword(const Word& v, const Word& w) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size() && j < v.size(); ++i)
    if (w.letters()[i] == v.letters()[j]) ++j;
  return j == v.size();
}

std::vector<std::size_t> positions(const Word& w, int j) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.letters()[i] == j) out.push_back(i + 1);
  return out;
}

bool is_ahat_member(const Word& w) {
  const int k = w.max_letter();
  // first[i] / last[i]: 0-based first and rightmost positions of letter i.
  std::vector<std::size_t> first(static_cast<std::size_t>(k) + 2, w.size());
  std::vector<std::size_t> last(static_cast<std::size_t>(k) + 2, 0);
  std::vector<bool> present(static_cast<std::size_t>(k) + 2, false);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto c = static_cast<std::size_t>(w.letters()[i]);
    if (!present[c]) first[c] = i;
    present[c] = true;
    last[c] = i;
  }
  for (int i = 1; i <= k; ++i)
    if (!present[static_cast<std::size_t>(i)]) return false;
  for (int i = 1; i < k; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (first[u + 1] > last[u]) return false;
  }
  return true;
}

bool is_ahat_k_member(const Word& w, int k) { return w.max_letter() == k && is_ahat_member(w); }

std::vector<Embedding> word_embeddings(const Word& v, const Word& w) {
  std::vector<Embedding> out;
  const std::size_t m = v.size();
  const std::size_t n = w.size();
  if (m > n) return out;
  std::vector<std::size_t> chosen(m);
  auto step = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == m) {
      Embedding e{std::vector<int>(n, 0)};
      for (std::size_t pos : chosen) e.slots[pos] = w.letters()[pos];
      out.push_back(std::move(e));
      return;
    }
    for (std::size_t pos = from; pos + (m - depth) <= n; ++pos) {
      if (w.letters()[pos] != v.letters()[depth]) continue;
      chosen[depth] = pos;
      self(self, depth + 1, pos + 1);
    }
  };
  step(step, 0, 0);
  return out;
}

std::vector<std::size_t> word_tail_positions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.letters()[i] == w.letters()[i - 1]) out.push_back(i + 1);
  return out;
}

std::int64_t count_normal_word_embeddings(const Word& v, const Word& w) {
  const std::size_t m = v.size();
  if (m > w.size()) return 0;
  std::vector<bool> forced(w.size(), false);
  for (std::size_t pos : word_tail_positions(w)) forced[pos - 1] = true;

  // ways[j]: placements of v's first j letters in the scanned prefix of w
  // that use every forced position of that prefix.
  std::vector<std::int64_t> ways(m + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int letter = w.letters()[i];
    for (std::size_t j = m; j >= 1; --j) {
      const std::int64_t skip = forced[i] ? 0 : ways[j];
      const std::int64_t take = (v.letters()[j - 1] == letter) ? ways[j - 1] : 0;
      ways[j] = checked_add(skip, take);
    }
    if (forced[i]) ways[0] = 0;
  }
  return ways[m];
}

std::vector<Word> enumerate_ahat_k(int k, int n) {
  if (k < 1 || n < 1) throw PreconditionError("enumerate_ahat_k needs k >= 1 and n >= 1");
  std::vector<Word> out;
  if (k > n) return out;
  std::vector<int> buf(static_cast<std::size_t>(n));
  std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
  int missing = k;
  auto step = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      Word w(buf);
      if (is_ahat_member(w)) out.push_back(std::move(w));
      return;
    }
    for (int c = 1; c <= k; ++c) {
      const bool fresh = count[static_cast<std::size_t>(c)] == 0;
      const int still_missing = missing - (fresh ? 1 : 0);
      // AC1 pruning: the remaining slots must cover the absent letters.
      if (still_missing > n - pos - 1) continue;
      buf[static_cast<std::size_t>(pos)] = c;
      ++count[static_cast<std::size_t>(c)];
      missing = still_missing;
      self(self, pos + 1);
      --count[static_cast<std::size_t>(c)];
      missing += fresh ? 1 : 0;
    }
  };
  step(step, 0);
  return out;
}

}  // namespace descent_poset
