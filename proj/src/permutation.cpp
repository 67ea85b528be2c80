#include "descent_poset/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "descent_poset/bijection.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/word.hpp"
#include "text.hpp"

namespace descent_poset {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ParseError("permutation must have at least one letter");
  const int n = static_cast<int>(letters_.size());
  std::vector<bool> seen(letters_.size() + 1, false);
  for (int v : letters_) {
    if (v < 1) throw ParseError("permutation letters must be positive, got " + std::to_string(v));
    if (v > n) throw ParseError("value " + std::to_string(v) + " exceeds length " + std::to_string(n) + " (gap in value set)");
    if (seen[v]) throw ParseError("duplicate letter " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw PreconditionError("identity permutation needs n >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Trusted{});
}

std::size_t Permutation::position_of(int value) const {
  auto it = std::find(letters_.begin(), letters_.end(), value);
  if (it == letters_.end()) throw PreconditionError("value " + std::to_string(value) + " not in permutation");
  return static_cast<std::size_t>(it - letters_.begin()) + 1;
}

std::vector<std::size_t> Permutation::descents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] > letters_[i + 1]) out.push_back(i + 1);
  return out;
}

std::size_t Permutation::descent_count() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] > letters_[i + 1]) ++d;
  return d;
}

int Permutation::run_index(int c) const {
  if (c < 1 || c > static_cast<int>(size()))
    throw PreconditionError("run_index: value " + std::to_string(c) + " out of range");
  int run = 1;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == c) return run;
    if (i + 1 < letters_.size() && letters_[i] > letters_[i + 1]) ++run;
  }
  return run;  // unreachable for a valid permutation
}

std::string Permutation::to_string() const { return detail::render_letters(letters_); }

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(detail::parse_letters(text, "permutation", 9));
}

Permutation standardize(std::span<const int> letters) {
  if (letters.empty()) throw ParseError("cannot standardize an empty sequence");
  std::vector<std::size_t> order(letters.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return letters[a] < letters[b]; });
  std::vector<int> out(letters.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && letters[order[rank]] == letters[order[rank - 1]])
      throw ParseError("cannot standardize: repeated letter " + std::to_string(letters[order[rank]]));
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation direct_sum(const Permutation& sigma, const Permutation& pi) {
  std::vector<int> out = sigma.letters();
  const int shift = static_cast<int>(sigma.size());
  for (int v : pi.letters()) out.push_back(v + shift);
  return Permutation(std::move(out));
}

namespace {

// Backtracking search for occurrences of sigma in pi. A partial choice of
// positions is extended only when the new letter compares to every chosen
// letter the way sigma's letters compare. The visitor returns false to stop.
template <typename Visit>
bool search_occurrences(const Permutation& sigma, const Permutation& pi, Visit&& visit) {
  const auto& s = sigma.letters();
  const auto& p = pi.letters();
  const std::size_t k = s.size();
  const std::size_t n = p.size();
  if (k > n) return true;
  std::vector<std::size_t> chosen(k);

  auto step = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
    if (depth == k) return visit(chosen);
    for (std::size_t pos = from; pos + (k - depth) <= n; ++pos) {
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j)
        ok = (s[j] < s[depth]) == (p[chosen[j]] < p[pos]);
      if (!ok) continue;
      chosen[depth] = pos;
      if (!self(self, depth + 1, pos + 1)) return false;
    }
    return true;
  };
  return step(step, 0, 0);
}

}  // namespace

std::vector<std::vector<std::size_t>> occurrences(const Permutation& sigma, const Permutation& pi) {
  std::vector<std::vector<std::size_t>> out;
  search_occurrences(sigma, pi, [&](const std::vector<std::size_t>& chosen) {
    std::vector<std::size_t> one(chosen.size());
    std::transform(chosen.begin(), chosen.end(), one.begin(), [](std::size_t p) { return p + 1; });
    out.push_back(std::move(one));
    return true;
  });
  return out;
}

bool contains(const Permutation& pi, const Permutation& sigma) {
  if (sigma.size() > pi.size()) return false;
  if (sigma.size() == pi.size()) return sigma == pi;
  bool found = false;
  search_occurrences(sigma, pi, [&](const std::vector<std::size_t>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<std::size_t> Embedding::zero_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i] == 0) out.push_back(i + 1);
  return out;
}

std::uint64_t Embedding::zero_mask() const {
  if (slots.size() > 64) throw PreconditionError("zero_mask supports hosts of length <= 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i] == 0) m |= std::uint64_t{1} << i;
  return m;
}

std::string Embedding::to_string() const { return detail::render_letters(slots); }

std::vector<Embedding> embeddings(const Permutation& sigma, const Permutation& pi) {
  std::vector<Embedding> out;
  search_occurrences(sigma, pi, [&](const std::vector<std::size_t>& chosen) {
    Embedding e{std::vector<int>(pi.size(), 0)};
    for (std::size_t i = 0; i < chosen.size(); ++i) e.slots[chosen[i]] = sigma.letters()[i];
    out.push_back(std::move(e));
    return true;
  });
  return out;
}

std::vector<AdjacencyBlock> adjacency_blocks(const Permutation& pi) {
  std::vector<AdjacencyBlock> out;
  const auto& p = pi.letters();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j + 1 < p.size() && p[j + 1] == p[j] + 1) ++j;
    if (j > i) out.push_back({i + 1, j - i + 1, p[i]});
    i = j + 1;
  }
  return out;
}

std::size_t tail_total(const Permutation& pi) {
  std::size_t t = 0;
  for (const auto& b : adjacency_blocks(pi)) t += b.length - 1;
  return t;
}

std::size_t adjacency_pairs(const Permutation& pi) { return tail_total(pi); }

std::vector<std::size_t> tail_positions(const Permutation& pi) {
  std::vector<std::size_t> out;
  for (const auto& b : adjacency_blocks(pi))
    for (std::size_t k = 1; k < b.length; ++k) out.push_back(b.start_pos + k);
  return out;
}

std::int64_t count_normal_embeddings(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() > pi.size()) return 0;
  // With equal descent counts, occurrences of sigma in pi correspond to
  // embeddings of f(sigma) in f(pi), and tails of adjacencies of pi become
  // tails of equal-letter blocks of f(pi). The word count is a linear DP.
  if (sigma.descent_count() == pi.descent_count())
    return count_normal_word_embeddings(perm_to_word(sigma), perm_to_word(pi));

  std::vector<bool> forced(pi.size(), false);
  for (std::size_t pos : tail_positions(pi)) forced[pos - 1] = true;
  std::int64_t count = 0;
  search_occurrences(sigma, pi, [&](const std::vector<std::size_t>& chosen) {
    std::size_t used = 0;
    for (std::size_t pos : chosen) used += forced[pos] ? 1 : 0;
    if (used == static_cast<std::size_t>(std::count(forced.begin(), forced.end(), true))) ++count;
    return true;
  });
  return count;
}

std::vector<Permutation> deletions(const Permutation& pi) {
  if (pi.size() < 2) throw PreconditionError("deletions need a permutation of length >= 2");
  std::vector<Permutation> out;
  out.reserve(pi.size());
  std::vector<int> buf;
  for (std::size_t j = 0; j < pi.size(); ++j) {
    buf.clear();
    const int removed = pi.letters()[j];
    for (std::size_t i = 0; i < pi.size(); ++i) {
      if (i == j) continue;
      const int v = pi.letters()[i];
      buf.push_back(v > removed ? v - 1 : v);
    }
    out.push_back(Permutation(buf));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace descent_poset
