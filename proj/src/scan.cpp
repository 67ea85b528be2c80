#include <algorithm>
#include <numeric>

#include "descent_poset/errors.hpp"
#include "descent_poset/topology.hpp"

namespace descent_poset {

std::vector<std::size_t> ZeroSet::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if ((mask >> i) & 1U) out.push_back(i + 1);
  return out;
}

bool zero_sets_splittable(std::span<const ZeroSet> zero_sets) {
  const std::size_t n = zero_sets.size();
  if (n < 2) return false;
  // Union-find over "zero sets intersect". Two groups with disjoint unions
  // exist iff there are at least two components.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!zero_sets[i].intersects(zero_sets[j])) continue;
      const std::size_t a = find(i);
      const std::size_t b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components >= 2;
}

bool zero_set_partition_exists(const Permutation& alpha, const Permutation& beta) {
  const auto embs = embeddings(alpha, beta);
  if (embs.empty()) throw PreconditionError(alpha.to_string() + " is not contained in " + beta.to_string());
  std::vector<ZeroSet> zs;
  zs.reserve(embs.size());
  for (const auto& e : embs) zs.push_back(ZeroSet::of(e));
  return zero_sets_splittable(zs);
}

std::vector<DisconnectedSubinterval> scan_disconnected_subintervals(const Interval& interval, std::size_t min_rank) {
  min_rank = std::max<std::size_t>(min_rank, 2);
  std::vector<DisconnectedSubinterval> out;
  // Tops by decreasing length; only elements below the top are candidates.
  for (std::size_t hi = interval.size(); hi-- > 0;) {
    const auto& upper = interval.element(hi);
    if (upper.size() < interval.bottom().size() + min_rank) break;
    const auto& below = interval.below(hi);
    for (std::size_t lo = below.find_first(); lo != Interval::Bits::npos; lo = below.find_next(lo)) {
      const auto& lower = interval.element(lo);
      if (lower.size() + min_rank > upper.size()) break;
      if (!interior_connected(interval, lo, hi)) out.push_back({lower, upper, upper.size() - lower.size()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.upper != b.upper) return a.upper < b.upper;
    return a.lower < b.lower;
  });
  return out;
}

std::vector<DisconnectedSubinterval> scan_disconnected_subintervals(const Permutation& bottom, const Permutation& top,
                                                                    std::size_t min_rank, std::size_t max_top_length) {
  return scan_disconnected_subintervals(Interval::build(bottom, top, max_top_length), min_rank);
}

const std::vector<Permutation>& obstruction_patterns() {
  static const std::vector<Permutation> patterns{Permutation({4, 5, 6, 1, 2, 3}), Permutation({3, 5, 6, 1, 2, 4})};
  return patterns;
}

std::vector<Permutation> shellability_obstruction(const Permutation& pi) {
  if (pi.descent_count() != 1) throw PreconditionError(pi.to_string() + " must have exactly one descent");
  std::vector<Permutation> found;
  for (const auto& p : obstruction_patterns())
    if (contains(pi, p)) found.push_back(p);
  return found;
}

}  // namespace descent_poset
