#include "descent_poset/topology.hpp"

#include <algorithm>
#include <span>

#include "descent_poset/checked.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/homology.hpp"
#include "descent_poset/moebius.hpp"

namespace descent_poset {

OrderComplex OrderComplex::of(const Interval& interval) {
  if (interval.rank() < 1) throw PreconditionError("order complex needs bottom < top");
  OrderComplex out;
  out.rank_ = interval.rank();
  const std::size_t top = interval.top_index();
  // Interior elements are indices 1 .. top - 1; vertex v is element v + 1.
  for (std::size_t i = 1; i < top; ++i) out.vertices_.push_back(interval.element(i));
  const std::size_t nv = out.vertices_.size();
  out.above_.assign(nv, Bits(nv));
  for (std::size_t u = 0; u < nv; ++u) {
    const auto& up = interval.above(u + 1);
    for (std::size_t w = up.find_next(u + 1); w != Interval::Bits::npos && w < top; w = up.find_next(w))
      out.above_[u].set(w - 1);
  }

  // Maximal chains: depth-first over upper covers in index order.
  std::vector<std::size_t> path;
  auto walk = [&](auto&& self, std::size_t at) -> void {
    for (std::size_t next : interval.upper_covers(at)) {
      if (next == top) {
        out.facets_.push_back(path);
        continue;
      }
      path.push_back(next - 1);
      self(self, next);
      path.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

std::vector<std::int64_t> OrderComplex::face_counts() const {
  const std::size_t nv = vertices_.size();
  const std::size_t max_size = rank_ - 1;
  std::vector<std::int64_t> f(max_size + 1, 0);
  f[0] = 1;
  // chains[v][s]: chains with s vertices whose top vertex is v. Vertex
  // indices follow a linear extension, so predecessors come first.
  std::vector<std::vector<std::int64_t>> chains(nv, std::vector<std::int64_t>(max_size + 1, 0));
  for (std::size_t v = 0; v < nv; ++v) {
    chains[v][1] = 1;
    for (std::size_t u = 0; u < v; ++u) {
      if (!less(u, v)) continue;
      for (std::size_t s = 2; s <= max_size; ++s) chains[v][s] = checked_add(chains[v][s], chains[u][s - 1]);
    }
    for (std::size_t s = 1; s <= max_size; ++s) f[s] = checked_add(f[s], chains[v][s]);
  }
  return f;
}

OrderComplex order_complex(const Permutation& bottom, const Permutation& top, std::size_t max_top_length) {
  if (bottom == top) throw PreconditionError("order complex needs bottom < top; the interior of [x, x] is undefined");
  return OrderComplex::of(Interval::build(bottom, top, max_top_length));
}

std::int64_t euler_characteristic(const OrderComplex& complex) {
  const auto f = complex.face_counts();
  std::int64_t chi = 0;
  // f[s] counts faces of dimension s - 1.
  for (std::size_t s = 0; s < f.size(); ++s) chi = checked_add(chi, checked_mul(sign_power(static_cast<std::int64_t>(s) + 1), f[s]));
  return chi;
}

std::int64_t BettiVector::at(int dim) const {
  if (dim < -1) return 0;
  const auto k = static_cast<std::size_t>(dim + 1);
  return k < reduced.size() ? reduced[k] : 0;
}

bool BettiVector::concentrated_in(int dim) const {
  for (std::size_t k = 0; k < reduced.size(); ++k)
    if (static_cast<int>(k) - 1 != dim && reduced[k] != 0) return false;
  return true;
}

namespace {

// Faces with a fixed number of vertices, stored flat with that stride and
// in lexicographic order.
struct FaceBucket {
  std::size_t width = 0;
  std::vector<std::uint16_t> flat;

  std::size_t count() const { return width == 0 ? 1 : flat.size() / width; }
  std::span<const std::uint16_t> face(std::size_t i) const { return {flat.data() + i * width, width}; }

  std::uint32_t find(std::span<const std::uint16_t> key) const {
    std::size_t lo = 0;
    std::size_t hi = count();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto f = face(mid);
      if (std::lexicographical_compare(f.begin(), f.end(), key.begin(), key.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    return static_cast<std::uint32_t>(lo);
  }
};

}  // namespace

BettiVector betti_gf2(const OrderComplex& complex) {
  const std::size_t nv = complex.vertices().size();
  if (nv > 65535) throw PreconditionError("order complex too large for homology");
  const std::size_t max_size = complex.rank() - 1;

  std::vector<FaceBucket> buckets(max_size + 1);
  for (std::size_t s = 0; s <= max_size; ++s) buckets[s].width = s;
  // Pre-order DFS with increasing vertex indices emits each bucket sorted.
  std::vector<std::uint16_t> chain;
  auto grow = [&](auto&& self, std::size_t last) -> void {
    const auto& up = complex.strictly_above(last);
    for (std::size_t w = up.find_first(); w != OrderComplex::Bits::npos; w = up.find_next(w)) {
      chain.push_back(static_cast<std::uint16_t>(w));
      buckets[chain.size()].flat.insert(buckets[chain.size()].flat.end(), chain.begin(), chain.end());
      self(self, w);
      chain.pop_back();
    }
  };
  for (std::size_t v = 0; v < nv; ++v) {
    chain.assign(1, static_cast<std::uint16_t>(v));
    buckets[1].flat.push_back(static_cast<std::uint16_t>(v));
    grow(grow, v);
  }

  // rank_of[s]: rank of the boundary map from s-vertex faces to (s-1)-vertex faces.
  std::vector<std::size_t> rank_of(max_size + 2, 0);
  rank_of[1] = nv > 0 ? 1 : 0;
  std::vector<std::uint16_t> facet;
  for (std::size_t s = 2; s <= max_size; ++s) {
    const auto& from = buckets[s];
    const auto& to = buckets[s - 1];
    std::vector<Gf2Column> columns(from.count());
    for (std::size_t c = 0; c < from.count(); ++c) {
      auto face = from.face(c);
      auto& col = columns[c];
      col.reserve(s);
      for (std::size_t drop = 0; drop < s; ++drop) {
        facet.clear();
        for (std::size_t k = 0; k < s; ++k)
          if (k != drop) facet.push_back(face[k]);
        col.push_back(to.find(facet));
      }
      std::sort(col.begin(), col.end());
    }
    rank_of[s] = gf2_rank(std::move(columns));
  }

  BettiVector out;
  out.reduced.assign(max_size + 1, 0);
  for (std::size_t s = 0; s <= max_size; ++s) {
    const auto dim_c = static_cast<std::int64_t>(buckets[s].count());
    out.reduced[s] = dim_c - static_cast<std::int64_t>(rank_of[s]) - static_cast<std::int64_t>(rank_of[s + 1]);
    out.euler = checked_add(out.euler, sign_power(static_cast<std::int64_t>(s) + 1) * out.reduced[s]);
  }
  return out;
}

bool interior_connected(const Interval& interval, std::size_t lo, std::size_t hi) {
  if (!interval.leq(lo, hi) || interval.element(hi).size() - interval.element(lo).size() < 2)
    throw PreconditionError("connectivity needs a subinterval of rank >= 2");
  Interval::Bits interior = interval.above(lo) & interval.below(hi);
  interior.reset(lo);
  interior.reset(hi);
  const std::size_t start = interior.find_first();
  Interval::Bits reached(interval.size());
  reached.set(start);
  std::vector<std::size_t> frontier{start};
  while (!frontier.empty()) {
    const std::size_t v = frontier.back();
    frontier.pop_back();
    Interval::Bits fresh = (interval.below(v) | interval.above(v)) & interior;
    fresh -= reached;
    for (std::size_t w = fresh.find_first(); w != Interval::Bits::npos; w = fresh.find_next(w)) {
      reached.set(w);
      frontier.push_back(w);
    }
  }
  return reached == interior;
}

bool is_connected_open(const Permutation& bottom, const Permutation& top, std::size_t max_top_length) {
  if (top.size() < bottom.size() + 2) throw PreconditionError("connectivity needs rank >= 2");
  const Interval interval = Interval::build(bottom, top, max_top_length);
  return interior_connected(interval, 0, interval.top_index());
}

bool suspension_betti_check(const Permutation& pi, std::size_t max_top_length) {
  if (pi.descent_count() != 1) throw PreconditionError(pi.to_string() + " must have exactly one descent");
  if (pi.size() < 3) throw PreconditionError("suspension check needs |pi| >= 3");
  const Permutation one({1});
  const Permutation two_one({2, 1});
  const BettiVector big = betti_gf2(order_complex(one, pi, max_top_length));
  const BettiVector small = betti_gf2(order_complex(two_one, pi, max_top_length));
  if (big.at(-1) != 0) return false;
  if (pi.size() >= 4 && big.at(0) != 0) return false;
  const int top = std::max(big.top_dimension(), small.top_dimension() + 1);
  for (int n = 0; n <= top; ++n)
    if (big.at(n) != small.at(n - 1)) return false;
  return true;
}

bool wedge_check(const Permutation& sigma, const Permutation& pi, const BettiVector& betti) {
  const std::int64_t mu = mobius_fixed_descent(sigma, pi);
  const int top = static_cast<int>(pi.size() - sigma.size()) - 2;
  return betti.concentrated_in(top) && betti.at(top) == (mu < 0 ? -mu : mu);
}

bool wedge_check(const Permutation& sigma, const Permutation& pi, std::size_t max_top_length) {
  if (sigma.descent_count() != pi.descent_count())
    throw PreconditionError("wedge check needs equal descent counts");
  return wedge_check(sigma, pi, betti_gf2(order_complex(sigma, pi, max_top_length)));
}

}  // namespace descent_poset
