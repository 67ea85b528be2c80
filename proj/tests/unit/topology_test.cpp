#include <doctest.h>

#include <algorithm>
#include <set>

#include "descent_poset/enumerate.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/homology.hpp"
#include "descent_poset/moebius.hpp"
#include "descent_poset/topology.hpp"
#include "oracles.hpp"

using namespace descent_poset;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

// Connectivity of the interior by union-find over comparable pairs, with
// comparability from the subset oracle.
bool interior_connected_oracle(const std::vector<Permutation>& interior) {
  const std::size_t n = interior.size();
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && oracle::contains(interior[j], interior[i])) {
        const std::size_t a = comp[i];
        const std::size_t b = comp[j];
        if (a != b)
          for (auto& c : comp)
            if (c == a) c = b;
      }
  return std::all_of(comp.begin(), comp.end(), [&](std::size_t c) { return c == comp[0]; });
}

}  // namespace

TEST_CASE("order complex of a small interval") {
  const OrderComplex c = order_complex(P("21"), P("3412"));
  CHECK(c.vertices() == std::vector<Permutation>{P("231"), P("312")});
  CHECK(c.facets().size() == 2);
  CHECK(c.dimension() == 0);
  CHECK(c.face_counts() == std::vector<std::int64_t>{1, 2});
  CHECK(euler_characteristic(c) == 1);
  const BettiVector b = betti_gf2(c);
  CHECK(b.reduced == std::vector<std::int64_t>{0, 1});
  CHECK(b.at(0) == 1);
  CHECK(wedge_check(P("21"), P("3412")));
  CHECK_THROWS_AS(order_complex(P("3412"), P("3412")), PreconditionError);
}

TEST_CASE("empty complex of a cover") {
  const OrderComplex c = order_complex(P("12"), P("123"));
  CHECK(c.vertices().empty());
  CHECK(c.dimension() == -1);
  CHECK(c.facets().size() == 1);
  CHECK(euler_characteristic(c) == -1);
  CHECK(betti_gf2(c).reduced == std::vector<std::int64_t>{1});
  CHECK(wedge_check(P("12"), P("123")));
}

TEST_CASE("Euler characteristic of a larger interval") {
  CHECK(euler_characteristic(order_complex(P("1"), P("246135"))) == -6);
  const BettiVector b = betti_gf2(order_complex(P("1"), P("246135")));
  CHECK(b.concentrated_in(3));
  CHECK(b.at(3) == 6);
}

TEST_CASE("faces and homology against dense oracles") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& pi : all_permutations(n)) {
      const Interval down = Interval::build(P("1"), pi);
      for (std::size_t i = 0; i + 1 < down.size(); ++i) {
        const Interval sub = down.subinterval(i, down.top_index());
        const OrderComplex c = OrderComplex::of(sub);
        // Faces from the facets by subset expansion.
        std::set<std::vector<std::size_t>> faces;
        for (const auto& f : c.facets())
          for (std::uint32_t mask = 0; mask < (1U << f.size()); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t k = 0; k < f.size(); ++k)
              if ((mask >> k) & 1U) s.push_back(f[k]);
            faces.insert(s);
          }
        std::vector<std::int64_t> counts(c.rank(), 0);
        for (const auto& f : faces) ++counts[f.size()];
        REQUIRE(c.face_counts() == counts);
        const auto b = betti_gf2(c);
        REQUIRE(b.reduced == oracle::betti_from_facets(c.facets()));
        REQUIRE(euler_characteristic(c) == oracle::mobius(down.element(i), pi));
      }
    }
}

TEST_CASE("sparse rank against dense rank") {
  // Boundary of a tetrahedron's 2-faces into its edges: rank 3.
  const std::vector<Gf2Column> cols{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
  CHECK(gf2_rank(cols) == 3);
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& col : cols) {
    std::vector<std::uint8_t> r(6, 0);
    for (auto x : col) r[x] = 1;
    rows.push_back(r);
  }
  CHECK(oracle::dense_rank(rows) == 3);
  CHECK(gf2_rank({}) == 0);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected_open(P("123"), P("456123")));
  CHECK_FALSE(is_connected_open(P("123"), P("356124")));
  CHECK_FALSE(is_connected_open(P("21"), P("3412")));
  CHECK_THROWS_AS(is_connected_open(P("12"), P("123")), PreconditionError);
  for (int n = 3; n <= 6; ++n)
    for (const auto& pi : all_permutations(n)) {
      const Interval down = Interval::build(P("1"), pi);
      for (std::size_t i = 0; i < down.size(); ++i) {
        if (down.element(i).size() + 2 > pi.size()) break;
        std::vector<Permutation> interior;
        for (std::size_t j = 0; j < down.top_index(); ++j)
          if (j != i && down.less(i, j)) interior.push_back(down.element(j));
        REQUIRE(interior_connected(down, i, down.top_index()) == interior_connected_oracle(interior));
      }
    }
}

TEST_CASE("zero sets") {
  CHECK(zero_set_partition_exists(P("123"), P("456123")));
  CHECK(zero_set_partition_exists(P("123"), P("356124")));
  CHECK_FALSE(zero_set_partition_exists(P("3412"), P("3412")));
  CHECK_THROWS_AS(zero_set_partition_exists(P("321"), P("3412")), PreconditionError);
  const std::vector<ZeroSet> three{{0b100110}, {0b010110}, {0b010101}};
  CHECK(three[0].positions() == std::vector<std::size_t>{2, 3, 6});
  CHECK_FALSE(zero_sets_splittable(three));
  CHECK(zero_sets_splittable(std::vector<ZeroSet>{{0b0011}, {0b1100}}));
  CHECK_FALSE(zero_sets_splittable(std::vector<ZeroSet>{{0b0011}}));
  // All embeddings of 213 in 245136 pairwise share a zero.
  std::set<std::vector<std::size_t>> zs;
  for (const auto& e : embeddings(P("213"), P("245136"))) zs.insert(e.zero_positions());
  CHECK(zs.count({2, 3, 6}) == 1);
  CHECK(zs.count({2, 3, 5}) == 1);
  CHECK(zs.count({1, 3, 5}) == 1);
  CHECK_FALSE(zero_set_partition_exists(P("213"), P("245136")));
}

TEST_CASE("disconnected subinterval scan") {
  const auto found = scan_disconnected_subintervals(P("1"), P("456123"));
  CHECK(std::find(found.begin(), found.end(), DisconnectedSubinterval{P("123"), P("456123"), 3}) != found.end());
  for (const auto& d : found) CHECK(d.rank >= 3);
  CHECK(scan_disconnected_subintervals(P("12"), P("1234")).empty());
  CHECK(std::is_sorted(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.upper != b.upper ? a.upper < b.upper : a.lower < b.lower;
  }));
  CHECK(shellability_obstruction(P("456123")) == std::vector<Permutation>{P("456123")});
  CHECK(shellability_obstruction(P("13524")).empty());
  CHECK(shellability_obstruction(P("4567123")) == std::vector<Permutation>{P("456123")});
  for (int n = 2; n <= 6; ++n)
    for (const auto& pi : permutations_with_descents(n, 1))
      if (shellability_obstruction(pi).empty()) REQUIRE(scan_disconnected_subintervals(P("1"), pi).empty());
}

TEST_CASE("suspension and wedge relations") {
  const BettiVector small = betti_gf2(order_complex(P("21"), P("3412")));
  const BettiVector big = betti_gf2(order_complex(P("1"), P("3412")));
  CHECK(small.at(0) == 1);
  CHECK(big.at(0) == 0);
  CHECK(big.at(1) == 1);
  CHECK(suspension_betti_check(P("3412")));
  CHECK(suspension_betti_check(P("246135")));
  CHECK(suspension_betti_check(P("132")));
  CHECK_THROWS_AS(suspension_betti_check(P("2143")), PreconditionError);
  for (int n = 3; n <= 6; ++n)
    for (const auto& pi : permutations_with_descents(n, 1)) REQUIRE(suspension_betti_check(pi));
  for (int n = 2; n <= 6; ++n)
    for (const auto& pi : all_permutations(n))
      for (int m = 1; m < n; ++m)
        for (const auto& sigma : all_permutations(m))
          if (sigma.descent_count() == pi.descent_count() && contains(pi, sigma)) REQUIRE(wedge_check(sigma, pi));
}
