#include <doctest.h>

#include <set>

#include "descent_poset/enumerate.hpp"
#include "descent_poset/errors.hpp"
#include "descent_poset/permutation.hpp"
#include "oracles.hpp"

using namespace descent_poset;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::set<std::string> embedding_strings(const std::vector<Embedding>& es) {
  std::set<std::string> out;
  for (const auto& e : es) out.insert(e.to_string());
  return out;
}

}  // namespace

TEST_CASE("parse and render") {
  CHECK(P("23514").letters() == std::vector<int>{2, 3, 5, 1, 4});
  CHECK(P("1").size() == 1);
  CHECK(P(" 3, 1 ,2 ").to_string() == "312");
  CHECK(P("10,2,3,4,5,6,7,8,9,1").to_string() == "10,2,3,4,5,6,7,8,9,1");
  CHECK_THROWS_AS(P("10,2,3,4,5,6,7,8,11,1"), ParseError);
  CHECK_THROWS_AS(P("1223"), ParseError);
  CHECK_THROWS_AS(P("124"), ParseError);
  CHECK_THROWS_AS(P("102"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("12a"), ParseError);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) CHECK(parse_permutation(p.to_string()) == p);
}

TEST_CASE("descents and runs") {
  CHECK(P("23154").descents() == std::vector<std::size_t>{2, 4});
  CHECK(P("12345").descents().empty());
  CHECK(P("3412").descents() == std::vector<std::size_t>{2});
  CHECK(P("35241").run_index(5) == 1);
  CHECK(P("35241").run_index(1) == 3);
  for (int k = 1; k <= 5; ++k) CHECK(P("12345").run_index(k) == 1);
  CHECK_THROWS_AS(P("123").run_index(4), PreconditionError);
}

TEST_CASE("direct sum and standardize") {
  CHECK(direct_sum(P("213"), P("312")) == P("213645"));
  CHECK(direct_sum(P("1"), P("1")) == P("12"));
  CHECK(direct_sum(P("21"), P("21")) == P("2143"));
  CHECK(standardize(std::vector<int>{4, 1, 2}) == P("312"));
  CHECK(standardize(std::vector<int>{2, 1, 4}) == P("213"));
  CHECK(standardize(std::vector<int>{7}) == P("1"));
}

TEST_CASE("occurrences match subset enumeration") {
  const auto occ = occurrences(P("213"), P("23514"));
  CHECK(occ == std::vector<std::vector<std::size_t>>{{1, 4, 5}, {2, 4, 5}});
  CHECK(occurrences(P("1"), P("3412")).size() == 4);
  CHECK(occurrences(P("456123"), P("356124")).empty());
  for (int m = 1; m <= 4; ++m)
    for (const auto& sigma : all_permutations(m))
      for (int n = m; n <= 6; ++n)
        for (const auto& pi : all_permutations(n)) {
          REQUIRE(occurrences(sigma, pi) == oracle::occurrences(sigma.letters(), pi.letters()));
          REQUIRE(contains(pi, sigma) == oracle::contains(pi, sigma));
        }
}

TEST_CASE("embeddings") {
  CHECK(embedding_strings(embeddings(P("213"), P("142356"))) ==
        std::set<std::string>{"021030", "020130", "021003", "020103"});
  CHECK(embeddings(P("21"), P("3412")).size() == 4);
  const auto self = embeddings(P("3412"), P("3412"));
  REQUIRE(self.size() == 1);
  CHECK(self[0].zero_positions().empty());
  for (int m = 1; m <= 3; ++m)
    for (const auto& sigma : all_permutations(m))
      for (const auto& pi : all_permutations(5)) {
        const auto occ = oracle::occurrences(sigma.letters(), pi.letters());
        const auto expected = oracle::padded(sigma.letters(), pi.letters(), occ);
        const auto got = embeddings(sigma, pi);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].slots == expected[i]);
      }
  const auto e = embeddings(P("213"), P("245136"));
  for (const auto& x : e) CHECK(x.zero_mask() == [&] {
    std::uint64_t m = 0;
    for (auto p : x.zero_positions()) m |= std::uint64_t{1} << (p - 1);
    return m;
  }());
}

TEST_CASE("adjacencies and tails") {
  const auto blocks = adjacency_blocks(P("142356"));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].start_value == 2);
  CHECK(blocks[0].length == 2);
  CHECK(blocks[1].start_value == 5);
  // Tail letters 3 and 6 sit at positions 4 and 6.
  CHECK(tail_positions(P("142356")) == std::vector<std::size_t>{4, 6});
  CHECK(tail_total(P("142356")) == 2);
  CHECK(adjacency_blocks(P("246135")).empty());
  CHECK(adjacency_pairs(P("246135")) == 0);
  CHECK(adjacency_blocks(P("23415")).size() == 1);
  CHECK(adjacency_blocks(P("23415"))[0].length == 3);
  CHECK(adjacency_pairs(P("23415")) == 2);
  for (int n = 1; n <= 7; ++n)
    for (const auto& pi : all_permutations(n)) {
      REQUIRE(tail_positions(pi) == oracle::tails(pi.letters()));
      REQUIRE(tail_total(pi) == oracle::tails(pi.letters()).size());
    }
}

TEST_CASE("normal embedding counts") {
  CHECK(count_normal_embeddings(P("213"), P("142356")) == 1);
  CHECK(count_normal_embeddings(P("21"), P("3412")) == 1);
  CHECK(count_normal_embeddings(P("3412"), P("3412")) == 1);
  for (int m = 1; m <= 4; ++m)
    for (const auto& sigma : all_permutations(m))
      for (int n = m; n <= 6; ++n)
        for (const auto& pi : all_permutations(n)) {
          const auto occ = oracle::occurrences(sigma.letters(), pi.letters());
          const auto embs = oracle::padded(sigma.letters(), pi.letters(), occ);
          REQUIRE(count_normal_embeddings(sigma, pi) == oracle::normal_count(embs, oracle::tails(pi.letters())));
        }
}

TEST_CASE("deletions") {
  CHECK(deletions(P("3412")) == std::vector<Permutation>{P("231"), P("312")});
  CHECK(deletions(P("12")) == std::vector<Permutation>{P("1")});
  CHECK(deletions(P("21")) == std::vector<Permutation>{P("1")});
  CHECK_THROWS_AS(deletions(P("1")), PreconditionError);
}

TEST_CASE("enumeration by descents") {
  CHECK(permutations_with_descents(4, 1).size() == 11);
  CHECK(permutations_with_descents(3, 0) == std::vector<Permutation>{P("123")});
  CHECK_THROWS_AS(permutations_with_descents(3, 3), PreconditionError);
  for (int n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (int k = 0; k < n; ++k) {
      const auto ps = permutations_with_descents(n, k);
      total += ps.size();
      std::size_t brute = 0;
      for (const auto& p : oracle::all_perms(n)) brute += oracle::descents(p) == k ? 1 : 0;
      CHECK(ps.size() == brute);
    }
    CHECK(total == all_permutations(n).size());
  }
  CHECK(m_permutation(6) == P("246135"));
  CHECK(w_permutation(5) == P("13524"));
}
