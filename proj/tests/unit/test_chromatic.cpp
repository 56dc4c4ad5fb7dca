#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "heroix/heroix.hpp"
#include "oracles.hpp"

using namespace heroix;

namespace {

Coloring classes_to_coloring(int n, const std::vector<VertexSet>& classes) {
  std::vector<long long> labels(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c]) labels[v] = static_cast<long long>(c);
  }
  return Coloring::from_labels(labels);
}

}  // namespace

TEST_SUITE("chromatic") {
  TEST_CASE("Coloring::from_labels compacts in first-appearance order") {
    const Coloring c = Coloring::from_labels({7, 3, 7, 9});
    CHECK(c.assign == std::vector<int>{0, 1, 0, 2});
    CHECK(c.k == 3);
    CHECK(c.classes() == std::vector<VertexSet>{{0, 2}, {1}, {3}});
    CHECK_THROWS_AS(Coloring::from_labels({0, -1}), ValidationError);
  }

  TEST_CASE("is_valid_coloring") {
    const Tournament c = cyclic_triangle();
    CHECK(is_valid_coloring(c, classes_to_coloring(3, {{0, 1}, {2}})));
    CHECK_FALSE(is_valid_coloring(c, classes_to_coloring(3, {{0, 1, 2}})));
    CHECK(is_valid_coloring(d_tournament(3), explicit_coloring_D(3)));
    CHECK_THROWS_AS(is_valid_coloring(c, Coloring{{0, 0}, 1}), ValidationError);
    CHECK_THROWS_AS(is_valid_coloring(c, Coloring{{0, -1, 0}, 1}), ValidationError);
  }

  TEST_CASE("find_k_coloring") {
    CHECK_FALSE(find_k_coloring(cyclic_triangle(), 1).has_value());
    CHECK_FALSE(find_k_coloring(d_tournament(3), 2).has_value());
    const auto d3 = find_k_coloring(d_tournament(3), 3);
    REQUIRE(d3.has_value());
    CHECK(is_valid_coloring(d_tournament(3), *d3));
    const auto l9 = find_k_coloring(Tournament(9), 1);
    REQUIRE(l9.has_value());
    CHECK(l9->assign == std::vector<int>(9, 0));
    CHECK(find_k_coloring(Tournament(0), 0).has_value());
    CHECK_FALSE(find_k_coloring(Tournament(1), 0).has_value());
    CHECK_THROWS_AS(find_k_coloring(Tournament(1), -1), ValidationError);
  }

  TEST_CASE("chromatic numbers of named tournaments") {
    for (int n = 1; n <= 4; ++n) CHECK(chromatic_number(d_tournament(n)).chi == n);
    CHECK(chromatic_number(a_tournament(3)).chi == 3);
    CHECK(chromatic_number(u_tournament(3)).chi == 2);
    const ChromaticResult s3 = chromatic_number(s_tournament(3));
    CHECK(s3.chi == 2);
    CHECK(is_valid_coloring(s_tournament(3), s3.witness));
    CHECK(is_valid_coloring(s_tournament(3), classes_to_coloring(5, {{0, 1, 2}, {3, 4}})));
    CHECK(chromatic_number(Tournament(0)).chi == 0);
    CHECK_THROWS_AS(chromatic_number(Tournament(kSubsetDpLimit + 1)), LimitExceeded);
  }

  TEST_CASE("exact against the assignment oracle, all classes n<=6") {
    for (int n = 1; n <= 6; ++n) {
      for (const Tournament& t : enumerate_tournaments(n)) {
        const ChromaticResult r = chromatic_number(t);
        CHECK(r.chi == test::brute_chromatic(t));
        CHECK(r.witness.k == r.chi);
        CHECK(is_valid_coloring(t, r.witness));
      }
    }
  }

  TEST_CASE("monotone under induced subtournaments, n<=5") {
    for (int n = 1; n <= 5; ++n) {
      for (const Tournament& t : enumerate_tournaments(n)) {
        const int chi = chromatic_number(t).chi;
        for (std::uint32_t m = 1; m < (1u << n); ++m) {
          VertexSet s;
          for (int v = 0; v < n; ++v) {
            if ((m >> v) & 1u) s.push_back(v);
          }
          CHECK(chromatic_number(induced(t, s)).chi <= chi);
        }
      }
    }
  }

  TEST_CASE("complement invariance and chi=1 iff transitive iff C-free, n<=6") {
    for (int n = 1; n <= 6; ++n) {
      for (const Tournament& t : enumerate_tournaments(n)) {
        const int chi = chromatic_number(t).chi;
        CHECK(chi == chromatic_number(complement(t)).chi);
        CHECK((chi == 1) == is_transitive(t));
        CHECK((chi == 1) == !contains_subtournament(t, cyclic_triangle()).has_value());
      }
    }
  }

  TEST_CASE("random tournaments up to 20 vertices: DP, bounds and branch-and-bound agree") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 8 + static_cast<int>(rng() % 13);
      const Tournament t = test::random_tournament(rng, n);
      const ChromaticResult r = chromatic_number(t);
      CHECK(is_valid_coloring(t, r.witness));
      const ChromaticBounds b = chromatic_bounds(t);
      CHECK(b.lower <= r.chi);
      CHECK(r.chi <= b.upper);
      CHECK(is_valid_coloring(t, b.upper_witness));
      const ColorabilityResult yes = decide_k_colorable(t, r.chi);
      REQUIRE(yes.coloring.has_value());
      CHECK(is_valid_coloring(t, *yes.coloring));
      CHECK(yes.coloring->k <= r.chi);
      CHECK_FALSE(decide_k_colorable(t, r.chi - 1).coloring.has_value());
    }
  }

  TEST_CASE("branch-and-bound on the larger named tournaments") {
    CHECK_FALSE(decide_k_colorable(a_tournament(3), 2).coloring.has_value());
    CHECK_FALSE(decide_k_colorable(d_tournament(4), 3).coloring.has_value());
    const auto d5 = decide_k_colorable(d_tournament(5), 5);
    REQUIRE(d5.coloring.has_value());
    CHECK(is_valid_coloring(d_tournament(5), *d5.coloring));
    CHECK_FALSE(decide_k_colorable(a_tournament(4), 3).coloring.has_value());
    CHECK_THROWS_AS(decide_k_colorable(d_tournament(4), 3, 3), Undecided);
    CHECK_THROWS_AS(decide_k_colorable(Tournament(kMaskEngineLimit + 1), 1), LimitExceeded);
    CHECK(find_k_coloring(a_tournament(4), 4).has_value());
  }

  TEST_CASE("cyclic triangle masks list the third vertex of every cyclic triangle") {
    std::mt19937_64 rng(29);
    const Tournament t = test::random_tournament(rng, 9);
    const auto cyc = cyclic_triangle_masks(t);
    for (Vertex a = 0; a < 9; ++a) {
      for (Vertex b = 0; b < 9; ++b) {
        for (Vertex c = 0; c < 9; ++c) {
          if (a == b || b == c || a == c) continue;
          const bool cyclic = !is_transitive_set(t, VertexSet{a, b, c});
          CHECK((((cyc[a][b] >> c) & 1u) != 0) == cyclic);
        }
      }
    }
  }

  TEST_CASE("witness is deterministic") {
    const Tournament t = s_tournament(4);
    CHECK(chromatic_number(t).witness == chromatic_number(t).witness);
  }
}
