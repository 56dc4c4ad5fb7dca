#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "heroix/heroix.hpp"
#include "oracles.hpp"

using namespace heroix;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

std::vector<Tournament> upto(int max_n) {
  std::vector<Tournament> all;
  for (int n = 1; n <= max_n; ++n) {
    for (const Tournament& t : enumerate_tournaments(n)) all.push_back(t);
  }
  return all;
}

Ordering reversed(int n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.rbegin(), seq.rend(), 0);
  return Ordering(seq);
}

// Union-find over the backedge pairs; false as soon as a cycle closes.
bool backedges_acyclic(int n, const Pairs& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) {
    const int a = find(u);
    const int b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

TEST_SUITE("forest") {
  TEST_CASE("backedge graphs of small orderings") {
    const BackedgeGraph c = backedge_graph(cyclic_triangle(), Ordering::identity(3));
    CHECK(c.edges == Pairs{{0, 2}});
    CHECK(c.component == std::vector<int>{0, 1, 0});
    CHECK(c.component_count == 2);

    const BackedgeGraph r = backedge_graph(Tournament(3), reversed(3));
    CHECK(r.edges == Pairs{{2, 1}, {2, 0}, {1, 0}});
    CHECK(r.component_count == 1);

    const BackedgeGraph n = backedge_graph(n_tournament(), Ordering::identity(5));
    CHECK(n.edges == Pairs{{0, 2}, {0, 4}});
    CHECK(n.component_count == 3);

    CHECK(backedge_graph(Tournament(4), Ordering::identity(4)).edges.empty());
    CHECK_THROWS_AS(backedge_graph(Tournament(3), Ordering::identity(2)), ValidationError);
  }

  TEST_CASE("thickness") {
    CHECK(thickness(backedge_graph(cyclic_triangle(), Ordering::identity(3))) == 1);
    CHECK(thickness(backedge_graph(Tournament(2), Ordering::identity(2))) == 0);
    CHECK(thickness(backedge_graph(Tournament(3), reversed(3))) == 2);
    CHECK(thickness(backedge_graph(n_tournament(), Ordering::identity(5))) == 1);
    CHECK_THROWS_AS(thickness(backedge_graph(Tournament(1), Ordering::identity(1))), ValidationError);
  }

  TEST_CASE("is_forest_ordering agrees with the literal recursion, every ordering, n<=5") {
    for (const Tournament& t : upto(5)) {
      std::vector<Vertex> seq(t.size());
      std::iota(seq.begin(), seq.end(), 0);
      do {
        const Ordering sigma(seq);
        const bool forest = is_forest_ordering(t, sigma);
        CHECK(forest == test::brute_is_forest_ordering(t, seq));
        CHECK(leftmost_forest_cut(t, sigma).has_value() == (forest && t.size() >= 2));
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
  }

  TEST_CASE("leftmost cut examples") {
    CHECK(leftmost_forest_cut(cyclic_triangle(), Ordering::identity(3)) == 1);
    CHECK(leftmost_forest_cut(Tournament(4), Ordering::identity(4)) == 1);
    CHECK_FALSE(leftmost_forest_cut(Tournament(3), reversed(3)).has_value());
  }

  TEST_CASE("find_forest_ordering agrees with the n! oracle, n<=6") {
    for (const Tournament& t : upto(6)) {
      const auto sigma = find_forest_ordering(t);
      CHECK(sigma.has_value() == test::brute_is_forest(t));
      if (sigma) CHECK(is_forest_ordering(t, *sigma));
    }
  }

  TEST_CASE("the found ordering is the lexicographically least, n<=5") {
    for (const Tournament& t : upto(5)) {
      std::vector<Vertex> seq(t.size());
      std::iota(seq.begin(), seq.end(), 0);
      std::optional<Ordering> least;
      do {
        if (is_forest_ordering(t, Ordering(seq))) {
          least = Ordering(seq);
          break;
        }
      } while (std::next_permutation(seq.begin(), seq.end()));
      CHECK(find_forest_ordering(t) == least);
    }
  }

  TEST_CASE("named tournaments") {
    const auto u3 = find_forest_ordering(u_tournament(3));
    REQUIRE(u3.has_value());
    CHECK(backedges_acyclic(5, backedge_graph(u_tournament(3), *u3).edges));
    CHECK(find_forest_ordering(n_tournament()).has_value());
    CHECK(find_forest_ordering(u_tournament(4)).has_value());
    CHECK_FALSE(find_forest_ordering(d_tournament(3)).has_value());
    CHECK_FALSE(find_forest_ordering(s_tournament(3)).has_value());
    CHECK_FALSE(find_forest_ordering(delta2_tournament()).has_value());
    const Tournament k = read_tournament_file(test::fixture_path("k8")).t;
    CHECK_FALSE(find_forest_ordering(k).has_value());
    CHECK_FALSE(find_forest_ordering(complement(k)).has_value());
  }

  TEST_CASE("U_3 in natural order has a backedge triangle") {
    CHECK_FALSE(is_forest_ordering(u_tournament(3), Ordering::identity(5)));
    CHECK(backedge_graph(u_tournament(3), Ordering::identity(5)).edges == Pairs{{0, 2}, {0, 4}, {2, 4}});
  }

  TEST_CASE("forest orderings: acyclic backedges, thin components, two colours, n<=7") {
    for (const Tournament& t : upto(7)) {
      const auto sigma = find_forest_ordering(t);
      if (!sigma) continue;
      const BackedgeGraph b = backedge_graph(t, *sigma);
      CHECK(backedges_acyclic(t.size(), b.edges));
      for (int c = 0; c < b.component_count; ++c) {
        VertexSet members;
        for (Vertex v = 0; v < t.size(); ++v) {
          if (b.component[v] == c) members.push_back(v);
        }
        if (members.size() < 2) continue;
        CHECK(thickness(backedge_graph(induced(t, members), restrict_ordering(*sigma, members))) == 1);
      }
      const Coloring two = forest_two_coloring(t, *sigma);
      CHECK(two.k <= 2);
      CHECK(is_valid_coloring(t, two));
      CHECK(chromatic_number(t).chi <= 2);
      CHECK(find_forest_ordering(complement(t)).has_value());
    }
  }

  TEST_CASE("forest tournaments are hereditary, n<=6") {
    for (const Tournament& t : upto(6)) {
      if (!find_forest_ordering(t) || t.size() < 2) continue;
      for (Vertex v = 0; v < t.size(); ++v) CHECK(find_forest_ordering(delete_vertex(t, v)).has_value());
    }
  }

  TEST_CASE("two-colouring requires a forest ordering") {
    CHECK_THROWS_AS(forest_two_coloring(Tournament(3), reversed(3)), PreconditionViolated);
  }

  TEST_CASE("incomparable maps on named tournaments") {
    struct Case {
      Tournament t;
      std::uint64_t r;
    };
    const std::vector<Case> cases{{cyclic_triangle(), 10}, {u_tournament(3), 2}, {n_tournament(), 9},
                                  {u_tournament(4), 5}};
    for (const Case& c : cases) {
      const auto sigma = find_forest_ordering(c.t);
      REQUIRE(sigma.has_value());
      const IncomparableMap m = build_incomparable_map(c.t, *sigma, c.r);
      CHECK(m.r == c.r);
      CHECK(ordering_of(m) == *sigma);
      CHECK(verify_incomparable(c.t, m));
      CHECK(verify_incomparable_bounded(c.t, m, 3));
      CHECK(std::all_of(m.phi.begin(), m.phi.end(), [](std::uint64_t x) { return x >= 1; }));
    }
  }

  TEST_CASE("incomparable maps for every forest tournament, n<=7") {
    for (const Tournament& t : upto(7)) {
      const auto sigma = find_forest_ordering(t);
      if (!sigma) continue;
      for (std::uint64_t r : {1u, 2u, 5u, 10u}) {
        const IncomparableMap m = build_incomparable_map(t, *sigma, r);
        CHECK(ordering_of(m) == *sigma);
        CHECK(verify_incomparable(t, m));
      }
    }
  }

  TEST_CASE("the verifier rejects comparable gaps") {
    const IncomparableMap m{{3, 2, 1}, 2};
    CHECK_FALSE(verify_incomparable(Tournament(3), m));
    CHECK(verify_incomparable_bounded(Tournament(3), m, 1));
    CHECK_FALSE(verify_incomparable_bounded(Tournament(3), m, 2));
    CHECK_THROWS_AS(verify_incomparable(Tournament(3), IncomparableMap{{1, 1, 2}, 2}), ValidationError);
    CHECK_THROWS_AS(verify_incomparable(Tournament(3), IncomparableMap{{0, 1, 2}, 2}), ValidationError);
    CHECK_THROWS_AS(verify_incomparable_bounded(Tournament(3), m, 0), ValidationError);
  }

  TEST_CASE("build_incomparable_map preconditions") {
    CHECK_THROWS_AS(build_incomparable_map(Tournament(3), reversed(3), 2), PreconditionViolated);
  }

  TEST_CASE("search limits") {
    CHECK_THROWS_AS(find_forest_ordering(Tournament(kForestSearchLimit + 1)), LimitExceeded);
    CHECK(find_forest_ordering(Tournament(kForestSearchLimit)) == Ordering::identity(kForestSearchLimit));
    CHECK_THROWS_AS(find_forest_ordering(s_tournament(3), 2), Undecided);
  }

  TEST_CASE("random 9-vertex tournaments: search and verifier agree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const Tournament t = test::random_tournament(rng, 9);
      const auto sigma = find_forest_ordering(t);
      if (sigma) CHECK(is_forest_ordering(t, *sigma));
      if (!sigma) CHECK(chromatic_number(t).chi >= 2);
    }
  }
}
