#include <algorithm>
#include <random>

#include "doctest.h"
#include "heroix/heroix.hpp"
#include "oracles.hpp"

using namespace heroix;

namespace {

std::vector<Tournament> upto(int max_n) {
  std::vector<Tournament> all;
  for (int n = 1; n <= max_n; ++n) {
    for (const Tournament& t : enumerate_tournaments(n)) all.push_back(t);
  }
  return all;
}

std::vector<VertexSet> brute_maximal(const Tournament& t) {
  const auto all = test::brute_homogeneous_sets(t);
  std::vector<VertexSet> out;
  for (const VertexSet& s : all) {
    const bool maximal = std::none_of(all.begin(), all.end(), [&](const VertexSet& b) {
      return b.size() > s.size() && std::includes(b.begin(), b.end(), s.begin(), s.end());
    });
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> interleave(const DeltaPartitionSpine& p) {
  std::vector<VertexSet> blocks;
  for (std::size_t i = 0; i < p.spine.size(); ++i) {
    blocks.push_back({p.spine[i]});
    if (i < p.blocks.size()) blocks.push_back(p.blocks[i]);
  }
  return blocks;
}

// Odd-position blocks are nonempty, the blocks partition V(t), and the parity
// rule holds between every pair of blocks.
bool is_delta_partition(const Tournament& t, const std::vector<VertexSet>& blocks) {
  if (blocks.size() % 2 == 0) return false;
  std::vector<int> seen(t.size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i % 2 == 0 && blocks[i].empty()) return false;
    for (Vertex v : blocks[i]) ++seen[v];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const bool both_odd = i % 2 == 0 && j % 2 == 0;
      if (!is_complete_to(t, both_odd ? blocks[j] : blocks[i], both_odd ? blocks[i] : blocks[j])) {
        return false;
      }
    }
  }
  return true;
}

// Merging positions p..q with q-p even keeps the parity of every other block.
std::vector<VertexSet> merge_run(const std::vector<VertexSet>& blocks, std::size_t p, std::size_t q) {
  std::vector<VertexSet> out(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(p));
  VertexSet merged;
  for (std::size_t i = p; i <= q; ++i) merged.insert(merged.end(), blocks[i].begin(), blocks[i].end());
  std::sort(merged.begin(), merged.end());
  out.push_back(merged);
  out.insert(out.end(), blocks.begin() + static_cast<std::ptrdiff_t>(q) + 1, blocks.end());
  return out;
}

void check_tree(const Tournament& t, const DecompositionTree& node) {
  if (node.kind == DecompositionTree::Kind::Leaf) {
    CHECK(node.vertices.size() == 1);
    return;
  }
  REQUIRE(node.children.size() >= 2);
  CHECK(node.quotient.size() == static_cast<int>(node.children.size()));
  VertexSet covered;
  for (const DecompositionTree& c : node.children) {
    covered.insert(covered.end(), c.vertices.begin(), c.vertices.end());
    check_tree(t, c);
  }
  std::sort(covered.begin(), covered.end());
  CHECK(covered == node.vertices);
  if (node.kind == DecompositionTree::Kind::Linear) {
    CHECK(is_transitive(node.quotient));
  } else {
    CHECK(is_prime(node.quotient));
  }
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("is_homogeneous examples") {
    const Tournament s4 = substitute(cyclic_triangle(), 1, Tournament(2));
    CHECK(is_homogeneous(s4, VertexSet{1, 2}));
    const Tournament d3 = d_tournament(3);
    CHECK(is_homogeneous(d3, VertexSet{1, 2, 3}));
    CHECK(is_homogeneous(d3, VertexSet{4, 5, 6}));
    CHECK_THROWS_AS(is_homogeneous(d3, VertexSet{1}), ValidationError);
    CHECK_THROWS_AS(is_homogeneous(cyclic_triangle(), VertexSet{0, 1, 2}), ValidationError);
  }

  TEST_CASE("U_3 has no homogeneous set of any size") {
    const Tournament u = u_tournament(3);
    for (std::uint32_t m = 0; m < 32; ++m) {
      const int size = __builtin_popcount(m);
      if (size < 2 || size > 4) continue;
      VertexSet s;
      for (int v = 0; v < 5; ++v) {
        if ((m >> v) & 1u) s.push_back(v);
      }
      CHECK_FALSE(is_homogeneous(u, s));
    }
  }

  TEST_CASE("homogeneous sets agree with the subset oracle, n<=6") {
    for (const Tournament& t : upto(6)) {
      if (t.size() < 3) continue;
      const auto brute = test::brute_homogeneous_sets(t);
      for (std::uint32_t m = 0; m < (1u << t.size()); ++m) {
        const int size = __builtin_popcount(m);
        if (size < 2 || size >= t.size()) continue;
        VertexSet s;
        for (int v = 0; v < t.size(); ++v) {
          if ((m >> v) & 1u) s.push_back(v);
        }
        CHECK(is_homogeneous(t, s) == (std::find(brute.begin(), brute.end(), s) != brute.end()));
      }
      CHECK(maximal_homogeneous_sets(t) == brute_maximal(t));
      CHECK(is_prime(t) == brute.empty());
    }
  }

  TEST_CASE("maximal homogeneous sets examples") {
    CHECK(maximal_homogeneous_sets(d_tournament(3)) == std::vector<VertexSet>{{1, 2, 3}, {4, 5, 6}});
    CHECK(maximal_homogeneous_sets(u_tournament(3)).empty());
    CHECK(maximal_homogeneous_sets(Tournament(3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK(maximal_homogeneous_sets(Tournament(2)).empty());
  }

  TEST_CASE("primality") {
    CHECK(is_prime(u_tournament(4)));
    CHECK_FALSE(is_prime(delta2_tournament()));
    CHECK(is_prime(n_tournament()));
    CHECK(is_prime(s_tournament(3)));
    CHECK(is_prime(Tournament(2)));
    for (const Tournament& t : upto(7)) {
      if (t.size() >= 3 && is_prime(t)) CHECK(is_strongly_connected(t));
    }
  }

  TEST_CASE("decomposition examples") {
    const DecompositionTree l4 = substitution_decomposition(Tournament(4));
    CHECK(l4.kind == DecompositionTree::Kind::Linear);
    CHECK(l4.children.size() == 4);
    const DecompositionTree d3 = substitution_decomposition(d_tournament(3));
    CHECK(d3.kind == DecompositionTree::Kind::Prime);
    REQUIRE(d3.children.size() == 3);
    CHECK(d3.children[0].vertices == VertexSet{0});
    CHECK(d3.children[1].vertices == VertexSet{1, 2, 3});
    CHECK(d3.children[2].vertices == VertexSet{4, 5, 6});
    CHECK(are_isomorphic(d3.quotient, cyclic_triangle()));
    const DecompositionTree u3 = substitution_decomposition(u_tournament(3));
    CHECK(u3.kind == DecompositionTree::Kind::Prime);
    CHECK(u3.children.size() == 5);
    CHECK(u3.quotient == u_tournament(3));
    CHECK(substitution_decomposition(Tournament(1)).kind == DecompositionTree::Kind::Leaf);
    CHECK_THROWS_AS(substitution_decomposition(Tournament(0)), ValidationError);
  }

  TEST_CASE("decomposition invariants and reconstruction, n<=7 and random n<=14") {
    for (const Tournament& t : upto(7)) {
      const DecompositionTree tree = substitution_decomposition(t);
      check_tree(t, tree);
      CHECK(reconstruct(tree) == t);
    }
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
      // Nested substitutions give deep trees.
      Tournament t = test::random_tournament(rng, 3);
      while (t.size() < 14) {
        const Vertex v = static_cast<Vertex>(rng() % t.size());
        t = substitute(t, v, test::random_tournament(rng, 1 + static_cast<int>(rng() % 4)));
      }
      const DecompositionTree tree = substitution_decomposition(t);
      check_tree(t, tree);
      CHECK(reconstruct(tree) == t);
    }
  }

  TEST_CASE("trisections") {
    const auto c = find_trisection(cyclic_triangle());
    REQUIRE(c.has_value());
    CHECK((*c)[0] == VertexSet{0});
    CHECK((*c)[1] == VertexSet{1});
    CHECK((*c)[2] == VertexSet{2});
    const auto d = find_trisection(d_tournament(3));
    REQUIRE(d.has_value());
    CHECK((*d)[0] == VertexSet{0});
    CHECK((*d)[1] == VertexSet{1, 2, 3});
    CHECK((*d)[2] == VertexSet{4, 5, 6});
    CHECK_FALSE(find_trisection(Tournament(3)).has_value());
    CHECK_FALSE(find_trisection(u_tournament(3)).has_value());
  }

  TEST_CASE("trisection existence matches the 3^n oracle, n<=6") {
    for (const Tournament& t : upto(6)) {
      const auto tri = find_trisection(t);
      CHECK(tri.has_value() == test::brute_has_trisection(t));
      if (!tri) continue;
      const auto& [x, y, z] = *tri;
      CHECK(!x.empty());
      CHECK(!y.empty());
      CHECK(!z.empty());
      CHECK(x.size() + y.size() + z.size() == static_cast<std::size_t>(t.size()));
      CHECK(is_complete_to(t, x, y));
      CHECK(is_complete_to(t, y, z));
      CHECK(is_complete_to(t, z, x));
    }
  }

  TEST_CASE("spine Delta-partitions") {
    const auto u3 = find_spine_delta_partition(u_tournament(3));
    REQUIRE(u3.has_value());
    CHECK(u3->spine == VertexSet{0, 2, 4});
    CHECK(u3->blocks == std::vector<VertexSet>{{1}, {3}});
    const auto c = find_spine_delta_partition(cyclic_triangle());
    REQUIRE(c.has_value());
    CHECK(c->spine.size() == 2);
    CHECK(c->blocks.size() == 1);
    CHECK(c->blocks[0].size() == 1);
    CHECK_FALSE(find_spine_delta_partition(d_tournament(3)).has_value());
    CHECK_THROWS_AS(find_spine_delta_partition(Tournament(3)), PreconditionViolated);
    CHECK_THROWS_AS(spine_delta_partitions(Tournament(1)), PreconditionViolated);
  }

  TEST_CASE("every reported spine partition is a Delta-partition, strong n<=7") {
    for (const Tournament& t : upto(7)) {
      if (t.size() < 3 || !is_strongly_connected(t)) continue;
      for (const DeltaPartitionSpine& p : spine_delta_partitions(t)) {
        CHECK(p.spine.size() == p.blocks.size() + 1);
        CHECK(is_delta_partition(t, interleave(p)));
      }
    }
  }

  TEST_CASE("membership examples") {
    CHECK(member_D(cyclic_triangle()).member);
    CHECK_FALSE(member_D(u_tournament(3)).member);
    CHECK_FALSE(member_D(n_tournament()).member);
    CHECK(member_D(d_tournament(4)).member);
    CHECK(member_A(u_tournament(3)).member);
    CHECK(member_A(delta2_tournament()).member);
    CHECK_FALSE(member_A(d_tournament(3)).member);
    CHECK_FALSE(member_A(n_tournament()).member);
    CHECK_FALSE(member_A(s_tournament(3)).member);
    CHECK(member_A(a_tournament(3)).member);
    CHECK_THROWS_AS(member_D(Tournament(0)), ValidationError);
    CHECK_THROWS_AS(member_A(Tournament(0)), ValidationError);
  }

  TEST_CASE("membership traces are deterministic") {
    const MembershipResult a = member_A(delta2_tournament());
    CHECK_FALSE(a.trace.empty());
    CHECK(a.trace == member_A(delta2_tournament()).trace);
    CHECK(member_D(d_tournament(3)).trace == member_D(d_tournament(3)).trace);
  }

  TEST_CASE("member_AF examples") {
    const AFResult u4 = member_AF(u_tournament(4));
    CHECK(u4.member);
    CHECK(u4.case_label == 6);
    CHECK_FALSE(member_AF(delta2_tournament()).member);
    const std::vector<Tournament> blocks{Tournament(1), Tournament(2), cyclic_triangle()};
    const AFResult case3 = member_AF(compose_delta(blocks));
    CHECK(case3.member);
    CHECK(case3.case_label == 3);
    CHECK(member_AF(Tournament(1)).case_label == 1);
    CHECK(member_AF(Tournament(4)).case_label == 2);
    CHECK(member_AF(u_tournament(3)).member);
    CHECK(member_AF(n_tournament()).member == false);
  }

  TEST_CASE("the 8-vertex K is in A but not a forest tournament") {
    const Tournament k = read_tournament_file(test::fixture_path("k8")).t;
    const std::vector<Tournament> blocks{Tournament(1), cyclic_triangle(), Tournament(1),
                                         Tournament(1), Tournament(2)};
    CHECK(are_isomorphic(k, compose_delta(blocks)));
    CHECK(member_A(k).member);
    CHECK_FALSE(member_AF(k).member);
    CHECK_FALSE(member_AF(complement(k)).member);
  }

  TEST_CASE("member_D agrees with embedding into D_k, n<=5, and D_{k+1}, n<=4") {
    for (const Tournament& t : upto(5)) {
      const bool m = member_D(t).member;
      CHECK(m == contains_subtournament(d_tournament(t.size()), t).has_value());
      if (t.size() <= 4) CHECK(m == contains_subtournament(d_tournament(t.size() + 1), t).has_value());
    }
  }

  TEST_CASE("member_A agrees with embedding into A_k, n<=4") {
    for (const Tournament& t : upto(4)) {
      CHECK(member_A(t).member == contains_subtournament(a_tournament(t.size()), t).has_value());
    }
  }

  TEST_CASE("members of A on 5 and 6 vertices embed in A_4") {
    // Every member of A on k <= 6 vertices sits inside A_{k-1} or smaller
    // here, so the check stays within the 31-vertex host.
    const Tournament a4 = a_tournament(4);
    for (int n = 5; n <= 6; ++n) {
      for (const Tournament& t : enumerate_tournaments(n)) {
        if (member_A(t).member) CHECK(contains_subtournament(a4, t).has_value());
      }
    }
  }

  TEST_CASE("member_AF agrees with member_A and a forest ordering, n<=6") {
    for (const Tournament& t : upto(6)) {
      const AFResult af = member_AF(t);
      CHECK(af.member == (member_A(t).member && find_forest_ordering(t).has_value()));
      CHECK((af.case_label != 0) == af.member);
    }
  }

  TEST_CASE("prime members of A are exactly U_2, U_3, U_4, n<=7") {
    std::vector<CanonicalCode> found;
    for (const Tournament& t : upto(7)) {
      if (t.size() >= 3 && is_prime(t) && member_A(t).member) found.push_back(canonical_form(t));
    }
    std::vector<CanonicalCode> expected{canonical_form(u_tournament(2)),
                                        canonical_form(u_tournament(3)),
                                        canonical_form(u_tournament(4))};
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    CHECK(found == expected);
  }

  TEST_CASE("maximal homogeneous sets of strong members of A are Delta-partition blocks, n<=7") {
    for (const Tournament& t : upto(7)) {
      if (t.size() < 3 || !is_strongly_connected(t) || !member_A(t).member) continue;
      const auto partitions = spine_delta_partitions(t);
      for (const VertexSet& s : maximal_homogeneous_sets(t)) {
        bool found = false;
        for (const DeltaPartitionSpine& p : partitions) {
          const auto blocks = interleave(p);
          for (std::size_t i = 0; i < blocks.size() && !found; ++i) {
            for (std::size_t j = i; j < blocks.size() && !found; j += 2) {
              const auto merged = merge_run(blocks, i, j);
              found = merged[i] == s && is_delta_partition(t, merged);
            }
          }
        }
        CHECK(found);
      }
    }
  }

  TEST_CASE("members of D are heroes iff D_3-free, n<=7") {
    const Tournament d3 = d_tournament(3);
    for (const Tournament& t : upto(7)) {
      if (!member_D(t).member) continue;
      CHECK(is_hero(t).hero == !contains_subtournament(t, d3).has_value());
    }
  }

  TEST_CASE("size limits") {
    CHECK_THROWS_AS(substitution_decomposition(Tournament(kStructureLimit + 1)), LimitExceeded);
  }
}
