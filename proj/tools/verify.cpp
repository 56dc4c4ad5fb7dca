#include "verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "heroix/heroix.hpp"

namespace heroix::verify {
namespace {

std::string one_line(const Tournament& t) {
  std::string s = std::to_string(t.size()) + ":";
  for (Vertex u = 0; u < t.size(); ++u) {
    if (u > 0) s += '/';
    for (Vertex v = 0; v < t.size(); ++v) s += t.has_edge(u, v) ? '1' : '0';
  }
  return s;
}

CheckResult pass(std::string witness) {
  return {"", Status::Pass, std::move(witness)};
}

CheckResult fail(std::string witness) {
  return {"", Status::Fail, std::move(witness)};
}

// Calls fn on every class with 1..max_n vertices; stops at the first false.
template <class Fn>
bool all_classes(int max_n, Fn&& fn) {
  for (int n = 1; n <= max_n; ++n) {
    for (const Tournament& t : enumerate_tournaments(n)) {
      if (!fn(t)) return false;
    }
  }
  return true;
}

std::size_t class_count(int max_n) {
  std::size_t c = 0;
  for (int n = 1; n <= max_n; ++n) c += enumerate_tournaments(n).size();
  return c;
}

bool is_isomorphism(const Tournament& a, const Tournament& b,
                    const std::vector<Vertex>& map) {
  if (a.size() != b.size() || static_cast<int>(map.size()) != a.size()) return false;
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = 0; v < a.size(); ++v) {
      if (u != v && a.has_edge(u, v) != b.has_edge(map[u], map[v])) return false;
    }
  }
  return true;
}

// ---- core ----

CheckResult enumeration_counts() {
  const std::array<std::size_t, 8> expected{1, 1, 2, 4, 12, 56, 456, 6880};
  for (int n = 1; n <= 8; ++n) {
    const auto& list = enumerate_tournaments(n);
    if (list.size() != expected[n - 1]) {
      return fail("n=" + std::to_string(n) + " gave " + std::to_string(list.size()) +
                  " classes, expected " + std::to_string(expected[n - 1]));
    }
    if (n <= 7) {
      std::vector<CanonicalCode> codes;
      for (const Tournament& t : list) codes.push_back(canonical_form(t));
      std::sort(codes.begin(), codes.end());
      if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) {
        return fail("duplicate isomorphism class at n=" + std::to_string(n));
      }
    }
  }
  return pass("1 1 2 4 12 56 456 6880 classes for n=1..8");
}

CheckResult canonical_relabel_invariance() {
  std::mt19937_64 rng(0x5eed0001);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    Tournament t(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() & 1u) t.set_edge(v, u);
      }
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (canonical_form(t) != canonical_form(relabel(t, perm))) {
      return fail("code changed under relabelling of " + one_line(t));
    }
  }
  return pass("500 random relabellings, n<=9");
}

CheckResult complement_involution() {
  std::size_t checked = 0;
  const bool ok = all_classes(6, [&](const Tournament& t) {
    ++checked;
    return complement(complement(t)) == t;
  });
  if (!ok) return fail("complement is not involutive");
  return pass(std::to_string(checked) + " classes, n<=6");
}

CheckResult stearns() {
  for (const auto& [k, n] : {std::pair{3, 4}, std::pair{4, 8}}) {
    for (const Tournament& t : enumerate_tournaments(n)) {
      const auto s = find_transitive_subset(t, k);
      if (!s || static_cast<int>(s->size()) != k || !is_transitive_set(t, *s)) {
        return fail("no transitive " + std::to_string(k) + "-set in " + one_line(t));
      }
    }
  }
  return pass("L_3 in all 4 classes on 4 vertices, L_4 in all 6880 on 8");
}

CheckResult composition_identities() {
  const Tournament i1 = transitive_tournament(1);
  for (int n = 2; n <= 5; ++n) {
    const Tournament d = d_tournament(n - 1);
    const std::array<Tournament, 3> blocks{i1, d, d};
    if (d_tournament(n) != compose_delta(blocks)) {
      return fail("D_" + std::to_string(n) + " differs from its recursion");
    }
  }
  for (int n = 2; n <= 4; ++n) {
    std::vector<Tournament> blocks;
    for (int i = 0; i < 2 * n - 1; ++i) {
      blocks.push_back(i % 2 == 0 ? i1 : a_tournament(n - 1));
    }
    if (a_tournament(n) != compose_delta(blocks)) {
      return fail("A_" + std::to_string(n) + " differs from its recursion");
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Tournament> singles(2 * n - 1, i1);
    if (!are_isomorphic(u_tournament(n), compose_delta(singles))) {
      return fail("U_" + std::to_string(n) + " is not a composition of singletons");
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const Tournament s = s_tournament(n);
    std::vector<Vertex> shift(s.size());
    for (Vertex v = 0; v < s.size(); ++v) shift[v] = (v + 1) % s.size();
    if (!is_isomorphism(s, s, shift)) {
      return fail("cyclic shift is not an automorphism of S_" + std::to_string(n));
    }
  }
  return pass("D_2..D_5, A_2..A_4, U_1..U_5, S_1..S_4");
}

// ---- classes ----

CheckResult chi_d() {
  for (int n = 1; n <= 4; ++n) {
    const Tournament d = d_tournament(n);
    const ChromaticResult r = chromatic_number(d);
    if (r.chi != n || !is_valid_coloring(d, r.witness)) {
      return fail("chi(D_" + std::to_string(n) + ") = " + std::to_string(r.chi));
    }
  }
  return pass("chi(D_n) = n for n=1..4");
}

CheckResult chi_a() {
  for (int n = 1; n <= 3; ++n) {
    const Tournament a = a_tournament(n);
    const ChromaticResult r = chromatic_number(a);
    if (r.chi != n || !is_valid_coloring(a, r.witness)) {
      return fail("chi(A_" + std::to_string(n) + ") = " + std::to_string(r.chi));
    }
  }
  const Tournament a4 = a_tournament(4);
  const Coloring c = explicit_coloring_A(4);
  if (a4.size() != 31 || c.k != 4 || !is_valid_coloring(a4, c)) {
    return fail("explicit colouring of A_4 rejected");
  }
  return pass("chi(A_n) = n for n=1..3; A_4 (31 vertices) 4-coloured");
}

CheckResult a4_not_3_colorable() {
  const ColorabilityResult r = decide_k_colorable(a_tournament(4), 3);
  if (r.coloring) return fail("found a 3-colouring of A_4");
  return pass("A_4 has no 3-colouring (" + std::to_string(r.nodes) + " search nodes)");
}

CheckResult named_a_membership() {
  const std::vector<std::pair<NamedTournament, bool>> cases{
      {{"U_3", u_tournament(3)}, true},   {{"Delta2", delta2_tournament()}, true},
      {{"D_3", d_tournament(3)}, false},  {{"N", n_tournament()}, false},
      {{"S_3", s_tournament(3)}, false}};
  for (const auto& [named, expected] : cases) {
    if (member_A(named.t).member != expected) {
      return fail("member_A(" + named.name + ") != " + (expected ? "true" : "false"));
    }
  }
  return pass("A contains U_3, Delta2; excludes D_3, N, S_3");
}

CheckResult named_f_membership() {
  const std::vector<std::pair<NamedTournament, bool>> cases{
      {{"U_3", u_tournament(3)}, true},   {{"N", n_tournament()}, true},
      {{"D_3", d_tournament(3)}, false},  {{"S_3", s_tournament(3)}, false},
      {{"Delta2", delta2_tournament()}, false}};
  for (const auto& [named, expected] : cases) {
    const auto sigma = find_forest_ordering(named.t);
    if (sigma.has_value() != expected) {
      return fail("forest(" + named.name + ") != " + (expected ? "true" : "false"));
    }
    if (sigma && !is_forest_ordering(named.t, *sigma)) {
      return fail("returned ordering of " + named.name + " is not a forest ordering");
    }
  }
  return pass("F contains U_3, N; excludes D_3, S_3, Delta2");
}

CheckResult d_oracle() {
  std::string bad;
  const bool ok = all_classes(5, [&](const Tournament& t) {
    const int k = t.size();
    const bool member = member_D(t).member;
    if (member != contains_subtournament(d_tournament(k), t).has_value()) {
      bad = one_line(t) + " vs D_" + std::to_string(k);
      return false;
    }
    if (k <= 4 && member != contains_subtournament(d_tournament(k + 1), t).has_value()) {
      bad = one_line(t) + " vs D_" + std::to_string(k + 1);
      return false;
    }
    return true;
  });
  if (!ok) return fail("member_D disagrees with embedding for " + bad);
  return pass(std::to_string(class_count(5)) + " classes, n<=5");
}

CheckResult a_oracle() {
  std::string bad;
  const bool ok = all_classes(4, [&](const Tournament& t) {
    const bool member = member_A(t).member;
    if (member != contains_subtournament(a_tournament(t.size()), t).has_value()) {
      bad = one_line(t);
      return false;
    }
    return true;
  });
  if (!ok) return fail("member_A disagrees with embedding for " + bad);
  return pass(std::to_string(class_count(4)) + " classes, n<=4");
}

CheckResult af_crosscheck() {
  std::string bad;
  const bool ok = all_classes(6, [&](const Tournament& t) {
    const bool af = member_AF(t).member;
    const bool split = member_A(t).member && find_forest_ordering(t).has_value();
    if (af != split) {
      bad = one_line(t);
      return false;
    }
    return true;
  });
  if (!ok) return fail("member_AF disagrees with member_A and forest for " + bad);
  return pass(std::to_string(class_count(6)) + " classes, n<=6");
}

CheckResult prime_census() {
  std::vector<CanonicalCode> found;
  all_classes(7, [&](const Tournament& t) {
    if (t.size() >= 3 && is_prime(t) && member_A(t).member) {
      found.push_back(canonical_form(t));
    }
    return true;
  });
  std::vector<CanonicalCode> expected;
  for (int n = 2; n <= 4; ++n) expected.push_back(canonical_form(u_tournament(n)));
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  if (found != expected) {
    return fail(std::to_string(found.size()) + " prime members of A, expected U_2..U_4");
  }
  return pass("prime members of A with 3..7 vertices are U_2, U_3, U_4");
}

// ---- heroes ----

CheckResult hero_equivalence() {
  std::size_t checked = 0;
  std::string bad;
  all_classes(7, [&](const Tournament& t) {
    ++checked;
    if (is_hero_by_forbidden_set(t) != is_hero_by_structure(t) && bad.empty()) {
      bad = one_line(t);
    }
    return true;
  });
  if (!bad.empty()) return fail("hero characterisations disagree on " + bad);
  if (checked != 532) return fail(std::to_string(checked) + " classes, expected 532");
  return pass("532 classes, n<=7, zero disagreements");
}

CheckResult minimal_nonhero_census() {
  std::vector<std::pair<int, CanonicalCode>> found;
  all_classes(7, [&](const Tournament& t) {
    if (is_minimal_nonhero(t)) found.emplace_back(t.size(), canonical_form(t));
    return true;
  });
  std::vector<std::pair<int, CanonicalCode>> expected;
  for (const NamedTournament& h : minimal_nonheroes()) {
    expected.emplace_back(h.t.size(), canonical_form(h.t));
  }
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  if (found != expected) {
    return fail(std::to_string(found.size()) + " minimal non-heroes found, expected 5");
  }
  return pass("U_3, N, S_3 (n=5); Delta2 (n=6); D_3 (n=7)");
}

CheckResult jewel() {
  const JewelSpec spec{7, cyclic_triangle(), cyclic_triangle()};
  if (!is_jewel(d_tournament(3), spec)) return fail("D_3 is not a (7,C,C)-jewel");
  if (is_jewel(transitive_tournament(7), spec)) return fail("L_7 is a (7,C,C)-jewel");
  return pass("D_3 is a (7,C,C)-jewel; L_7 is not");
}

// ---- forest ----

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

std::string forest_violation(const Tournament& t, const Ordering& sigma) {
  const BackedgeGraph g = backedge_graph(t, sigma);
  UnionFind uf(t.size());
  for (const auto& [a, b] : g.edges) {
    if (!uf.unite(a, b)) return "backedge graph has a cycle";
  }
  std::vector<VertexSet> comps(t.size());
  for (Vertex v = 0; v < t.size(); ++v) comps[uf.find(v)].push_back(v);
  for (const VertexSet& comp : comps) {
    if (comp.size() < 2) continue;
    VertexSet ordered = comp;
    std::sort(ordered.begin(), ordered.end(), [&](Vertex a, Vertex b) {
      return sigma.position(a) < sigma.position(b);
    });
    const Tournament sub = induced(t, ordered);
    if (thickness(backedge_graph(sub, Ordering::identity(sub.size()))) != 1) {
      return "connected component with thickness other than 1";
    }
  }
  if (chromatic_number(t).chi > 2) return "chromatic number above 2";
  const Coloring two = forest_two_coloring(t, sigma);
  if (two.k > 2 || !is_valid_coloring(t, two)) return "forest 2-colouring invalid";
  if (t.size() >= 2) {
    for (Vertex v = 0; v < t.size(); ++v) {
      VertexSet rest;
      for (Vertex u = 0; u < t.size(); ++u) {
        if (u != v) rest.push_back(u);
      }
      if (!is_forest_ordering(delete_vertex(t, v), restrict_ordering(sigma, rest))) {
        return "deleting vertex " + std::to_string(v) + " breaks the ordering";
      }
    }
  }
  if (!find_forest_ordering(complement(t))) return "complement is not a forest";
  return {};
}

CheckResult forest_properties() {
  std::size_t forests = 0;
  std::string bad;
  const bool ok = all_classes(7, [&](const Tournament& t) {
    const auto sigma = find_forest_ordering(t);
    if (!sigma) {
      if (find_forest_ordering(complement(t))) {
        bad = one_line(t) + ": complement is a forest";
        return false;
      }
      return true;
    }
    ++forests;
    if (!is_forest_ordering(t, *sigma)) {
      bad = one_line(t) + ": witness rejected";
      return false;
    }
    const std::string why = forest_violation(t, *sigma);
    if (!why.empty()) bad = one_line(t) + ": " + why;
    return why.empty();
  });
  if (!ok) return fail(bad);
  return pass(std::to_string(forests) + " forest classes, n<=7");
}

CheckResult incomparable_maps() {
  std::size_t forests = 0;
  std::string bad;
  const bool ok = all_classes(7, [&](const Tournament& t) {
    const auto sigma = find_forest_ordering(t);
    if (!sigma) return true;
    ++forests;
    for (std::uint64_t r : {1, 2, 5, 10}) {
      const IncomparableMap m = build_incomparable_map(t, *sigma, r);
      if (!verify_incomparable(t, m) || !(ordering_of(m) == *sigma)) {
        bad = one_line(t) + " at r=" + std::to_string(r);
        return false;
      }
    }
    return true;
  });
  if (!ok) return fail("map not r-incomparable for " + bad);
  return pass(std::to_string(forests) + " forest classes, n<=7, r in {1,2,5,10}");
}

// ---- colorings ----

CheckResult explicit_colorings() {
  for (int n = 1; n <= kMaxDParam; ++n) {
    const Coloring c = explicit_coloring_D(n);
    if (c.k != n || !is_valid_coloring(d_tournament(n), c)) {
      return fail("explicit colouring of D_" + std::to_string(n) + " rejected");
    }
  }
  for (int n = 1; n <= kMaxExplicitA; ++n) {
    const Coloring c = explicit_coloring_A(n);
    if (c.k != n || !is_valid_coloring(a_tournament(n), c)) {
      return fail("explicit colouring of A_" + std::to_string(n) + " rejected");
    }
  }
  return pass("D_1..D_12 and A_1..A_5 coloured with n colours");
}

std::string liu_violation(const Tournament& t, const LiuForm& f) {
  if (f.kind == LiuForm::Kind::Cyclic) {
    if (!is_isomorphism(s_tournament(f.m), t, f.iso.map)) return "bad isomorphism onto S_m";
    return {};
  }
  std::vector<int> seen(t.size(), 0);
  for (const VertexSet& p : f.parts) {
    for (Vertex v : p) ++seen[v];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    return "parts do not partition the vertices";
  }
  for (int i = 0; i < 3; ++i) {
    VertexSet u = f.parts[i];
    u.insert(u.end(), f.parts[(i + 1) % 3].begin(), f.parts[(i + 1) % 3].end());
    if (!is_transitive_set(t, u)) return "union of two parts is not transitive";
  }
  return {};
}

CheckResult liu_forms() {
  const Tournament u3 = u_tournament(3);
  std::size_t prime_free = 0;
  std::string bad;
  const bool ok = all_classes(7, [&](const Tournament& t) {
    if (t.size() < 3 || !is_prime(t) || contains_subtournament(t, u3)) return true;
    ++prime_free;
    const std::string why = liu_violation(t, liu_form(t));
    if (!why.empty()) bad = one_line(t) + ": " + why;
    return why.empty();
  });
  if (!ok) return fail(bad);
  const LiuForm fn = liu_form(n_tournament());
  if (fn.kind != LiuForm::Kind::Triple || !liu_violation(n_tournament(), fn).empty()) {
    return fail("N does not resolve to a valid triple");
  }
  const LiuForm fs = liu_form(s_tournament(3));
  if (fs.kind != LiuForm::Kind::Cyclic || fs.m != 3) {
    return fail("S_3 does not resolve to cyclic(3)");
  }
  return pass(std::to_string(prime_free) + " prime U_3-free classes, n<=7");
}

CheckResult u3_hero_colorings() {
  const std::vector<Tournament> forbidden{d_tournament(3), u_tournament(3)};
  std::size_t free_classes = 0;
  int max_chi = 0;
  std::string bad;
  const bool ok = all_classes(8, [&](const Tournament& t) {
    if (!is_family_free(t, forbidden)) return true;
    ++free_classes;
    const Coloring c = u3_hero_coloring(t, 3);
    const int chi = chromatic_number(t).chi;
    max_chi = std::max(max_chi, chi);
    if (c.k > 3 || !is_valid_coloring(t, c) || chi > c.k) {
      bad = one_line(t);
      return false;
    }
    return true;
  });
  if (!ok) return fail("bad U_3-hero colouring of " + bad);
  if (max_chi > 3) return fail("max chi " + std::to_string(max_chi) + " above 3");
  return pass(std::to_string(free_classes) + " {D_3,U_3}-free classes, n<=8, max chi " +
              std::to_string(max_chi));
}

std::vector<Check> make_catalogue() {
  return {
      {"core.enumeration-counts", "core", 0, false, enumeration_counts},
      {"core.canonical-relabel", "core", 0, false, canonical_relabel_invariance},
      {"core.complement-involution", "core", 0, false, complement_involution},
      {"core.composition-identities", "core", 0, false, composition_identities},
      {"core.stearns", "core", 10, false, stearns},
      {"classes.chi-D", "classes", 1, false, chi_d},
      {"classes.chi-A", "classes", 2, false, chi_a},
      {"classes.A4-not-3-colorable", "classes", 2, true, a4_not_3_colorable},
      {"classes.A-named", "classes", 5, false, named_a_membership},
      {"classes.D-oracle", "classes", 6, false, d_oracle},
      {"classes.A-oracle", "classes", 6, false, a_oracle},
      {"classes.AF-crosscheck", "classes", 7, false, af_crosscheck},
      {"classes.prime-census", "classes", 0, false, prime_census},
      {"heroes.equivalence", "heroes", 3, false, hero_equivalence},
      {"heroes.minimal-census", "heroes", 4, false, minimal_nonhero_census},
      {"heroes.jewel", "heroes", 13, false, jewel},
      {"forest.F-named", "forest", 5, false, named_f_membership},
      {"forest.properties", "forest", 8, false, forest_properties},
      {"forest.incomparable", "forest", 9, false, incomparable_maps},
      {"colorings.explicit", "colorings", 0, false, explicit_colorings},
      {"colorings.liu", "colorings", 11, false, liu_forms},
      {"colorings.u3-hero", "colorings", 12, false, u3_hero_colorings},
  };
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Undecided:
      return "undecided";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == Status::Pass; });
}

bool VerifyReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == Status::Fail; });
}

int VerifyReport::exit_code() const {
  if (any_failed()) return 1;
  return passed() ? 0 : 3;
}

const std::vector<Check>& catalogue() {
  static const std::vector<Check> checks = make_catalogue();
  return checks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "classes", "heroes", "forest",
                                              "colorings", "all"};
  return names;
}

CheckResult run_check(const Check& check) {
  CheckResult r;
  try {
    r = check.run();
  } catch (const Undecided& e) {
    r = {"", Status::Undecided, e.what()};
  } catch (const std::exception& e) {
    r = {"", Status::Fail, std::string("error: ") + e.what()};
  }
  r.id = check.id;
  return r;
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport report{std::string(suite), {}};
  const auto start = std::chrono::steady_clock::now();
  for (const Check& check : catalogue()) {
    if (suite != "all" && check.suite != suite) continue;
    if (check.long_only && !options.long_checks) continue;
    if (std::chrono::steady_clock::now() - start > options.budget) {
      report.checks.push_back({check.id, Status::Undecided, "suite time budget spent"});
      continue;
    }
    report.checks.push_back(run_check(check));
  }
  return report;
}

}  // namespace heroix::verify
