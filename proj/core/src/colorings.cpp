#include "heroix/colorings.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "heroix/canonical.hpp"
#include "heroix/error.hpp"
#include "heroix/generators.hpp"
#include "heroix/structure.hpp"

namespace heroix {
namespace {

std::string describe(const std::string& pattern, const Embedding& e) {
  std::string s = "input contains " + pattern + " at {";
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.map[i]);
  }
  return s + "}";
}

std::vector<int> d_colours(int n) {
  if (n == 1) return {0};
  const std::vector<int> sub = d_colours(n - 1);
  std::vector<int> out{n - 1};
  out.insert(out.end(), sub.begin(), sub.end());
  out.insert(out.end(), sub.begin(), sub.end());
  return out;
}

std::vector<int> a_colours(int n) {
  if (n == 1) return {0};
  const std::vector<int> sub = a_colours(n - 1);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (i > 0) out.insert(out.end(), sub.begin(), sub.end());
    out.push_back(n - 1);
  }
  return out;
}

Coloring from_ints(const std::vector<int>& colours, int k) {
  Coloring c;
  c.assign = colours;
  c.k = k;
  return c;
}

bool triple_search(const Tournament& t, const std::vector<std::vector<std::uint64_t>>& cyc,
                   std::vector<int>& part, int v, std::uint64_t& nodes,
                   std::uint64_t budget) {
  const int n = t.size();
  if (v == n) return true;
  if (++nodes > budget) {
    throw Undecided("Liu triple search exceeded its node budget of " +
                    std::to_string(budget));
  }
  const int opened = v == 0 ? 0 : 1 + *std::max_element(part.begin(), part.begin() + v);
  for (int p = 0; p < std::min(opened + 1, 3); ++p) {
    bool ok = true;
    for (int a = 0; a < v && ok; ++a) {
      for (std::uint64_t m = cyc[v][a] & ((std::uint64_t{1} << v) - 1); m && ok; m &= m - 1) {
        const int b = __builtin_ctzll(m);
        if (b <= a) continue;
        ok = part[a] != part[b] && part[a] != p && part[b] != p;
      }
    }
    if (!ok) continue;
    part[v] = p;
    if (triple_search(t, cyc, part, v + 1, nodes, budget)) return true;
    part[v] = -1;
  }
  return false;
}

struct Recursion {
  const Tournament& top;

  // Colours in [0, 3^(n-2)) for the vertices of `node`, keyed by position
  // in node.vertices.
  std::vector<std::int64_t> colour(const DecompositionTree& node, int n) {
    const std::size_t size = node.vertices.size();
    if (n == 2 || size == 1) return std::vector<std::int64_t>(size, 0);
    const Tournament sub = induced(top, node.vertices);
    if (node.kind == DecompositionTree::Kind::Prime && node.children.size() == size) {
      return prime_colours(sub);
    }
    const Tournament dn1 = d_tournament(n - 1);
    const std::size_t k = node.children.size();
    std::vector<bool> has_d(k);
    std::vector<Embedding> d_embedding(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto e = contains_subtournament(induced(top, node.children[i].vertices), dn1);
      has_d[i] = e.has_value();
      if (e) d_embedding[i] = std::move(*e);
    }
    // prefix[i] in {0,1,2} for D_{n-1}-free children, -1 for the others.
    std::vector<int> prefix(k, 0);
    if (node.kind == DecompositionTree::Kind::Prime) {
      const LiuForm form = liu_form(node.quotient);
      if (form.kind == LiuForm::Kind::Cyclic) {
        prefix = cyclic_prefixes(node, form, has_d, d_embedding, n);
      } else {
        for (int p = 0; p < 3; ++p) {
          for (Vertex q : form.parts[p]) prefix[q] = p;
        }
      }
    }
    std::vector<std::int64_t> out(size);
    const std::int64_t step = pow3(n - 3);
    for (std::size_t i = 0; i < k; ++i) {
      const DecompositionTree& child = node.children[i];
      std::vector<std::int64_t> sub_colours;
      std::int64_t offset = 0;
      if (has_d[i]) {
        sub_colours = colour(child, n);
      } else {
        sub_colours = colour(child, n - 1);
        offset = prefix[i] * step;
      }
      for (std::size_t j = 0; j < child.vertices.size(); ++j) {
        const auto pos = std::lower_bound(node.vertices.begin(), node.vertices.end(),
                                          child.vertices[j]) -
                         node.vertices.begin();
        out[pos] = offset + sub_colours[j];
      }
    }
    return out;
  }

  std::vector<std::int64_t> prime_colours(const Tournament& t) {
    std::vector<std::int64_t> out(t.size(), 0);
    if (t.size() <= 2) return out;
    const LiuForm form = liu_form(t);
    if (form.kind == LiuForm::Kind::Cyclic) {
      // v_1..v_m and v_{m+1}..v_{2m-1} of S_m are both transitive.
      for (int i = form.m; i < 2 * form.m - 1; ++i) out[form.iso.map[i]] = 1;
    } else {
      // X_1 u X_2 is transitive, and so is X_3.
      for (Vertex v : form.parts[2]) out[v] = 1;
    }
    return out;
  }

  std::vector<int> cyclic_prefixes(const DecompositionTree& node, const LiuForm& form,
                                   const std::vector<bool>& has_d,
                                   const std::vector<Embedding>& d_embedding, int n) {
    const int len = 2 * form.m - 1;
    std::vector<int> with_d;
    for (int i = 0; i < len; ++i) {
      if (has_d[form.iso.map[i]]) with_d.push_back(i);
    }
    if (with_d.size() > 1) throw_dn(node, form, d_embedding, with_d[0], with_d[1], n);
    // Rotate so the D_{n-1}-containing position (if any) is last.
    const int shift = with_d.empty() ? 0 : (with_d[0] + 1) % len;
    std::vector<int> prefix(node.children.size(), 0);
    for (int i = 0; i < len; ++i) {
      const int p = ((i - shift) % len + len) % len;
      prefix[form.iso.map[i]] = p <= form.m - 2 ? 0 : 1;
    }
    return prefix;
  }

  [[noreturn]] void throw_dn(const DecompositionTree& node, const LiuForm& form,
                             const std::vector<Embedding>& d_embedding, int i, int j,
                             int n) {
    // In S_m every edge v_a -> v_b has a v_c with v_b -> v_c -> v_a; a vertex
    // of that factor, then the two copies of D_{n-1}, form D_n.
    const Tournament& q = node.quotient;
    int a = form.iso.map[i];
    int b = form.iso.map[j];
    if (!q.has_edge(a, b)) std::swap(a, b);
    int c = -1;
    for (int x = 0; x < q.size() && c < 0; ++x) {
      if (q.has_edge(b, x) && q.has_edge(x, a)) c = x;
    }
    Embedding e;
    e.map.push_back(node.children[c].vertices.front());
    for (int y : {a, b}) {
      const VertexSet& vs = node.children[y].vertices;
      for (Vertex v : d_embedding[y].map) e.map.push_back(vs[v]);
    }
    throw ForbiddenSubtournament("D_" + std::to_string(n), e);
  }
};

}  // namespace

ForbiddenSubtournament::ForbiddenSubtournament(std::string pattern, Embedding embedding)
    : PreconditionViolated(describe(pattern, embedding)),
      pattern_(std::move(pattern)),
      embedding_(std::move(embedding)) {}

std::int64_t pow3(int e) {
  if (e < 0 || e > 38) throw ValidationError("pow3 needs 0 <= e <= 38, got " + std::to_string(e));
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

Coloring explicit_coloring_D(int n) {
  if (n < 1 || n > kMaxDParam) {
    throw ValidationError("explicit D_n colouring needs 1 <= n <= " +
                          std::to_string(kMaxDParam));
  }
  return from_ints(d_colours(n), n);
}

Coloring explicit_coloring_A(int n) {
  if (n < 1 || n > kMaxExplicitA) {
    throw ValidationError("explicit A_n colouring needs 1 <= n <= " +
                          std::to_string(kMaxExplicitA));
  }
  return from_ints(a_colours(n), n);
}

LiuForm liu_form(const Tournament& t, std::uint64_t node_budget) {
  if (t.empty()) throw ValidationError("operation needs a nonempty tournament");
  if (t.size() > kMaskEngineLimit) {
    throw LimitExceeded("Liu form supports at most " + std::to_string(kMaskEngineLimit) +
                        " vertices");
  }
  if (!is_prime(t)) throw PreconditionViolated("tournament is not prime");
  if (auto e = contains_subtournament(t, u_tournament(3))) {
    throw ForbiddenSubtournament("U_3", *e);
  }
  LiuForm form;
  const int n = t.size();
  if (n % 2 == 1 && n <= kCanonicalLimit) {
    const int m = (n + 1) / 2;
    if (auto iso = find_isomorphism(s_tournament(m), t)) {
      form.kind = LiuForm::Kind::Cyclic;
      form.m = m;
      form.iso.map = std::move(*iso);
      return form;
    }
  }
  const auto cyc = cyclic_triangle_masks(t);
  std::vector<int> part(n, -1);
  std::uint64_t nodes = 0;
  if (!triple_search(t, cyc, part, 0, nodes, node_budget)) {
    throw ConsistencyFault("prime U3-free tournament has neither an S_m form nor a triple");
  }
  form.kind = LiuForm::Kind::Triple;
  for (Vertex v = 0; v < n; ++v) form.parts[part[v]].push_back(v);
  return form;
}

Coloring u3_hero_coloring(const Tournament& t, int n) {
  if (n < 2) throw ValidationError("u3_hero_coloring needs n >= 2");
  if (t.empty()) throw ValidationError("operation needs a nonempty tournament");
  if (n > 38) throw LimitExceeded("colour tuples are limited to 36 coordinates");
  if (auto e = contains_subtournament(t, u_tournament(3))) {
    throw ForbiddenSubtournament("U_3", *e);
  }
  if (n <= kMaxDParam && (std::int64_t{1} << n) - 1 <= t.size()) {
    if (auto e = contains_subtournament(t, d_tournament(n))) {
      throw ForbiddenSubtournament("D_" + std::to_string(n), *e);
    }
  }
  Recursion rec{t};
  const std::vector<std::int64_t> colours = rec.colour(substitution_decomposition(t), n);
  std::vector<long long> labels(colours.begin(), colours.end());
  Coloring c = Coloring::from_labels(labels);
  if (!is_valid_coloring(t, c) || c.k > pow3(n - 2)) {
    throw ConsistencyFault("u3_hero_coloring produced an invalid colouring");
  }
  return c;
}

}  // namespace heroix
