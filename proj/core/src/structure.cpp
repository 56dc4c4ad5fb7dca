#include "heroix/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "heroix/error.hpp"
#include "heroix/generators.hpp"

namespace heroix {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

void check_size(const Tournament& t) {
  if (t.size() > kStructureLimit) {
    throw LimitExceeded("decomposition supports at most " +
                        std::to_string(kStructureLimit) + " vertices, got " +
                        std::to_string(t.size()));
  }
}

void require_nonempty(const Tournament& t) {
  if (t.empty()) throw ValidationError("operation needs a nonempty tournament");
}

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

VertexSet lift(const VertexSet& local, const VertexSet& labels) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(labels[v]);
  return out;
}

VertexSet iota_set(int n) {
  VertexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// Smallest homogeneous superset of m (possibly all of V).
Mask module_closure(const Tournament& t, Mask m) {
  const int n = t.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex x = 0; x < n; ++x) {
      if (m & bit(x)) continue;
      if ((t.out_mask(x) & m) && (t.in_mask(x) & m)) {
        m |= bit(x);
        changed = true;
      }
    }
  }
  return m;
}

std::vector<Mask> maximal_module_masks(const Tournament& t) {
  const int n = t.size();
  std::vector<Mask> out;
  if (n < 3) return out;
  // Every homogeneous set is a union of pair closures sharing a vertex, so
  // closing the proper pair closures under proper overlapping unions
  // reaches every maximal one.
  std::set<Mask> family;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Mask m = module_closure(t, bit(u) | bit(v));
      if (std::popcount(m) < n) family.insert(m);
    }
  }
  std::vector<Mask> work(family.begin(), family.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(work[i] & work[j])) continue;
      const Mask u = work[i] | work[j];
      if (std::popcount(u) < n && family.insert(u).second) work.push_back(u);
    }
  }
  for (Mask m : family) {
    const bool maximal = std::none_of(family.begin(), family.end(), [&](Mask o) {
      return o != m && (o & m) == m;
    });
    if (maximal) out.push_back(m);
  }
  return out;
}

std::vector<VertexSet> sorted_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> sets;
  for (Mask m : masks) sets.push_back(to_set(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

// Children of a strong tournament's prime root: maximal homogeneous sets
// plus leftover singletons, ordered by least vertex.
std::vector<VertexSet> prime_parts(const Tournament& t) {
  const std::vector<Mask> mods = maximal_module_masks(t);
  Mask covered = 0;
  for (Mask m : mods) {
    if (covered & m) {
      throw ConsistencyFault("maximal homogeneous sets of a strong tournament overlap");
    }
    covered |= m;
  }
  std::vector<VertexSet> parts = sorted_sets(mods);
  for (Vertex v = 0; v < t.size(); ++v) {
    if (!(covered & bit(v))) parts.push_back({v});
  }
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return parts;
}

DecompositionTree decompose(const Tournament& t, const VertexSet& labels) {
  DecompositionTree node;
  node.vertices = labels;
  if (t.size() == 1) {
    node.quotient = Tournament(1);
    return node;
  }
  std::vector<VertexSet> parts = strong_components(t);
  if (parts.size() > 1) {
    node.kind = DecompositionTree::Kind::Linear;
    node.quotient = Tournament(static_cast<int>(parts.size()));
  } else {
    node.kind = DecompositionTree::Kind::Prime;
    parts = prime_parts(t);
    VertexSet reps;
    for (const VertexSet& p : parts) reps.push_back(p.front());
    node.quotient = induced(t, reps);
  }
  for (const VertexSet& p : parts) {
    node.children.push_back(decompose(induced(t, p), lift(p, labels)));
  }
  return node;
}

// Tournament of a subtree, with layout[i] the top-level vertex at i.
Tournament rebuild(const DecompositionTree& node, VertexSet& layout) {
  if (node.kind == DecompositionTree::Kind::Leaf) {
    layout = node.vertices;
    return Tournament(1);
  }
  Tournament r = node.quotient;
  std::vector<VertexSet> layouts(node.children.size());
  for (std::size_t i = node.children.size(); i-- > 0;) {
    const Tournament sub = rebuild(node.children[i], layouts[i]);
    r = substitute(r, static_cast<Vertex>(i), sub);
  }
  layout.clear();
  for (const VertexSet& l : layouts) layout.insert(layout.end(), l.begin(), l.end());
  return r;
}

std::string indent(int depth) { return std::string(2 * depth, ' '); }

bool decide_D(const Tournament& t, const VertexSet& labels, int depth,
              std::vector<std::string>& trace) {
  const std::string head = indent(depth) + format_set(labels) + ": ";
  if (t.size() == 1) {
    trace.push_back(head + "single vertex");
    return true;
  }
  const std::vector<VertexSet> comps = strong_components(t);
  if (comps.size() > 1) {
    trace.push_back(head + "not strong, " + std::to_string(comps.size()) +
                    " components");
    for (const VertexSet& c : comps) {
      if (!decide_D(induced(t, c), lift(c, labels), depth + 1, trace)) return false;
    }
    return true;
  }
  const auto tri = find_trisection(t);
  if (!tri) {
    trace.push_back(head + "strong without a trisection");
    return false;
  }
  for (int r = 0; r < 3; ++r) {
    const VertexSet& x = (*tri)[r];
    const VertexSet& y = (*tri)[(r + 1) % 3];
    const VertexSet& z = (*tri)[(r + 2) % 3];
    if (x.size() != 1) continue;
    trace.push_back(head + "trisection (" + format_set(lift(x, labels)) + "," +
                    format_set(lift(y, labels)) + "," + format_set(lift(z, labels)) +
                    ")");
    const std::size_t mark = trace.size();
    if (decide_D(induced(t, y), lift(y, labels), depth + 1, trace) &&
        decide_D(induced(t, z), lift(z, labels), depth + 1, trace)) {
      return true;
    }
    trace.resize(mark);
    trace.back() += " rejected";
  }
  trace.push_back(head + "no trisection with a singleton part and member sides");
  return false;
}

bool decide_A(const Tournament& t, const VertexSet& labels, int depth,
              std::vector<std::string>& trace) {
  const std::string head = indent(depth) + format_set(labels) + ": ";
  if (t.size() == 1) {
    trace.push_back(head + "single vertex");
    return true;
  }
  const std::vector<VertexSet> comps = strong_components(t);
  if (comps.size() > 1) {
    trace.push_back(head + "not strong, " + std::to_string(comps.size()) +
                    " components");
    for (const VertexSet& c : comps) {
      if (!decide_A(induced(t, c), lift(c, labels), depth + 1, trace)) return false;
    }
    return true;
  }
  for (const DeltaPartitionSpine& p : spine_delta_partitions(t)) {
    std::string line = head + "spine " + format_set(lift(p.spine, labels)) + " blocks";
    for (const VertexSet& b : p.blocks) line += " " + format_set(lift(b, labels));
    trace.push_back(line);
    const std::size_t mark = trace.size();
    const bool ok = std::all_of(p.blocks.begin(), p.blocks.end(), [&](const VertexSet& b) {
      return b.empty() || decide_A(induced(t, b), lift(b, labels), depth + 1, trace);
    });
    if (ok) return true;
    trace.resize(mark);
    trace.back() += " rejected";
  }
  trace.push_back(head + "no spine Delta-partition with member blocks");
  return false;
}

std::vector<std::vector<int>> isomorphisms_onto(const Tournament& q, const Tournament& u) {
  std::vector<std::vector<int>> out;
  if (q.size() != u.size()) return out;
  std::vector<int> p(q.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < u.size() && ok; ++i) {
      for (int j = i + 1; j < u.size() && ok; ++j) {
        ok = q.has_edge(p[i], p[j]) == u.has_edge(i, j);
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Block shapes: 'I' one vertex, 'L' transitive, 'H' a member.
struct Template {
  int label;
  const char* shape;
};

constexpr Template kTemplates[] = {
    {3, "ILH"},     {3, "IHL"},     {4, "LILLI"}, {4, "ILLIL"},
    {5, "IHLLI"},   {5, "ILLHI"},   {6, "ILLILLI"},
};

AFResult decide_AF(const Tournament& top, const DecompositionTree& node) {
  AFResult r;
  switch (node.kind) {
    case DecompositionTree::Kind::Leaf:
      r.member = true;
      r.case_label = 1;
      r.detail = "single vertex";
      return r;
    case DecompositionTree::Kind::Linear:
      for (const DecompositionTree& c : node.children) {
        const AFResult sub = decide_AF(top, c);
        if (!sub.member) {
          r.detail = "component " + format_set(c.vertices) + " fails: " + sub.detail;
          return r;
        }
      }
      r.member = true;
      r.case_label = 2;
      r.detail = "chain of " + std::to_string(node.children.size()) + " members";
      return r;
    case DecompositionTree::Kind::Prime:
      break;
  }
  const int q = node.quotient.size();
  if (q != 3 && q != 5 && q != 7) {
    r.detail = "prime quotient on " + std::to_string(q) + " vertices is not U_2, U_3 or U_4";
    return r;
  }
  const auto isos = isomorphisms_onto(node.quotient, u_tournament((q + 1) / 2));
  if (isos.empty()) {
    r.detail = "prime quotient on " + std::to_string(q) + " vertices is not U_" +
               std::to_string((q + 1) / 2);
    return r;
  }
  auto fits = [&](const DecompositionTree& c, char shape) {
    switch (shape) {
      case 'I': return c.vertices.size() == 1;
      case 'L': return is_transitive_set(top, c.vertices);
      default: return decide_AF(top, c).member;
    }
  };
  for (const Template& tpl : kTemplates) {
    if (static_cast<int>(std::char_traits<char>::length(tpl.shape)) != q) continue;
    for (const std::vector<int>& p : isos) {
      bool ok = true;
      for (int i = 0; i < q && ok; ++i) ok = fits(node.children[p[i]], tpl.shape[i]);
      if (!ok) continue;
      r.member = true;
      r.case_label = tpl.label;
      r.detail = std::string("Delta(") + tpl.shape + ") over";
      for (int i = 0; i < q; ++i) r.detail += " " + format_set(node.children[p[i]].vertices);
      return r;
    }
  }
  r.detail = "prime quotient U_" + std::to_string((q + 1) / 2) +
             " but no block assignment matches";
  return r;
}

}  // namespace

bool is_homogeneous(const Tournament& t, const VertexSet& s) {
  check_size(t);
  if (s.size() < 2 || static_cast<int>(s.size()) >= t.size()) {
    throw ValidationError("homogeneous sets need 1 < |S| < n, got |S| = " +
                          std::to_string(s.size()) + ", n = " + std::to_string(t.size()));
  }
  Mask m = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= t.size()) throw ValidationError("vertex out of range");
    m |= bit(v);
  }
  for (Vertex x = 0; x < t.size(); ++x) {
    if (m & bit(x)) continue;
    if ((t.out_mask(x) & m) && (t.in_mask(x) & m)) return false;
  }
  return true;
}

std::vector<VertexSet> maximal_homogeneous_sets(const Tournament& t) {
  check_size(t);
  return sorted_sets(maximal_module_masks(t));
}

bool is_prime(const Tournament& t) {
  check_size(t);
  return maximal_module_masks(t).empty();
}

DecompositionTree substitution_decomposition(const Tournament& t) {
  check_size(t);
  require_nonempty(t);
  return decompose(t, iota_set(t.size()));
}

Tournament reconstruct(const DecompositionTree& tree) {
  VertexSet layout;
  const Tournament r = rebuild(tree, layout);
  const int n = r.size();
  Tournament out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (r.has_edge(i, j)) {
        out.set_edge(layout[i], layout[j]);
      } else {
        out.set_edge(layout[j], layout[i]);
      }
    }
  }
  return out;
}

std::optional<std::array<VertexSet, 3>> find_trisection(const Tournament& t) {
  check_size(t);
  if (t.size() < 3 || !is_strongly_connected(t)) return std::nullopt;
  const std::vector<VertexSet> parts = prime_parts(t);
  if (parts.size() != 3) return std::nullopt;
  const Vertex a = parts[0].front();
  if (t.has_edge(a, parts[1].front())) {
    return std::array<VertexSet, 3>{parts[0], parts[1], parts[2]};
  }
  return std::array<VertexSet, 3>{parts[0], parts[2], parts[1]};
}

std::vector<DeltaPartitionSpine> spine_delta_partitions(const Tournament& t) {
  check_size(t);
  const int n = t.size();
  if (n < 3 || !is_strongly_connected(t)) {
    throw PreconditionViolated("spine Delta-partitions need a strong tournament on at "
                               "least 3 vertices");
  }
  std::vector<DeltaPartitionSpine> out;
  for (Vertex v1 = 0; v1 < n; ++v1) {
    const Mask spine_mask = t.in_mask(v1) | bit(v1);
    VertexSet spine = to_set(spine_mask);
    const int k = static_cast<int>(spine.size());
    if (k < 2 || !is_transitive_set(t, spine)) continue;
    // Later spine vertices beat earlier ones: order by score inside.
    std::vector<int> score(n, 0);
    for (Vertex v : spine) score[v] = std::popcount(t.out_mask(v) & spine_mask);
    std::sort(spine.begin(), spine.end(),
              [&](Vertex a, Vertex b) { return score[a] < score[b]; });
    DeltaPartitionSpine p;
    p.spine = spine;
    p.blocks.assign(k - 1, {});
    bool ok = true;
    for (Vertex w = 0; w < n && ok; ++w) {
      if (spine_mask & bit(w)) continue;
      int b = 0;
      while (b < k && t.has_edge(spine[b], w)) ++b;
      for (int i = b; i < k && ok; ++i) ok = t.has_edge(w, spine[i]);
      ok = ok && b >= 1 && b <= k - 1;
      if (ok) p.blocks[b - 1].push_back(w);
    }
    if (!ok) continue;
    for (int b = 0; b < k - 1 && ok; ++b) {
      for (int c = b + 1; c < k - 1 && ok; ++c) {
        ok = is_complete_to(t, p.blocks[b], p.blocks[c]);
      }
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::optional<DeltaPartitionSpine> find_spine_delta_partition(const Tournament& t) {
  std::vector<DeltaPartitionSpine> all = spine_delta_partitions(t);
  if (all.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].spine.size() > all[best].spine.size()) best = i;
  }
  return all[best];
}

MembershipResult member_D(const Tournament& t) {
  check_size(t);
  require_nonempty(t);
  MembershipResult r;
  r.member = decide_D(t, iota_set(t.size()), 0, r.trace);
  return r;
}

MembershipResult member_A(const Tournament& t) {
  check_size(t);
  require_nonempty(t);
  MembershipResult r;
  r.member = decide_A(t, iota_set(t.size()), 0, r.trace);
  return r;
}

AFResult member_AF(const Tournament& t) {
  check_size(t);
  require_nonempty(t);
  return decide_AF(t, substitution_decomposition(t));
}

}  // namespace heroix
