#include "heroix/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "heroix/canonical.hpp"
#include "heroix/error.hpp"
#include "heroix/limits.hpp"

namespace heroix {
namespace {

std::vector<Tournament> extend(const std::vector<Tournament>& parents, int n) {
  std::map<CanonicalCode, Tournament> children;
  for (const Tournament& parent : parents) {
    const CanonicalCode parent_code = code_of_labelled(parent);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      Tournament child(n);
      for (Vertex u = 0; u < n - 1; ++u) {
        for (Vertex v = u + 1; v < n - 1; ++v) {
          if (parent.has_edge(v, u)) child.set_edge(v, u);
        }
        // Bit u set: the new vertex beats u.
        if ((mask >> u) & 1u) child.set_edge(n - 1, u);
      }
      const std::vector<Vertex> lab = canonical_labeling(child);
      const Tournament canon = relabel(child, lab);
      const CanonicalCode code = code_of_labelled(canon);
      if (children.contains(code)) continue;
      const Tournament reduced = delete_vertex(canon, n - 1);
      if (canonical_form(reduced) != parent_code) continue;
      children.emplace(code, canon);
    }
  }
  std::vector<Tournament> out;
  out.reserve(children.size());
  for (auto& [code, t] : children) out.push_back(std::move(t));
  return out;
}

}  // namespace

const std::vector<Tournament>& enumerate_tournaments(int n) {
  if (n < 0) throw ValidationError("negative vertex count");
  if (n > enumeration_limit()) {
    throw LimitExceeded("enumeration limited to n <= " +
                        std::to_string(enumeration_limit()) +
                        " (set HEROIX_MAX_N to raise it), got " +
                        std::to_string(n));
  }
  if (n > kCanonicalLimit) {
    throw LimitExceeded("enumeration needs canonical forms, limited to n <= " +
                        std::to_string(kCanonicalLimit));
  }
  static std::mutex mu;
  static std::map<int, std::vector<Tournament>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n <= 1) {
    return cache.emplace(n, std::vector<Tournament>{Tournament(n)}).first->second;
  }
  // Build every missing level below n first; the recursion stays inside
  // the lock, so fill levels iteratively.
  int have = 1;
  if (!cache.contains(1)) cache.emplace(1, std::vector<Tournament>{Tournament(1)});
  while (cache.contains(have + 1)) ++have;
  for (int k = have + 1; k <= n; ++k) {
    cache.emplace(k, extend(cache.at(k - 1), k));
  }
  return cache.at(n);
}

}  // namespace heroix
