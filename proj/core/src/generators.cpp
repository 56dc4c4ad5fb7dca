#include "heroix/generators.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "heroix/error.hpp"

namespace heroix {

bool is_parametric(Family f) {
  return f == Family::L || f == Family::D || f == Family::A || f == Family::U ||
         f == Family::S;
}

FamilySpec parse_family(std::string_view name, std::optional<int> param) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  FamilySpec spec;
  if (lower == "l") spec.family = Family::L;
  else if (lower == "d") spec.family = Family::D;
  else if (lower == "a") spec.family = Family::A;
  else if (lower == "u") spec.family = Family::U;
  else if (lower == "s") spec.family = Family::S;
  else if (lower == "n") spec.family = Family::N;
  else if (lower == "delta2") spec.family = Family::Delta2;
  else if (lower == "c") spec.family = Family::C;
  else throw ValidationError("unknown family '" + std::string(name) + "'");
  if (is_parametric(spec.family)) {
    if (!param) {
      throw ValidationError("family '" + lower + "' needs a parameter");
    }
    spec.param = param;
  } else if (param) {
    throw ValidationError("family '" + lower + "' takes no parameter");
  }
  return spec;
}

std::string family_name(const FamilySpec& spec) {
  std::string s;
  switch (spec.family) {
    case Family::L: s = "L"; break;
    case Family::D: s = "D"; break;
    case Family::A: s = "A"; break;
    case Family::U: s = "U"; break;
    case Family::S: s = "S"; break;
    case Family::N: return "N";
    case Family::Delta2: return "Delta2";
    case Family::C: return "C";
  }
  if (spec.param) s += "_" + std::to_string(*spec.param);
  return s;
}

Tournament transitive_tournament(int k) { return Tournament(k); }

Tournament cyclic_triangle() {
  Tournament t(3);
  t.set_edge(2, 0);
  return t;
}

Tournament d_tournament(int n) {
  if (n < 1) throw ValidationError("D_n needs n >= 1");
  if (n > kMaxDParam) {
    throw LimitExceeded("D_n is materialised only for n <= " +
                        std::to_string(kMaxDParam));
  }
  Tournament d(1);
  for (int k = 2; k <= n; ++k) {
    const Tournament blocks[] = {Tournament(1), d, d};
    d = compose_delta(blocks);
  }
  return d;
}

long long a_tournament_size(int n) {
  long long size = 1;
  for (int k = 2; k <= n; ++k) size = k + (k - 1) * size;
  return size;
}

Tournament a_tournament(int n) {
  if (n < 1) throw ValidationError("A_n needs n >= 1");
  if (n > kMaxAParam) {
    throw LimitExceeded("A_n is materialised only for n <= " +
                        std::to_string(kMaxAParam));
  }
  Tournament a(1);
  for (int k = 2; k <= n; ++k) {
    std::vector<Tournament> blocks;
    blocks.reserve(2 * k - 1);
    for (int i = 0; i < k; ++i) {
      if (i > 0) blocks.push_back(a);
      blocks.emplace_back(1);
    }
    a = compose_delta(blocks);
  }
  return a;
}

Tournament u_tournament(int n) {
  if (n < 1) throw ValidationError("U_n needs n >= 1");
  const int m = 2 * n - 1;
  Tournament t(m);
  // Index i here is the 1-based label minus one, so "both odd" in 1-based
  // terms is "both even" here.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (i % 2 == 0 && j % 2 == 0) t.set_edge(j, i);
    }
  }
  return t;
}

Tournament s_tournament(int n) {
  if (n < 1) throw ValidationError("S_n needs n >= 1");
  const int m = 2 * n - 1;
  Tournament t(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int d = j - i;  // (j - i) mod m, already in 1..m-1
      if (d > n - 1) t.set_edge(j, i);
    }
  }
  return t;
}

Tournament n_tournament() {
  // 0-based: v1 = 0, ..., v5 = 4.
  Tournament t(5);
  t.set_edge(2, 0);
  t.set_edge(4, 0);
  return t;
}

Tournament delta2_tournament() {
  const Tournament blocks[] = {Tournament(2), Tournament(2), Tournament(2)};
  return compose_delta(blocks);
}

Tournament generate(const FamilySpec& spec) {
  if (is_parametric(spec.family)) {
    if (!spec.param) throw ValidationError("missing family parameter");
    if (*spec.param < 1) {
      throw ValidationError("family parameter must be positive, got " +
                            std::to_string(*spec.param));
    }
  }
  switch (spec.family) {
    case Family::L: return transitive_tournament(*spec.param);
    case Family::D: return d_tournament(*spec.param);
    case Family::A: return a_tournament(*spec.param);
    case Family::U: return u_tournament(*spec.param);
    case Family::S: return s_tournament(*spec.param);
    case Family::N: return n_tournament();
    case Family::Delta2: return delta2_tournament();
    case Family::C: return cyclic_triangle();
  }
  throw ValidationError("unknown family");
}

}  // namespace heroix
