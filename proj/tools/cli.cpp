#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "heroix/heroix.hpp"
#include "verify.hpp"

namespace heroix::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// The CLI's own failure: a requested object does not exist for this input.
class CommandFailed : public Error {
 public:
  using Error::Error;
};

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string braces(const VertexSet& s) { return "{" + join(s) + "}"; }

Tournament load(const std::string& path) { return read_tournament_file(path).t; }

// "d3", "u3", "n", "delta2", ... or a tournament file.
Tournament forbidden_pattern(const std::string& token) {
  std::string lower = token;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "delta2") return generate(parse_family(lower, std::nullopt));
  const auto digit = std::find_if(lower.begin(), lower.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
  const std::string name(lower.begin(), digit);
  const std::string number(digit, lower.end());
  const bool numeric = std::all_of(number.begin(), number.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
  if (!std::filesystem::exists(token) && numeric && !name.empty() && number.size() < 6) {
    std::optional<int> param;
    if (!number.empty()) param = std::stoi(number);
    return generate(parse_family(name, param));
  }
  return load(token);
}

// Exact colouring: subset DP when small, otherwise tighten first-fit bounds
// with the branch-and-bound decider.
Coloring exact_coloring(const Tournament& t) {
  if (t.size() <= kSubsetDpLimit) return chromatic_number(t).witness;
  const ChromaticBounds b = chromatic_bounds(t);
  for (int k = b.lower; k < b.upper; ++k) {
    const ColorabilityResult r = decide_k_colorable(t, k);
    if (r.coloring) return *r.coloring;
  }
  return b.upper_witness;
}

void print_coloring(std::ostream& out, const Coloring& c) {
  out << "colors " << c.k << "\n";
  out << "assign " << join(c.assign) << "\n";
}

void print_derivation(std::ostream& out, const HeroDerivation& d, int depth) {
  out << std::string(2 * depth + 2, ' ');
  switch (d.kind) {
    case HeroDerivation::Kind::Single:
      out << "vertex " << braces(d.vertices) << "\n";
      break;
    case HeroDerivation::Kind::Chain:
      out << "chain " << braces(d.vertices) << "\n";
      break;
    case HeroDerivation::Kind::Delta:
      out << "delta apex " << d.apex << " " << braces(d.vertices) << "\n";
      break;
  }
  for (const HeroDerivation& p : d.parts) print_derivation(out, p, depth + 1);
}

int cmd_gen(const std::string& family, std::optional<int> param, const std::string& path,
            std::ostream& out) {
  const Tournament t = generate(parse_family(family, param));
  if (path.empty()) {
    out << serialize_tournament(t);
  } else {
    write_tournament_file(path, t);
    out << "wrote " << t.size() << " vertices to " << path << "\n";
  }
  return kExitOk;
}

int cmd_chi(const std::string& path, std::ostream& out) {
  out << exact_coloring(load(path)).k << "\n";
  return kExitOk;
}

int cmd_color(const std::string& path, const std::string& alg, int n, std::ostream& out) {
  const Tournament t = load(path);
  Coloring c;
  if (alg == "exact") {
    c = exact_coloring(t);
  } else if (alg == "forest") {
    const auto sigma = find_forest_ordering(t);
    if (!sigma) throw CommandFailed("not a forest tournament");
    c = forest_two_coloring(t, *sigma);
  } else {
    c = u3_hero_coloring(t, n);
  }
  if (!is_valid_coloring(t, c)) throw ConsistencyFault("produced an invalid colouring");
  print_coloring(out, c);
  return kExitOk;
}

int cmd_contains(const std::string& host, const std::string& pattern, std::ostream& out) {
  const auto e = contains_subtournament(load(host), load(pattern));
  if (!e) {
    out << "no\n";
  } else {
    out << "yes\n" << "embedding " << join(e->map) << "\n";
  }
  return kExitOk;
}

int cmd_hero(const std::string& path, std::ostream& out) {
  const HeroVerdict v = is_hero(load(path));
  if (v.hero) {
    out << "hero yes\n";
    if (v.derivation) print_derivation(out, *v.derivation, 0);
  } else {
    out << "hero no\n";
    if (v.obstruction) {
      out << "contains " << *v.obstruction;
      if (v.obstruction_embedding) out << " at " << join(v.obstruction_embedding->map);
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_forest(const std::string& path, std::ostream& out) {
  const Tournament t = load(path);
  const auto sigma = find_forest_ordering(t);
  if (!sigma) {
    out << "forest no\n";
    return kExitOk;
  }
  out << "forest yes\n" << "ordering " << join(sigma->seq()) << "\n";
  if (const auto cut = leftmost_forest_cut(t, *sigma)) out << "cut " << *cut << "\n";
  const BackedgeGraph g = backedge_graph(t, *sigma);
  out << "backedges";
  for (const auto& [a, b] : g.edges) out << " " << a << "-" << b;
  out << "\n";
  return kExitOk;
}

// One classify line; size limits and budgets print as unknown.
template <class Fn>
void report(std::ostream& out, const std::string& label, Fn&& fn) {
  out << label << " ";
  try {
    out << fn() << "\n";
  } catch (const LimitExceeded& e) {
    out << "unknown (" << e.what() << ")\n";
  } catch (const Undecided& e) {
    out << "unknown (" << e.what() << ")\n";
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const std::string& path, std::ostream& out) {
  const Tournament t = load(path);
  if (t.empty()) throw ValidationError("classification needs at least one vertex");
  out << "vertices " << t.size() << "\n";
  const auto comps = strong_components(t);
  out << "strong-components " << comps.size();
  for (const VertexSet& c : comps) out << " " << braces(c);
  out << "\n";
  report(out, "transitive", [&] { return yes_no(is_transitive(t)); });
  report(out, "prime", [&] { return t.size() < 3 ? std::string("n/a") : yes_no(is_prime(t)); });
  report(out, "member-D", [&] { return yes_no(member_D(t).member); });
  report(out, "member-A", [&] { return yes_no(member_A(t).member); });
  report(out, "member-AF", [&] {
    const AFResult r = member_AF(t);
    return r.member ? "yes (case " + std::to_string(r.case_label) + ")" : std::string("no");
  });
  report(out, "forest", [&] { return yes_no(find_forest_ordering(t).has_value()); });
  report(out, "hero", [&] {
    const HeroVerdict v = is_hero(t);
    return v.hero ? std::string("yes") : "no (contains " + v.obstruction.value_or("?") + ")";
  });
  report(out, "minimal-nonhero", [&] { return yes_no(is_minimal_nonhero(t)); });
  report(out, "chi", [&] { return std::to_string(exact_coloring(t).k); });
  return kExitOk;
}

int cmd_incomparable(const std::string& path, std::uint64_t r, std::ostream& out) {
  const Tournament t = load(path);
  const auto sigma = find_forest_ordering(t);
  if (!sigma) throw CommandFailed("not a forest tournament");
  const IncomparableMap m = build_incomparable_map(t, *sigma, r);
  const bool ok = verify_incomparable(t, m);
  out << "ordering " << join(sigma->seq()) << "\n";
  out << "phi";
  for (std::uint64_t p : m.phi) out << " " << p;
  out << "\n" << "verified " << yes_no(ok) << "\n";
  if (!ok) throw ConsistencyFault("constructed map is not r-incomparable");
  return kExitOk;
}

int cmd_enumerate(int n, std::ostream& out) {
  const auto& list = enumerate_tournaments(n);
  for (std::size_t i = 0; i < list.size(); ++i) {
    out << "# class " << i + 1 << " of " << list.size() << "\n" << serialize_tournament(list[i]);
  }
  return kExitOk;
}

int cmd_survey(const std::vector<std::string>& forbid, int max_n, std::ostream& out) {
  std::vector<Tournament> patterns;
  for (const std::string& f : forbid) {
    if (!f.empty()) patterns.push_back(forbidden_pattern(f));
  }
  out << "n classes max-chi witness\n";
  for (const SurveyRow& row : survey_max_chromatic(patterns, max_n)) {
    out << row.n << " " << row.free_classes << " " << row.max_chi;
    if (row.witness) {
      out << " ";
      for (Vertex u = 0; u < row.witness->size(); ++u) {
        if (u > 0) out << '/';
        for (Vertex v = 0; v < row.witness->size(); ++v) {
          out << (row.witness->has_edge(u, v) ? '1' : '0');
        }
      }
    } else {
      out << " -";
    }
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, bool long_checks, int budget, std::ostream& out) {
  verify::VerifyOptions opts;
  opts.long_checks = long_checks;
  opts.budget = std::chrono::seconds(budget);
  const verify::VerifyReport rep = verify::run_suite(suite, opts);
  for (const verify::CheckResult& c : rep.checks) {
    out << verify::status_name(c.status) << " " << c.id << ": " << c.witness << "\n";
  }
  const int code = rep.exit_code();
  out << "suite " << rep.suite << ": "
      << (code == 0 ? "pass" : code == 1 ? "fail" : "undecided") << " ("
      << rep.checks.size() << " checks)\n";
  return code;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tournament colouring, membership and verification tools", "heroix"};
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string family;
  int param = 0;
  std::string out_path;
  std::string alg = "exact";
  int n = 3;
  std::uint64_t r = 2;
  std::vector<std::string> forbid;
  int max_n = 6;
  std::string suite;
  bool long_checks = false;
  int budget = 600;

  auto* gen = app.add_subcommand("gen", "Write a named tournament (l d a u s n delta2 c)");
  gen->add_option("family", family, "Family name")->required();
  auto* param_opt = gen->add_option("param", param, "Family parameter")
                        ->check(CLI::PositiveNumber);
  gen->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  chi->add_option("file", file)->required();

  auto* color = app.add_subcommand("color", "Colour with the chosen algorithm");
  color->add_option("file", file)->required();
  color->add_option("--alg", alg)->check(CLI::IsMember({"exact", "forest", "u3hero"}));
  color->add_option("--n", n, "D_n bound for u3hero")->check(CLI::Range(2, 12));

  auto* contains = app.add_subcommand("contains", "Find an embedding of PATTERN in HOST");
  contains->add_option("host", file)->required();
  contains->add_option("pattern", second)->required();

  auto* hero = app.add_subcommand("hero", "Decide whether a tournament is a hero");
  hero->add_option("file", file)->required();

  auto* forest = app.add_subcommand("forest", "Search for a forest ordering");
  forest->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Report structural properties");
  classify->add_option("file", file)->required();

  auto* incomparable = app.add_subcommand("incomparable", "Build an r-incomparable map");
  incomparable->add_option("file", file)->required();
  incomparable->add_option("--r", r)->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List one tournament per class");
  enumerate->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

  auto* survey = app.add_subcommand("survey", "Maximum chi over H-free classes");
  survey->add_option("--forbid", forbid, "Comma-separated families or files")
      ->delimiter(',');
  survey->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite)->required()->check(
      CLI::IsMember(verify::suite_names()));
  verify_cmd->add_flag("--long", long_checks, "Include long-running checks");
  verify_cmd->add_option("--budget", budget, "Seconds per suite")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    std::optional<int> p;
    if (param_opt->count() > 0) p = param;
    return cmd_gen(family, p, out_path, out);
  }
  if (chi->parsed()) return cmd_chi(file, out);
  if (color->parsed()) return cmd_color(file, alg, n, out);
  if (contains->parsed()) return cmd_contains(file, second, out);
  if (hero->parsed()) return cmd_hero(file, out);
  if (forest->parsed()) return cmd_forest(file, out);
  if (classify->parsed()) return cmd_classify(file, out);
  if (incomparable->parsed()) return cmd_incomparable(file, r, out);
  if (enumerate->parsed()) return cmd_enumerate(n, out);
  if (survey->parsed()) return cmd_survey(forbid, max_n, out);
  if (verify_cmd->parsed()) return cmd_verify(suite, long_checks, budget, out);
  throw UsageError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const ForbiddenSubtournament& e) {
    err << "precondition violated: contains " << e.pattern() << " at "
        << join(e.embedding().map) << "\n";
    return kExitFail;
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitFail;
  } catch (const CommandFailed& e) {
    err << e.what() << "\n";
    return kExitFail;
  } catch (const ConsistencyFault& e) {
    err << "internal consistency fault: " << e.what() << "\n";
    return kExitFail;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace heroix::cli
