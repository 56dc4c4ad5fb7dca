#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "heroix/heroix.hpp"
#include "oracles.hpp"

using namespace heroix;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return test::fixture_path(name); }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen writes a parseable tournament") {
    const Outcome o = run({"gen", "d", "3"});
    CHECK(o.code == cli::kExitOk);
    CHECK(parse_tournament(o.out).t == d_tournament(3));
    CHECK(parse_tournament(run({"gen", "n"}).out).t == n_tournament());
  }

  TEST_CASE("gen --out writes a file") {
    const auto path = (std::filesystem::temp_directory_path() / "heroix_cli_gen.txt").string();
    const Outcome o = run({"gen", "u", "4", "--out", path});
    CHECK(o.code == cli::kExitOk);
    CHECK(o.out == "wrote 7 vertices to " + path + "\n");
    CHECK(read_tournament_file(path).t == u_tournament(4));
    std::filesystem::remove(path);
  }

  TEST_CASE("chi and color") {
    CHECK(run({"chi", fixture("d3")}).out == "3\n");
    const Outcome exact = run({"color", fixture("s3"), "--alg", "exact"});
    CHECK(exact.code == cli::kExitOk);
    CHECK(has_line(exact.out, "colors 2"));
    const Outcome forest = run({"color", fixture("u3"), "--alg", "forest"});
    CHECK(forest.code == cli::kExitOk);
    CHECK(has_line(forest.out, "colors 2"));
    const Outcome hero = run({"color", fixture("s3"), "--alg", "u3hero", "--n", "3"});
    CHECK(hero.code == cli::kExitOk);
    const Outcome forbidden = run({"color", fixture("d3"), "--alg", "u3hero", "--n", "3"});
    CHECK(forbidden.code == cli::kExitFail);
    const Outcome not_forest = run({"color", fixture("d3"), "--alg", "forest"});
    CHECK(not_forest.code == cli::kExitFail);
  }

  TEST_CASE("contains") {
    const Outcome yes = run({"contains", fixture("u4"), fixture("u3")});
    CHECK(yes.code == cli::kExitOk);
    CHECK(yes.out.rfind("yes\nembedding ", 0) == 0);
    const Outcome no = run({"contains", fixture("u3"), fixture("d3")});
    CHECK(no.code == cli::kExitOk);
    CHECK(no.out == "no\n");
  }

  TEST_CASE("hero") {
    const auto path = (std::filesystem::temp_directory_path() / "heroix_cli_hero.txt").string();
    write_tournament_file(path, compose_chain(cyclic_triangle(), cyclic_triangle()));
    const Outcome yes = run({"hero", path});
    std::filesystem::remove(path);
    CHECK(yes.code == cli::kExitOk);
    CHECK(yes.out.rfind("hero yes\n", 0) == 0);
    CHECK(run({"hero", fixture("n")}).out.rfind("hero no\ncontains N at ", 0) == 0);
    const Outcome no = run({"hero", fixture("d3")});
    CHECK(no.code == cli::kExitOk);
    CHECK(no.out.rfind("hero no\ncontains D_3 at ", 0) == 0);
    CHECK(run({"hero", fixture("u3")}).out.rfind("hero no\ncontains U_3 at ", 0) == 0);
  }

  TEST_CASE("forest") {
    const Outcome yes = run({"forest", fixture("n")});
    CHECK(yes.code == cli::kExitOk);
    CHECK(has_line(yes.out, "forest yes"));
    const Outcome no = run({"forest", fixture("k8")});
    CHECK(no.code == cli::kExitOk);
    CHECK(no.out == "forest no\n");
  }

  TEST_CASE("classify the 8-vertex K") {
    const Outcome o = run({"classify", fixture("k8")});
    CHECK(o.code == cli::kExitOk);
    CHECK(has_line(o.out, "vertices 8"));
    CHECK(has_line(o.out, "member-A yes"));
    CHECK(has_line(o.out, "member-AF no"));
    CHECK(has_line(o.out, "forest no"));
    CHECK(has_line(o.out, "chi 2"));
  }

  TEST_CASE("incomparable") {
    const Outcome o = run({"incomparable", fixture("u3"), "--r", "2"});
    CHECK(o.code == cli::kExitOk);
    CHECK(has_line(o.out, "verified yes"));
    CHECK(run({"incomparable", fixture("d3"), "--r", "2"}).code == cli::kExitFail);
  }

  TEST_CASE("enumerate and survey") {
    const Outcome e = run({"enumerate", "4"});
    CHECK(e.code == cli::kExitOk);
    CHECK(e.out.rfind("# class 1 of 4\n", 0) == 0);
    const Outcome s = run({"survey", "--forbid", "d3,u3", "--max-n", "5"});
    CHECK(s.code == cli::kExitOk);
    CHECK(s.out.rfind("n classes max-chi witness\n", 0) == 0);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"gen", "q", "3"}).code == cli::kExitUsage);
    CHECK(run({"gen", "d"}).code == cli::kExitUsage);
    CHECK(run({"chi", "/nonexistent/file"}).code == cli::kExitUsage);
    CHECK(run({"color", fixture("d3"), "--alg", "magic"}).code == cli::kExitUsage);
    CHECK(run({"color", fixture("d3"), "--alg", "u3hero", "--n", "13"}).code == cli::kExitUsage);
    CHECK(run({"enumerate", "99"}).code == cli::kExitUsage);
    CHECK(run({"verify", "nonsense"}).code == cli::kExitUsage);
    CHECK_FALSE(run({"bogus"}).err.empty());
  }

  TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == cli::kExitOk); }

  TEST_CASE("output is deterministic") {
    for (const char* cmd : {"hero", "classify", "forest"}) {
      CHECK(run({cmd, fixture("u4")}).out == run({cmd, fixture("u4")}).out);
    }
  }

  TEST_CASE("verify core passes") {
    const Outcome o = run({"verify", "core"});
    CHECK(o.code == cli::kExitOk);
    CHECK(o.out.find("suite core: pass") != std::string::npos);
  }

  TEST_CASE("verify budgets must be positive") {
    CHECK(run({"verify", "core", "--budget", "0"}).code == cli::kExitUsage);
  }
}
