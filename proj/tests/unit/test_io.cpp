#include <cstdio>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "heroix/heroix.hpp"
#include "oracles.hpp"

using namespace heroix;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_tournament(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError for: " << text);
  return ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse a cyclic triangle") {
    const ParsedTournament p = parse_tournament("3\n010\n001\n100\n");
    CHECK(p.t == cyclic_triangle());
    CHECK(p.order == Ordering::identity(3));
  }

  TEST_CASE("comments, CRLF and a missing final newline") {
    CHECK(parse_tournament("# C\n# second\n3\n010\n001\n100").t == cyclic_triangle());
    CHECK(parse_tournament("3\r\n010\r\n001\r\n100\r\n").t == cyclic_triangle());
    CHECK(parse_tournament("0\n").t.size() == 0);
    CHECK(parse_tournament("1\n0\n").t.size() == 1);
  }

  TEST_CASE("errors carry line and column") {
    const ParseError diag = parse_error("2\n01\n01\n");
    CHECK(diag.line() == 3);
    CHECK(diag.column() == 2);

    const ParseError both = parse_error("3\n011\n101\n000\n");
    CHECK(both.line() == 3);
    CHECK(both.column() == 1);

    const ParseError neither = parse_error("2\n00\n00\n");
    CHECK(neither.line() == 3);
    CHECK(neither.column() == 1);

    const ParseError width = parse_error("3\n010\n00\n100\n");
    CHECK(width.line() == 3);
    CHECK(width.column() == 0);

    const ParseError symbol = parse_error("3\n010\n0x1\n100\n");
    CHECK(symbol.line() == 3);
    CHECK(symbol.column() == 2);

    CHECK(parse_error("").line() == 1);
    CHECK(parse_error("x\n").line() == 1);
    CHECK(parse_error("-1\n").line() == 1);
    CHECK(parse_error("3\n010\n001\n").line() == 4);
    CHECK(parse_error("1\n0\n0\n").line() == 3);
  }

  TEST_CASE("ParseError is a ValidationError") {
    CHECK_THROWS_AS(parse_tournament("2\n00\n00\n"), ValidationError);
  }

  TEST_CASE("serialize round-trips every class, n<=6") {
    for (int n = 0; n <= 6; ++n) {
      for (const Tournament& t : enumerate_tournaments(n)) {
        CHECK(parse_tournament(serialize_tournament(t)).t == t);
      }
    }
  }

  TEST_CASE("serialize in an order relabels") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      const Tournament t = test::random_tournament(rng, 7);
      std::vector<Vertex> seq{6, 2, 4, 0, 1, 5, 3};
      std::shuffle(seq.begin(), seq.end(), rng);
      const Ordering sigma(seq);
      CHECK(parse_tournament(serialize_tournament(t, sigma)).t == relabel(t, seq));
    }
    CHECK(serialize_tournament(cyclic_triangle()) == "3\n010\n001\n100\n");
    CHECK_THROWS_AS(serialize_tournament(cyclic_triangle(), Ordering::identity(2)), ValidationError);
  }

  TEST_CASE("file round trip and file errors") {
    const auto path = std::filesystem::temp_directory_path() / "heroix_io_test.txt";
    write_tournament_file(path.string(), n_tournament());
    CHECK(read_tournament_file(path.string()).t == n_tournament());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_tournament_file(path.string()), ValidationError);
    CHECK_THROWS_AS(write_tournament_file("/nonexistent-dir/x.txt", n_tournament()), ValidationError);
  }

  TEST_CASE("every fixture parses") {
    for (const char* name : {"d3", "u3", "n", "s3", "delta2", "u4", "k8"}) {
      CHECK_NOTHROW(read_tournament_file(test::fixture_path(name)));
    }
    CHECK(read_tournament_file(test::fixture_path("u4")).t == u_tournament(4));
    CHECK(read_tournament_file(test::fixture_path("d3")).t == d_tournament(3));
  }
}
