#include <doctest.h>

#include "support.hpp"

#include <nashkit/errors.hpp>
#include <nashkit/format.hpp>
#include <nashkit/game.hpp>
#include <nashkit/game_json.hpp>
#include <nashkit/random_game.hpp>

#include <json.hpp>

#include <set>

using namespace nashkit;
using nashkit::testing::fixture;

TEST_CASE("format classification literals") {
  CHECK(Format{2, 2, 2}.classify() == FormatClass::Within);
  CHECK(Format{3, 3, 3}.classify() == FormatClass::Within);
  CHECK(Format{2, 2, 3}.classify() == FormatClass::Boundary);
  CHECK(Format{2, 2, 4}.classify() == FormatClass::Beyond);
  // order does not matter
  CHECK(Format{4, 2, 2}.classify() == FormatClass::Beyond);
  CHECK(Format{3, 2, 2}.classify() == FormatClass::Boundary);
  CHECK(Format{2, 3}.classify() == FormatClass::Beyond);
  CHECK(Format{3, 3}.classify() == FormatClass::Boundary);
}

TEST_CASE("format invariants") {
  Format f{2, 3, 4};
  CHECK(f.n() == 3);
  CHECK(f.D() == 1 + 2 + 3);
  CHECK(f.cells() == 24);
  CHECK(f.vars() == 9);
  CHECK(f.offset(2) == 5);
  CHECK(f.max_index() == 2);
  CHECK(Format{3, 3, 2}.max_index() == 1);
  CHECK(f.to_string() == "2,3,4");
  CHECK(Format::parse("2,3,4") == f);
  CHECK_THROWS_AS(Format({2}), FormatError);
  CHECK_THROWS_AS(Format({2, 1}), FormatError);
  CHECK_THROWS_AS(Format::parse("2,x"), FormatError);
  CHECK_THROWS_AS(Format::parse("2,,3"), FormatError);
}

TEST_CASE("multi-index linearization is a bijection") {
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {3, 4}, {2, 3, 4}, {4, 4, 4, 4}, {5, 4, 5, 5, 2}, {10, 10, 10, 10}}) {
    Format f(dims);
    REQUIRE(f.cells() <= 10000);
    MultiIndex j(f);
    std::size_t count = 0;
    do {
      CHECK(j.linear() == count);
      CHECK(MultiIndex::from_linear(f, count).j() == j.j());
      ++count;
    } while (j.next());
    CHECK(count == f.cells());
  }
}

TEST_CASE("multi-index order: last index fastest") {
  Format f{2, 3};
  MultiIndex j(f);
  j.next();
  CHECK(j.j() == std::vector<int>{0, 1});
  CHECK(MultiIndex(f, {1, 0}).linear() == 3);
}

TEST_CASE("drop and insert invert each other") {
  Format f{2, 3, 4};
  MultiIndex j(f);
  do {
    for (int i = 0; i < f.n(); ++i) {
      auto rest = j.drop(i);
      CHECK(rest.size() == 2);
      CHECK(MultiIndex::insert(f, j[i], i, rest).j() == j.j());
    }
  } while (j.next());
}

TEST_CASE("parse_game examples") {
  Game selten = fixture("selten_horse");
  CHECK(selten.payoff(0).at({0, 0, 0}) == 3);

  Game zero = parse_game(R"({"format":[2,2],"players":[{"payoffs":[0,0,0,0]},{"payoffs":[0,0,0,0]}]})");
  for (int i = 0; i < 2; ++i)
    for (const auto& x : zero.payoff(i).coeffs()) CHECK(x == 0);
  CHECK(zero == Game(Format{2, 2}));

  Game g = fixture("mixed_333");
  CHECK(g.payoff(0).at({1, 2, 2}) == -23);
}

TEST_CASE("parse_game accepts rational strings and a unicode minus") {
  Game g = parse_game("{\"format\":[2,2],\"players\":[{\"payoffs\":[\"3/6\",\"\xe2\x88\x92" "2\",\"-1/-2\",4]},{\"payoffs\":[0,0,0,0]}]}");
  CHECK(g.payoff(0)[0] == Rational(1, 2));
  CHECK(g.payoff(0)[1] == -2);
  CHECK(g.payoff(0)[2] == Rational(1, 2));
  CHECK(g.payoff(0)[3] == 4);
}

TEST_CASE("parse_game errors") {
  CHECK_THROWS_AS(parse_game("{\"format\":[2,2"), ParseError);
  CHECK_THROWS_AS(parse_game(R"({"format":[2,2],"players":[{"payoffs":[0,0,0]},{"payoffs":[0,0,0,0]}]})"), SchemaError);
  CHECK_THROWS_AS(parse_game(R"({"format":[2,2],"players":[{"payoffs":[0,0,0,0]}]})"), SchemaError);
  CHECK_THROWS_AS(parse_game(R"({"format":[1,2],"players":[{"payoffs":[0,0]},{"payoffs":[0,0]}]})"), SchemaError);
  CHECK_THROWS_AS(parse_game(R"({"format":[2,2],"players":[{"payoffs":[0.5,0,0,0]},{"payoffs":[0,0,0,0]}]})"), SchemaError);
  CHECK_THROWS_AS(parse_game(R"({"format":[2,2],"players":[{"payoffs":["1/0",0,0,0]},{"payoffs":[0,0,0,0]}]})"), SchemaError);
  CHECK_THROWS_AS(parse_game(R"({"format":[2,2],"players":[{"payoffs":["x",0,0,0]},{"payoffs":[0,0,0,0]}]})"), SchemaError);
  CHECK_THROWS_AS(parse_game("[1,2]"), SchemaError);
}

TEST_CASE("serialize_game is canonical") {
  Game g = parse_game(R"({"players":[{"payoffs":["4/2","-1/-2","0","-6/4"]},{"payoffs":[1,2,3,4]}],"format":[2,2]})");
  std::string text = serialize_game(g);
  CHECK(text == R"({"format":[2,2],"players":[{"payoffs":["2","1/2","0","-3/2"]},{"payoffs":["1","2","3","4"]}]})" "\n");
  CHECK(parse_game(text) == g);
}

TEST_CASE("serialize round-trip on fixtures and random rational games") {
  for (auto name : {"mixed_333", "twisted_cubic_222", "selten_horse", "conic_222", "line_222", "double_point_223", "matching_pennies"}) {
    Game g = fixture(name);
    CHECK(parse_game(serialize_game(g)) == g);
    CHECK(serialize_game(parse_game(serialize_game(g))) == serialize_game(g));
  }
  std::mt19937_64 rng(11);
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {3, 2, 2}, {2, 3, 4}, {2, 2, 2, 2}}) {
    for (int rep = 0; rep < 20; ++rep) {
      Game g = nashkit::testing::random_rational_game(Format(dims), rng, 50);
      CHECK(parse_game(serialize_game(g)) == g);
    }
  }
}

TEST_CASE("payoff tensor length is checked") {
  CHECK_THROWS_AS(PayoffTensor(Format{2, 2}, std::vector<Rational>(3)), SchemaError);
  Format f{2, 3};
  std::vector<PayoffTensor> wrong{PayoffTensor(f), PayoffTensor(Format{3, 2})};
  CHECK_THROWS_AS(Game(f, wrong), SchemaError);
}

TEST_CASE("random_game determinism and range") {
  Format f{2, 3, 2};
  CHECK(serialize_game(random_game(f, 5, 3)) == serialize_game(random_game(f, 5, 3)));
  CHECK(serialize_game(random_game(f, 5, 3)) != serialize_game(random_game(f, 6, 3)));
  std::set<int> seen;
  Game small = random_game(f, 9, 2);
  for (const auto& t : small.tensors())
    for (const auto& x : t.coeffs()) {
      CHECK(x.get_den() == 1);
      CHECK(abs(x) <= 2);
      seen.insert(static_cast<int>(x.get_num().get_si()));
    }
  CHECK(seen.size() > 1);
  CHECK_THROWS_AS(random_game(f, 1, 0), DomainError);
}

TEST_CASE("random_game regression snapshot") {
  CHECK(serialize_game(random_game(Format{2, 2, 2}, 7, 10)) ==
        R"({"format":[2,2,2],"players":[{"payoffs":["5","9","-8","8","-8","-9","7","8"]},)"
        R"({"payoffs":["-5","5","5","2","-2","-4","7","-4"]},{"payoffs":["10","10","8","-5","3","-4","-10","-10"]}]})"
        "\n");
}
