#include <doctest.h>

#include "support.hpp"

#include <nashkit/errors.hpp>
#include <nashkit/random_game.hpp>
#include <nashkit/resultant.hpp>
#include <nashkit/strata.hpp>

using namespace nashkit;
using nashkit::testing::binomial;
using nashkit::testing::random_rational;

namespace {

using P = Polynomial<Rational>;

// x^(3)_{ijk}, one-based.
P x224(int i, int j, int k) {
  Format f{2, 2, 4};
  return P::variable(16, static_cast<int>(MultiIndex(f, {i - 1, j - 1, k - 1}).linear()));
}

Game member_game(const Format& f, std::uint64_t seed) {
  Game g = random_game(f, seed, 9);
  std::mt19937_64 rng(seed);
  force_zero_at(g, f.max_index(), random_simplex_point(f, rng));
  return g;
}

}  // namespace

TEST_CASE("resultant profile examples") {
  ResultantProfile a = resultant_profile(Format{2, 2, 4});
  CHECK(a.codim == 1);
  CHECK(a.degree == 6);
  CHECK(a.distinguished == 2);
  ResultantProfile b = resultant_profile(Format{2, 4});
  CHECK(b.codim == 2);
  CHECK(b.degree == 3);
  ResultantProfile c = resultant_profile(Format{2, 2, 2, 6});
  CHECK(c.codim == 2);
  CHECK(c.degree == 60);
  CHECK_THROWS_AS(resultant_profile(Format{2, 2, 3}), FormatError);
  CHECK_THROWS_AS(resultant_profile(Format{3, 3, 3}), FormatError);
}

TEST_CASE("two-player profile degree is a binomial coefficient") {
  for (int d1 = 2; d1 <= 8; ++d1)
    for (int d2 = d1 + 1; d2 <= 8; ++d2) {
      ResultantProfile p = resultant_profile(Format{d1, d2});
      CHECK(p.codim == d2 - d1);
      CHECK(p.degree == binomial(d2 - 1, d1 - 1));
      CHECK(resultant_profile(Format{d2, d1}).degree == p.degree);
    }
}

TEST_CASE("(2,2,4) symbolic matrix matches the display") {
  auto m = build_partial_x_symbolic(Format{2, 2, 4});
  REQUIRE(m.rows() == 6);
  REQUIRE(m.cols() == 6);
  P zero(16);
  for (int i = 1; i <= 2; ++i) {
    int r = 3 * (i - 1);
    for (int k = 2; k <= 4; ++k) {
      int c = 2 * (k - 2);
      P y1 = x224(i, 1, 1) - x224(i, 1, k);
      P y2 = x224(i, 2, 1) - x224(i, 2, k);
      CHECK(m(r, c) == y1);
      CHECK(m(r, c + 1) == zero);
      CHECK(m(r + 1, c) == y2);
      CHECK(m(r + 1, c + 1) == y1);
      CHECK(m(r + 2, c) == zero);
      CHECK(m(r + 2, c + 1) == y2);
    }
  }
}

TEST_CASE("partial_X errors and trivial cases") {
  CHECK_THROWS_AS(build_partial_x_symbolic(Format{2, 2, 5}), FormatError);
  CHECK_THROWS_AS(build_partial_x_symbolic(Format{2, 2, 3}), FormatError);
  Game zero(Format{2, 2, 4});
  QMatrix m = build_partial_x(zero);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) CHECK(m(r, c) == 0);
  CHECK(partial_x_det(zero) == 0);
}

TEST_CASE("partial_X vanishes exactly on member games") {
  for (const Format& f : {Format{2, 2, 4}, Format{4, 2, 2}, Format{2, 3, 5}, Format{2, 2, 2, 5}}) {
    REQUIRE(resultant_profile(f).codim == 1);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      CHECK(partial_x_det(member_game(f, seed)) == 0);
      CHECK(partial_x_det(random_game(f, 100 + seed, 9)) != 0);
    }
  }
}

TEST_CASE("symbolic determinant agrees with exact elimination") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    QMatrix q(n, n);
    Matrix<P> m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        q(r, c) = random_rational(rng);
        m(r, c) = P::constant(1, q(r, c));
      }
    CHECK(symbolic_determinant(m).coefficient({0}) == determinant(q));
  }
  CHECK_THROWS_AS(symbolic_determinant(Matrix<P>(25, 25)), FormatError);
}

TEST_CASE("(2,2,4) expansion") {
  ResultantExpansion e = nash_resultant_expand(Format{2, 2, 4});
  CHECK(e.order == 6);
  CHECK(e.terms == 960);
  CHECK(e.degree == 6);
  for (const auto& [ex, c] : e.det.terms()) {
    int deg = 0;
    for (auto x : ex) deg += x;
    CHECK(deg == 6);
  }

  // equal copies make every difference vanish
  std::map<int, Rational> same;
  Format f{2, 2, 4};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        same[static_cast<int>(MultiIndex(f, {i, j, k}).linear())] = Rational(3 * i + j + 1);
  CHECK(e.det.substitute(same).is_zero());

  // evaluating the expansion reproduces the determinant of a game
  Game g = random_game(f, 9, 7);
  std::vector<Rational> vals(g.payoff(2).coeffs());
  CHECK(e.det.evaluate<Rational>(vals) == partial_x_det(g));

  // swapping players 1 and 2 fixes the polynomial up to sign
  P swapped(16);
  for (const auto& [ex, c] : e.det.terms()) {
    Exponent s(16);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 4; ++k)
          s[MultiIndex(f, {j, i, k}).linear()] = ex[MultiIndex(f, {i, j, k}).linear()];
    swapped.add_term(s, c);
  }
  CHECK((swapped == e.det || swapped == e.det.scale(Rational(-1))));
}

TEST_CASE("two-player resultant tests") {
  Format f{2, 3};
  Game ones = random_game(f, 1, 5);
  for (std::size_t c = 0; c < f.cells(); ++c) ones.payoff(1)[c] = 1;
  TwoPlayerResultant a = two_player_resultant_tests(ones);
  CHECK(a.difference_member);
  CHECK(a.ones_row_member);

  TwoPlayerResultant b = two_player_resultant_tests(random_game(f, 2, 9));
  CHECK(!b.difference_member);
  CHECK(!b.ones_row_member);

  for (const Format& g : {Format{2, 3}, Format{2, 4}, Format{3, 5}, Format{4, 2}}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Game x = random_game(g, seed, 3);
      TwoPlayerResultant r = two_player_resultant_tests(x);
      CHECK(r.difference_member == r.ones_row_member);
      Game m = member_game(g, seed);
      TwoPlayerResultant rm = two_player_resultant_tests(m);
      CHECK(rm.difference_member);
      CHECK(rm.ones_row_member);
    }
  }
  CHECK_THROWS_AS(two_player_resultant_tests(random_game(Format{3, 3}, 1, 3)), FormatError);
}
