#include <doctest.h>

#include "support.hpp"

#include <nashkit/eqsystem.hpp>
#include <nashkit/errors.hpp>
#include <nashkit/homotopy.hpp>
#include <nashkit/random_game.hpp>
#include <nashkit/section222.hpp>
#include <nashkit/strata.hpp>

using namespace nashkit;
using nashkit::testing::fixture;
using nashkit::testing::random_rational;

namespace {

using Vec2 = std::array<Rational, 2>;

Vec2 rvec(std::mt19937_64& rng) {
  Vec2 v{random_rational(rng), random_rational(rng)};
  while (sgn(v[0]) == 0 && sgn(v[1]) == 0) v[0] = random_rational(rng);
  return v;
}

QMatrix outer(const Vec2& u, const Vec2& v) {
  QMatrix m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = u[r] * v[c];
  return m;
}

QMatrix irreducible(std::mt19937_64& rng) {
  QMatrix m(2, 2);
  do {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = random_rational(rng);
  } while (sgn(determinant(m)) == 0);
  return m;
}

Section222 make(QMatrix a1, QMatrix a2, QMatrix a3) {
  Section222 s;
  s.a = {a1, a2, a3};
  return s;
}

Section222 random_section(std::mt19937_64& rng) { return make(irreducible(rng), irreducible(rng), irreducible(rng)); }

// f(x, y) = sum c_ab x_a y_b; discriminant of the binary quadratic in x
// after solving f1 = 0 for y and substituting into f2, by polynomial algebra.
Rational discriminant_by_substitution(const std::array<Rational, 4>& c1, const std::array<Rational, 4>& c2,
                                      bool eliminate_x) {
  auto coef = [&](const std::array<Rational, 4>& c, int a, int b) { return eliminate_x ? c[2 * b + a] : c[2 * a + b]; };
  using P = Polynomial<Rational>;
  P x1 = P::variable(2, 0), x2 = P::variable(2, 1);
  // f1 = (c11 x1 + c21 x2) y1 + (c12 x1 + c22 x2) y2
  P y1 = x1.scale(coef(c1, 0, 1)) + x2.scale(coef(c1, 1, 1));
  P y2 = (x1.scale(coef(c1, 0, 0)) + x2.scale(coef(c1, 1, 0))).scale(Rational(-1));
  P q(2);
  const P xs[2] = {x1, x2}, ys[2] = {y1, y2};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) q += (xs[a] * ys[b]).scale(coef(c2, a, b));
  Rational A = q.coefficient({2, 0}), B = q.coefficient({1, 1}), C = q.coefficient({0, 2});
  return B * B - 4 * A * C;
}

Integer factorial(int k) {
  Integer z = 1;
  for (int i = 2; i <= k; ++i) z *= i;
  return z;
}

// Coefficient of prod h_i^{d_i-1} in (-sum d_i h_i + (dn-1) H) (dn-1) H^{dn-2} + (dn-1) H^{dn-1},
// H = sum h_i over the players other than the largest.
Integer d1_by_chern(const Format& f) {
  int m = f.max_index(), dn = f[m];
  std::vector<int> others;
  for (int i = 0; i < f.n(); ++i)
    if (i != m) others.push_back(f[i]);
  int k = static_cast<int>(others.size());
  using P = Polynomial<Rational>;
  P H(k), L(k);
  for (int i = 0; i < k; ++i) {
    H += P::variable(k, i);
    L += P::variable(k, i).scale(Rational(-others[i]));
  }
  L += H.scale(Rational(dn - 1));
  auto power = [&](const P& p, int e) {
    P out = P::constant(k, Rational(1));
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
  };
  P total = (L * power(H, dn - 2)).scale(Rational(dn - 1)) + power(H, dn - 1).scale(Rational(dn - 1));
  Exponent target;
  for (int d : others) target.push_back(static_cast<std::uint16_t>(d - 1));
  return total.coefficient(target).get_num();
}

}  // namespace

TEST_CASE("theta_det examples") {
  CHECK(theta_det(Section222::from_game(fixture("selten_horse"))) == 0);
  // (p1_2 p3_2 - p2_2 p3_1, p1_1 p3_2 - p2_1 p3_1, p1_1 p2_1 + p1_2 p2_2) written per group
  Section222 lemma = Section222::from_coefficients({{{0, 1, -1, 0}, {0, 1, -1, 0}, {1, 0, 0, 1}}});
  CHECK(theta_det(lemma) != 0);
  CHECK(theta_det(lemma) == 4);
  CHECK(theta_det(Section222{}) == 0);
}

TEST_CASE("theta matrix is symmetric with zero diagonal blocks") {
  std::mt19937_64 rng(2);
  QMatrix t = theta_matrix(random_section(rng));
  REQUIRE(t.rows() == 6);
  CHECK(t == t.transpose());
  for (int b = 0; b < 3; ++b)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(t(2 * b + r, 2 * b + c) == 0);
}

TEST_CASE("theta_det is a homogeneous sextic") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    Section222 s = random_section(rng);
    Rational lambda = random_rational(rng);
    Rational l6 = lambda * lambda * lambda * lambda * lambda * lambda;
    CHECK(theta_det(s.scaled(lambda)) == l6 * theta_det(s));
  }
}

TEST_CASE("theta_det is minus the discriminant of the substituted quadratic") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 60; ++rep) {
    Section222 s = random_section(rng);
    Quadratic222 q = solve_222_exact(s);
    CHECK(theta_det(s) == -q.discriminant);
  }
}

TEST_CASE("phi_rank examples") {
  CHECK(phi_rank(Section222::from_game(fixture("twisted_cubic_222"))) == 4);
  std::mt19937_64 rng(1);
  Section222 scr;
  scr.a[0] = irreducible(rng);
  CHECK(phi_rank(scr) == 2);
  CHECK(phi_rank(Section222{}) == 0);
  QMatrix phi = phi_matrix(random_section(rng));
  CHECK(phi.rows() == 6);
  CHECK(phi.cols() == 8);
}

TEST_CASE("classify the positive-dimensional fixtures") {
  Classification cub = classify(Section222::from_game(fixture("twisted_cubic_222")));
  CHECK(cub.type == SchemeType::CUB);
  CHECK(cub.phi_rank == 4);
  Classification con = classify(Section222::from_game(fixture("conic_222")));
  CHECK(con.type == SchemeType::CON);
  CHECK(con.phi_rank == 5);
  Classification lin = classify(Section222::from_game(fixture("line_222")));
  CHECK(lin.type == SchemeType::LIN);
  CHECK(lin.phi_rank == 6);
  for (const auto* c : {&cub, &con, &lin}) CHECK(c->theta_det == 0);
  // a double point is still a finite scheme
  CHECK(classify(Section222::from_game(fixture("selten_horse"))).type == SchemeType::FINITE);
}

TEST_CASE("parametrized families solve the systems exactly") {
  std::mt19937_64 rng(10);
  EquilibriumSystem cub = build_system(fixture("twisted_cubic_222"));
  EquilibriumSystem con = build_system(fixture("conic_222"));
  EquilibriumSystem lin = build_system(fixture("line_222"));
  for (int rep = 0; rep < 10; ++rep) {
    Rational a = random_rational(rng), b = random_rational(rng);
    std::vector<std::vector<Rational>> p{{a, b}, {-3 * a + 2 * b, -2 * a + 4 * b}, {-a + 2 * b, a}};
    for (const auto& e : cub.equations) CHECK(e.evaluate<Rational>(p) == 0);
    std::vector<std::vector<Rational>> q{{1, 1}, {a, b}, {3 * a + 4 * b, a + 2 * b}};
    for (const auto& e : con.equations) CHECK(e.evaluate<Rational>(q) == 0);
    std::vector<std::vector<Rational>> r{{1, 1}, {3, 2}, {a, 1 - a}};
    for (const auto& e : lin.equations) CHECK(e.evaluate<Rational>(r) == 0);
  }
}

TEST_CASE("constructed sections land in the expected stratum") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    QMatrix Z(2, 2);
    // proportional factors collapse components, so keep the six pairwise independent
    std::vector<Vec2> vs;
    while (vs.size() < 6) {
      Vec2 c = rvec(rng);
      if (std::none_of(vs.begin(), vs.end(), [&](const Vec2& o) { return o[0] * c[1] == o[1] * c[0]; })) vs.push_back(c);
    }
    const Vec2 &u = vs[0], &v = vs[1], &w = vs[2], &x = vs[3], &y = vs[4], &z = vs[5];
    struct Case {
      Section222 s;
      SchemeType type;
    };
    std::vector<Case> cases{
        {make(Z, Z, Z), SchemeType::WHOLE},
        {make(irreducible(rng), Z, Z), SchemeType::SCR},
        {make(Z, Z, outer(u, v)), SchemeType::QQ},
        {make(Z, outer(u, w), outer(u, x)), SchemeType::QL},   // f2, f3 share a form in pi1
        {make(Z, irreducible(rng), irreducible(rng)), SchemeType::CUB},
        {make(Z, outer(u, v), irreducible(rng)), SchemeType::CL},
        {make(Z, outer(u, v), outer(w, x)), SchemeType::LLL},
        // f1 = d2 g3, f2 = d1 g3, f3 = d1 d2: every pair shares
        {make(outer(v, w), outer(u, w), outer(u, v)), SchemeType::THREE_L},
        {make(outer(x, w), outer(y, w), outer(u, z)), SchemeType::LL},
        {make(outer(x, w), outer(y, w), irreducible(rng)), SchemeType::CON},
        {make(outer(u, v), outer(w, x), outer(y, z)), SchemeType::FINITE},
        {random_section(rng), SchemeType::FINITE},
    };
    for (const auto& c : cases) {
      Classification got = classify(c.s);
      CHECK_MESSAGE(got.type == c.type, to_string(got.type) << " expected " << to_string(c.type));
      CHECK(got.phi_rank == expected_phi_rank(c.type));
      if (got.type != SchemeType::FINITE) CHECK(got.theta_det == 0);
    }
  }
}

TEST_CASE("conic stratum minors") {
  Section222 con = Section222::from_game(fixture("conic_222"));
  for (const auto& m : conic_stratum_minors(con, 0)) CHECK(m == 0);
  for (const auto& m : conic_stratum_minors(Section222{}, 1)) CHECK(m == 0);
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    Section222 s = random_section(rng);
    auto minors = conic_stratum_minors(s, 0);
    REQUIRE(minors.size() == 6);
    CHECK(std::any_of(minors.begin(), minors.end(), [](const Rational& r) { return sgn(r) != 0; }));
    CHECK(classify(s).type != SchemeType::CON);
  }
}

TEST_CASE("line stratum equations on the line fixture") {
  Section222 lin = Section222::from_game(fixture("line_222"));
  Classification c = classify(lin);
  REQUIRE(c.distinguished);
  CHECK(line_stratum_equations(lin, *c.distinguished).member());
  std::mt19937_64 rng(16);
  Vec2 u = rvec(rng), v = rvec(rng), w = rvec(rng), x = rvec(rng);
  Section222 generic = make(irreducible(rng), outer(u, v), outer(w, x));
  CHECK(!line_stratum_equations(generic, 0).member());
}

TEST_CASE("two-player discriminant ranks") {
  Format f{3, 3};
  Game dup = random_game(f, 4, 9);
  for (int j = 0; j < 3; ++j) dup.payoff(1).entry(MultiIndex(f, {j, 1})) = dup.payoff(1).at({j, 0});
  TwoPlayerRanks r = two_player_discriminant(dup);
  CHECK(r.rank2 <= 1);
  CHECK(r.member);
  CHECK(two_player_discriminant_ones_row(dup).member);

  TwoPlayerRanks gen = two_player_discriminant(random_game(f, 5, 9));
  CHECK(gen.rank1 == 2);
  CHECK(gen.rank2 == 2);
  CHECK(!gen.member);

  TwoPlayerRanks zero = two_player_discriminant(Game(f));
  CHECK(zero.rank1 == 0);
  CHECK(zero.rank2 == 0);
}

TEST_CASE("bilinear pair discriminant") {
  // The value for this pair is +4: the system has the two real solutions
  // [pi1] = [pi2] = [1:1] and [1:-1].
  CHECK(bilinear_pair_discriminant({0, 1, -1, 0}, {1, 0, 0, -1}) == 4);
  std::mt19937_64 rng(18);
  for (int rep = 0; rep < 30; ++rep) {
    std::array<Rational, 4> b1, b2;
    for (auto& c : b1) c = random_rational(rng);
    for (auto& c : b2) c = random_rational(rng);
    CHECK(bilinear_pair_discriminant(b1, b1) == 0);
    Rational d = bilinear_pair_discriminant(b1, b2);
    CHECK(d == discriminant_by_substitution(b1, b2, false));
    CHECK(d == discriminant_by_substitution(b1, b2, true));
  }
  Game g = fixture("double_point_223");
  CHECK(bilinear_pair_discriminant(bilinear_coefficients(g, 2, 1), bilinear_coefficients(g, 2, 2)) == 0);
}

TEST_CASE("d1_degree") {
  CHECK(d1_degree(Format{2, 2, 3}) == 4);
  CHECK(d1_degree(Format{2, 3, 4}) == 12);
  CHECK(d1_degree(Format{2, 2, 2, 4}) == 36);
  for (const Format& f : {Format{2, 2, 3}, Format{2, 3, 4}, Format{2, 2, 2, 4}, Format{3, 3, 5}, Format{2, 4, 5},
                          Format{4, 2, 2, 2}, Format{3, 3, 3, 7}}) {
    REQUIRE(f.classify() == FormatClass::Boundary);
    CHECK(d1_degree(f) == d1_by_chern(f));
  }
  // direct evaluation of the factorial expression
  for (const Format& f : {Format{2, 3, 4}, Format{3, 3, 5}}) {
    int m = f.max_index(), dn = f[m];
    Integer denom = 1, bracket = dn - 1;
    for (int i = 0; i < f.n(); ++i) {
      if (i == m) continue;
      denom *= factorial(f[i] - 1);
      bracket += (f[i] - 1) * (dn - f[i] - 1);
    }
    CHECK(d1_degree(f) == factorial(dn - 1) / denom * bracket);
  }
  CHECK_THROWS_AS(d1_degree(Format{2, 2, 2}), FormatError);
  CHECK_THROWS_AS(d1_degree(Format{2, 2, 4}), FormatError);
}
