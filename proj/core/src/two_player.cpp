#include "tracker.hpp"

#include <nashkit/errors.hpp>

namespace nashkit {
namespace {

CPoint to_cpoint(const std::vector<std::vector<Rational>>& p) {
  CPoint out;
  for (const auto& g : p) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(g.size()));
    for (std::size_t k = 0; k < g.size(); ++k) v[static_cast<Eigen::Index>(k)] = g[k].get_d();
    out.push_back(v);
  }
  return out;
}

// Scales a projective rational vector to sum 1 when possible.
bool to_simplex(std::vector<Rational>& v) {
  Rational sum = 0;
  for (const auto& x : v) sum += x;
  if (sgn(sum) == 0) return false;
  bool positive = true;
  for (auto& x : v) {
    x /= sum;
    if (sgn(x) <= 0) positive = false;
  }
  return positive;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Integer p, q;
  mpz_sqrt(p.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(q.get_mpz_t(), r.get_den_mpz_t());
  return Rational(p, q);
}

template <class T>
std::vector<T> apply_linear(const QMatrix& a, const std::vector<T>& pi3) {
  // pi = (a21 s + a22 t, -(a11 s + a12 t)) solves sum a_jk pi_j pi3_k = 0.
  T s = pi3[0], t = pi3[1];
  T c21 = convert_scalar<T>(a(1, 0)), c22 = convert_scalar<T>(a(1, 1));
  T c11 = convert_scalar<T>(a(0, 0)), c12 = convert_scalar<T>(a(0, 1));
  return {c21 * s + c22 * t, -(c11 * s + c12 * t)};
}

template <class T>
bool is_zero_vec(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!(x == T(0))) return false;
  return true;
}

// Completes a point whose pi^(1) or pi^(2) came out zero using f^(3).
template <class T>
bool complete_fibre(const Section222& s, std::vector<T>& p1, std::vector<T>& p2) {
  const QMatrix& a3 = s.a[2];
  auto conv = [](const Rational& r) { return convert_scalar<T>(r); };
  bool z1 = is_zero_vec(p1), z2 = is_zero_vec(p2);
  if (z1 && z2) return false;
  if (z2) {
    T c1 = conv(a3(0, 0)) * p1[0] + conv(a3(1, 0)) * p1[1];
    T c2 = conv(a3(0, 1)) * p1[0] + conv(a3(1, 1)) * p1[1];
    p2 = {c2, -c1};
    return !is_zero_vec(p2);
  }
  if (z1) {
    T c1 = conv(a3(0, 0)) * p2[0] + conv(a3(0, 1)) * p2[1];
    T c2 = conv(a3(1, 0)) * p2[0] + conv(a3(1, 1)) * p2[1];
    p1 = {c2, -c1};
    return !is_zero_vec(p1);
  }
  return true;
}

}  // namespace

TwoPlayerResult solve_two_player(const Game& g) {
  const Format& f = g.format();
  if (f.n() != 2) throw FormatError("solve_two_player needs exactly two players");
  const int d1 = f[0], d2 = f[1];
  QMatrix a1(d1 - 1, d2), a2(d2 - 1, d1);
  for (int k = 1; k < d1; ++k)
    for (int j = 0; j < d2; ++j) a1(k - 1, j) = g.payoff(0).at({0, j}) - g.payoff(0).at({k, j});
  for (int k = 1; k < d2; ++k)
    for (int j = 0; j < d1; ++j) a2(k - 1, j) = g.payoff(1).at({j, 0}) - g.payoff(1).at({j, k});

  auto n1 = nullspace(a1);  // pi^(2)
  auto n2 = nullspace(a2);  // pi^(1)
  TwoPlayerResult res;
  if (n1.empty() || n2.empty()) {
    res.kind = TwoPlayerResult::Kind::Empty;
    return res;
  }
  if (n1.size() > 1 || n2.size() > 1) {
    res.kind = TwoPlayerResult::Kind::PositiveDimensional;
    return res;
  }
  res.kind = TwoPlayerResult::Kind::Unique;
  res.point = {n2[0], n1[0]};
  std::vector<std::vector<Rational>> simplex = res.point;
  bool mixed = true;
  for (auto& v : simplex) mixed = to_simplex(v) && mixed;
  res.totally_mixed = mixed;
  if (mixed) res.point = simplex;

  Solution s;
  s.point = normalize_point(to_cpoint(res.point));
  s.residual = detail::max_residual(MultilinearSystem::from(build_system(g)), s.point);
  s.is_real = true;
  s.jacobian_rank = f.D();
  if (mixed) {
    std::vector<std::vector<double>> rep;
    for (const auto& v : simplex) {
      std::vector<double> r;
      for (const auto& x : v) r.push_back(x.get_d());
      rep.push_back(std::move(r));
    }
    s.simplex_rep = std::move(rep);
  }
  res.solutions.push_back(std::move(s));
  return res;
}

Quadratic222 solve_222_exact(const Game& g) {
  if (!(g.format() == Format{2, 2, 2})) throw FormatError("solve_222_exact needs format (2,2,2)");
  return solve_222_exact(Section222::from_game(g));
}

Quadratic222 solve_222_exact(const Section222& s) {
  if (s.is_zero(0) || s.is_zero(1)) throw DomainError("solve_222_exact needs nonzero f^(1) and f^(2)");
  Quadratic222 q;
  // pi^(2) from f^(1) and pi^(1) from f^(2), both linear in (s, t).
  using P = Polynomial<Rational>;
  P sv = P::variable(2, 0), tv = P::variable(2, 1);
  auto lin = [&](const QMatrix& a) {
    return std::vector<P>{sv.scale(a(1, 0)) + tv.scale(a(1, 1)), -(sv.scale(a(0, 0)) + tv.scale(a(0, 1)))};
  };
  auto p2 = lin(s.a[0]);
  auto p1 = lin(s.a[1]);
  P quad(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) quad += (p1[i] * p2[j]).scale(s.a[2](i, j));
  q.A = quad.coefficient({2, 0});
  q.B = quad.coefficient({1, 1});
  q.C = quad.coefficient({0, 2});
  q.discriminant = q.B * q.B - 4 * q.A * q.C;
  if (quad.is_zero()) {
    q.kind = Quadratic222::Kind::PositiveDimensional;
    return q;
  }

  std::vector<std::vector<Rational>> exact;
  std::vector<Eigen::VectorXcd> numeric;
  if (sgn(q.discriminant) == 0) {
    q.kind = Quadratic222::Kind::Double;
    if (sgn(q.A) != 0) {
      exact.push_back({-q.B, 2 * q.A});
    } else {
      exact.push_back({1, 0});
    }
  } else {
    q.kind = Quadratic222::Kind::TwoSimple;
    if (sgn(q.A) == 0) {
      exact.push_back({1, 0});
      exact.push_back({-q.C, q.B});
    } else if (auto r = rational_sqrt(q.discriminant)) {
      exact.push_back({-q.B + *r, 2 * q.A});
      exact.push_back({-q.B - *r, 2 * q.A});
    } else {
      Complex root = std::sqrt(Complex(q.discriminant.get_d()));
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXcd v(2);
        v << -q.B.get_d() + sign * root, 2 * q.A.get_d();
        numeric.push_back(v);
      }
    }
  }

  for (const auto& r : exact) {
    Eigen::VectorXcd v(2);
    v << r[0].get_d(), r[1].get_d();
    q.roots_pi3.push_back(v);
    q.exact_roots.push_back(r);
    auto e2 = apply_linear<Rational>(s.a[0], r);
    auto e1 = apply_linear<Rational>(s.a[1], r);
    if (!complete_fibre<Rational>(s, e1, e2)) {
      ++q.fibre_failures;
      continue;
    }
    std::vector<std::vector<Rational>> pt{e1, e2, r};
    q.exact_points.push_back(pt);
    q.points.push_back(normalize_point(to_cpoint(pt)));
  }
  for (const auto& v : numeric) {
    q.roots_pi3.push_back(v);
    q.exact_roots.push_back(std::nullopt);
    std::vector<Complex> r{v[0], v[1]};
    auto c2 = apply_linear<Complex>(s.a[0], r);
    auto c1 = apply_linear<Complex>(s.a[1], r);
    if (!complete_fibre<Complex>(s, c1, c2)) {
      ++q.fibre_failures;
      continue;
    }
    CPoint pt(3);
    pt[0] = Eigen::Map<Eigen::VectorXcd>(c1.data(), 2);
    pt[1] = Eigen::Map<Eigen::VectorXcd>(c2.data(), 2);
    pt[2] = v;
    q.exact_points.push_back(std::nullopt);
    q.points.push_back(normalize_point(pt));
  }
  return q;
}

}  // namespace nashkit
