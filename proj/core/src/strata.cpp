#include <nashkit/errors.hpp>
#include <nashkit/homotopy.hpp>
#include <nashkit/strata.hpp>

namespace nashkit {

Section222 Section222::from_game(const Game& g) {
  if (!(g.format() == Format{2, 2, 2})) throw FormatError("a (2,2,2) game is required");
  Section222 s;
  for (int i = 0; i < 3; ++i) {
    int gr = i == 0 ? 1 : 0;
    int gc = i == 2 ? 1 : 2;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        std::vector<int> j(3);
        j[gr] = r;
        j[gc] = c;
        j[i] = 0;
        Rational hi = g.payoff(i).entry(MultiIndex(g.format(), j));
        j[i] = 1;
        s.a[i](r, c) = hi - g.payoff(i).entry(MultiIndex(g.format(), j));
      }
    }
  }
  return s;
}

Section222 Section222::from_coefficients(const std::array<std::array<Rational, 4>, 3>& c) {
  Section222 s;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 4; ++k) s.a[i](k / 2, k % 2) = c[i][k];
  return s;
}

Rational Section222::eval(int i, const std::vector<Rational>& row, const std::vector<Rational>& col) const {
  Rational acc = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) acc += a[i](r, c) * row[r] * col[c];
  return acc;
}

bool Section222::is_zero(int i) const {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (sgn(a[i](r, c)) != 0) return false;
  return true;
}

Rational Section222::det(int i) const { return a[i](0, 0) * a[i](1, 1) - a[i](0, 1) * a[i](1, 0); }

Section222 Section222::scaled(const Rational& lambda) const {
  Section222 s = *this;
  for (auto& m : s.a)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) *= lambda;
  return s;
}

std::string to_string(SchemeType t) {
  switch (t) {
    case SchemeType::FINITE: return "finite";
    case SchemeType::CUB: return "cub";
    case SchemeType::CON: return "con";
    case SchemeType::LIN: return "lin";
    case SchemeType::LL: return "ll";
    case SchemeType::CL: return "cl";
    case SchemeType::LLL: return "lll";
    case SchemeType::THREE_L: return "3l";
    case SchemeType::QL: return "ql";
    case SchemeType::SCR: return "scr";
    case SchemeType::QQ: return "qq";
    case SchemeType::WHOLE: return "whole";
  }
  return "?";
}

int expected_phi_rank(SchemeType t) {
  switch (t) {
    case SchemeType::WHOLE: return 0;
    case SchemeType::SCR:
    case SchemeType::QQ: return 2;
    case SchemeType::QL: return 3;
    case SchemeType::CUB:
    case SchemeType::CL:
    case SchemeType::LLL:
    case SchemeType::THREE_L: return 4;
    case SchemeType::CON:
    case SchemeType::LL: return 5;
    case SchemeType::LIN:
    case SchemeType::FINITE: return 6;
  }
  return -1;
}

QMatrix theta_matrix(const Section222& s) {
  const QMatrix& a1 = s.a[0];
  const QMatrix& a2 = s.a[1];
  const QMatrix& a3 = s.a[2];
  QMatrix t(6, 6);
  // Block (1,2) is a3, (1,3) is a2, (2,3) is a1; the lower half mirrors it.
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      t(r, 2 + c) = a3(r, c);
      t(r, 4 + c) = a2(r, c);
      t(2 + r, 4 + c) = a1(r, c);
    }
  }
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < r; ++c) t(r, c) = t(c, r);
  return t;
}

Rational theta_det(const Section222& s) { return determinant(theta_matrix(s)); }

QMatrix phi_matrix(const Section222& s) {
  QMatrix m(6, 8);
  auto col = [](int i, int j, int k) { return 4 * i + 2 * j + k; };
  for (int l = 0; l < 2; ++l)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        m(l, col(l, j, k)) = s.a[0](j, k);
        m(2 + l, col(j, l, k)) = s.a[1](j, k);
        m(4 + l, col(j, k, l)) = s.a[2](j, k);
      }
  return m;
}

int phi_rank(const Section222& s) { return rank(phi_matrix(s)); }

namespace {

using Lin = std::array<Rational, 2>;

// Groups of form i: (row group, column group).
std::pair<int, int> groups_of(int i) {
  if (i == 0) return {1, 2};
  if (i == 1) return {0, 2};
  return {0, 1};
}

bool parallel(const Lin& u, const Lin& v) { return sgn(u[0] * v[1] - u[1] * v[0]) == 0; }
std::vector<Rational> point_of(const Lin& u) { return {u[1], -u[0]}; }

// Linear factor of the rank-one form i in the given group.
Lin factor(const Section222& s, int i, int group) {
  const QMatrix& a = s.a[i];
  int r = 0, c = 0;
  for (int k = 0; k < 4; ++k)
    if (sgn(a(k / 2, k % 2)) != 0) {
      r = k / 2;
      c = k % 2;
      break;
    }
  if (group == groups_of(i).first) return {a(0, c), a(1, c)};
  return {a(r, 0), a(r, 1)};
}

// f^(i) at points given per group.
Rational eval_at(const Section222& s, int i, const std::vector<Rational>& p_first, int g_first,
                 const std::vector<Rational>& p_second) {
  auto [gr, gc] = groups_of(i);
  (void)gc;
  if (g_first == gr) return s.eval(i, p_first, p_second);
  return s.eval(i, p_second, p_first);
}

int third(int i, int j) { return 3 - i - j; }

// Slice b of form j along group i: the coefficients of what remains once
// pi^(i) is fixed to the b-th basis vector.
Lin slice(const Section222& s, int j, int i, int b) {
  const QMatrix& a = s.a[j];
  if (groups_of(j).first == i) return {a(b, 0), a(b, 1)};
  return {a(0, b), a(1, b)};
}

bool zero_lin(const Lin& u) { return sgn(u[0]) == 0 && sgn(u[1]) == 0; }

}  // namespace

bool LineStratum::member() const {
  if (sgn(Q1) != 0 || sgn(Q2) != 0) return false;
  bool any = false;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (!defined[a][b]) continue;
      any = true;
      if (sgn(F[a][b]) != 0) return false;
    }
  return any;
}

LineStratum line_stratum_equations(const Section222& s, int i) {
  auto [j, k] = groups_of(i);  // the two foreign forms, j < k
  LineStratum ls;
  ls.Q1 = s.det(j);
  ls.Q2 = s.det(k);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      // Form k lives on groups {i, j}: its slice is a form in pi^(j).
      Lin m = slice(s, k, i, a);
      // Form j lives on groups {i, k}: its slice is a form in pi^(k).
      Lin nf = slice(s, j, i, b);
      ls.defined[a][b] = !zero_lin(m) && !zero_lin(nf);
      if (ls.defined[a][b]) ls.F[a][b] = eval_at(s, i, point_of(m), j, point_of(nf));
    }
  }
  return ls;
}

Classification classify(const Section222& s) {
  Classification out;
  out.phi_rank = phi_rank(s);
  out.theta_det = theta_det(s);
  int zeros = 0, reducible = 0;
  for (int i = 0; i < 3; ++i) {
    if (s.is_zero(i)) {
      out.forms[i] = FormKind::Zero;
      ++zeros;
    } else if (sgn(s.det(i)) == 0) {
      out.forms[i] = FormKind::Reducible;
      ++reducible;
    } else {
      out.forms[i] = FormKind::Irreducible;
    }
  }
  auto red = [&](int i) { return out.forms[i] == FormKind::Reducible; };
  auto shares = [&](int i, int j) {
    if (!red(i) || !red(j)) return false;
    int g = third(i, j);
    return parallel(factor(s, i, g), factor(s, j, g));
  };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (shares(i, j)) out.shared.emplace_back(i, j);

  if (zeros == 3) {
    out.type = SchemeType::WHOLE;
  } else if (zeros == 2) {
    for (int i = 0; i < 3; ++i)
      if (out.forms[i] != FormKind::Zero) out.distinguished = i;
    out.type = red(*out.distinguished) ? SchemeType::QQ : SchemeType::SCR;
  } else if (zeros == 1) {
    int i = 0;
    while (out.forms[i] != FormKind::Zero) ++i;
    out.distinguished = i;
    auto [j, k] = groups_of(i);
    int r = (red(j) ? 1 : 0) + (red(k) ? 1 : 0);
    if (shares(j, k)) {
      out.type = SchemeType::QL;
    } else if (r == 0) {
      out.type = SchemeType::CUB;
    } else if (r == 1) {
      out.type = SchemeType::CL;
    } else {
      out.type = SchemeType::LLL;
    }
  } else if (out.shared.size() == 3) {
    out.type = SchemeType::THREE_L;
  } else if (out.shared.size() == 2) {
    out.type = SchemeType::LLL;
  } else if (out.shared.size() == 1) {
    auto [j, k] = out.shared.front();
    int i = third(j, k);
    out.distinguished = i;
    if (red(i)) {
      out.type = SchemeType::LL;
    } else {
      // The shared factor lives in pi^(i); the leftover factors cut out a
      // line along pi^(i), contained in Z iff f^(i) vanishes at its point.
      Lin n_j = factor(s, j, k);
      Lin m_k = factor(s, k, j);
      bool on_line = sgn(eval_at(s, i, point_of(m_k), j, point_of(n_j))) == 0;
      out.type = on_line ? SchemeType::CL : SchemeType::CON;
    }
  } else if (reducible == 3) {
    out.type = SchemeType::FINITE;
  } else if (reducible == 2) {
    int i = 0;
    while (red(i)) ++i;
    out.distinguished = i;
    LineStratum ls = line_stratum_equations(s, i);
    auto [j, k] = groups_of(i);
    bool incidence = sgn(eval_at(s, i, point_of(factor(s, k, j)), j, point_of(factor(s, j, k)))) == 0;
    if (ls.member() != incidence)
      throw InternalInvariantViolation("line stratum equations disagree with the factor incidence test");
    out.type = ls.member() ? SchemeType::LIN : SchemeType::FINITE;
  } else if (reducible == 1) {
    out.type = SchemeType::FINITE;
  } else {
    // f^(1), f^(2) irreducible: Z(f^(1), f^(2)) is a twisted cubic, inside
    // Z(f^(3)) iff the substituted quadratic vanishes identically.
    Quadratic222 q = solve_222_exact(s);
    out.type = q.kind == Quadratic222::Kind::PositiveDimensional ? SchemeType::CUB : SchemeType::FINITE;
  }

  if (expected_phi_rank(out.type) != out.phi_rank)
    throw InternalInvariantViolation("type " + to_string(out.type) + " expects rank " +
                                     std::to_string(expected_phi_rank(out.type)) + " of Phi_f, found " +
                                     std::to_string(out.phi_rank));
  if (out.type != SchemeType::FINITE && sgn(out.theta_det) != 0)
    throw InternalInvariantViolation("positive-dimensional type " + to_string(out.type) + " with theta_det != 0");

  for (auto [i, j] : out.shared)
    out.note += "f" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) + " share a factor in pi" +
                std::to_string(third(i, j) + 1) + "; ";
  if (!out.note.empty()) out.note.resize(out.note.size() - 2);
  return out;
}

QMatrix conic_matrix(const Section222& s, int i) {
  auto [j, k] = groups_of(i);
  QMatrix m(2, 4);
  // Later form first, each read with pi^(i) as the row index.
  for (int r = 0; r < 2; ++r) {
    Lin lk = slice(s, k, i, r);
    Lin lj = slice(s, j, i, r);
    m(r, 0) = lk[0];
    m(r, 1) = lk[1];
    m(r, 2) = lj[0];
    m(r, 3) = lj[1];
  }
  return m;
}

std::vector<Rational> conic_stratum_minors(const Section222& s, int i) {
  QMatrix m = conic_matrix(s, i);
  std::vector<Rational> out;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) out.push_back(m(0, p) * m(1, q) - m(0, q) * m(1, p));
  return out;
}

QMatrix payoff_difference_matrix(const Game& g, int player) {
  const Format& f = g.format();
  int di = f[player], other = f[1 - player];
  QMatrix a(di - 1, other);
  for (int k = 1; k < di; ++k)
    for (int j = 0; j < other; ++j) {
      std::vector<int> hi(2), lo(2);
      hi[player] = 0;
      lo[player] = k;
      hi[1 - player] = lo[1 - player] = j;
      a(k - 1, j) = g.payoff(player).entry(MultiIndex(f, hi)) - g.payoff(player).entry(MultiIndex(f, lo));
    }
  return a;
}

// Payoff matrix of `player` with the opponent's strategies as rows and the
// player's own as columns, plus a final row of ones. pi^T Y = lambda 1^T is
// the indifference condition, so solutions are left kernel vectors.
QMatrix ones_row_matrix(const Game& g, int player) {
  const Format& f = g.format();
  int own = f[player], other = f[1 - player];
  QMatrix m(other + 1, own);
  for (int r = 0; r < other; ++r)
    for (int c = 0; c < own; ++c) {
      std::vector<int> j(2);
      j[player] = c;
      j[1 - player] = r;
      m(r, c) = g.payoff(player).entry(MultiIndex(f, j));
    }
  for (int c = 0; c < own; ++c) m(other, c) = 1;
  return m;
}

TwoPlayerRanks two_player_discriminant(const Game& g) {
  const Format& f = g.format();
  if (f.n() != 2 || f[0] != f[1]) throw FormatError("two_player_discriminant needs a square two-player format");
  TwoPlayerRanks r;
  r.rank1 = rank(payoff_difference_matrix(g, 0));
  r.rank2 = rank(payoff_difference_matrix(g, 1));
  r.member = std::min(r.rank1, r.rank2) <= f[0] - 2;
  return r;
}

TwoPlayerRanks two_player_discriminant_ones_row(const Game& g) {
  const Format& f = g.format();
  if (f.n() != 2 || f[0] != f[1]) throw FormatError("two_player_discriminant needs a square two-player format");
  TwoPlayerRanks r;
  r.rank1 = rank(ones_row_matrix(g, 0));
  r.rank2 = rank(ones_row_matrix(g, 1));
  r.member = std::min(r.rank1, r.rank2) <= f[0] - 1;
  return r;
}

Rational bilinear_pair_discriminant(const std::array<Rational, 4>& b1, const std::array<Rational, 4>& b2) {
  const Rational &c11 = b1[0], &c12 = b1[1], &c21 = b1[2], &c22 = b1[3];
  const Rational &e11 = b2[0], &e12 = b2[1], &e21 = b2[2], &e22 = b2[3];
  // b1 = 0 gives pi^(1) = (c21 u + c22 v, -(c11 u + c12 v)) with
  // (u, v) = pi^(2); b2 then becomes A u^2 + B u v + C v^2.
  Rational A = e11 * c21 - e21 * c11;
  Rational B = e11 * c22 + e12 * c21 - e21 * c12 - e22 * c11;
  Rational C = e12 * c22 - e22 * c12;
  return B * B - 4 * A * C;
}

Integer d1_degree(const Format& f) {
  if (f.classify() != FormatClass::Boundary) throw FormatError("d1_degree needs a boundary format");
  int m = f.max_index();
  auto fact = [](int k) {
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(k));
    return z;
  };
  int dn = f[m];
  Integer lead = fact(dn - 1);
  Integer sum = dn - 1;
  for (int i = 0; i < f.n(); ++i) {
    if (i == m) continue;
    lead /= fact(f[i] - 1);
    sum += Integer(f[i] - 1) * Integer(dn - f[i] - 1);
  }
  return lead * sum;
}

}  // namespace nashkit

namespace nashkit {

std::array<Rational, 4> bilinear_coefficients(const Game& g, int player, int k) {
  const Format& f = g.format();
  if (f.n() != 3) throw FormatError("bilinear coefficients need three players");
  if (k < 1 || k >= f[player]) throw DomainError("strategy index out of range");
  std::array<int, 2> others{};
  for (int q = 0, o = 0; q < 3; ++q)
    if (q != player) others[o++] = q;
  if (f[others[0]] != 2 || f[others[1]] != 2) throw FormatError("the other two players need two strategies");
  const PayoffTensor& t = g.payoff(player);
  std::array<Rational, 4> c;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<int> j(3);
      j[others[0]] = a;
      j[others[1]] = b;
      j[player] = 0;
      Rational hi = t.entry(MultiIndex(f, j));
      j[player] = k;
      c[2 * a + b] = hi - t.entry(MultiIndex(f, j));
    }
  return c;
}

}  // namespace nashkit
