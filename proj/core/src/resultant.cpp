#include <nashkit/errors.hpp>
#include <nashkit/resultant.hpp>
#include <nashkit/strata.hpp>

#include <functional>
#include <unordered_map>

namespace nashkit {
namespace {

Integer factorial(int k) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(k));
  return z;
}

// Exponent vectors of length d with sum e, largest first in lex order.
std::vector<std::vector<int>> monomials(int d, int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == d - 1) {
      cur[v] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[v] = k;
      rec(v + 1, left - k);
    }
  };
  rec(0, e);
  return out;
}

// Products of per-group monomial lists, first group slowest.
std::vector<std::vector<int>> product_basis(const std::vector<std::vector<std::vector<int>>>& per_group) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& group : per_group) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (const auto& m : group) {
        auto v = prefix;
        v.insert(v.end(), m.begin(), m.end());
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

ResultantProfile resultant_profile(const Format& f) {
  if (f.classify() != FormatClass::Beyond) throw FormatError("resultant profile needs a beyond-boundary format");
  ResultantProfile p;
  p.format = f;
  p.distinguished = f.max_index();
  int dn = f[p.distinguished];
  p.codim = dn - 1;
  Integer denom = 1;
  for (int i = 0; i < f.n(); ++i) {
    if (i == p.distinguished) continue;
    p.codim -= f[i] - 1;
    denom *= factorial(f[i] - 1);
  }
  denom *= factorial(p.codim);
  p.degree = factorial(dn - 1) / denom;
  return p;
}

PartialXLayout partial_x_layout(const Format& f) {
  ResultantProfile prof = resultant_profile(f);
  if (prof.codim != 1) throw FormatError("the partial_X matrix is square only in codimension one");
  PartialXLayout lay;
  lay.format = f;
  lay.distinguished = prof.distinguished;
  int acc = 0;
  std::vector<std::vector<std::vector<int>>> row_groups, col_groups;
  for (int i = 0; i < f.n(); ++i) {
    if (i == prof.distinguished) continue;
    lay.others.push_back(i);
    lay.e.push_back(acc);
    row_groups.push_back(monomials(f[i], acc + 1));
    col_groups.push_back(monomials(f[i], acc));
    acc += f[i] - 1;
  }
  lay.rows = product_basis(row_groups);
  auto cols = product_basis(col_groups);
  for (int k = 0; k < f[prof.distinguished] - 1; ++k)
    for (const auto& c : cols) {
      lay.columns.push_back(c);
      lay.column_copy.push_back(k);
    }
  if (lay.rows.size() != lay.columns.size()) throw InternalInvariantViolation("partial_X is not square");
  return lay;
}

namespace {

// For each (row, column): the multi-index j_{-n} with R = G * pi_j, or
// nothing when R / G is not a multilinear monomial.
template <class Emit>
void walk_partial_x(const PartialXLayout& lay, Emit emit) {
  const Format& f = lay.format;
  for (std::size_t r = 0; r < lay.rows.size(); ++r) {
    for (std::size_t c = 0; c < lay.columns.size(); ++c) {
      std::vector<int> j(static_cast<std::size_t>(f.n()), 0);
      bool ok = true;
      int pos = 0;
      for (std::size_t g = 0; g < lay.others.size() && ok; ++g) {
        int player = lay.others[g];
        int hit = -1;
        for (int v = 0; v < f[player]; ++v, ++pos) {
          int diff = lay.rows[r][pos] - lay.columns[c][pos];
          if (diff < 0 || diff > 1 || (diff == 1 && hit >= 0)) ok = false;
          if (diff == 1) hit = v;
        }
        if (hit < 0) ok = false;
        j[player] = hit;
      }
      if (ok) emit(static_cast<int>(r), static_cast<int>(c), j, lay.column_copy[c] + 1);
    }
  }
}

}  // namespace

Matrix<Polynomial<Rational>> build_partial_x_symbolic(const Format& f) {
  PartialXLayout lay = partial_x_layout(f);
  int nv = static_cast<int>(f.cells());
  int size = static_cast<int>(lay.rows.size());
  Matrix<Polynomial<Rational>> m(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) m(r, c) = Polynomial<Rational>(nv);
  walk_partial_x(lay, [&](int r, int c, std::vector<int> j, int k) {
    j[lay.distinguished] = 0;
    auto hi = Polynomial<Rational>::variable(nv, static_cast<int>(MultiIndex(f, j).linear()));
    j[lay.distinguished] = k;
    auto lo = Polynomial<Rational>::variable(nv, static_cast<int>(MultiIndex(f, j).linear()));
    m(r, c) = hi - lo;
  });
  return m;
}

QMatrix build_partial_x(const Game& g) {
  const Format& f = g.format();
  PartialXLayout lay = partial_x_layout(f);
  int size = static_cast<int>(lay.rows.size());
  QMatrix m(size, size);
  const PayoffTensor& t = g.payoff(lay.distinguished);
  walk_partial_x(lay, [&](int r, int c, std::vector<int> j, int k) {
    j[lay.distinguished] = 0;
    Rational hi = t.entry(MultiIndex(f, j));
    j[lay.distinguished] = k;
    m(r, c) = hi - t.entry(MultiIndex(f, j));
  });
  return m;
}

Rational partial_x_det(const Game& g) { return determinant(build_partial_x(g)); }

Polynomial<Rational> symbolic_determinant(const Matrix<Polynomial<Rational>>& m) {
  const int n = m.rows();
  if (n != m.cols()) throw FormatError("determinant of a non-square matrix");
  if (n > 24) throw FormatError("symbolic determinant refused above order 24");
  int nv = n ? m(0, 0).nvars() : 0;
  std::unordered_map<std::uint32_t, Polynomial<Rational>> memo;
  // Determinant of rows [n - |cols|, n) restricted to the columns in mask.
  std::function<Polynomial<Rational>(std::uint32_t)> minor = [&](std::uint32_t mask) -> Polynomial<Rational> {
    if (mask == 0) return Polynomial<Rational>::constant(nv, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(mask);
    Polynomial<Rational> acc(nv);
    int sign_pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      if (!m(row, c).is_zero()) {
        Polynomial<Rational> term = m(row, c) * minor(mask & ~(1U << c));
        if (sign_pos % 2) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      ++sign_pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(n == 32 ? 0xFFFFFFFFU : ((1U << n) - 1));
}

ResultantExpansion nash_resultant_expand(const Format& f) {
  auto m = build_partial_x_symbolic(f);
  ResultantExpansion out;
  out.order = m.rows();
  out.det = symbolic_determinant(m);
  out.terms = out.det.size();
  out.degree = out.det.total_degree();
  return out;
}

TwoPlayerResultant two_player_resultant_tests(const Game& g) {
  const Format& f = g.format();
  if (f.n() != 2 || f[0] == f[1]) throw FormatError("two-player resultant tests need d1 != d2");
  int big = f[1] > f[0] ? 1 : 0;
  int small = f[1 - big];
  TwoPlayerResultant r;
  r.difference_rank = rank(payoff_difference_matrix(g, big));
  r.ones_row_rank = rank(ones_row_matrix(g, big));
  r.difference_member = r.difference_rank <= small - 1;
  r.ones_row_member = r.ones_row_rank <= small;
  return r;
}

}  // namespace nashkit
