#include <nashkit/errors.hpp>
#include <nashkit/linalg.hpp>

namespace nashkit {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Rational inv = 1 / m(r, c);
    for (int k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (int q = 0; q < m.rows(); ++q) {
      if (q == r || sgn(m(q, c)) == 0) continue;
      Rational f = m(q, c);
      for (int k = c; k < m.cols(); ++k) m(q, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw FormatError("determinant of a non-square matrix");
  int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (int q = c + 1; q < n; ++q) {
      if (sgn(m(q, c)) == 0) continue;
      Rational f = m(q, c) / m(c, c);
      for (int k = c; k < n; ++k) m(q, k) -= f * m(c, k);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(QMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nashkit
