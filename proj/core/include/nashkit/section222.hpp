#pragma once

#include <nashkit/game.hpp>
#include <nashkit/linalg.hpp>

#include <array>

namespace nashkit {

// Global section of a (2,2,2) game: a[i] holds the coefficients of
// f^(i+1) = Delta f^(i+1)_{1,2}. Rows and columns follow the two remaining
// groups in increasing order, so a[0] is (pi^(2), pi^(3)), a[1] is
// (pi^(1), pi^(3)) and a[2] is (pi^(1), pi^(2)).
struct Section222 {
  std::array<QMatrix, 3> a{QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2)};

  static Section222 from_game(const Game& g);
  // From row-major coefficient lists {a11, a12, a21, a22}.
  static Section222 from_coefficients(const std::array<std::array<Rational, 4>, 3>& c);

  // Value of f^(i+1) at coordinates of its two groups (row group first).
  Rational eval(int i, const std::vector<Rational>& row, const std::vector<Rational>& col) const;
  bool is_zero(int i) const;
  Rational det(int i) const;
  Section222 scaled(const Rational& lambda) const;
};

}  // namespace nashkit
