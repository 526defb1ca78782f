#pragma once

#include <nashkit/game.hpp>
#include <nashkit/linalg.hpp>
#include <nashkit/polynomial.hpp>

#include <vector>

namespace nashkit {

// Profile of the Nash resultant variety for a beyond-boundary format. The
// player with the largest d_i (last on ties) plays the role of player n.
struct ResultantProfile {
  Format format;
  int distinguished = 0;
  int codim = 0;
  Integer degree;
};

ResultantProfile resultant_profile(const Format& f);

// Matrix of the map (G_1, ..., G_{dn-1}) -> sum_k Delta f^(n)_{1,k+1} G_k.
// Rows: monomials of prod Sym^{e_i+1}; columns: (k, monomial of prod Sym^{e_i}),
// k slowest. Groups in player order, graded lex inside a group.
struct PartialXLayout {
  Format format;
  int distinguished = 0;
  std::vector<int> others;                // players other than the distinguished one
  std::vector<int> e;                     // e_i per entry of `others`
  std::vector<std::vector<int>> rows;     // concatenated exponents over `others`
  std::vector<std::vector<int>> columns;  // monomial exponents
  std::vector<int> column_copy;           // k - 1 for each column (zero-based copy)
};

PartialXLayout partial_x_layout(const Format& f);

// Symbolic matrix over Q[x^(n)_j] with variable index = linear index of j.
Matrix<Polynomial<Rational>> build_partial_x_symbolic(const Format& f);
QMatrix build_partial_x(const Game& g);
Rational partial_x_det(const Game& g);

// Determinant by Laplace expansion along the first row, memoised on the
// remaining column set. Orders above 24 are refused.
Polynomial<Rational> symbolic_determinant(const Matrix<Polynomial<Rational>>& m);

struct ResultantExpansion {
  int order = 0;
  std::size_t terms = 0;
  int degree = 0;
  Polynomial<Rational> det;
};

ResultantExpansion nash_resultant_expand(const Format& f);

// Two-player beyond-boundary membership, computed two ways. The larger
// player's equations in the smaller player's strategy decide.
struct TwoPlayerResultant {
  int difference_rank = 0;  // (d2-1) x d1 payoff-difference matrix
  int ones_row_rank = 0;    // (d1+1) x d2 payoff matrix plus a row of ones
  bool difference_member = false;
  bool ones_row_member = false;
};

TwoPlayerResultant two_player_resultant_tests(const Game& g);

}  // namespace nashkit
