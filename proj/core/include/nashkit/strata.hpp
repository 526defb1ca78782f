#pragma once

#include <nashkit/game.hpp>
#include <nashkit/linalg.hpp>
#include <nashkit/section222.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace nashkit {

enum class SchemeType { FINITE, CUB, CON, LIN, LL, CL, LLL, THREE_L, QL, SCR, QQ, WHOLE };

std::string to_string(SchemeType t);
// Rank of Phi_f attached to each type.
int expected_phi_rank(SchemeType t);

// det of the symmetric 6x6 matrix with zero diagonal 2x2 blocks and the
// coefficient matrices of f off the diagonal.
QMatrix theta_matrix(const Section222& s);
Rational theta_det(const Section222& s);

// Matrix of (L, M, N) -> L f1 + M f2 + N f3. Rows: pi^(1)_l f1, pi^(2)_m f2,
// pi^(3)_n f3; columns: monomials pi^(1)_i pi^(2)_j pi^(3)_k, index 4i+2j+k.
QMatrix phi_matrix(const Section222& s);
int phi_rank(const Section222& s);

enum class FormKind { Zero, Irreducible, Reducible };

struct Classification {
  SchemeType type = SchemeType::FINITE;
  int phi_rank = 0;
  Rational theta_det;
  std::array<FormKind, 3> forms{};
  // Pairs of reducible forms sharing a linear factor (zero-based players).
  std::vector<std::pair<int, int>> shared;
  // Player whose form singles out the case (the zero form, the odd one out).
  std::optional<int> distinguished;
  std::string note;
};

// Full case analysis; throws InternalInvariantViolation when it disagrees
// with the rank of Phi_f.
Classification classify(const Section222& s);

// Six 2x2 minors of the 2x4 matrix of the two foreign forms, both read as
// maps out of pi^(i) (zero-based i). Column pairs in order 01,02,03,12,13,23.
QMatrix conic_matrix(const Section222& s, int i);
std::vector<Rational> conic_stratum_minors(const Section222& s, int i);

// Equations of the line stratum for distinguished player i: Q_1, Q_2 are the
// determinants of the foreign forms, F_ab evaluates f^(i) at the points cut
// out by slice a of the later form and slice b of the earlier one.
struct LineStratum {
  Rational Q1, Q2;
  std::array<std::array<Rational, 2>, 2> F{};
  std::array<std::array<bool, 2>, 2> defined{};  // both slices nonzero

  bool member() const;
};
LineStratum line_stratum_equations(const Section222& s, int i);

// Two-player game: rows k = 2..d_i, columns the opponent's strategies,
// entries x^(i)_(1,j) - x^(i)_(k,j).
QMatrix payoff_difference_matrix(const Game& g, int player);
// Opponent strategies as rows, own strategies as columns, then a row of ones.
QMatrix ones_row_matrix(const Game& g, int player);

// Square two-player game: ranks of the (d-1) x d payoff-difference matrices.
struct TwoPlayerRanks {
  int rank1 = 0;  // player 1's equations (in pi^(2))
  int rank2 = 0;  // player 2's equations (in pi^(1))
  bool member = false;
};
TwoPlayerRanks two_player_discriminant(const Game& g);
// Same question through the payoff matrices with a row of ones appended:
// member iff one of them has rank <= d - 1.
TwoPlayerRanks two_player_discriminant_ones_row(const Game& g);

// Coefficients {c11, c12, c21, c22} of b = sum c_ab pi^(1)_a pi^(2)_b.
// Discriminant of the binary quadratic obtained by solving b1 = 0 for one
// group and substituting into b2.
Rational bilinear_pair_discriminant(const std::array<Rational, 4>& b1, const std::array<Rational, 4>& b2);

// Coefficients of Delta f^(i)_{1,k+1} in a three-player game whose other two
// players have two strategies each; c_ab multiplies the a-th coordinate of the
// earlier group and the b-th of the later one.
std::array<Rational, 4> bilinear_coefficients(const Game& g, int player, int k);

// Degree of the hypersurface component D_1 for a boundary format.
Integer d1_degree(const Format& f);

}  // namespace nashkit
