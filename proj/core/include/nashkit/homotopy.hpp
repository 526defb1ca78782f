#pragma once

#include <nashkit/counting.hpp>
#include <nashkit/eqsystem.hpp>
#include <nashkit/game.hpp>
#include <nashkit/section222.hpp>

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nashkit {

using Complex = std::complex<double>;
// Homogeneous coordinates, one vector per group.
using CPoint = std::vector<Eigen::VectorXcd>;

// Equation whose terms are products of one coordinate from every group
// except `skip`.
struct MultilinearEquation {
  struct Term {
    Complex coef;
    std::vector<int> idx;  // coordinate per group, -1 at `skip`
  };
  int skip = 0;
  std::vector<Term> terms;
};

class MultilinearSystem {
 public:
  MultilinearSystem() = default;
  MultilinearSystem(Format f, std::vector<MultilinearEquation> eqs);
  static MultilinearSystem from(const EquilibriumSystem& sys);

  const Format& format() const { return fmt_; }
  int size() const { return static_cast<int>(eqs_.size()); }
  const std::vector<MultilinearEquation>& equations() const { return eqs_; }

  // x is the concatenated homogeneous vector (length sum d_i). jac, if
  // given, receives derivatives with respect to every coordinate.
  void evaluate(const Eigen::VectorXcd& x, Eigen::VectorXcd& f, Eigen::MatrixXcd* jac) const;
  // Row r, column c: sum_b d^2 F_r / dx_c dx_b * v_b.
  Eigen::MatrixXcd hessian_times(const Eigen::VectorXcd& x, const Eigen::VectorXcd& v) const;

 private:
  Format fmt_;
  std::vector<MultilinearEquation> eqs_;
};

struct StartSystem {
  Format format;
  std::uint64_t seed = 0;  // seed that produced the accepted draw
  int redraws = 0;
  // forms[e][k]: linear form l^(i)_{j,k} for the e-th element (i, j) of F;
  // empty when k == i.
  std::vector<std::vector<Eigen::VectorXcd>> forms;
  std::vector<BlockDerangement> derangements;
  std::vector<CPoint> solutions;  // parallel to derangements

  // The start equations prod_{k != i} l^(i)_{j,k}(pi^(k)), expanded.
  MultilinearSystem system() const;
};

StartSystem build_start_system(const Format& f, std::uint64_t seed);

struct TrackerConfig {
  double initial_step = 0.05;
  double min_step = 1e-14;
  double max_step = 0.1;
  int max_newton = 3;
  double corrector_tol = 1e-11;
  int max_steps = 200000;
  double divergence_bound = 1e8;
  // Paths are tracked to 1 - endgame_gap, then Newton at t = 1 finishes.
  double endgame_gap = 1e-8;
  int endgame_newton = 80;
  double cluster_radius = 1e-6;
  double positivity_tol = 1e-9;
  double real_tol = 1e-8;
  // Singular values below rank_tol * sigma_max count as zero.
  double rank_tol = 1e-7;
  std::optional<Complex> gamma;  // drawn from the seed when absent
  int threads = 0;               // 0: use NASHKIT_THREADS, default 1

  void validate() const;
};

struct Solution {
  CPoint point;  // unit norm per group, largest coordinate real positive
  double residual = 0;
  int multiplicity = 1;
  bool is_real = false;
  std::optional<std::vector<std::vector<double>>> simplex_rep;
  bool borderline = false;  // real, but some coordinate within positivity_tol of 0
  double condition = 0;     // norm of the inverse chart Jacobian
  int jacobian_rank = 0;
  bool non_isolated_suspected = false;
  bool deflated = false;
  std::vector<int> paths;  // indices of the paths ending here

  bool totally_mixed() const { return simplex_rep.has_value(); }
};

struct PathFailure {
  int path = 0;
  std::string reason;
  double t = 0;
};

struct TrackReport {
  int paths = 0;
  int failed = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  Complex gamma;
  std::vector<PathFailure> failures;
};

struct SolveResult {
  std::vector<Solution> solutions;
  TrackReport report;
};

SolveResult solve(const Game& g, const TrackerConfig& cfg = {}, std::uint64_t seed = 1);

// Projective distance between points: max over groups of the sine of the
// angle between the coordinate vectors.
double projective_distance(const CPoint& a, const CPoint& b);
CPoint normalize_point(CPoint p);
// Number of disjoint pairs of nonreal solutions that are conjugate within tol,
// and whether every nonreal solution found a partner.
struct ConjugateCheck {
  int pairs = 0;
  int nonreal = 0;
  bool complete = false;
};
ConjugateCheck conjugate_pairs(const std::vector<Solution>& sols, double tol = 1e-6);

// Exact two-player solver.
struct TwoPlayerResult {
  enum class Kind { Unique, PositiveDimensional, Empty };
  Kind kind = Kind::Empty;
  // point[0] solves player 2's equations (pi^(1)), point[1] player 1's.
  std::vector<std::vector<Rational>> point;
  bool totally_mixed = false;
  std::vector<Solution> solutions;  // numeric view of the unique point
};

TwoPlayerResult solve_two_player(const Game& g);

// Exact (2,2,2) reduction to a binary quadratic in pi^(3).
struct Quadratic222 {
  enum class Kind { TwoSimple, Double, PositiveDimensional };
  Kind kind = Kind::PositiveDimensional;
  // q(s, t) = A s^2 + B s t + C t^2 with (s, t) = (pi^(3)_1, pi^(3)_2).
  Rational A, B, C;
  Rational discriminant;
  // Roots [s:t]; exact when rational.
  std::vector<Eigen::VectorXcd> roots_pi3;
  std::vector<std::optional<std::vector<Rational>>> exact_roots;
  // Reconstructed equilibrium scheme points; a root whose fibre is not a
  // single point is skipped and counted in fibre_failures.
  std::vector<CPoint> points;
  std::vector<std::optional<std::vector<std::vector<Rational>>>> exact_points;
  int fibre_failures = 0;
};

Quadratic222 solve_222_exact(const Game& g);
Quadratic222 solve_222_exact(const Section222& s);

}  // namespace nashkit
