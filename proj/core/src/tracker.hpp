#pragma once

#include <nashkit/homotopy.hpp>

#include <string>
#include <vector>

namespace nashkit::detail {

// Flat homogeneous vector plus the pivot of each group.
struct ChartPoint {
  Eigen::VectorXcd x;
  std::vector<int> pivots;
};

ChartPoint to_chart(const Format& f, const CPoint& p);
CPoint to_groups(const Format& f, const Eigen::VectorXcd& x);
// Moves every pivot to the largest coordinate of its group.
void rechart(const Format& f, ChartPoint& cp);
// Columns of the non-pivot coordinates.
std::vector<int> free_columns(const Format& f, const std::vector<int>& pivots);

struct PathEnd {
  bool ok = false;
  CPoint point;
  std::string reason;
  double t = 0;
  int steps = 0;
};

PathEnd track_path(const MultilinearSystem& start, const MultilinearSystem& target, Complex gamma, const CPoint& x0,
                   const TrackerConfig& cfg);

// Newton on the target at t = 1, least squares through a truncated SVD.
ChartPoint endgame_newton(const MultilinearSystem& target, ChartPoint cp, int iterations);

double max_residual(const MultilinearSystem& sys, const CPoint& p);

}  // namespace nashkit::detail
