#include "tracker.hpp"

#include <nashkit/errors.hpp>

#include <atomic>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

namespace nashkit {

void TrackerConfig::validate() const {
  if (!(min_step > 0 && min_step < initial_step && initial_step <= 0.1))
    throw DomainError("tracker steps must satisfy 0 < min_step < initial_step <= 0.1");
  if (max_newton < 1) throw DomainError("at least one Newton step is required");
  if (!(endgame_gap > 0 && endgame_gap < 1)) throw DomainError("endgame gap must lie in (0, 1)");
}

namespace {

int worker_count(const TrackerConfig& cfg, int paths) {
  int n = cfg.threads;
  if (n <= 0) {
    n = 1;
    if (const char* env = std::getenv("NASHKIT_THREADS")) n = std::max(1, std::atoi(env));
  }
  return std::max(1, std::min(n, paths));
}

Complex draw_gamma(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ULL);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

struct JacobianInfo {
  Eigen::MatrixXcd j;
  std::vector<int> cols;
  detail::ChartPoint cp;
};

JacobianInfo chart_jacobian(const MultilinearSystem& sys, const CPoint& p) {
  const Format& f = sys.format();
  JacobianInfo info;
  info.cp = detail::to_chart(f, p);
  info.cols = detail::free_columns(f, info.cp.pivots);
  Eigen::VectorXcd v;
  Eigen::MatrixXcd full;
  sys.evaluate(info.cp.x, v, &full);
  info.j.resize(sys.size(), static_cast<Eigen::Index>(info.cols.size()));
  for (std::size_t c = 0; c < info.cols.size(); ++c) info.j.col(static_cast<Eigen::Index>(c)) = full.col(info.cols[c]);
  return info;
}

// Gauss-Newton on F = 0, J v = 0, c.v = 1. Regular at a double root whose
// Jacobian has corank one, so it converges quadratically where plain Newton
// only creeps.
std::optional<CPoint> deflate(const MultilinearSystem& sys, const CPoint& p, double max_move) {
  const Format& f = sys.format();
  JacobianInfo info = chart_jacobian(sys, p);
  const int D = static_cast<int>(info.cols.size());
  const int m = sys.size();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd0(info.j, Eigen::ComputeFullV);
  Eigen::VectorXcd v = svd0.matrixV().col(D - 1);
  Eigen::RowVectorXcd c = v.adjoint();

  Eigen::VectorXcd x = info.cp.x, x0 = info.cp.x;
  Eigen::VectorXcd fv, full_v(f.vars());
  Eigen::MatrixXcd fj;
  for (int it = 0; it < 40; ++it) {
    sys.evaluate(x, fv, &fj);
    Eigen::MatrixXcd j(m, D);
    for (int k = 0; k < D; ++k) j.col(k) = fj.col(info.cols[k]);
    full_v.setZero();
    for (int k = 0; k < D; ++k) full_v[info.cols[k]] = v[k];
    Eigen::MatrixXcd hfull = sys.hessian_times(x, full_v);
    Eigen::MatrixXcd hv(m, D);
    for (int k = 0; k < D; ++k) hv.col(k) = hfull.col(info.cols[k]);

    Eigen::VectorXcd r(2 * m + 1);
    r << fv, j * v, (c * v)(0) - 1.0;
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(2 * m + 1, 2 * D);
    big.block(0, 0, m, D) = j;
    big.block(m, 0, m, D) = hv;
    big.block(m, D, m, D) = j;
    big.block(2 * m, D, 1, D) = c;
    Eigen::VectorXcd step = big.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) return std::nullopt;
    for (int k = 0; k < D; ++k) x[info.cols[k]] += step[k];
    v += step.segment(D, D);
    if (step.norm() < 1e-15) break;
  }
  if ((x - x0).norm() > max_move) return std::nullopt;
  return normalize_point(detail::to_groups(f, x));
}

Solution assemble(const MultilinearSystem& sys, CPoint p, const TrackerConfig& cfg) {
  Solution s;
  s.point = normalize_point(std::move(p));
  s.residual = detail::max_residual(sys, s.point);

  JacobianInfo info = chart_jacobian(sys, s.point);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(info.j);
  const auto& sv = svd.singularValues();
  const int D = static_cast<int>(sv.size());
  s.jacobian_rank = 0;
  for (int k = 0; k < D; ++k)
    if (sv(k) > cfg.rank_tol * sv(0)) ++s.jacobian_rank;
  s.condition = (D && sv(D - 1) > 0) ? 1.0 / sv(D - 1) : INFINITY;
  s.non_isolated_suspected = (D - s.jacobian_rank) >= 2;

  double worst_im = 0;
  for (const auto& g : s.point) worst_im = std::max(worst_im, g.imag().cwiseAbs().maxCoeff());
  s.is_real = worst_im < cfg.real_tol;
  if (s.is_real) {
    std::vector<std::vector<double>> rep;
    bool positive = true;
    for (const auto& g : s.point) {
      Eigen::VectorXd r = g.real();
      double sum = r.sum();
      std::vector<double> prob(static_cast<std::size_t>(r.size()));
      for (Eigen::Index k = 0; k < r.size(); ++k) {
        prob[k] = r[k] / sum;
        if (prob[k] <= cfg.positivity_tol) positive = false;
        if (std::abs(prob[k]) <= cfg.positivity_tol) s.borderline = true;
      }
      rep.push_back(std::move(prob));
    }
    if (positive) s.simplex_rep = std::move(rep);
  }
  return s;
}

}  // namespace

SolveResult solve(const Game& g, const TrackerConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const Format& f = g.format();
  if (f.classify() == FormatClass::Beyond)
    throw FormatError("format " + f.to_string() + " is beyond the boundary; generic games have no equilibria");

  EquilibriumSystem sys = build_system(g);
  MultilinearSystem target = MultilinearSystem::from(sys);
  StartSystem start = build_start_system(f, seed);
  MultilinearSystem start_sys = start.system();
  Complex gamma = cfg.gamma ? *cfg.gamma : draw_gamma(seed);

  const int paths = static_cast<int>(start.solutions.size());
  std::vector<detail::PathEnd> ends(static_cast<std::size_t>(paths));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int p = next++; p < paths; p = next++)
      ends[p] = detail::track_path(start_sys, target, gamma, start.solutions[p], cfg);
  };
  int workers = worker_count(cfg, paths);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SolveResult out;
  out.report.paths = paths;
  out.report.seed = start.seed;
  out.report.gamma = gamma;

  // Endpoints whose residual stays large did not reach a solution.
  for (int p = 0; p < paths; ++p) {
    auto& e = ends[p];
    out.report.steps += e.steps;
    if (e.ok && detail::max_residual(target, e.point) > 1e-6) {
      e.ok = false;
      e.reason = "endpoint residual too large";
    }
    if (!e.ok) {
      ++out.report.failed;
      out.report.failures.push_back({p, e.reason, e.t});
    }
  }
  if (paths > 0 && out.report.failed == paths) throw SolveError("every path failed");

  // Greedy clustering in path order keeps the result independent of
  // thread scheduling.
  std::vector<std::vector<int>> clusters;
  for (int p = 0; p < paths; ++p) {
    if (!ends[p].ok) continue;
    bool placed = false;
    for (auto& c : clusters) {
      if (projective_distance(ends[c.front()].point, ends[p].point) < cfg.cluster_radius) {
        c.push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({p});
  }

  for (const auto& c : clusters) {
    int best = c.front();
    double best_res = INFINITY;
    for (int p : c) {
      double r = detail::max_residual(target, ends[p].point);
      if (r < best_res) {
        best_res = r;
        best = p;
      }
    }
    Solution s = assemble(target, ends[best].point, cfg);
    int corank = f.D() - s.jacobian_rank;
    if ((c.size() > 1 || corank == 1) && corank <= 1) {
      if (auto refined = deflate(target, s.point, 10 * cfg.cluster_radius)) {
        Solution t = assemble(target, *refined, cfg);
        if (t.residual <= std::max(s.residual, 1e-14)) {
          s = std::move(t);
          s.deflated = true;
        }
      }
    }
    s.multiplicity = static_cast<int>(c.size());
    s.paths = c;
    out.solutions.push_back(std::move(s));
  }
  return out;
}

ConjugateCheck conjugate_pairs(const std::vector<Solution>& sols, double tol) {
  ConjugateCheck chk;
  std::vector<bool> used(sols.size(), false);
  for (std::size_t a = 0; a < sols.size(); ++a) {
    if (sols[a].is_real) continue;
    ++chk.nonreal;
    if (used[a]) continue;
    CPoint conj = sols[a].point;
    for (auto& g : conj) g = g.conjugate();
    for (std::size_t b = a + 1; b < sols.size(); ++b) {
      if (used[b] || sols[b].is_real) continue;
      if (projective_distance(conj, sols[b].point) < tol) {
        used[a] = used[b] = true;
        ++chk.pairs;
        break;
      }
    }
  }
  chk.complete = (2 * chk.pairs == chk.nonreal);
  return chk;
}

}  // namespace nashkit
