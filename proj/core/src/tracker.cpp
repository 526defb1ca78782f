#include "tracker.hpp"

#include <cmath>

namespace nashkit::detail {

ChartPoint to_chart(const Format& f, const CPoint& p) {
  ChartPoint cp;
  cp.x.resize(f.vars());
  for (int g = 0; g < f.n(); ++g) cp.x.segment(f.offset(g), f[g]) = p[g];
  cp.pivots.assign(static_cast<std::size_t>(f.n()), 0);
  rechart(f, cp);
  return cp;
}

CPoint to_groups(const Format& f, const Eigen::VectorXcd& x) {
  CPoint p(static_cast<std::size_t>(f.n()));
  for (int g = 0; g < f.n(); ++g) p[g] = x.segment(f.offset(g), f[g]);
  return p;
}

void rechart(const Format& f, ChartPoint& cp) {
  for (int g = 0; g < f.n(); ++g) {
    auto seg = cp.x.segment(f.offset(g), f[g]);
    Eigen::Index best = 0;
    seg.cwiseAbs().maxCoeff(&best);
    Complex piv = seg[best];
    if (piv != Complex(0.0)) seg /= piv;
    seg[best] = 1.0;
    cp.pivots[g] = static_cast<int>(best);
  }
}

std::vector<int> free_columns(const Format& f, const std::vector<int>& pivots) {
  std::vector<int> cols;
  for (int g = 0; g < f.n(); ++g)
    for (int v = 0; v < f[g]; ++v)
      if (v != pivots[g]) cols.push_back(f.offset(g) + v);
  return cols;
}

namespace {

class Homotopy {
 public:
  Homotopy(const MultilinearSystem& g, const MultilinearSystem& f, Complex gamma) : g_(g), f_(f), gamma_(gamma) {}

  // H, dH/dy (free columns only) and dH/dt at (x, t).
  void eval(const Eigen::VectorXcd& x, double t, const std::vector<int>& cols, Eigen::VectorXcd& h,
            Eigen::MatrixXcd& hy, Eigen::VectorXcd& ht) {
    g_.evaluate(x, gv_, &gj_);
    f_.evaluate(x, fv_, &fj_);
    Complex a = gamma_ * (1.0 - t);
    h = a * gv_ + t * fv_;
    ht = fv_ - gamma_ * gv_;
    hy.resize(h.size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) hy.col(static_cast<Eigen::Index>(c)) = a * gj_.col(cols[c]) + t * fj_.col(cols[c]);
  }

 private:
  const MultilinearSystem& g_;
  const MultilinearSystem& f_;
  Complex gamma_;
  Eigen::VectorXcd gv_, fv_;
  Eigen::MatrixXcd gj_, fj_;
};

void add_free(Eigen::VectorXcd& x, const std::vector<int>& cols, const Eigen::VectorXcd& dy, Complex scale) {
  for (std::size_t c = 0; c < cols.size(); ++c) x[cols[c]] += scale * dy[static_cast<Eigen::Index>(c)];
}

bool finite(const Eigen::VectorXcd& v) { return v.allFinite(); }

}  // namespace

PathEnd track_path(const MultilinearSystem& start, const MultilinearSystem& target, Complex gamma, const CPoint& x0,
                   const TrackerConfig& cfg) {
  const Format& f = target.format();
  Homotopy hom(start, target, gamma);
  PathEnd end;
  ChartPoint cp = to_chart(f, x0);
  const double t_end = 1.0 - cfg.endgame_gap;
  double t = 0.0;
  double h = cfg.initial_step;
  int streak = 0;

  Eigen::VectorXcd hv, ht, k1, k2, k3, k4, xs, dy;
  Eigen::MatrixXcd hy;
  std::vector<int> cols = free_columns(f, cp.pivots);

  auto velocity = [&](const Eigen::VectorXcd& x, double tt, Eigen::VectorXcd& out) {
    hom.eval(x, tt, cols, hv, hy, ht);
    out = hy.partialPivLu().solve(-ht);
    return finite(out);
  };

  while (t < t_end) {
    if (end.steps >= cfg.max_steps) {
      end.reason = "step budget exhausted";
      end.t = t;
      return end;
    }
    ++end.steps;
    rechart(f, cp);
    cols = free_columns(f, cp.pivots);
    double step = std::min(h, t_end - t);

    bool ok = velocity(cp.x, t, k1);
    if (ok) {
      xs = cp.x;
      add_free(xs, cols, k1, step / 2);
      ok = velocity(xs, t + step / 2, k2);
    }
    if (ok) {
      xs = cp.x;
      add_free(xs, cols, k2, step / 2);
      ok = velocity(xs, t + step / 2, k3);
    }
    if (ok) {
      xs = cp.x;
      add_free(xs, cols, k3, step);
      ok = velocity(xs, t + step, k4);
    }
    if (ok) {
      xs = cp.x;
      add_free(xs, cols, k1 + 2.0 * k2 + 2.0 * k3 + k4, step / 6);
      // Corrector: Newton must converge and contract.
      ok = false;
      double prev = INFINITY;
      for (int it = 0; it < cfg.max_newton; ++it) {
        hom.eval(xs, t + step, cols, hv, hy, ht);
        dy = hy.partialPivLu().solve(-hv);
        if (!finite(dy)) break;
        add_free(xs, cols, dy, 1.0);
        double nd = dy.norm();
        if (nd > 0.5 * prev && nd > cfg.corrector_tol) break;
        prev = nd;
        if (nd <= cfg.corrector_tol) {
          ok = true;
          break;
        }
      }
    }

    if (ok) {
      cp.x = xs;
      t += step;
      if (++streak >= 4) {
        h = std::min(2 * h, cfg.max_step);
        streak = 0;
      }
      double scale = 0;
      for (int c : cols) scale = std::max(scale, std::abs(cp.x[c]));
      if (scale > cfg.divergence_bound) {
        end.reason = "diverged";
        end.t = t;
        return end;
      }
    } else {
      h /= 2;
      streak = 0;
      if (h < cfg.min_step) {
        end.reason = "step underflow";
        end.t = t;
        return end;
      }
    }
  }

  rechart(f, cp);
  cp = endgame_newton(target, cp, cfg.endgame_newton);
  if (!cp.x.allFinite()) {
    end.reason = "non-finite endpoint";
    end.t = 1.0;
    return end;
  }
  end.ok = true;
  end.t = 1.0;
  end.point = normalize_point(to_groups(f, cp.x));
  return end;
}

ChartPoint endgame_newton(const MultilinearSystem& target, ChartPoint cp, int iterations) {
  const Format& f = target.format();
  std::vector<int> cols = free_columns(f, cp.pivots);
  Eigen::VectorXcd fv;
  Eigen::MatrixXcd fj, j(target.size(), static_cast<Eigen::Index>(cols.size()));
  ChartPoint best = cp;
  target.evaluate(cp.x, fv, nullptr);
  double best_res = fv.norm();
  for (int it = 0; it < iterations && best_res > 0; ++it) {
    target.evaluate(cp.x, fv, &fj);
    for (std::size_t c = 0; c < cols.size(); ++c) j.col(static_cast<Eigen::Index>(c)) = fj.col(cols[c]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-13);
    Eigen::VectorXcd dy = svd.solve(-fv);
    if (!dy.allFinite()) break;
    add_free(cp.x, cols, dy, 1.0);
    target.evaluate(cp.x, fv, nullptr);
    double res = fv.norm();
    if (res < best_res) {
      best_res = res;
      best = cp;
    }
    if (dy.norm() < 1e-15) break;
  }
  return best;
}

double max_residual(const MultilinearSystem& sys, const CPoint& p) {
  const Format& f = sys.format();
  Eigen::VectorXcd x(f.vars()), v;
  for (int g = 0; g < f.n(); ++g) x.segment(f.offset(g), f[g]) = p[g];
  sys.evaluate(x, v, nullptr);
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace nashkit::detail
