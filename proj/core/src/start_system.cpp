#include <nashkit/errors.hpp>
#include <nashkit/homotopy.hpp>

#include <random>

namespace nashkit {

MultilinearSystem::MultilinearSystem(Format f, std::vector<MultilinearEquation> eqs)
    : fmt_(std::move(f)), eqs_(std::move(eqs)) {}

MultilinearSystem MultilinearSystem::from(const EquilibriumSystem& sys) {
  const Format& f = sys.format;
  std::vector<MultilinearEquation> eqs;
  for (int r = 0; r < sys.size(); ++r) {
    MultilinearEquation eq;
    eq.skip = sys.labels[r].player;
    for (const auto& [e, c] : sys.equations[r].terms()) {
      MultilinearEquation::Term term{Complex(c.get_d(), 0.0), std::vector<int>(static_cast<std::size_t>(f.n()), -1)};
      for (int g = 0; g < f.n(); ++g)
        for (int v = 0; v < f[g]; ++v)
          if (e[static_cast<std::size_t>(f.offset(g) + v)] != 0) term.idx[g] = v;
      eq.terms.push_back(std::move(term));
    }
    eqs.push_back(std::move(eq));
  }
  return MultilinearSystem(f, std::move(eqs));
}

void MultilinearSystem::evaluate(const Eigen::VectorXcd& x, Eigen::VectorXcd& f, Eigen::MatrixXcd* jac) const {
  const int n = fmt_.n();
  f.setZero(size());
  if (jac) jac->setZero(size(), fmt_.vars());
  std::vector<Complex> val(static_cast<std::size_t>(n)), pre(static_cast<std::size_t>(n + 1)),
      suf(static_cast<std::size_t>(n + 1));
  for (int r = 0; r < size(); ++r) {
    const auto& eq = eqs_[r];
    for (const auto& t : eq.terms) {
      for (int g = 0; g < n; ++g) val[g] = (g == eq.skip) ? Complex(1.0) : x[fmt_.offset(g) + t.idx[g]];
      pre[0] = 1.0;
      for (int g = 0; g < n; ++g) pre[g + 1] = pre[g] * val[g];
      f[r] += t.coef * pre[n];
      if (!jac) continue;
      suf[n] = 1.0;
      for (int g = n - 1; g >= 0; --g) suf[g] = suf[g + 1] * val[g];
      for (int g = 0; g < n; ++g) {
        if (g == eq.skip) continue;
        (*jac)(r, fmt_.offset(g) + t.idx[g]) += t.coef * pre[g] * suf[g + 1];
      }
    }
  }
}

Eigen::MatrixXcd MultilinearSystem::hessian_times(const Eigen::VectorXcd& x, const Eigen::VectorXcd& v) const {
  const int n = fmt_.n();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(size(), fmt_.vars());
  for (int r = 0; r < size(); ++r) {
    const auto& eq = eqs_[r];
    for (const auto& t : eq.terms) {
      for (int g = 0; g < n; ++g) {
        if (g == eq.skip) continue;
        for (int k = 0; k < n; ++k) {
          if (k == eq.skip || k == g) continue;
          Complex p = t.coef * v[fmt_.offset(k) + t.idx[k]];
          for (int l = 0; l < n; ++l)
            if (l != eq.skip && l != g && l != k) p *= x[fmt_.offset(l) + t.idx[l]];
          h(r, fmt_.offset(g) + t.idx[g]) += p;
        }
      }
    }
  }
  return h;
}

MultilinearSystem StartSystem::system() const {
  const Format& f = format;
  std::vector<MultilinearEquation> eqs;
  for (std::size_t e = 0; e < forms.size(); ++e) {
    MultilinearEquation eq;
    for (int k = 0; k < f.n(); ++k)
      if (forms[e][k].size() == 0) eq.skip = k;
    std::vector<int> idx(static_cast<std::size_t>(f.n()), 0);
    idx[eq.skip] = -1;
    while (true) {
      Complex c = 1.0;
      for (int k = 0; k < f.n(); ++k)
        if (k != eq.skip) c *= forms[e][k][idx[k]];
      eq.terms.push_back({c, idx});
      int k = f.n() - 1;
      for (; k >= 0; --k) {
        if (k == eq.skip) continue;
        if (++idx[k] < f[k]) break;
        idx[k] = 0;
      }
      if (k < 0) break;
    }
    eqs.push_back(std::move(eq));
  }
  return MultilinearSystem(f, std::move(eqs));
}

namespace {

constexpr int kMaxRedraws = 8;

bool try_draw(StartSystem& s, std::uint64_t seed) {
  const Format& f = s.format;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  s.forms.clear();
  for (int i = 0; i < f.n(); ++i) {
    for (int j = 0; j < f[i] - 1; ++j) {
      std::vector<Eigen::VectorXcd> per_group(static_cast<std::size_t>(f.n()));
      for (int k = 0; k < f.n(); ++k) {
        if (k == i) continue;
        per_group[k].resize(f[k]);
        for (int v = 0; v < f[k]; ++v) {
          double re = normal(rng);
          double im = normal(rng);
          per_group[k][v] = Complex(re, im) / std::sqrt(2.0);
        }
      }
      s.forms.push_back(std::move(per_group));
    }
  }

  s.solutions.clear();
  for (const auto& a : s.derangements) {
    CPoint pt(static_cast<std::size_t>(f.n()));
    for (int k = 0; k < f.n(); ++k) {
      Eigen::MatrixXcd rows(f[k] - 1, f[k]);
      int r = 0;
      for (int e = 0; e < static_cast<int>(a.assignment.size()); ++e)
        if (a.assignment[e] == k) rows.row(r++) = s.forms[e][k].transpose();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rows, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      if (sv(sv.size() - 1) < 1e-10 * sv(0)) return false;  // kernel dimension above 1
      pt[k] = svd.matrixV().col(f[k] - 1);
    }
    s.solutions.push_back(normalize_point(std::move(pt)));
  }

  MultilinearSystem sys = s.system();
  Eigen::VectorXcd x(f.vars()), val;
  for (const auto& pt : s.solutions) {
    for (int k = 0; k < f.n(); ++k) x.segment(f.offset(k), f[k]) = pt[k];
    sys.evaluate(x, val, nullptr);
    if (val.cwiseAbs().maxCoeff() >= 1e-12) return false;
  }
  for (std::size_t p = 0; p < s.solutions.size(); ++p)
    for (std::size_t q = p + 1; q < s.solutions.size(); ++q)
      if (projective_distance(s.solutions[p], s.solutions[q]) <= 1e-6) return false;
  return true;
}

}  // namespace

StartSystem build_start_system(const Format& f, std::uint64_t seed) {
  if (f.classify() == FormatClass::Beyond)
    throw FormatError("format " + f.to_string() + " is beyond the boundary: no start solutions (c = 0)");
  StartSystem s;
  s.format = f;
  s.derangements = enumerate_block_derangements(f);
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    if (try_draw(s, seed + static_cast<std::uint64_t>(attempt))) {
      s.seed = seed + static_cast<std::uint64_t>(attempt);
      s.redraws = attempt;
      return s;
    }
  }
  throw StartSystemError("degenerate start system after " + std::to_string(kMaxRedraws) + " redraws");
}

double projective_distance(const CPoint& a, const CPoint& b) {
  if (a.size() != b.size()) throw FormatError("points with different group counts");
  double worst = 0;
  for (std::size_t g = 0; g < a.size(); ++g) {
    double na = a[g].norm(), nb = b[g].norm();
    if (na == 0 || nb == 0) return 1.0;
    Eigen::VectorXcd u = a[g] / na, v = b[g] / nb;
    // Orthogonal part of v; stays accurate for nearby points.
    worst = std::max(worst, (v - u.dot(v) * u).norm());
  }
  return worst;
}

CPoint normalize_point(CPoint p) {
  for (auto& g : p) {
    Eigen::Index best = 0;
    g.cwiseAbs().maxCoeff(&best);
    Complex piv = g[best];
    if (piv == Complex(0.0)) continue;
    g *= std::conj(piv) / std::abs(piv);
    g /= g.norm();
    g[best] = Complex(g[best].real(), 0.0);
  }
  return p;
}

}  // namespace nashkit
