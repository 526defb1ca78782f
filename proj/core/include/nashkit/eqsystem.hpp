#pragma once

#include <nashkit/errors.hpp>
#include <nashkit/game.hpp>
#include <nashkit/linalg.hpp>
#include <nashkit/polynomial.hpp>

#include <complex>
#include <memory>
#include <vector>

namespace nashkit {

// Equation Delta f^(i)_{1,k}: player i, compared strategy k (zero-based,
// 1 <= k < d_i).
struct EquationLabel {
  int player;
  int k;
};

struct EquilibriumSystem {
  Format format;
  std::vector<QPoly> equations;       // ordered by player, then k
  std::vector<EquationLabel> labels;  // parallel to equations
  std::shared_ptr<const Game> game;

  int size() const { return static_cast<int>(equations.size()); }
};

EquilibriumSystem build_system(const Game& g);

// k-th component: sum over j_{-i} of T_{(k, j_{-i})} * prod_{l != i} pi^(l)_{j_l}.
// point_minus_i lists the coordinate vectors of every group except i, in order.
template <class S>
std::vector<S> contract(const PayoffTensor& t, const std::vector<std::vector<S>>& point_minus_i, int i) {
  const Format& f = t.format();
  if (static_cast<int>(point_minus_i.size()) != f.n() - 1) throw FormatError("contraction needs n-1 groups");
  for (int p = 0, q = 0; p < f.n(); ++p) {
    if (p == i) continue;
    if (static_cast<int>(point_minus_i[q++].size()) != f[p]) throw FormatError("contraction group has wrong length");
  }
  std::vector<S> out(static_cast<std::size_t>(f[i]), S(0));
  MultiIndex j(f);
  do {
    S w = convert_scalar<S>(t.entry(j));
    if (w == S(0)) continue;
    for (int p = 0, q = 0; p < f.n(); ++p) {
      if (p == i) continue;
      w *= point_minus_i[q++][j[p]];
    }
    out[j[i]] += w;
  } while (j.next());
  return out;
}

// sum_j prod_l pi^(l)_{j_l} x^(i)_j; every strategy must sum to one.
Rational expected_payoff(const Game& g, int i, const std::vector<std::vector<Rational>>& strategies);

// One pivot coordinate per group, fixed to 1.
struct Chart {
  std::vector<int> pivots;

  // Largest-modulus coordinate in each group.
  template <class S>
  static Chart largest(const std::vector<std::vector<S>>& point) {
    Chart c;
    for (const auto& g : point) {
      int best = 0;
      for (int v = 1; v < static_cast<int>(g.size()); ++v)
        if (std::abs(to_c(g[v])) > std::abs(to_c(g[best]))) best = v;
      c.pivots.push_back(best);
    }
    return c;
  }

 private:
  template <class S>
  static std::complex<double> to_c(const S& s) {
    return convert_scalar<std::complex<double>>(s);
  }
};

// D x D Jacobian in the affine coordinates of the chart, evaluated after
// scaling each group so its pivot coordinate is 1. Columns list the
// non-pivot coordinates group by group.
template <class S>
Matrix<S> jacobian_in_chart(const EquilibriumSystem& sys, const Chart& chart, const std::vector<std::vector<S>>& point);

extern template Matrix<Rational> jacobian_in_chart(const EquilibriumSystem&, const Chart&,
                                                   const std::vector<std::vector<Rational>>&);
extern template Matrix<std::complex<double>> jacobian_in_chart(const EquilibriumSystem&, const Chart&,
                                                               const std::vector<std::vector<std::complex<double>>>&);

// Scales each group so the chart pivot is 1. Throws ChartError on a zero pivot.
template <class S>
std::vector<std::vector<S>> normalize_to_chart(const Chart& chart, std::vector<std::vector<S>> point) {
  if (chart.pivots.size() != point.size()) throw ChartError("chart and point disagree on the group count");
  for (std::size_t g = 0; g < point.size(); ++g) {
    S piv = point[g][static_cast<std::size_t>(chart.pivots[g])];
    if (piv == S(0)) throw ChartError("pivot coordinate of group " + std::to_string(g + 1) + " is zero");
    for (auto& x : point[g]) x /= piv;
  }
  return point;
}

}  // namespace nashkit
