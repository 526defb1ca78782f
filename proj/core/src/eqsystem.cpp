#include <nashkit/eqsystem.hpp>

namespace nashkit {

EquilibriumSystem build_system(const Game& g) {
  const Format& f = g.format();
  EquilibriumSystem sys;
  sys.format = f;
  sys.game = std::make_shared<const Game>(g);
  for (int i = 0; i < f.n(); ++i) {
    const PayoffTensor& t = g.payoff(i);
    for (int k = 1; k < f[i]; ++k) {
      QPoly eq(f);
      // Run over j with j_i = 0; the paired index has j_i = k.
      MultiIndex j(f);
      do {
        if (j[i] != 0) continue;
        std::vector<int> jk = j.j();
        jk[i] = k;
        Rational c = t.entry(j) - t.entry(MultiIndex(f, jk));
        if (sgn(c) == 0) continue;
        Exponent e(static_cast<std::size_t>(f.vars()), 0);
        for (int p = 0; p < f.n(); ++p)
          if (p != i) e[static_cast<std::size_t>(f.offset(p) + j[p])] = 1;
        eq.add_term(e, c);
      } while (j.next());
      sys.equations.push_back(std::move(eq));
      sys.labels.push_back({i, k});
    }
  }
  return sys;
}

Rational expected_payoff(const Game& g, int i, const std::vector<std::vector<Rational>>& strategies) {
  const Format& f = g.format();
  if (static_cast<int>(strategies.size()) != f.n()) throw DomainError("one strategy per player is required");
  for (int p = 0; p < f.n(); ++p) {
    if (static_cast<int>(strategies[p].size()) != f[p]) throw DomainError("strategy has the wrong length");
    Rational s = 0;
    for (const auto& x : strategies[p]) s += x;
    if (s != 1) throw DomainError("strategy of player " + std::to_string(p + 1) + " does not sum to 1");
  }
  Rational acc = 0;
  MultiIndex j(f);
  do {
    Rational w = g.payoff(i).entry(j);
    if (sgn(w) == 0) continue;
    for (int p = 0; p < f.n(); ++p) w *= strategies[p][j[p]];
    acc += w;
  } while (j.next());
  return acc;
}

template <class S>
Matrix<S> jacobian_in_chart(const EquilibriumSystem& sys, const Chart& chart, const std::vector<std::vector<S>>& point) {
  const Format& f = sys.format;
  auto x = normalize_to_chart(chart, point);
  int D = f.D();
  Matrix<S> jac(sys.size(), D);
  int col = 0;
  for (int g = 0; g < f.n(); ++g) {
    for (int v = 0; v < f[g]; ++v) {
      if (v == chart.pivots[g]) continue;
      for (int r = 0; r < sys.size(); ++r) jac(r, col) = sys.equations[r].partial(g, v).template evaluate<S>(x);
      ++col;
    }
  }
  return jac;
}

template Matrix<Rational> jacobian_in_chart(const EquilibriumSystem&, const Chart&,
                                            const std::vector<std::vector<Rational>>&);
template Matrix<std::complex<double>> jacobian_in_chart(const EquilibriumSystem&, const Chart&,
                                                        const std::vector<std::vector<std::complex<double>>>&);

}  // namespace nashkit
