#include <nashkit/errors.hpp>
#include <nashkit/random_game.hpp>

namespace nashkit {

Game random_game(const Format& f, std::uint64_t seed, int height) {
  if (height < 1) throw DomainError("height must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-height, height);
  std::vector<PayoffTensor> tensors;
  for (int i = 0; i < f.n(); ++i) {
    std::vector<Rational> c(f.cells());
    for (auto& x : c) x = dist(rng);
    tensors.emplace_back(f, std::move(c));
  }
  return Game(f, std::move(tensors));
}

std::vector<std::vector<Rational>> random_simplex_point(const Format& f, std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<int> dist(1, height);
  std::vector<std::vector<Rational>> p;
  for (int i = 0; i < f.n(); ++i) {
    std::vector<Rational> g(static_cast<std::size_t>(f[i]));
    Rational sum = 0;
    for (auto& x : g) {
      x = dist(rng);
      sum += x;
    }
    for (auto& x : g) x /= sum;
    p.push_back(std::move(g));
  }
  return p;
}

void force_zero_at(Game& g, int i, const std::vector<std::vector<Rational>>& p) {
  const Format& f = g.format();
  PayoffTensor& t = g.payoff(i);
  // Weight of x_(k, j_{-i}) in f^(i)_k at p, and a pivot j_{-i} with weight != 0.
  auto weight = [&](const MultiIndex& j) {
    Rational w = 1;
    for (int q = 0; q < f.n(); ++q)
      if (q != i) w *= p[q][j[q]];
    return w;
  };
  for (int k = 1; k < f[i]; ++k) {
    Rational delta = 0;
    std::optional<MultiIndex> pivot;
    Rational pivot_w;
    MultiIndex j(f);
    do {
      if (j[i] != 0) continue;
      std::vector<int> jk = j.j();
      jk[i] = k;
      MultiIndex mk(f, jk);
      Rational w = weight(j);
      delta += (t.entry(j) - t.entry(mk)) * w;
      if (!pivot && sgn(w) != 0) {
        pivot = mk;
        pivot_w = w;
      }
    } while (j.next());
    if (!pivot) throw DomainError("point has a zero group");
    t.entry(*pivot) += delta / pivot_w;
  }
}

}  // namespace nashkit
