#pragma once

#include <nashkit/game_json.hpp>
#include <nashkit/rational.hpp>

#include <random>
#include <string>
#include <vector>

namespace nashkit::testing {

inline Game fixture(const std::string& name) { return load_game(std::string(NASHKIT_FIXTURES) + "/" + name + ".json"); }

inline Rational random_rational(std::mt19937_64& rng, int height = 9) {
  std::uniform_int_distribution<int> num(-height, height), den(1, height);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Game random_rational_game(const Format& f, std::mt19937_64& rng, int height = 9) {
  std::vector<PayoffTensor> t;
  for (int i = 0; i < f.n(); ++i) {
    std::vector<Rational> c(f.cells());
    for (auto& x : c) x = random_rational(rng, height);
    t.emplace_back(f, std::move(c));
  }
  return Game(f, std::move(t));
}

inline Integer binomial(int n, int k) {
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return z;
}

// Franel number sum_j C(d-1, j)^3.
inline Integer franel(int d) {
  Integer s = 0;
  for (int j = 0; j < d; ++j) {
    Integer b = binomial(d - 1, j);
    s += b * b * b;
  }
  return s;
}

}  // namespace nashkit::testing
