#include <doctest.h>

#include "support.hpp"

#include <nashkit/counting.hpp>
#include <nashkit/errors.hpp>
#include <nashkit/polynomial.hpp>

#include <algorithm>
#include <cmath>

using namespace nashkit;
using nashkit::testing::franel;

namespace {

// Coefficient of prod h_i^{d_i-1} in the untruncated product of
// (sum_{j != i} h_j)^{d_i-1}.
Integer chow_by_expansion(const Format& f) {
  int n = f.n();
  Polynomial<Rational> prod = Polynomial<Rational>::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    Polynomial<Rational> hat(n);
    for (int j = 0; j < n; ++j)
      if (j != i) hat += Polynomial<Rational>::variable(n, j);
    for (int p = 0; p < f[i] - 1; ++p) prod = prod * hat;
  }
  Exponent target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) target[i] = static_cast<std::uint16_t>(f[i] - 1);
  Rational c = prod.coefficient(target);
  REQUIRE(c.get_den() == 1);
  return c.get_num();
}

// Every map from elements to blocks, filtered by the two invariants.
std::vector<std::vector<int>> brute_force_derangements(const Format& f) {
  std::vector<int> owner;
  for (int i = 0; i < f.n(); ++i)
    for (int j = 0; j < f[i] - 1; ++j) owner.push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> a(owner.size(), 0);
  while (true) {
    bool ok = true;
    std::vector<int> load(static_cast<std::size_t>(f.n()), 0);
    for (std::size_t e = 0; e < a.size(); ++e) {
      if (a[e] == owner[e]) ok = false;
      ++load[a[e]];
    }
    for (int k = 0; k < f.n(); ++k)
      if (load[k] != f[k] - 1) ok = false;
    if (ok) out.push_back(a);
    std::size_t pos = a.size();
    while (pos > 0) {
      --pos;
      if (++a[pos] < f.n()) break;
      a[pos] = 0;
      if (pos == 0) return out;
    }
    if (a.empty()) return out;
  }
}

std::vector<Format> small_grid(int max_n, int max_d) {
  std::vector<Format> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<int> d(static_cast<std::size_t>(n), 2);
    while (true) {
      out.emplace_back(d);
      int pos = n - 1;
      while (pos >= 0 && d[pos] == max_d) d[pos--] = 2;
      if (pos < 0) break;
      ++d[pos];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("c_chow examples") {
  CHECK(c_chow(Format{3, 3, 3}) == 10);
  CHECK(c_chow(Format{2, 2, 2, 2, 2, 2, 2, 2, 2, 2}) == 1334961);
  CHECK(c_chow(Format{2, 2, 4}) == 0);
}

TEST_CASE("c_derangements examples") {
  CHECK(c_derangements(Format{2, 2, 2}) == 2);
  CHECK(c_derangements(Format{5, 5}) == 1);
  CHECK(c_derangements(Format{4, 4, 4}) == franel(4));
  CHECK(franel(4) == 56);
  CHECK(c_chow(Format{4, 4, 4}) == 56);
}

TEST_CASE("c_derangements limit") {
  CHECK_THROWS_AS(c_derangements(Format{3, 3, 3}, 9), CountLimitExceeded);
  CHECK(c_derangements(Format{3, 3, 3}, 10) == 10);
  CHECK_THROWS_AS(enumerate_block_derangements(Format{2, 2, 2, 2}, 5), CountLimitExceeded);
}

TEST_CASE("enumerate_block_derangements examples") {
  auto all = enumerate_block_derangements(Format{2, 2, 2});
  REQUIRE(all.size() == 2);
  CHECK(all[0].assignment == std::vector<int>{1, 2, 0});
  CHECK(all[1].assignment == std::vector<int>{2, 0, 1});
  CHECK(all[0].block(1) == std::vector<std::pair<int, int>>{{0, 0}});

  auto swap = enumerate_block_derangements(Format{2, 2});
  REQUIRE(swap.size() == 1);
  CHECK(swap[0].assignment == std::vector<int>{1, 0});

  CHECK(enumerate_block_derangements(Format{2, 2, 4}).empty());
}

TEST_CASE("enumeration matches brute force, in lexicographic order") {
  for (const Format& f : small_grid(3, 4)) {
    if (f.D() > 9) continue;
    auto brute = brute_force_derangements(f);
    auto fast = enumerate_block_derangements(f);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      CHECK(fast[k].assignment == brute[k]);
      CHECK(is_block_derangement(f, fast[k].assignment));
    }
  }
  for (const Format& f : {Format{2, 2, 2, 2}, Format{2, 3, 2, 3}, Format{3, 2, 2, 2, 2}}) {
    auto brute = brute_force_derangements(f);
    auto fast = enumerate_block_derangements(f);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].assignment == brute[k]);
  }
}

TEST_CASE("c_genfun examples") {
  CHECK(c_genfun(Format{2, 2, 2}) == 2);
  CHECK(c_genfun(Format{3, 3, 3}) == 10);
  CHECK(c_genfun(Format{2, 3}) == c_chow(Format{2, 3}));
  CHECK(c_genfun(Format{2, 3}) == 0);
}

TEST_CASE("three methods agree with the expansion oracle on a grid") {
  for (const Format& f : small_grid(3, 5)) {
    Integer oracle = chow_by_expansion(f);
    CHECK(c_chow(f) == oracle);
    CHECK(c_genfun(f) == oracle);
    CHECK(c_derangements(f) == oracle);
    CHECK((oracle == 0) == (f.classify() == FormatClass::Beyond));
  }
}

TEST_CASE("c_chow is invariant under permutations") {
  std::vector<int> d{2, 3, 3, 4};
  Integer base = c_chow(Format(d));
  CHECK(base > 0);
  std::sort(d.begin(), d.end());
  do {
    CHECK(c_chow(Format(d)) == base);
  } while (std::next_permutation(d.begin(), d.end()));
}

TEST_CASE("binary formats follow the derangement recurrence") {
  Integer prev2 = 1, prev1 = 2;
  CHECK(c_chow(Format{2, 2}) == 1);
  CHECK(c_chow(Format{2, 2, 2}) == 2);
  for (int n = 4; n <= 12; ++n) {
    Integer next = (n - 1) * (prev1 + prev2);
    CHECK(c_chow(Format(std::vector<int>(static_cast<std::size_t>(n), 2))) == next);
    prev2 = prev1;
    prev1 = next;
  }
}

TEST_CASE("Franel numbers on the diagonal") {
  for (int d = 2; d <= 12; ++d) CHECK(c_chow(Format{d, d, d}) == franel(d));
}

TEST_CASE("c_asymptotic") {
  Integer exact12 = c_chow(Format{12, 12, 12});
  double r12 = exact12.get_d() / c_asymptotic(3, 12).value;
  double r4 = c_chow(Format{4, 4, 4}).get_d() / c_asymptotic(3, 4).value;
  CHECK(std::abs(r12 - 1.0) < 0.15);
  CHECK(std::abs(r12 - 1.0) < std::abs(r4 - 1.0));
  Asymptotic a = c_asymptotic(3, 2);
  CHECK(a.value > 0);
  CHECK(std::isfinite(a.value));
  CHECK(std::abs(std::log(a.value) - a.log_value) < 1e-9);
  Asymptotic big = c_asymptotic(60, 200);
  CHECK(big.overflow);
  CHECK(std::isfinite(big.log_value));
  CHECK_THROWS_AS(c_asymptotic(2, 5), DomainError);
  CHECK_THROWS_AS(c_asymptotic(3, 1), DomainError);
}
