#pragma once

#include <nashkit/format.hpp>
#include <nashkit/rational.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace nashkit {

inline constexpr std::uint64_t kDefaultCountLimit = 1'000'000;

// Assignment of every element (i, j) of F, j < d_i - 1, to a block k != i,
// with exactly d_k - 1 elements landing in block k. Elements are listed in
// (i, j) order.
struct BlockDerangement {
  Format format;
  std::vector<int> assignment;

  // Elements (i, j) assigned to block k.
  std::vector<std::pair<int, int>> block(int k) const;
  // (i, j) of the e-th element of F.
  std::pair<int, int> element(int e) const;
  bool operator==(const BlockDerangement& o) const { return format == o.format && assignment == o.assignment; }
};

bool is_block_derangement(const Format& f, const std::vector<int>& assignment);

// Coefficient of prod h_i^{d_i-1} in prod (sum_{j != i} h_j)^{d_i-1}.
Integer c_chow(const Format& f);

// Count of block derangements by backtracking. Throws CountLimitExceeded
// once the count passes limit.
Integer c_derangements(const Format& f, std::uint64_t limit = kDefaultCountLimit);

// All block derangements in lexicographic order of the assignment vector.
std::vector<BlockDerangement> enumerate_block_derangements(const Format& f,
                                                           std::uint64_t limit = kDefaultCountLimit);

// Streams block derangements to visit; stop early by returning false.
void for_each_block_derangement(const Format& f, const std::function<bool(const std::vector<int>&)>& visit);

// Coefficient of x^d in x_1...x_n / sum_{i=0}^n (1-i) e_i(x).
Integer c_genfun(const Format& f);

struct Asymptotic {
  double value = 0;      // +inf when the exponentiation overflows
  double log_value = 0;  // natural log, always finite
  bool overflow = false;
};

// sqrt(n) (n-1)^{nd-1} / (2 n (n-2) pi d)^{(n-1)/2}, for n >= 3.
Asymptotic c_asymptotic(int n, int d);

}  // namespace nashkit
