#pragma once

#include <nashkit/rational.hpp>

#include <cstddef>
#include <vector>

namespace nashkit {

// Dense multivariate power series over the integers, truncated at
// per-variable degree caps. Coefficients are stored with the last variable
// fastest.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<int> caps);

  static TruncatedSeries one(std::vector<int> caps);
  // x_v as a series.
  static TruncatedSeries variable(std::vector<int> caps, int v);
  // Elementary symmetric polynomial e_k(x_1, ..., x_n), truncated.
  static TruncatedSeries elementary(std::vector<int> caps, int k);

  int nvars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  std::size_t size() const { return coeffs_.size(); }

  const Integer& operator[](const std::vector<int>& e) const { return coeffs_[index(e)]; }
  Integer& operator[](const std::vector<int>& e) { return coeffs_[index(e)]; }
  const Integer& at(std::size_t idx) const { return coeffs_[idx]; }
  Integer& at(std::size_t idx) { return coeffs_[idx]; }

  // Exponent vector of a flat index.
  std::vector<int> exponent(std::size_t idx) const;
  std::size_t index(const std::vector<int>& e) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Integer& k);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  // Product, dropping any monomial above a cap.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  bool operator==(const TruncatedSeries& o) const { return caps_ == o.caps_ && coeffs_ == o.coeffs_; }

 private:
  std::vector<int> caps_;
  std::vector<std::size_t> strides_;
  std::vector<Integer> coeffs_;
};

// Solves den * q = num below the caps. Throws SeriesError if den has a zero
// constant term or a coefficient of q is not an integer.
TruncatedSeries series_div_truncated(const TruncatedSeries& num, const TruncatedSeries& den);

}  // namespace nashkit
