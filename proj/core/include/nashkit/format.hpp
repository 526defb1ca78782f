#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nashkit {

enum class FormatClass { Within, Boundary, Beyond };

std::string to_string(FormatClass c);

// Strategy counts d = (d_1, ..., d_n). Stored in the given player order.
class Format {
 public:
  Format() = default;
  explicit Format(std::vector<int> d);
  Format(std::initializer_list<int> d) : Format(std::vector<int>(d)) {}

  int n() const { return static_cast<int>(d_.size()); }
  int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& dims() const { return d_; }

  // D = sum of (d_i - 1), the dimension of the multiprojective space.
  int D() const { return D_; }
  // Number of payoff entries per player, prod d_i.
  std::size_t cells() const { return cells_; }
  // Total number of homogeneous coordinates, sum d_i.
  int vars() const { return vars_; }
  // Offset of group i inside the concatenated coordinate vector.
  int offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
  // Index of the largest d_i (the last one on ties).
  int max_index() const;

  FormatClass classify() const;

  std::string to_string() const;  // "3,3,3"
  static Format parse(const std::string& text);

  bool operator==(const Format& o) const { return d_ == o.d_; }

 private:
  std::vector<int> d_;
  std::vector<int> offsets_;
  int D_ = 0;
  int vars_ = 0;
  std::size_t cells_ = 0;
};

// Zero-based multi-index j with the last coordinate varying fastest.
class MultiIndex {
 public:
  explicit MultiIndex(const Format& f) : fmt_(f), j_(static_cast<std::size_t>(f.n()), 0) {}
  MultiIndex(const Format& f, std::vector<int> j);

  const std::vector<int>& j() const { return j_; }
  int operator[](int i) const { return j_[static_cast<std::size_t>(i)]; }

  std::size_t linear() const;
  static MultiIndex from_linear(const Format& f, std::size_t idx);

  // Odometer increment; returns false after wrapping past the last index.
  bool next();

  // j_{-i}: the index with coordinate i removed.
  std::vector<int> drop(int i) const;
  // (k, j_{-i}) -> j with coordinate i set to k.
  static MultiIndex insert(const Format& f, int k, int i, std::span<const int> minus_i);

 private:
  Format fmt_;
  std::vector<int> j_;
};

}  // namespace nashkit
