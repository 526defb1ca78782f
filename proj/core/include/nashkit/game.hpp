#pragma once

#include <nashkit/format.hpp>
#include <nashkit/rational.hpp>

#include <cstddef>
#include <vector>

namespace nashkit {

// One player's payoff tensor, flat in MultiIndex order.
class PayoffTensor {
 public:
  PayoffTensor() = default;
  explicit PayoffTensor(Format f);
  PayoffTensor(Format f, std::vector<Rational> coeffs);

  const Format& format() const { return fmt_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](std::size_t idx) const { return coeffs_[idx]; }
  Rational& operator[](std::size_t idx) { return coeffs_[idx]; }
  const Rational& entry(const MultiIndex& j) const { return coeffs_[j.linear()]; }
  Rational& entry(const MultiIndex& j) { return coeffs_[j.linear()]; }
  // Zero-based indices, one per player.
  const Rational& at(std::initializer_list<int> j) const;

  bool operator==(const PayoffTensor& o) const { return fmt_ == o.fmt_ && coeffs_ == o.coeffs_; }

 private:
  Format fmt_;
  std::vector<Rational> coeffs_;
};

class Game {
 public:
  Game() = default;
  Game(Format f, std::vector<PayoffTensor> tensors);
  // Zero game of the given format.
  explicit Game(Format f);

  const Format& format() const { return fmt_; }
  int n() const { return fmt_.n(); }
  const PayoffTensor& payoff(int i) const { return tensors_[static_cast<std::size_t>(i)]; }
  PayoffTensor& payoff(int i) { return tensors_[static_cast<std::size_t>(i)]; }
  const std::vector<PayoffTensor>& tensors() const { return tensors_; }

  bool operator==(const Game& o) const { return fmt_ == o.fmt_ && tensors_ == o.tensors_; }

 private:
  Format fmt_;
  std::vector<PayoffTensor> tensors_;
};

}  // namespace nashkit
