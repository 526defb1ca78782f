#include <nashkit/errors.hpp>
#include <nashkit/game.hpp>

namespace nashkit {

PayoffTensor::PayoffTensor(Format f) : fmt_(std::move(f)), coeffs_(fmt_.cells()) {}

PayoffTensor::PayoffTensor(Format f, std::vector<Rational> coeffs) : fmt_(std::move(f)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != fmt_.cells())
    throw SchemaError("payoff tensor has " + std::to_string(coeffs_.size()) + " entries, expected " +
                      std::to_string(fmt_.cells()));
  for (auto& c : coeffs_) c.canonicalize();
}

const Rational& PayoffTensor::at(std::initializer_list<int> j) const {
  return entry(MultiIndex(fmt_, std::vector<int>(j)));
}

Game::Game(Format f, std::vector<PayoffTensor> tensors) : fmt_(std::move(f)), tensors_(std::move(tensors)) {
  if (static_cast<int>(tensors_.size()) != fmt_.n())
    throw SchemaError("game has " + std::to_string(tensors_.size()) + " tensors for " + std::to_string(fmt_.n()) +
                      " players");
  for (const auto& t : tensors_)
    if (!(t.format() == fmt_)) throw SchemaError("payoff tensor format differs from game format");
}

Game::Game(Format f) : fmt_(std::move(f)) {
  for (int i = 0; i < fmt_.n(); ++i) tensors_.emplace_back(fmt_);
}

}  // namespace nashkit
