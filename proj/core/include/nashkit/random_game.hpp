#pragma once

#include <nashkit/game.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace nashkit {

// Integer payoffs drawn uniformly from [-height, height].
Game random_game(const Format& f, std::uint64_t seed, int height);

// Random point with positive rational coordinates summing to 1 per group.
std::vector<std::vector<Rational>> random_simplex_point(const Format& f, std::mt19937_64& rng, int height = 9);

// Adjusts player i's tensor so every Delta f^(i)_{1,k} vanishes at p (one
// entry per k is shifted). p needs a nonzero coordinate in every group.
void force_zero_at(Game& g, int i, const std::vector<std::vector<Rational>>& p);

}  // namespace nashkit
