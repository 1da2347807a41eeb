#pragma once
// Rewrite rules: products of adjoint lifts into isobaric sums.

#include <optional>

#include "rs/algebra.hpp"

namespace rs {

Isobaric adjoint_of(int side, Context& cx);
Isobaric square_decompose(int side, Context& cx);

// nullopt when no rule applies: the product stays an unevaluated factor list.
std::optional<Isobaric> pair_decompose(const Rep& a, const Rep& b, Context& cx);

// Ad_i (non-dihedral) times a dihedral GL(2) symbol that no rule splits: a cuspidal GL(6) product.
bool adjoint_product_cuspidal(const Rep& a, const Rep& b, Context& cx);

// Distributes over sums and folds pair_decompose left to right.
Isobaric product_normalize(const std::vector<Isobaric>& factors, Context& cx);

int total_dim(const Isobaric& a);

}  // namespace rs
