#pragma once

// Reproducible random elements. Coordinates are i.i.d. standard normal;
// positive elements are squares; effects are squares scaled by 1/(|x|+1).

#include "jordanlab/algebra.hpp"
#include "jordanlab/families.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace jordanlab {

using Rng = std::mt19937_64;

/// Generator for trial `trial` of stream `stream` under a master seed.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);

Element random_element(const Algebra& alg, Rng& rng);
Element random_positive(const Algebra& alg, Rng& rng);
Element random_effect(const Algebra& alg, Rng& rng);
/// Scales a positive element into the effect interval.
Element to_effect(const Element& positive);

/// Random polynomial of degree <= 3 in a.
Element random_polynomial(const Element& a, Rng& rng);

/// Non-trivial idempotent (neither 0 nor 1) when the algebra has one;
/// otherwise the unit.
Element random_idempotent(const Algebra& alg, Rng& rng);

enum class CommutingKind { Polynomial, Commutant, Diagonal };

/// Pair that operator commutes by construction:
///   Polynomial  p(x), q(x) for a random x and random polynomials p, q
///   Commutant   two random elements of the commutant of a random x
///   Diagonal    two random combinations of a fixed Jordan frame (the
///               diagonal units E_ii for matrix families and the Albert
///               algebra, the idempotents (1 +- v1)/2 for spin factors)
std::pair<Element, Element> commuting_pair(const Algebra& alg, Rng& rng, CommutingKind kind);

}  // namespace jordanlab
