#ifndef EFFECTKIT_CONSTRUCTORS_HPP
#define EFFECTKIT_CONSTRUCTORS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "effectkit/algebra.hpp"

namespace effectkit {

/// Bad constructor arguments or an unparsable constructor spec string.
class ConstructorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Chain of length n: carrier {0, a, 2a, ..., na = 1}, ka + ma defined iff k + m <= n.
CheckedEffectAlgebra chain(int n);

/// Glues the summands at a shared 0 and a shared 1. Elements are ordered 0,
/// then each summand's interior in argument order, then 1. Two-element
/// summands contribute nothing; if every summand has two elements the
/// result is chain(1).
CheckedEffectAlgebra horizontal_sum(std::span<const CheckedEffectAlgebra> summands);

/// horizontal_sum of chains with the given lengths.
CheckedEffectAlgebra horizontal_sum_of_chains(std::span<const int> lengths);

/// Coordinatewise sum on pairs; (a, b) has index a * |F| + b.
CheckedEffectAlgebra direct_product(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f);

/// {0, p, q, 1} with p + q = 1 and p + p, q + q undefined.
CheckedEffectAlgebra boolean_diamond();

/// Builds an algebra from a compact spec: "chain:4", "hsum:2,3,3",
/// "prod:chain:2,chain:2", "diamond". Products nest: "prod:hsum:2,3,chain:2".
CheckedEffectAlgebra from_spec(std::string_view spec);

/// True when `text` starts with a known constructor name.
bool looks_like_spec(std::string_view text);

}  // namespace effectkit

#endif  // EFFECTKIT_CONSTRUCTORS_HPP
