#pragma once

#include <stdexcept>

namespace ipd {

// One-shot game payoffs (R, S, T, P). Templated on the scalar so the ZD
// geometry can be evaluated with exact number types as well as doubles.
template <class Scalar>
struct PayoffsT {
  Scalar R, S, T, P;
};

using PayoffParams = PayoffsT<double>;

inline constexpr PayoffParams standard_payoffs() { return {3.0, 0.0, 5.0, 1.0}; }

// T > R > P > S (prisoner's dilemma ordering), 2P != S + T (extortion-plane
// denominator). S != T, needed for the design matrix to have rank 2, follows
// from the ordering.
inline void validate(const PayoffParams& g) {
  if (!(g.T > g.R && g.R > g.P && g.P > g.S))
    throw std::invalid_argument("payoffs must satisfy T > R > P > S");
  if (g.S + g.T == 2.0 * g.P)
    throw std::invalid_argument("payoffs must satisfy 2P != S + T");
}

}  // namespace ipd
