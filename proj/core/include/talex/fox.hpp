#ifndef TALEX_FOX_HPP
#define TALEX_FOX_HPP

#include "talex/word.hpp"

namespace talex {

/// Fox free derivative d(w)/d(x_j) in the integral group ring, computed
/// per syllable from the geometric-sum closed forms
///   d(x^p)/dx = 1 + x + ... + x^{p-1}              (p > 0)
///   d(x^{-k})/dx = -(x^{-1} + x^{-2} + ... + x^{-k})  (k > 0)
/// stitched together by the product rule d(uv)/dx = du/dx + u dv/dx.
GroupRingElement fox_derivative(const Word& w, int generator);

/// Applies fox_derivative term by term (Z-linear extension).
GroupRingElement fox_derivative(const GroupRingElement& e, int generator);

/// Verifies the fundamental identity
///   sum_j d(w)/d(x_j) * (x_j - 1) = w - 1
/// exactly in the integral group ring.
bool fox_fundamental_check(const Word& w, int num_generators);

}  // namespace talex

#endif
