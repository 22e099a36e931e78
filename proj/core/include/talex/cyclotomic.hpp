#ifndef TALEX_CYCLOTOMIC_HPP
#define TALEX_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "talex/bigfloat.hpp"

namespace talex {

using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

unsigned euler_phi(unsigned n);

/// Coefficients of the N-th cyclotomic polynomial, dense, constant term
/// first, monic of degree phi(N).  Computed once by the recursive division
/// Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d and cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

/// Element of the cyclotomic field Q(zeta_N), stored as the canonical
/// residue modulo Phi_N: a vector of phi(N) rationals, coefficient of
/// zeta^i at index i.  Two elements of the same order are equal iff their
/// coefficient vectors are equal.  Arithmetic between different orders
/// promotes both operands into Q(zeta_lcm).
class CyclotomicScalar {
public:
    CyclotomicScalar() : order_(1), c_(1, Rational(0)) {}
    CyclotomicScalar(int v) : order_(1), c_(1, Rational(v)) {}    // NOLINT implicit
    CyclotomicScalar(long v) : order_(1), c_(1, Rational(v)) {}   // NOLINT implicit
    explicit CyclotomicScalar(const Rational& r) : order_(1), c_(1, r) {}

    /// zeta_N^k (k arbitrary, reduced mod N), as an element of Q(zeta_N).
    static CyclotomicScalar root_of_unity(unsigned n, long k);
    /// Builds from an explicit residue vector of length phi(N).
    static CyclotomicScalar from_coeffs(unsigned n, std::vector<Rational> coeffs);

    static CyclotomicScalar zero() { return {}; }
    static CyclotomicScalar one() { return CyclotomicScalar(1); }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational; throws backend_error if not rational.
    Rational rational_value() const;

    CyclotomicScalar& operator+=(const CyclotomicScalar& o);
    CyclotomicScalar& operator-=(const CyclotomicScalar& o);
    CyclotomicScalar& operator*=(const CyclotomicScalar& o);
    CyclotomicScalar& operator/=(const CyclotomicScalar& o);

    friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
    friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
    friend CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }
    friend CyclotomicScalar operator/(CyclotomicScalar a, const CyclotomicScalar& b) { return a /= b; }
    friend CyclotomicScalar operator-(const CyclotomicScalar& a);

    CyclotomicScalar pow(long e) const;

    /// Exact equality (after promotion to a common order).
    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);

    /// Re-expresses the element in Q(zeta_M); requires order() | M.
    CyclotomicScalar promoted(unsigned m) const;

    std::string str() const;

private:
    unsigned order_;
    std::vector<Rational> c_;
};

CyclotomicScalar inverse(const CyclotomicScalar& z);

/// Numerical image under zeta_N -> exp(2*pi*i/N) at the given precision.
ComplexScalar embed_complex(const CyclotomicScalar& z, unsigned precision_bits);

/// Multiplicative order of a root of unity (smallest k >= 1 with z^k = 1);
/// throws backend_error if z is not a root of unity in its field.
unsigned multiplicative_order(const CyclotomicScalar& z);

}  // namespace talex

#endif
