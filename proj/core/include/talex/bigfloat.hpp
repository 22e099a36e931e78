#ifndef TALEX_BIGFLOAT_HPP
#define TALEX_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace talex {

/// Arbitrary-precision real, MPFR-backed, precision set at runtime.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Process-wide numeric configuration for the complex backend: working
/// precision (bits) and the tolerance used by tolerance-based equality.
namespace numeric_context {

void set_precision_bits(unsigned bits);
unsigned precision_bits();

void set_tolerance(const BigFloat& tol);
void set_tolerance(double tol);
BigFloat tolerance();

/// Threshold under which numeric coefficients are treated as elimination
/// noise, relative to a scale factor: 2^-(precision_bits - 40).
BigFloat chop_threshold();

BigFloat pi();

}  // namespace numeric_context

/// Arbitrary-precision complex number with tolerance-based equality.
struct ComplexScalar {
    BigFloat re, im;

    ComplexScalar() : re(0), im(0) {}
    ComplexScalar(int v) : re(v), im(0) {}           // NOLINT implicit
    ComplexScalar(long v) : re(v), im(0) {}          // NOLINT implicit
    explicit ComplexScalar(const BigFloat& r) : re(r), im(0) {}
    ComplexScalar(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexScalar zero() { return {}; }
    static ComplexScalar one() { return ComplexScalar(1); }
    static ComplexScalar i() { return {BigFloat(0), BigFloat(1)}; }

    bool is_zero() const;

    BigFloat abs() const;
    BigFloat norm2() const { return re * re + im * im; }
    ComplexScalar conj() const { return {re, -im}; }

    ComplexScalar& operator+=(const ComplexScalar& o);
    ComplexScalar& operator-=(const ComplexScalar& o);
    ComplexScalar& operator*=(const ComplexScalar& o);
    ComplexScalar& operator/=(const ComplexScalar& o);

    friend ComplexScalar operator+(ComplexScalar a, const ComplexScalar& b) { return a += b; }
    friend ComplexScalar operator-(ComplexScalar a, const ComplexScalar& b) { return a -= b; }
    friend ComplexScalar operator*(ComplexScalar a, const ComplexScalar& b) { return a *= b; }
    friend ComplexScalar operator/(ComplexScalar a, const ComplexScalar& b) { return a /= b; }
    friend ComplexScalar operator-(const ComplexScalar& a) { return {-a.re, -a.im}; }

    /// Tolerance-based equality: |a - b| <= numeric_context::tolerance().
    friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
        return (a - b).is_zero();
    }

    std::string str(unsigned digits = 0) const;
};

ComplexScalar inverse(const ComplexScalar& z);
ComplexScalar sqrt(const ComplexScalar& z);

/// exp(i * pi * num / den) at the current working precision.
ComplexScalar unit_circle_point(long num, long den);

}  // namespace talex

#endif
