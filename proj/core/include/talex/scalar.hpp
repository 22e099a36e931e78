#ifndef TALEX_SCALAR_HPP
#define TALEX_SCALAR_HPP

#include <concepts>
#include <string>
#include <utility>

#include "talex/bigfloat.hpp"
#include "talex/cyclotomic.hpp"
#include "talex/errors.hpp"

namespace talex {

/// The field-arithmetic contract shared by the exact and numeric backends.
template <class S>
concept ScalarField = requires(S a, S b) {
    S();
    S(1);
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<CyclotomicScalar> {
    static constexpr bool exact = true;
    static constexpr const char* backend_name = "cyclotomic";

    static CyclotomicScalar zero() { return {}; }
    static CyclotomicScalar one() { return CyclotomicScalar(1); }

    /// zeta_n^k as a field element.
    static CyclotomicScalar root_of_unity(unsigned n, long k) {
        return CyclotomicScalar::root_of_unity(n, k);
    }
    static bool negligible(const CyclotomicScalar& s, const BigFloat& /*scale*/) {
        return s.is_zero();
    }
    static BigFloat magnitude(const CyclotomicScalar& s) {
        return s.is_zero() ? BigFloat(0) : BigFloat(1);
    }
    static std::string str(const CyclotomicScalar& s) { return s.str(); }
};

template <>
struct scalar_traits<ComplexScalar> {
    static constexpr bool exact = false;
    static constexpr const char* backend_name = "complex";

    static ComplexScalar zero() { return {}; }
    static ComplexScalar one() { return ComplexScalar(1); }

    static ComplexScalar root_of_unity(unsigned n, long k) {
        return unit_circle_point(2 * k, static_cast<long>(n));
    }
    static bool negligible(const ComplexScalar& s, const BigFloat& scale) {
        BigFloat bound = numeric_context::chop_threshold();
        if (scale > 1) bound *= scale;
        return s.abs() <= bound;
    }
    static BigFloat magnitude(const ComplexScalar& s) { return s.abs(); }
    static std::string str(const ComplexScalar& s) { return s.str(); }
};

/// Convenience: eigenvalue exp(i*pi*k/n) = zeta_{2n}^k in either backend.
template <class S>
S half_root_of_unity(unsigned n, long k) {
    return scalar_traits<S>::root_of_unity(2 * n, k);
}

namespace detail {

inline bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

}  // namespace detail

/// Square root when representable in the backend: always for the numeric
/// backend, only for rational perfect squares in the exact one.
inline ComplexScalar scalar_sqrt(const ComplexScalar& z) { return sqrt(z); }

inline CyclotomicScalar scalar_sqrt(const CyclotomicScalar& z) {
    if (z.is_zero()) return CyclotomicScalar::zero();
    if (z.is_rational()) {
        Rational root;
        if (detail::rational_sqrt(z.rational_value(), root))
            return CyclotomicScalar(root);
    }
    throw backend_error("irrational discriminant over exact field");
}

/// Roots (theta1, theta2) of Z^2 + b*Z + c = 0, so theta1 + theta2 = -b and
/// theta1 * theta2 = c.  Exact backend throws backend_error unless the
/// discriminant is a representable square.
template <class S>
std::pair<S, S> solve_quadratic(const S& b, const S& c) {
    S disc = b * b - S(4) * c;
    S sq = scalar_sqrt(disc);
    S half = S(1) / S(2);
    S theta1 = (-b + sq) * half;
    S theta2 = (-b - sq) * half;
    return {theta1, theta2};
}

}  // namespace talex

#endif
