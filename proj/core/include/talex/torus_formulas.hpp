#ifndef TALEX_TORUS_FORMULAS_HPP
#define TALEX_TORUS_FORMULAS_HPP

#include <vector>

#include "talex/cyclotomic.hpp"
#include "talex/laurent.hpp"
#include "talex/presentation.hpp"

namespace talex {

/// Eigenvalue labels of a torus-link representation and the symmetric-power
/// degree n; the labels fix the eigenvalues zeta_2p^a, zeta_2q^b of the two
/// core matrices.
struct TorusEigenData {
    TorusLinkParams params;
    int a = 1;
    int b = 1;
    int n = 2;
    bool irreducible_label = false;  // 0<a<p and 0<b<q

    /// Validates 0<=a<=p, 0<=b<=q, a=b (mod 2), n>=1.
    static TorusEigenData make(const TorusLinkParams& params, int a, int b, int n);

    /// Single cyclotomic order housing every eigenvalue: lcm(2p, 2q).
    unsigned field_order() const;
};

struct ClosedForm {
    RationalFn<CyclotomicScalar> unreduced;
    RationalFn<CyclotomicScalar> reduced;
    bool polynomial = false;
    bool irreducible_label = false;
};

/// Twisted Alexander polynomial of T(mu p, mu q) for the 2-dimensional
/// representation with labels (a, b), in the product variable t:
///   (t^{pq} - (-1)^a)^{2 mu} / ((t^p - beta)(t^p - beta^-1)(t^q - alpha)(t^q - alpha^-1)).
/// Requires n = 2.
ClosedForm closed_form_sl2(const TorusEigenData& data);

/// The symmetric-power closed form, even and odd n:
///   n even: (t^{pq}-(-1)^a)^{n mu} / prod_{j=0}^{n/2-1}
///           (t^{2q} - 2cos((2j+1)a pi/p) t^q + 1)(t^{2p} - 2cos((2j+1)b pi/q) t^p + 1)
///   n odd:  (t^{pq}-1)^{n mu} / ((t^p-1)(t^q-1) prod_{j=1}^{(n-1)/2}
///           (t^{2q} - 2cos(2ja pi/p) t^q + 1)(t^{2p} - 2cos(2jb pi/q) t^p + 1))
/// with every 2cos represented exactly as zeta^k + zeta^-k.
ClosedForm closed_form_symn(const TorusEigenData& data);

/// Reidemeister torsion for n even and a, b odd:
///   2^{n(mu-2)} / prod_{j=0}^{n/2-1} sin^2((2j+1)a pi/(2p)) sin^2((2j+1)b pi/(2q)),
/// computed exactly via 4 sin^2(theta) = 2 - (zeta^k + zeta^-k).
CyclotomicScalar torsion_closed_form(const TorusEigenData& data);

/// Same value via MPFR sines at the current working precision.
BigFloat torsion_closed_form_numeric(const TorusEigenData& data);

/// Torsion as the closed-form invariant evaluated at t = 1.  Errors when the
/// unreduced denominator vanishes at 1 (always for odd n, where (t^p - 1)
/// divides it).
CyclotomicScalar torsion_via_evaluation(const TorusEigenData& data);

struct GrowthRow {
    int n;
    BigFloat torsion;
    BigFloat log_ratio;  // log(torsion)/n
    BigFloat gap;        // |log_ratio - predicted_limit|
};

struct GrowthReport {
    std::vector<GrowthRow> rows;  // n = 2, 4, ..., n_max
    BigFloat predicted_limit;     // (mu - 1/p' - 1/q') log 2
    int p_prime = 1;              // p / gcd(a, p)
    int q_prime = 1;              // q / gcd(b, q)
};

/// Torsion growth sweep over even n up to n_max; requires a, b odd.
GrowthReport torsion_growth(const TorusLinkParams& params, int a, int b, int n_max);

/// Numeric image of an exact rational function (coefficient-wise embedding).
RationalFn<ComplexScalar> to_complex(const RationalFn<CyclotomicScalar>& f,
                                     unsigned precision_bits = 0);

}  // namespace talex

#endif
