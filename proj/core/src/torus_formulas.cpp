#include "talex/torus_formulas.hpp"

#include <numeric>

#include "talex/errors.hpp"

namespace talex {

namespace {

using Cyc = CyclotomicScalar;
using Poly = LaurentPoly<Cyc>;

Poly t_power_minus(int e, const Cyc& c) {
    // t^e - c
    Poly p(1);
    p.add_term({e}, Cyc(1));
    p.add_term({0}, -c);
    return p;
}

Poly poly_pow(Poly base, unsigned e) {
    Poly acc = Poly::constant(1, Cyc(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// zeta_{2n}^k + zeta_{2n}^{-k} = 2 cos(k pi / n), exact.
Cyc two_cos(int n, long k) {
    return Cyc::root_of_unity(2 * static_cast<unsigned>(n), k) +
           Cyc::root_of_unity(2 * static_cast<unsigned>(n), -k);
}

// Class-preserving canonical scaling: make the denominator's trailing
// (lowest-exponent) coefficient 1 by dividing both parts by it.
void canonicalize(RationalFn<Cyc>& f) {
    if (f.den.is_zero() || f.num.is_zero()) return;
    Cyc c = f.den.lex_min_term().second;
    if (c == Cyc(1)) return;
    Cyc inv = Cyc(1) / c;
    f.num = f.num * inv;
    f.den = f.den * inv;
}

}  // namespace

TorusEigenData TorusEigenData::make(const TorusLinkParams& params, int a, int b, int n) {
    if (a < 0 || a > params.p || b < 0 || b > params.q)
        throw validation_error("labels must satisfy 0<=a<=p and 0<=b<=q");
    if ((a - b) % 2 != 0) throw validation_error("labels must satisfy a = b (mod 2)");
    if (n < 1) throw validation_error("n must be >= 1");
    TorusEigenData d;
    d.params = params;
    d.a = a;
    d.b = b;
    d.n = n;
    d.irreducible_label = (0 < a && a < params.p && 0 < b && b < params.q);
    return d;
}

unsigned TorusEigenData::field_order() const {
    return static_cast<unsigned>(std::lcm(2 * params.p, 2 * params.q));
}

ClosedForm closed_form_sl2(const TorusEigenData& data) {
    if (data.n != 2) throw validation_error("closed_form_sl2 requires n = 2");
    const int p = data.params.p, q = data.params.q, mu = data.params.mu;
    const Cyc alpha = Cyc::root_of_unity(2 * p, data.a);
    const Cyc alpha_inv = Cyc::root_of_unity(2 * p, -data.a);
    const Cyc beta = Cyc::root_of_unity(2 * q, data.b);
    const Cyc beta_inv = Cyc::root_of_unity(2 * q, -data.b);

    Poly num = poly_pow(t_power_minus(p * q, Cyc(data.a % 2 == 0 ? 1 : -1)),
                        2 * static_cast<unsigned>(mu));
    Poly den = t_power_minus(p, beta) * t_power_minus(p, beta_inv) *
               t_power_minus(q, alpha) * t_power_minus(q, alpha_inv);

    ClosedForm out;
    out.unreduced = RationalFn<Cyc>(num, den);
    auto red = rational_reduce(out.unreduced);
    out.reduced = red.fn;
    canonicalize(out.reduced);
    out.polynomial = red.polynomial;
    out.irreducible_label = data.irreducible_label;
    return out;
}

ClosedForm closed_form_symn(const TorusEigenData& data) {
    const int p = data.params.p, q = data.params.q, mu = data.params.mu, n = data.n;
    Poly num(1), den(1);
    if (n % 2 == 0) {
        num = poly_pow(t_power_minus(p * q, Cyc(data.a % 2 == 0 ? 1 : -1)),
                       static_cast<unsigned>(n) * mu);
        den = Poly::constant(1, Cyc(1));
        for (int j = 0; j < n / 2; ++j) {
            long k = 2L * j + 1;
            Poly fa(1), fb(1);
            fa.add_term({2 * q}, Cyc(1));
            fa.add_term({q}, -two_cos(p, k * data.a));
            fa.add_term({0}, Cyc(1));
            fb.add_term({2 * p}, Cyc(1));
            fb.add_term({p}, -two_cos(q, k * data.b));
            fb.add_term({0}, Cyc(1));
            den = den * fa * fb;
        }
    } else {
        num = poly_pow(t_power_minus(p * q, Cyc(1)), static_cast<unsigned>(n) * mu);
        den = t_power_minus(p, Cyc(1)) * t_power_minus(q, Cyc(1));
        for (int j = 1; j <= (n - 1) / 2; ++j) {
            long k = 2L * j;
            Poly fa(1), fb(1);
            fa.add_term({2 * q}, Cyc(1));
            fa.add_term({q}, -two_cos(p, k * data.a));
            fa.add_term({0}, Cyc(1));
            fb.add_term({2 * p}, Cyc(1));
            fb.add_term({p}, -two_cos(q, k * data.b));
            fb.add_term({0}, Cyc(1));
            den = den * fa * fb;
        }
    }

    ClosedForm out;
    out.unreduced = RationalFn<Cyc>(num, den);
    auto red = rational_reduce(out.unreduced);
    out.reduced = red.fn;
    canonicalize(out.reduced);
    out.polynomial = red.polynomial;
    out.irreducible_label = data.irreducible_label;
    return out;
}

CyclotomicScalar torsion_closed_form(const TorusEigenData& data) {
    const int p = data.params.p, q = data.params.q, mu = data.params.mu, n = data.n;
    if (n % 2 != 0 || data.a % 2 != 1 || data.b % 2 != 1)
        throw validation_error("torsion requires n even and a, b odd");
    // 2^{n(mu-2)}
    Rational lead;
    long e = static_cast<long>(n) * (mu - 2);
    if (e >= 0) {
        mpz_class v = 1;
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
        lead = Rational(v);
    } else {
        mpz_class v = 1;
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-e));
        lead = Rational(1) / Rational(v);
    }
    Cyc acc(lead);
    for (int j = 0; j < n / 2; ++j) {
        long k = 2L * j + 1;
        // sin^2((2j+1) a pi / (2p)) = (2 - 2cos((2j+1) a pi / p)) / 4
        Cyc sa = (Cyc(2) - two_cos(p, k * data.a)) / Cyc(4);
        Cyc sb = (Cyc(2) - two_cos(q, k * data.b)) / Cyc(4);
        acc = acc / (sa * sb);
    }
    return acc;
}

BigFloat torsion_closed_form_numeric(const TorusEigenData& data) {
    const int p = data.params.p, q = data.params.q, mu = data.params.mu, n = data.n;
    if (n % 2 != 0 || data.a % 2 != 1 || data.b % 2 != 1)
        throw validation_error("torsion requires n even and a, b odd");
    BigFloat pi = numeric_context::pi();
    BigFloat log2 = log(BigFloat(2));
    BigFloat log_acc = BigFloat(n) * (mu - 2) * log2;
    for (int j = 0; j < n / 2; ++j) {
        long k = 2L * j + 1;
        BigFloat sa = sin(pi * (k * data.a) / (2 * p));
        BigFloat sb = sin(pi * (k * data.b) / (2 * q));
        log_acc -= 2 * (log(abs(sa)) + log(abs(sb)));
    }
    return exp(log_acc);
}

CyclotomicScalar torsion_via_evaluation(const TorusEigenData& data) {
    ClosedForm form = closed_form_symn(data);
    Cyc den_at_one = form.unreduced.den.evaluate_all_ones();
    if (den_at_one.is_zero())
        throw validation_error("torsion undefined: denominator vanishes at t=1");
    Cyc num_at_one = form.unreduced.num.evaluate_all_ones();
    return num_at_one / den_at_one;
}

GrowthReport torsion_growth(const TorusLinkParams& params, int a, int b, int n_max) {
    if (a % 2 != 1 || b % 2 != 1)
        throw validation_error("torsion growth requires a, b odd");
    if (n_max < 2) throw validation_error("n_max must be >= 2");
    GrowthReport report;
    report.p_prime = params.p / std::gcd(a, params.p);
    report.q_prime = params.q / std::gcd(b, params.q);
    BigFloat log2 = log(BigFloat(2));
    report.predicted_limit =
        (BigFloat(params.mu) - BigFloat(1) / report.p_prime - BigFloat(1) / report.q_prime) * log2;

    BigFloat pi = numeric_context::pi();
    BigFloat sin_log_sum(0);  // sum over j of log sin^2 pairs
    for (int n = 2; n <= n_max; n += 2) {
        long k = n - 1;  // the new factor index 2j+1 with j = n/2 - 1
        BigFloat sa = sin(pi * (k * a) / (2 * params.p));
        BigFloat sb = sin(pi * (k * b) / (2 * params.q));
        sin_log_sum += 2 * (log(abs(sa)) + log(abs(sb)));
        BigFloat log_torsion = BigFloat(n) * (params.mu - 2) * log2 - sin_log_sum;
        GrowthRow row;
        row.n = n;
        row.torsion = exp(log_torsion);
        row.log_ratio = log_torsion / n;
        row.gap = abs(row.log_ratio - report.predicted_limit);
        report.rows.push_back(std::move(row));
    }
    return report;
}

RationalFn<ComplexScalar> to_complex(const RationalFn<CyclotomicScalar>& f,
                                     unsigned precision_bits) {
    auto conv = [&](const LaurentPoly<CyclotomicScalar>& p) {
        LaurentPoly<ComplexScalar> out(p.num_vars());
        for (const auto& [e, c] : p.terms()) out.add_term(e, embed_complex(c, precision_bits));
        return out;
    };
    return RationalFn<ComplexScalar>(conv(f.num), conv(f.den));
}

}  // namespace talex
