#include "talex/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "talex/errors.hpp"

namespace talex {

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw validation_error("invalid rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder in Q[x]; returns quotient, leaves remainder in a.
Poly divmod(Poly& a, const Poly& b) {
    trim(a);
    if (b.empty()) throw error("polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

std::mutex g_phi_mutex;
std::map<unsigned, Poly> g_phi_cache;

const Poly& cyclotomic_impl(unsigned n) {
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    Poly result;
    if (n == 1) {
        result = {Rational(-1), Rational(1)};  // x - 1
    } else {
        Poly num(n + 1, Rational(0));  // x^n - 1
        num[0] = -1;
        num[n] = 1;
        Poly den = {Rational(1)};
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) den = mul(den, cyclotomic_impl(d));
        result = divmod(num, den);
        if (!num.empty()) throw error("cyclotomic recursion produced nonzero remainder");
    }
    return g_phi_cache.emplace(n, std::move(result)).first->second;
}

// Reduces a dense polynomial in zeta_N (any degree) to the canonical
// residue vector of length phi(N): fold x^N = 1, then divide by Phi_N.
std::vector<Rational> reduce_mod_phi(unsigned n, const Poly& raw) {
    Poly folded(std::min<std::size_t>(raw.size(), n), Rational(0));
    if (folded.empty()) folded.assign(1, Rational(0));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == 0) continue;
        folded[i % n] += raw[i];
    }
    const Poly& phi = cyclotomic_impl(n);
    divmod(folded, phi);  // remainder left in folded
    std::vector<Rational> out(euler_phi(n), Rational(0));
    for (std::size_t i = 0; i < folded.size(); ++i) out[i] = folded[i];
    return out;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    if (n < 1) throw validation_error("cyclotomic order must be >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_impl(n);
}

CyclotomicScalar CyclotomicScalar::root_of_unity(unsigned n, long k) {
    if (n < 1) throw validation_error("root_of_unity: order must be >= 1");
    long kk = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    Poly raw(static_cast<std::size_t>(kk) + 1, Rational(0));
    raw[static_cast<std::size_t>(kk)] = 1;
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    CyclotomicScalar z;
    z.order_ = n;
    z.c_ = reduce_mod_phi(n, raw);
    return z;
}

CyclotomicScalar CyclotomicScalar::from_coeffs(unsigned n, std::vector<Rational> coeffs) {
    if (n < 1) throw validation_error("cyclotomic order must be >= 1");
    if (coeffs.size() != euler_phi(n))
        throw validation_error("coefficient vector length must equal phi(N)");
    CyclotomicScalar z;
    z.order_ = n;
    z.c_ = std::move(coeffs);
    return z;
}

bool CyclotomicScalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool CyclotomicScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CyclotomicScalar::rational_value() const {
    if (!is_rational()) throw backend_error("cyclotomic value is not rational");
    return c_[0];
}

CyclotomicScalar CyclotomicScalar::promoted(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw backend_error("cyclotomic promotion requires divisible orders");
    unsigned step = m / order_;
    Poly raw(static_cast<std::size_t>(c_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    CyclotomicScalar z;
    z.order_ = m;
    z.c_ = reduce_mod_phi(m, raw);
    return z;
}

namespace {
unsigned common_order(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm(a, b));
}
}  // namespace

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
    unsigned m = common_order(order_, o.order_);
    if (order_ != m) *this = promoted(m);
    const CyclotomicScalar tmp = (o.order_ != m) ? o.promoted(m) : o;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += tmp.c_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) {
    unsigned m = common_order(order_, o.order_);
    if (order_ != m) *this = promoted(m);
    const CyclotomicScalar tmp = (o.order_ != m) ? o.promoted(m) : o;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= tmp.c_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& o) {
    unsigned m = common_order(order_, o.order_);
    if (order_ != m) *this = promoted(m);
    const CyclotomicScalar tmp = (o.order_ != m) ? o.promoted(m) : o;
    Poly prod = mul(c_, tmp.c_);
    if (prod.empty()) {
        std::fill(c_.begin(), c_.end(), Rational(0));
        return *this;
    }
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    c_ = reduce_mod_phi(m, prod);
    return *this;
}

CyclotomicScalar inverse(const CyclotomicScalar& z) {
    if (z.is_zero()) throw error("cyclotomic division by zero");
    if (z.is_rational()) {
        std::vector<Rational> c(z.coeffs().size(), Rational(0));
        c[0] = 1 / z.coeffs()[0];
        return CyclotomicScalar::from_coeffs(z.order(), std::move(c));
    }
    // Extended Euclid in Q[x] against Phi_N (irreducible over Q, so any
    // nonzero residue is invertible).
    const unsigned n = z.order();
    Poly a(z.coeffs().begin(), z.coeffs().end());
    trim(a);
    Poly b = cyclotomic_polynomial(n);
    Poly u = {Rational(1)}, u_next = {};  // Bezout coefficients of `a`
    while (!b.empty()) {
        Poly a_copy = a;
        Poly quot = divmod(a_copy, b);  // a_copy becomes remainder
        Poly u_new = u;
        Poly qu = mul(quot, u_next);
        if (u_new.size() < qu.size()) u_new.resize(qu.size(), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u_new[i] -= qu[i];
        trim(u_new);
        a = std::move(b);
        b = std::move(a_copy);
        u = std::move(u_next);
        u_next = std::move(u_new);
    }
    // a is now the gcd (a nonzero constant); u are the Bezout coefficients.
    if (a.size() != 1) throw error("cyclotomic inverse: unexpected gcd degree");
    for (auto& coef : u) coef /= a[0];
    std::vector<Rational> out(euler_phi(n), Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i];
    return CyclotomicScalar::from_coeffs(n, std::move(out));
}

CyclotomicScalar& CyclotomicScalar::operator/=(const CyclotomicScalar& o) {
    return *this *= inverse(o);
}

CyclotomicScalar operator-(const CyclotomicScalar& a) {
    CyclotomicScalar r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

CyclotomicScalar CyclotomicScalar::pow(long e) const {
    CyclotomicScalar base = e >= 0 ? *this : inverse(*this);
    unsigned long n = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    CyclotomicScalar acc = one();
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    unsigned m = common_order(a.order(), b.order());
    const CyclotomicScalar pa = a.order() == m ? a : a.promoted(m);
    const CyclotomicScalar pb = b.order() == m ? b : b.promoted(m);
    return pa.coeffs() == pb.coeffs();
}

std::string CyclotomicScalar::str() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational ac = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
        if (first) {
            if (c_[i] < 0) out += "-";
        } else {
            out += c_[i] < 0 ? " - " : " + ";
        }
        if (i == 0 || ac != 1) out += ac.get_str();
        if (i > 0) {
            if (ac != 1) out += "*";
            out += "z" + std::to_string(order_);
            if (i > 1) out += "^" + std::to_string(i);
        }
        first = false;
    }
    return first ? "0" : out;
}

ComplexScalar embed_complex(const CyclotomicScalar& z, unsigned precision_bits) {
    unsigned saved_digits = BigFloat::default_precision();
    unsigned bits = precision_bits ? precision_bits : numeric_context::precision_bits();
    BigFloat::default_precision(static_cast<unsigned>(bits * 0.30103) + 4);
    ComplexScalar zeta = unit_circle_point(2, static_cast<long>(z.order()));
    ComplexScalar acc;  // Horner
    for (auto it = z.coeffs().rbegin(); it != z.coeffs().rend(); ++it) {
        acc *= zeta;
        BigFloat coef;
        mpfr_set_q(coef.backend().data(), it->get_mpq_t(), MPFR_RNDN);
        acc += ComplexScalar(coef);
    }
    BigFloat::default_precision(saved_digits);
    return acc;
}

unsigned multiplicative_order(const CyclotomicScalar& z) {
    CyclotomicScalar acc = z;
    for (unsigned k = 1; k <= 2 * z.order(); ++k) {
        if (acc == CyclotomicScalar::one()) return k;
        acc *= z;
    }
    throw backend_error("value is not a root of unity");
}

}  // namespace talex
