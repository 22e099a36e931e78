#ifndef TALEX_LAURENT_HPP
#define TALEX_LAURENT_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "talex/errors.hpp"
#include "talex/scalar.hpp"

namespace talex {

/// Multivariate Laurent polynomial over a scalar field S: a finite map from
/// exponent vectors (entries may be negative) to nonzero coefficients.
template <ScalarField S>
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, S>;

    explicit LaurentPoly(int num_vars = 1) : nvars_(num_vars) {
        if (num_vars < 1) throw validation_error("polynomial needs at least one variable");
    }

    static LaurentPoly constant(int num_vars, const S& c) {
        LaurentPoly p(num_vars);
        p.add_term(Exponents(num_vars, 0), c);
        return p;
    }
    static LaurentPoly monomial(Exponents exp, const S& c) {
        LaurentPoly p(static_cast<int>(exp.size()));
        p.add_term(std::move(exp), c);
        return p;
    }
    static LaurentPoly variable(int num_vars, int index, int power = 1) {
        LaurentPoly p(num_vars);
        Exponents e(num_vars, 0);
        e.at(index) = power;
        p.add_term(std::move(e), scalar_traits<S>::one());
        return p;
    }

    int num_vars() const { return nvars_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t num_terms() const { return t_.size(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first == Exponents(nvars_, 0) &&
               t_.begin()->second == scalar_traits<S>::one();
    }

    LaurentPoly& add_term(Exponents exp, const S& c) {
        if (static_cast<int>(exp.size()) != nvars_)
            throw validation_error("exponent vector length mismatch");
        if (c.is_zero()) return *this;
        auto it = t_.find(exp);
        if (it == t_.end()) {
            t_.emplace(std::move(exp), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
        return *this;
    }

    S coeff(const Exponents& exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? scalar_traits<S>::zero() : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.nvars_);
        for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.t_) {
            for (const auto& [eb, cb] : b.t_) {
                for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const S& c) {
        LaurentPoly r(a.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, coef] : a.t_) {
            S v = coef * c;
            if (!v.is_zero()) r.t_.emplace(e, v);
        }
        return r;
    }
    friend LaurentPoly operator*(const S& c, const LaurentPoly& a) { return a * c; }

    bool operator==(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_ || t_.size() != o.t_.size()) return false;
        auto it = t_.begin();
        auto jt = o.t_.begin();
        for (; it != t_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }

    /// Per-variable minimum exponent over the support (zero poly: all 0).
    Exponents min_exponents() const {
        Exponents m(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (int k = 0; k < nvars_; ++k) m[k] = std::min(m[k], e[k]);
            }
        }
        return m;
    }

    /// Multiplies by the monomial t^delta.
    LaurentPoly shifted(const Exponents& delta) const {
        LaurentPoly r(nvars_);
        Exponents e(nvars_);
        for (const auto& [exp, c] : t_) {
            for (int k = 0; k < nvars_; ++k) e[k] = exp[k] + delta[k];
            r.t_.emplace(e, c);
        }
        return r;
    }

    const std::pair<const Exponents, S>& lex_min_term() const {
        if (t_.empty()) throw error("lex_min_term on zero polynomial");
        return *t_.begin();
    }
    const std::pair<const Exponents, S>& lex_max_term() const {
        if (t_.empty()) throw error("lex_max_term on zero polynomial");
        return *t_.rbegin();
    }

    /// Largest coefficient magnitude (numeric backend); 1 for nonzero exact.
    BigFloat max_coeff_magnitude() const {
        BigFloat m(0);
        for (const auto& [e, c] : t_) m = std::max(m, scalar_traits<S>::magnitude(c));
        return m;
    }

    /// Numeric cleanup: drops coefficients negligible relative to `scale`.
    /// Exact backend: no-op (exact zeros are never stored).
    void chop(const BigFloat& scale) {
        if constexpr (scalar_traits<S>::exact) {
            (void)scale;
        } else {
            for (auto it = t_.begin(); it != t_.end();) {
                if (scalar_traits<S>::negligible(it->second, scale))
                    it = t_.erase(it);
                else
                    ++it;
            }
        }
    }

    bool is_negligible(const BigFloat& scale) const {
        for (const auto& [e, c] : t_)
            if (!scalar_traits<S>::negligible(c, scale)) return false;
        return true;
    }

    void remove_term(const Exponents& exp) { t_.erase(exp); }

    /// Drops coefficients with magnitude <= bound (numeric backend only).
    void chop_below(const BigFloat& bound) {
        if constexpr (!scalar_traits<S>::exact) {
            for (auto it = t_.begin(); it != t_.end();) {
                if (scalar_traits<S>::magnitude(it->second) <= bound)
                    it = t_.erase(it);
                else
                    ++it;
            }
        } else {
            (void)bound;
        }
    }

    S evaluate(const std::vector<S>& point) const;
    /// Value at t_1 = ... = t_mu = 1 (the sum of coefficients).
    S evaluate_all_ones() const {
        S acc = scalar_traits<S>::zero();
        for (const auto& [e, c] : t_) acc = acc + c;
        return acc;
    }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_vars(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_)
            throw validation_error("operands have different variable counts");
    }

    int nvars_;
    TermMap t_;
};

template <ScalarField S>
S LaurentPoly<S>::evaluate(const std::vector<S>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw validation_error("evaluation point has wrong dimension");
    S acc = scalar_traits<S>::zero();
    for (const auto& [e, c] : t_) {
        S term = c;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            S base = e[k] > 0 ? point[k] : S(1) / point[k];
            long n = e[k] > 0 ? e[k] : -static_cast<long>(e[k]);
            for (long i = 0; i < n; ++i) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

template <ScalarField S>
std::string LaurentPoly<S>::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    auto var_name = [&](int k) {
        if (k < static_cast<int>(names.size())) return names[k];
        if (nvars_ == 1) return std::string("t");
        return "t" + std::to_string(k + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        bool has_var = std::any_of(it->first.begin(), it->first.end(), [](int e) { return e != 0; });
        std::string cs = scalar_traits<S>::str(it->second);
        bool unit_coeff = (cs == "1");
        if (!unit_coeff || !has_var) {
            bool needs_parens = cs.find_first_of("+- ") != std::string::npos && has_var;
            os << (needs_parens ? "(" + cs + ")" : cs);
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int k = 0; k < nvars_; ++k) {
            if (it->first[k] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_name(k);
            if (it->first[k] != 1) os << "^" << it->first[k];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact division, substitution, gcd
// ---------------------------------------------------------------------------

/// Exact division in the Laurent ring; throws error("inexact division")
/// when b does not divide a.
template <ScalarField S>
LaurentPoly<S> divexact(const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
    if (a.num_vars() != b.num_vars())
        throw validation_error("operands have different variable counts");
    if (b.is_zero()) throw error("division by zero polynomial");
    const int nv = a.num_vars();
    if (a.is_zero()) return LaurentPoly<S>(nv);

    // Shift both into the ordinary polynomial ring.
    auto amin = a.min_exponents();
    auto bmin = b.min_exponents();
    std::vector<int> neg_amin(nv), neg_bmin(nv), out_shift(nv);
    for (int k = 0; k < nv; ++k) {
        neg_amin[k] = -amin[k];
        neg_bmin[k] = -bmin[k];
        out_shift[k] = amin[k] - bmin[k];
    }
    LaurentPoly<S> r = a.shifted(neg_amin);
    LaurentPoly<S> bb = b.shifted(neg_bmin);

    BigFloat scale = std::max(r.max_coeff_magnitude(), bb.max_coeff_magnitude());
    const std::vector<int> eb = bb.lex_max_term().first;
    const S cb = bb.lex_max_term().second;
    LaurentPoly<S> q(nv);
    std::vector<int> e(nv);
    while (!r.is_zero()) {
        const std::vector<int> er = r.lex_max_term().first;
        const S cr = r.lex_max_term().second;
        bool ok = true;
        for (int k = 0; k < nv; ++k) {
            e[k] = er[k] - eb[k];
            if (e[k] < 0) ok = false;
        }
        if (!ok) throw error("inexact division");
        S c = cr / cb;
        q.add_term(e, c);
        r -= LaurentPoly<S>::monomial(e, c) * bb;
        r.remove_term(er);  // numeric: clear rounding residue at the lead
        r.chop(scale);
    }
    return q.shifted(out_shift);
}

/// Collapses t_i -> t: the exponent of each monomial becomes its total degree.
template <ScalarField S>
LaurentPoly<S> substitute_product(const LaurentPoly<S>& p) {
    LaurentPoly<S> r(1);
    for (const auto& [e, c] : p.terms()) {
        int total = 0;
        for (int x : e) total += x;
        r.add_term({total}, c);
    }
    return r;
}

/// Degree of a univariate Laurent polynomial's support span; -1 for zero.
template <ScalarField S>
int univariate_span(const LaurentPoly<S>& p) {
    if (p.is_zero()) return -1;
    return p.lex_max_term().first[0] - p.lex_min_term().first[0];
}

/// Monic gcd of univariate (Laurent) polynomials, normalized to have
/// nonnegative support starting at exponent 0.
template <ScalarField S>
LaurentPoly<S> gcd_univariate(LaurentPoly<S> a, LaurentPoly<S> b) {
    if (a.num_vars() != 1 || b.num_vars() != 1)
        throw validation_error("gcd_univariate requires univariate operands");
    auto normalize = [](LaurentPoly<S>& p) {
        if (p.is_zero()) return;
        auto mn = p.min_exponents();
        mn[0] = -mn[0];
        p = p.shifted(mn);
        S lead = p.lex_max_term().second;
        p = p * (S(1) / lead);
        if constexpr (!scalar_traits<S>::exact) p.chop(BigFloat(1));
    };
    normalize(a);
    normalize(b);
    while (!b.is_zero()) {
        // remainder of a by b
        const int deg_b = b.lex_max_term().first[0];
        const S cb = b.lex_max_term().second;
        LaurentPoly<S> r = a;
        while (!r.is_zero() && r.lex_max_term().first[0] >= deg_b) {
            const std::vector<int> er = r.lex_max_term().first;
            const S cr = r.lex_max_term().second;
            std::vector<int> e = {er[0] - deg_b};
            S c = cr / cb;
            r -= LaurentPoly<S>::monomial(e, c) * b;
            r.remove_term(er);
            if constexpr (!scalar_traits<S>::exact) r.chop(BigFloat(1));
        }
        normalize(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return LaurentPoly<S>::constant(1, scalar_traits<S>::one());
    return a;
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// Reduced or unreduced quotient of Laurent polynomials; equality is
/// cross-multiplication equality.
template <ScalarField S>
struct RationalFn {
    LaurentPoly<S> num;
    LaurentPoly<S> den;

    explicit RationalFn(int num_vars = 1)
        : num(num_vars), den(LaurentPoly<S>::constant(num_vars, scalar_traits<S>::one())) {}
    RationalFn(LaurentPoly<S> n, LaurentPoly<S> d) : num(std::move(n)), den(std::move(d)) {
        if (num.num_vars() != den.num_vars())
            throw validation_error("numerator/denominator variable counts differ");
        if (den.is_zero()) throw validation_error("zero denominator");
    }

    static RationalFn from_poly(LaurentPoly<S> p) {
        int nv = p.num_vars();
        return RationalFn(std::move(p), LaurentPoly<S>::constant(nv, scalar_traits<S>::one()));
    }

    int num_vars() const { return num.num_vars(); }

    /// Cross-multiplication equality (exact; numeric uses coefficient
    /// tolerance through S::operator==).
    friend bool operator==(const RationalFn& f, const RationalFn& g) {
        return f.num * g.den == g.num * f.den;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (den.is_one()) return num.str(names);
        return "(" + num.str(names) + ") / (" + den.str(names) + ")";
    }
};

template <ScalarField S>
struct ReduceResult {
    RationalFn<S> fn;
    bool polynomial = false;  // denominator reduced to a unit monomial
    bool reduced = false;     // false: multivariate reduction unsupported
};

/// Cancels a univariate quotient by the monic gcd, or a monomial
/// denominator in any arity.  Class-preserving: numerator and denominator
/// are always divided by the same factor.
template <ScalarField S>
ReduceResult<S> rational_reduce(const RationalFn<S>& f) {
    ReduceResult<S> out;
    const int nv = f.num_vars();
    if (f.num.is_zero()) {
        out.fn = RationalFn<S>(nv);
        out.polynomial = true;
        out.reduced = true;
        return out;
    }
    if (f.den.is_monomial()) {
        LaurentPoly<S> unit = f.den;
        out.fn = RationalFn<S>(divexact(f.num, unit), divexact(f.den, unit));
        out.polynomial = true;
        out.reduced = true;
        return out;
    }
    if (nv != 1) {
        out.fn = f;  // multivariate reduction unsupported
        return out;
    }
    LaurentPoly<S> g = gcd_univariate(f.num, f.den);
    LaurentPoly<S> n = f.num, d = f.den;
    if (univariate_span(g) >= 1) {
        n = divexact(n, g);
        d = divexact(d, g);
    }
    if (d.is_monomial()) {
        LaurentPoly<S> unit = d;
        n = divexact(n, unit);
        d = divexact(d, unit);
        out.polynomial = true;
    }
    out.fn = RationalFn<S>(std::move(n), std::move(d));
    out.reduced = true;
    return out;
}

// ---------------------------------------------------------------------------
// Equality up to units
// ---------------------------------------------------------------------------

enum class UnitMode {
    EvenMonomials,  // unit t_1^{2k_1}...t_mu^{2k_mu}; sign -1 admitted only numerically
    AllMonomials,   // unit +-t^k, any exponent vector
};

template <ScalarField S>
struct UnitWitness {
    bool equal = false;
    S coeff = scalar_traits<S>::zero();
    std::vector<int> exponent;
};

/// Decides f = unit * g as rational functions, where unit is a monomial of
/// the shape selected by `mode`; returns the witness unit found.
template <ScalarField S>
UnitWitness<S> equal_up_to_unit(const RationalFn<S>& f, const RationalFn<S>& g, UnitMode mode) {
    UnitWitness<S> w;
    if (f.num_vars() != g.num_vars()) return w;
    const int nv = f.num_vars();
    LaurentPoly<S> p = f.num * g.den;
    LaurentPoly<S> q = g.num * f.den;
    if constexpr (!scalar_traits<S>::exact) {
        BigFloat scale = std::max(p.max_coeff_magnitude(), q.max_coeff_magnitude());
        BigFloat bound = numeric_context::tolerance();
        if (scale > 1) bound *= scale;
        p.chop_below(bound);
        q.chop_below(bound);
    }
    if (p.is_zero() && q.is_zero()) {
        w.equal = true;
        w.coeff = scalar_traits<S>::one();
        w.exponent.assign(nv, 0);
        return w;
    }
    if (p.is_zero() || q.is_zero()) return w;
    if (p.num_terms() != q.num_terms()) return w;

    const auto& [ep, cp] = p.lex_min_term();
    const auto& [eq, cq] = q.lex_min_term();
    std::vector<int> m(nv);
    for (int k = 0; k < nv; ++k) m[k] = ep[k] - eq[k];
    S c = cp / cq;

    // Admissible unit coefficient?
    const S one = scalar_traits<S>::one();
    bool plus = (c == one), minus = (c == -one);
    if (!plus && !minus) return w;
    if (mode == UnitMode::EvenMonomials) {
        for (int k = 0; k < nv; ++k)
            if (m[k] % 2 != 0) return w;
        if (minus && scalar_traits<S>::exact) return w;
    }

    // Verify p == c * t^m * q term by term.
    LaurentPoly<S> rhs = q.shifted(m) * c;
    if constexpr (scalar_traits<S>::exact) {
        if (!(p == rhs)) return w;
    } else {
        LaurentPoly<S> diff = p - rhs;
        BigFloat scale = std::max(BigFloat(1), p.max_coeff_magnitude());
        if (!diff.is_zero()) {
            for (const auto& [e, coefd] : diff.terms())
                if (scalar_traits<S>::magnitude(coefd) > numeric_context::tolerance() * scale)
                    return w;
        }
    }
    w.equal = true;
    w.coeff = c;
    w.exponent = std::move(m);
    return w;
}

}  // namespace talex

#endif
