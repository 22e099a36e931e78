#ifndef TALEX_TWISTED_HPP
#define TALEX_TWISTED_HPP

#include <optional>
#include <string>

#include "talex/fox.hpp"
#include "talex/laurent.hpp"
#include "talex/poly_matrix.hpp"
#include "talex/repn.hpp"

namespace talex {

/// Alexander matrix: the n(l-1) x nl block matrix whose (i,j) block is
/// Phi(d r_i / d x_j).  The representation is validated against the
/// presentation first (relator check).
template <ScalarField S>
PolyMatrix<S> alexander_matrix(const Presentation& pres, const Representation<S>& rep) {
    validate_representation(rep, pres);
    const int l = pres.num_generators();
    const int n = rep.dim;
    const int mu = pres.num_components;
    const int nrel = static_cast<int>(pres.relators.size());
    PolyMatrix<S> a(n * nrel, n * l, mu);
    for (int i = 0; i < nrel; ++i) {
        for (int j = 0; j < l; ++j) {
            GroupRingElement d = fox_derivative(pres.relators[i], j);
            if (d.is_zero()) continue;
            PolyMatrix<S> block = phi_map(d, rep);
            for (int bi = 0; bi < n; ++bi)
                for (int bj = 0; bj < n; ++bj)
                    a.at(n * i + bi, n * j + bj) = block.at(bi, bj);
        }
    }
    return a;
}

template <ScalarField S>
struct WadaInvariant {
    RationalFn<S> value;       // det A_j / det Phi(x_j - 1), multivariate
    int removed_column = 0;    // generator index j
    RationalFn<S> reduced_in_t;  // after substitute_product + rational_reduce
    bool polynomial = false;
};

namespace detail {

template <ScalarField S>
bool denominator_identically_zero(const LaurentPoly<S>& den) {
    if constexpr (scalar_traits<S>::exact) {
        return den.is_zero();
    } else {
        // All coefficients below 1e-12 once the largest is normalized to 1,
        // measured against the natural scale of Phi entries.
        return den.max_coeff_magnitude() <= BigFloat("1e-12");
    }
}

}  // namespace detail

/// Wada's twisted Alexander invariant det A_j / det Phi(x_j - 1).
/// The default removed column is the last generator (the y-column of the
/// torus presentations).
template <ScalarField S>
WadaInvariant<S> wada_invariant(const Presentation& pres, const Representation<S>& rep,
                                std::optional<int> column = std::nullopt) {
    const int l = pres.num_generators();
    const int n = rep.dim;
    const int mu = pres.num_components;
    if (static_cast<int>(pres.relators.size()) != l - 1)
        throw validation_error("Wada invariant needs a presentation with l-1 relators");
    int j = column.value_or(l - 1);
    if (j < 0 || j >= l) throw validation_error("removed column out of range");

    GroupRingElement xj_minus_one = GroupRingElement::from_word(Word::generator(j), 1);
    xj_minus_one -= GroupRingElement::one();
    LaurentPoly<S> den = determinant(phi_map(xj_minus_one, rep));
    if (detail::denominator_identically_zero(den))
        throw validation_error("denominator identically zero for column '" +
                               pres.generator_names[j] + "' - choose another column");

    PolyMatrix<S> a = alexander_matrix(pres, rep);
    PolyMatrix<S> aj(n * (l - 1), n * (l - 1), mu);
    for (int i = 0; i < a.rows(); ++i) {
        int cj = 0;
        for (int c = 0; c < l; ++c) {
            if (c == j) continue;
            for (int bj = 0; bj < n; ++bj) aj.at(i, n * cj + bj) = a.at(i, n * c + bj);
            ++cj;
        }
    }
    LaurentPoly<S> num = determinant(aj);

    WadaInvariant<S> w;
    w.value = RationalFn<S>(num, den);
    w.removed_column = j;
    auto reduced = rational_reduce(
        RationalFn<S>(substitute_product(num), substitute_product(den)));
    w.reduced_in_t = reduced.fn;
    w.polynomial = reduced.polynomial;
    return w;
}

/// Rescales exponents e -> factor*e (formula in t = t_1...t_mu viewed in the
/// total-degree variable).
template <ScalarField S>
LaurentPoly<S> scale_exponents(const LaurentPoly<S>& p, int factor) {
    LaurentPoly<S> r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        auto e2 = e;
        for (auto& x : e2) x *= factor;
        r.add_term(std::move(e2), c);
    }
    return r;
}

/// Divides exponents by `factor` when all are divisible; nullopt otherwise.
template <ScalarField S>
std::optional<LaurentPoly<S>> compress_exponents(const LaurentPoly<S>& p, int factor) {
    LaurentPoly<S> r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        auto e2 = e;
        for (auto& x : e2) {
            if (x % factor != 0) return std::nullopt;
            x /= factor;
        }
        r.add_term(std::move(e2), c);
    }
    return r;
}

template <ScalarField S>
struct CompareReport {
    bool equal = false;
    UnitWitness<S> witness;
    RationalFn<S> engine_reduced;   // in the product variable t when possible
    RationalFn<S> formula_reduced;
    bool engine_in_product_variable = false;
};

/// Runs the Fox-calculus engine and compares against a closed formula given
/// in the single product variable t = t_1...t_mu.
template <ScalarField S>
CompareReport<S> compare_with_closed_form(const Presentation& pres, const Representation<S>& rep,
                                          const RationalFn<S>& formula,
                                          UnitMode mode = UnitMode::AllMonomials,
                                          std::optional<int> column = std::nullopt) {
    if (formula.num_vars() != 1)
        throw validation_error("closed formula must be univariate in t");
    const int mu = pres.num_components;
    WadaInvariant<S> w = wada_invariant(pres, rep, column);

    CompareReport<S> rep_out;
    auto formula_red = rational_reduce(formula);
    rep_out.formula_reduced = formula_red.fn;

    // Engine output substituted to total degree; exponents land in mu*Z for
    // torus links, in which case we compare in the product variable itself.
    RationalFn<S> engine = w.reduced_in_t;
    auto num_c = compress_exponents(engine.num, mu);
    auto den_c = compress_exponents(engine.den, mu);
    if (num_c && den_c && !den_c->is_zero()) {
        rep_out.engine_reduced = RationalFn<S>(std::move(*num_c), std::move(*den_c));
        rep_out.engine_in_product_variable = true;
        rep_out.witness = equal_up_to_unit(rep_out.engine_reduced, rep_out.formula_reduced, mode);
    } else {
        rep_out.engine_reduced = engine;
        RationalFn<S> formula_scaled(scale_exponents(rep_out.formula_reduced.num, mu),
                                     scale_exponents(rep_out.formula_reduced.den, mu));
        rep_out.witness = equal_up_to_unit(rep_out.engine_reduced, formula_scaled, mode);
    }
    rep_out.equal = rep_out.witness.equal;
    return rep_out;
}

}  // namespace talex

#endif
