#ifndef TALEX_REPN_HPP
#define TALEX_REPN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "talex/matrix.hpp"
#include "talex/poly_matrix.hpp"
#include "talex/presentation.hpp"
#include "talex/scalar.hpp"
#include "talex/word.hpp"

namespace talex {

/// Assignment generator -> SL(n) matrix, together with the abelianization
/// exponent vector per generator (copied from the presentation).
template <ScalarField S>
struct Representation {
    int dim = 2;
    std::vector<ScalarMatrix<S>> images;
    std::vector<std::vector<int>> abelianization;

    int num_generators() const { return static_cast<int>(images.size()); }
    int num_components() const {
        return abelianization.empty() ? 0 : static_cast<int>(abelianization[0].size());
    }

    ScalarMatrix<S> word_image(const Word& w) const {
        ScalarMatrix<S> acc = ScalarMatrix<S>::identity(dim);
        for (const auto& s : w.syllables()) {
            if (s.gen < 0 || s.gen >= num_generators())
                throw validation_error("word uses generator index out of range");
            acc = acc * images[s.gen].pow(s.exp);
        }
        return acc;
    }

    std::vector<int> word_monomial(const Word& w) const {
        std::vector<int> v(num_components(), 0);
        for (const auto& s : w.syllables()) {
            const auto& g = abelianization.at(s.gen);
            for (std::size_t k = 0; k < g.size(); ++k) v[k] += static_cast<int>(s.exp) * g[k];
        }
        return v;
    }
};

namespace detail {
// Matrix comparison bound used by representation validation.
inline BigFloat relator_tolerance() { return BigFloat("1e-10"); }

template <ScalarField S>
bool matrix_near(const ScalarMatrix<S>& a, const ScalarMatrix<S>& b) {
    if constexpr (scalar_traits<S>::exact) {
        return a == b;
    } else {
        BigFloat bound = relator_tolerance();
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                if ((a.at(i, j) - b.at(i, j)).abs() > bound) return false;
        return true;
    }
}
}  // namespace detail

/// Checks determinant-1 images, matching abelianization data, and that every
/// relator maps to the identity (exactly, or within 1e-10 numerically).
/// Throws validation_error naming the first violated relator.
template <ScalarField S>
void validate_representation(const Representation<S>& rep, const Presentation& pres) {
    if (rep.num_generators() != pres.num_generators())
        throw validation_error("representation has wrong number of generator images");
    if (rep.abelianization != pres.abelianization)
        throw validation_error("representation abelianization differs from presentation");
    const S one = scalar_traits<S>::one();
    for (int g = 0; g < rep.num_generators(); ++g) {
        if (rep.images[g].dim() != rep.dim)
            throw validation_error("generator image has wrong dimension");
        S det = rep.images[g].determinant();
        bool ok;
        if constexpr (scalar_traits<S>::exact)
            ok = (det == one);
        else
            ok = (det - one).abs() <= detail::relator_tolerance();
        if (!ok)
            throw validation_error("image of '" + pres.generator_names[g] +
                                   "' does not have determinant 1");
    }
    ScalarMatrix<S> id = ScalarMatrix<S>::identity(rep.dim);
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        if (!detail::matrix_near(rep.word_image(pres.relators[i]), id))
            throw validation_error("relator r_" + std::to_string(i + 1) + " violated");
    }
}

// ---------------------------------------------------------------------------
// Character points and triples
// ---------------------------------------------------------------------------

enum class CaseTag { Case11, Case12, Case21 };

template <ScalarField S>
struct CharacterQuad {
    S t_i, t_xi, t_yi, t_xyi;
};

/// Trace coordinates of a conjugacy class: eigenvalue labels (a, b) fixing
/// t_x = 2cos(a*pi/p) and t_y = 2cos(b*pi/q), plus t_xy and one quadruple
/// (t_i, t_xi, t_yi, t_xyi) per extra meridian.
template <ScalarField S>
struct CharacterPoint {
    int mu = 1;
    int a = 0, b = 0;
    S t_x, t_y, t_xy;
    std::vector<CharacterQuad<S>> quads;  // length mu - 1
    CaseTag tag = CaseTag::Case11;
};

/// Auxiliary entries of a reconstruction, kept for test introspection.
template <ScalarField S>
struct CaseAux {
    S gamma, delta, eps, zeta, theta1, theta2;
};

template <ScalarField S>
struct MatrixTriple {
    int p = 0, q = 0;
    int a = 0, b = 0;
    CaseTag tag = CaseTag::Case11;
    ScalarMatrix<S> X, Y;
    std::vector<ScalarMatrix<S>> Ms;
    S s, u, v;
    std::vector<CaseAux<S>> aux;
};

/// Left-hand side of the trace relation satisfied by tr(X Y M_i): zero means
/// the quadruple lies on the variety.
template <ScalarField S>
S check_trace_quadratic(const CharacterPoint<S>& pt, int i) {
    const auto& qd = pt.quads.at(i);
    const S &tx = pt.t_x, &ty = pt.t_y, &txy = pt.t_xy;
    const S &t1 = qd.t_i, &tx1 = qd.t_xi, &ty1 = qd.t_yi, &txy1 = qd.t_xyi;
    S lin = tx * ty1 + ty * tx1 + t1 * txy - tx * ty * t1;
    S cst = tx * tx + ty * ty + t1 * t1 + txy * txy + tx1 * tx1 + ty1 * ty1 +
            txy * tx1 * ty1 - tx * ty * txy - tx * t1 * tx1 - ty * t1 * ty1 - S(4);
    return txy1 * txy1 - lin * txy1 + cst;
}

namespace detail {

template <ScalarField S>
bool scalar_near(const S& x, const S& y) {
    if constexpr (scalar_traits<S>::exact)
        return x == y;
    else
        return (x - y).abs() <= numeric_context::tolerance() *
                                    std::max(BigFloat(1), scalar_traits<S>::magnitude(y));
}

template <ScalarField S>
S trace_xym(const ScalarMatrix<S>& x, const ScalarMatrix<S>& y, const ScalarMatrix<S>& m) {
    return (x * y * m).trace();
}

}  // namespace detail

/// Case 1.1 reconstruction (rho restricted to the torus-knot subgroup is
/// irreducible): X = diag(alpha, alpha^-1), Y = [[s,1],[u,v]] with u != 0,
/// and each M_i determined by its quadruple, the quadratic for (theta1,
/// theta2) resolved so that tr(X Y M_i) matches t_xyi.
template <ScalarField S>
MatrixTriple<S> from_character_case11(int p, int q, const CharacterPoint<S>& pt) {
    if (!(0 < pt.a && pt.a < p && 0 < pt.b && pt.b < q))
        throw validation_error("Case 1.1 requires interior labels 0<a<p, 0<b<q");
    MatrixTriple<S> tr;
    tr.p = p;
    tr.q = q;
    tr.a = pt.a;
    tr.b = pt.b;
    tr.tag = CaseTag::Case11;

    const S alpha = half_root_of_unity<S>(p, pt.a);
    const S alpha_inv = half_root_of_unity<S>(p, -pt.a);
    const S denom = alpha - alpha_inv;  // nonzero: interior label
    const S& ty = pt.t_y;
    const S& txy = pt.t_xy;

    tr.s = (txy - alpha_inv * ty) / denom;
    tr.v = ty - tr.s;
    tr.u = tr.s * tr.v - S(1);
    if (tr.u.is_zero()) throw validation_error("degenerate u=0 (Case 1.2 point)");

    tr.X = ScalarMatrix<S>(2);
    tr.X.at(0, 0) = alpha;
    tr.X.at(1, 1) = alpha_inv;
    tr.Y = ScalarMatrix<S>(2);
    tr.Y.at(0, 0) = tr.s;
    tr.Y.at(0, 1) = scalar_traits<S>::one();
    tr.Y.at(1, 0) = tr.u;
    tr.Y.at(1, 1) = tr.v;

    for (const auto& qd : pt.quads) {
        S gamma = (qd.t_xi - alpha_inv * qd.t_i) / denom;
        S zeta = qd.t_i - gamma;
        S sum = qd.t_yi - tr.v * qd.t_i - (tr.s - tr.v) * gamma;  // theta1 + theta2
        S prod = tr.u * (gamma * zeta - S(1));                    // theta1 * theta2
        auto [theta1, theta2] = solve_quadratic(-sum, prod);

        auto build = [&](const S& upper, const S& lower) {
            ScalarMatrix<S> m(2);
            m.at(0, 0) = gamma;
            m.at(0, 1) = upper / tr.u;
            m.at(1, 0) = lower;
            m.at(1, 1) = zeta;
            return m;
        };
        ScalarMatrix<S> m1 = build(theta1, theta2);
        ScalarMatrix<S> m2 = build(theta2, theta1);
        S trace1 = detail::trace_xym(tr.X, tr.Y, m1);
        S trace2 = detail::trace_xym(tr.X, tr.Y, m2);

        CaseAux<S> aux;
        aux.gamma = gamma;
        aux.zeta = zeta;
        aux.theta1 = theta1;
        aux.theta2 = theta2;
        if (detail::scalar_near(trace1, qd.t_xyi)) {
            tr.Ms.push_back(m1);
            aux.delta = theta1 / tr.u;
            aux.eps = theta2;
        } else if (detail::scalar_near(trace2, qd.t_xyi)) {
            tr.Ms.push_back(m2);
            aux.delta = theta2 / tr.u;
            aux.eps = theta1;
        } else {
            throw validation_error("t_xyi matches neither root assignment (off-variety point)");
        }
        tr.aux.push_back(std::move(aux));
    }
    return tr;
}

/// Case 1.2 (rho restricted to the torus-knot subgroup is reducible,
/// non-central): X diagonal, Y = [[beta^s1, 1], [0, beta^-s1]].  Each M_i has
/// gamma, zeta, eps from the displayed formulas; delta is pinned by det = 1.
/// Irreducibility requires eps_i != 0 for at least one i.
template <ScalarField S>
MatrixTriple<S> from_character_case12(int p, int q, int sign, const CharacterPoint<S>& pt) {
    if (!(0 < pt.a && pt.a < p))
        throw validation_error("Case 1.2 requires interior label 0<a<p (t_x != +-2)");
    if (sign != 1 && sign != -1) throw validation_error("sign must be +1 or -1");
    MatrixTriple<S> tr;
    tr.p = p;
    tr.q = q;
    tr.a = pt.a;
    tr.b = pt.b;
    tr.tag = CaseTag::Case12;

    const S alpha = half_root_of_unity<S>(p, pt.a);
    const S alpha_inv = half_root_of_unity<S>(p, -pt.a);
    const S beta = half_root_of_unity<S>(q, sign * pt.b);
    const S beta_inv = half_root_of_unity<S>(q, -sign * pt.b);
    const S denom = alpha - alpha_inv;

    tr.X = ScalarMatrix<S>(2);
    tr.X.at(0, 0) = alpha;
    tr.X.at(1, 1) = alpha_inv;
    tr.Y = ScalarMatrix<S>(2);
    tr.Y.at(0, 0) = beta;
    tr.Y.at(0, 1) = scalar_traits<S>::one();
    tr.Y.at(1, 1) = beta_inv;

    bool irreducible = false;
    for (const auto& qd : pt.quads) {
        S gamma = (qd.t_xi - alpha_inv * qd.t_i) / denom;
        S zeta = qd.t_i - gamma;
        S eps = qd.t_yi - beta * gamma - beta_inv * zeta;
        CaseAux<S> aux;
        aux.gamma = gamma;
        aux.zeta = zeta;
        aux.eps = eps;
        aux.theta1 = aux.theta2 = scalar_traits<S>::zero();
        ScalarMatrix<S> m(2);
        m.at(0, 0) = gamma;
        m.at(1, 0) = eps;
        m.at(1, 1) = zeta;
        if (!eps.is_zero()) {
            irreducible = true;
            aux.delta = (gamma * zeta - S(1)) / eps;
        } else {
            if (!(gamma * zeta == scalar_traits<S>::one()))
                throw validation_error("no determinant-1 matrix matches this quadruple");
            aux.delta = scalar_traits<S>::zero();
        }
        m.at(0, 1) = aux.delta;
        tr.Ms.push_back(m);
        tr.aux.push_back(std::move(aux));
    }
    if (!irreducible)
        throw validation_error("reducible point (condition (2) fails for all i)");
    return tr;
}

/// Case 2.1 (rho restricted to the torus-knot subgroup is abelian but not
/// central): X and Y both diagonal; M_i with delta = 1, eps = gamma*zeta - 1.
/// The irreducibility condition is checked on the first quadruple:
/// t_1 != +-2 and t_x1^2 - t_x1 t_x t_1 + t_1^2 + t_x^2 - 4 != 0.
template <ScalarField S>
MatrixTriple<S> from_character_case21(int p, int q, const CharacterPoint<S>& pt) {
    if (!(0 < pt.a && pt.a < p))
        throw validation_error("Case 2.1 requires interior label 0<a<p (X != +-I)");
    if (pt.quads.empty())
        throw validation_error("Case 2.1 requires at least one meridian quadruple");
    MatrixTriple<S> tr;
    tr.p = p;
    tr.q = q;
    tr.a = pt.a;
    tr.b = pt.b;
    tr.tag = CaseTag::Case21;

    const S alpha = half_root_of_unity<S>(p, pt.a);
    const S alpha_inv = half_root_of_unity<S>(p, -pt.a);
    const S beta = half_root_of_unity<S>(q, pt.b);
    const S beta_inv = half_root_of_unity<S>(q, -pt.b);
    const S denom = alpha - alpha_inv;

    const S& t1 = pt.quads[0].t_i;
    const S& tx1 = pt.quads[0].t_xi;
    const S tx = alpha + alpha_inv;
    if ((t1 - S(2)).is_zero() || (t1 + S(2)).is_zero())
        throw validation_error("reducible point (condition (3) fails): t_1 = +-2");
    S cond = tx1 * tx1 - tx1 * tx * t1 + t1 * t1 + tx * tx - S(4);
    if (cond.is_zero())
        throw validation_error("reducible point (condition (3) fails)");

    tr.X = ScalarMatrix<S>(2);
    tr.X.at(0, 0) = alpha;
    tr.X.at(1, 1) = alpha_inv;
    tr.Y = ScalarMatrix<S>(2);
    tr.Y.at(0, 0) = beta;
    tr.Y.at(1, 1) = beta_inv;

    for (const auto& qd : pt.quads) {
        S gamma = (qd.t_xi - alpha_inv * qd.t_i) / denom;
        S zeta = qd.t_i - gamma;
        CaseAux<S> aux;
        aux.gamma = gamma;
        aux.zeta = zeta;
        aux.delta = scalar_traits<S>::one();
        aux.eps = gamma * zeta - S(1);
        aux.theta1 = aux.theta2 = scalar_traits<S>::zero();
        ScalarMatrix<S> m(2);
        m.at(0, 0) = gamma;
        m.at(0, 1) = aux.delta;
        m.at(1, 0) = aux.eps;
        m.at(1, 1) = zeta;
        tr.Ms.push_back(m);
        tr.aux.push_back(std::move(aux));
    }
    return tr;
}

/// Trace coordinates of a triple; inverse to the from_character_* builders.
template <ScalarField S>
CharacterPoint<S> extract_coordinates(const MatrixTriple<S>& tr) {
    CharacterPoint<S> pt;
    pt.mu = static_cast<int>(tr.Ms.size()) + 1;
    pt.a = tr.a;
    pt.b = tr.b;
    pt.tag = tr.tag;
    pt.t_x = tr.X.trace();
    pt.t_y = tr.Y.trace();
    pt.t_xy = (tr.X * tr.Y).trace();
    for (const auto& m : tr.Ms) {
        CharacterQuad<S> qd;
        qd.t_i = m.trace();
        qd.t_xi = (tr.X * m).trace();
        qd.t_yi = (tr.Y * m).trace();
        qd.t_xyi = (tr.X * tr.Y * m).trace();
        pt.quads.push_back(std::move(qd));
    }
    return pt;
}

// ---------------------------------------------------------------------------
// Symmetric powers
// ---------------------------------------------------------------------------

/// Matrix of the SL(2) action on homogeneous polynomials of degree n-1 in
/// the ordered basis z1^{n-1}, z1^{n-2} z2, ..., z2^{n-1}.  sigma_2 is the
/// identity map, and sigma_n(diag(a, a^-1)) = diag(a^{n-1}, ..., a^{-(n-1)}).
template <ScalarField S>
ScalarMatrix<S> symmetric_power_matrix(const ScalarMatrix<S>& m, int n) {
    if (n < 1) throw validation_error("symmetric power requires n >= 1");
    if (m.dim() != 2) throw validation_error("symmetric power requires a 2x2 matrix");
    const S &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);

    // Coefficients of (u*z1 + w*z2)^e by z2-degree.
    auto binomial_row = [](const S& u, const S& w, int e) {
        std::vector<S> out(static_cast<std::size_t>(e) + 1);
        std::vector<S> upow(static_cast<std::size_t>(e) + 1, scalar_traits<S>::one());
        std::vector<S> wpow(static_cast<std::size_t>(e) + 1, scalar_traits<S>::one());
        for (int i = 1; i <= e; ++i) {
            upow[i] = upow[i - 1] * u;
            wpow[i] = wpow[i - 1] * w;
        }
        long long binom = 1;
        for (int k = 0; k <= e; ++k) {
            out[k] = S(static_cast<long>(binom)) * upow[e - k] * wpow[k];
            binom = binom * (e - k) / (k + 1);
        }
        return out;
    };

    ScalarMatrix<S> r(n);
    for (int j = 0; j < n; ++j) {
        auto left = binomial_row(a, c, n - 1 - j);
        auto right = binomial_row(b, d, j);
        for (std::size_t k = 0; k < left.size(); ++k)
            for (std::size_t l = 0; l < right.size(); ++l) {
                int i = static_cast<int>(k + l);
                r.at(i, j) = r.at(i, j) + left[k] * right[l];
            }
    }
    return r;
}

template <ScalarField S>
Representation<S> symmetric_power(const Representation<S>& rep, int n) {
    if (rep.dim != 2) throw validation_error("symmetric power requires a 2-dimensional input");
    Representation<S> out;
    out.dim = n;
    out.abelianization = rep.abelianization;
    out.images.reserve(rep.images.size());
    for (const auto& m : rep.images) out.images.push_back(symmetric_power_matrix(m, n));
    return out;
}

// ---------------------------------------------------------------------------
// The Phi map
// ---------------------------------------------------------------------------

/// Image of a word: the monomial from the abelianization times the matrix
/// image, as an n x n matrix of one-term Laurent polynomials.
template <ScalarField S>
PolyMatrix<S> phi_word(const Word& w, const Representation<S>& rep) {
    const int mu = rep.num_components();
    PolyMatrix<S> out(rep.dim, rep.dim, mu);
    out.set_block(0, 0, rep.word_image(w), rep.word_monomial(w));
    return out;
}

/// Z-linear extension of phi_word to the group ring.
template <ScalarField S>
PolyMatrix<S> phi_map(const GroupRingElement& g, const Representation<S>& rep) {
    const int mu = rep.num_components();
    PolyMatrix<S> out(rep.dim, rep.dim, mu);
    for (const auto& [w, c] : g.terms()) {
        ScalarMatrix<S> img = rep.word_image(w) * S(static_cast<long>(c));
        out.add_block(0, 0, img, rep.word_monomial(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact torus-link representations from eigenvalue labels
// ---------------------------------------------------------------------------

/// Representation of the reduced torus-link presentation with
/// X = diag(zeta_2p^a, zeta_2p^-a), Y upper triangular with eigenvalues
/// zeta_2q^{+-b} (so X^p = Y^q = (-1)^a I), and every meridian sent to the
/// unipotent [[1,0],[1,1]].  Requires a = b (mod 2).
template <ScalarField S>
Representation<S> torus_rep_from_labels(const TorusLinkParams& params, int a, int b) {
    if (a < 0 || a > params.p || b < 0 || b > params.q)
        throw validation_error("labels must satisfy 0<=a<=p, 0<=b<=q");
    if ((a - b) % 2 != 0)
        throw validation_error("labels must satisfy a = b (mod 2)");
    const int mu = params.mu;
    Representation<S> rep;
    rep.dim = 2;

    ScalarMatrix<S> x(2);
    x.at(0, 0) = half_root_of_unity<S>(params.p, a);
    x.at(1, 1) = half_root_of_unity<S>(params.p, -a);
    ScalarMatrix<S> y(2);
    y.at(0, 0) = half_root_of_unity<S>(params.q, b);
    y.at(1, 1) = half_root_of_unity<S>(params.q, -b);
    if (0 < b && b < params.q) y.at(0, 1) = scalar_traits<S>::one();

    ScalarMatrix<S> meridian = ScalarMatrix<S>::identity(2);
    meridian.at(1, 0) = scalar_traits<S>::one();

    for (int i = 0; i < mu - 1; ++i) rep.images.push_back(meridian);
    rep.images.push_back(x);
    rep.images.push_back(y);

    rep.abelianization.assign(mu + 1, std::vector<int>(mu, 0));
    for (int i = 0; i < mu - 1; ++i) rep.abelianization[i][i] = 1;
    rep.abelianization[mu - 1].assign(mu, params.q);
    rep.abelianization[mu].assign(mu, params.p);
    return rep;
}

/// Packs a triple (X, Y, M_1..M_{mu-1}) into a representation of the reduced
/// torus-link presentation (generator order m_1..m_{mu-1}, x, y).
template <ScalarField S>
Representation<S> torus_representation_from_triple(const MatrixTriple<S>& tr,
                                                   const TorusLinkParams& params) {
    const int mu = params.mu;
    if (static_cast<int>(tr.Ms.size()) != mu - 1)
        throw validation_error("triple has wrong number of meridian matrices for mu");
    Representation<S> rep;
    rep.dim = tr.X.dim();
    for (const auto& m : tr.Ms) rep.images.push_back(m);
    rep.images.push_back(tr.X);
    rep.images.push_back(tr.Y);
    rep.abelianization.assign(mu + 1, std::vector<int>(mu, 0));
    for (int i = 0; i < mu - 1; ++i) rep.abelianization[i][i] = 1;
    rep.abelianization[mu - 1].assign(mu, params.q);
    rep.abelianization[mu].assign(mu, params.p);
    return rep;
}

}  // namespace talex

#endif
