#include "talex/sampling.hpp"

#include "talex/errors.hpp"
#include "talex/twisted.hpp"

namespace talex {

namespace {

const BigFloat& rank_tolerance() {
    static BigFloat tol("1e-8");
    return tol;
}

// |det [Av | v]| measures whether v is an eigenvector of A.
BigFloat eigen_defect(const ScalarMatrix<ComplexScalar>& a, const ComplexScalar& v0,
                      const ComplexScalar& v1) {
    ComplexScalar w0 = a.at(0, 0) * v0 + a.at(0, 1) * v1;
    ComplexScalar w1 = a.at(1, 0) * v0 + a.at(1, 1) * v1;
    return (w0 * v1 - w1 * v0).abs();
}

}  // namespace

ScalarMatrix<ComplexScalar> random_sl2(SampleRng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        ScalarMatrix<ComplexScalar> m(2);
        m.at(0, 0) = rng.complex_box();
        m.at(0, 1) = rng.complex_box();
        m.at(1, 0) = rng.complex_box();
        m.at(1, 1) = rng.complex_box();
        ComplexScalar det = m.determinant();
        if (det.abs() < BigFloat("0.05")) continue;
        ComplexScalar root = sqrt(det);
        ComplexScalar inv = inverse(root);
        return m * inv;
    }
    throw error("random_sl2: rejection sampling failed");
}

MatrixTriple<ComplexScalar> random_case11_triple(const TorusLinkParams& params, int a, int b,
                                                 SampleRng& rng) {
    if (!(0 < a && a < params.p && 0 < b && b < params.q))
        throw validation_error("boundary label not irreducible Case 1.1 (need 0<a<p, 0<b<q)");
    const ComplexScalar alpha = half_root_of_unity<ComplexScalar>(params.p, a);
    const ComplexScalar alpha_inv = half_root_of_unity<ComplexScalar>(params.p, -a);
    const ComplexScalar beta = half_root_of_unity<ComplexScalar>(params.q, b);
    const ComplexScalar beta_inv = half_root_of_unity<ComplexScalar>(params.q, -b);

    for (int attempt = 0; attempt < 512; ++attempt) {
        ScalarMatrix<ComplexScalar> da(2), db(2);
        da.at(0, 0) = alpha;
        da.at(1, 1) = alpha_inv;
        db.at(0, 0) = beta;
        db.at(1, 1) = beta_inv;
        ScalarMatrix<ComplexScalar> g1 = random_sl2(rng);
        ScalarMatrix<ComplexScalar> g2 = random_sl2(rng);
        MatrixTriple<ComplexScalar> tr;
        tr.p = params.p;
        tr.q = params.q;
        tr.a = a;
        tr.b = b;
        tr.tag = CaseTag::Case11;
        tr.X = g1 * da * g1.inverse();
        tr.Y = g2 * db * g2.inverse();
        for (int i = 0; i < params.mu - 1; ++i) tr.Ms.push_back(random_sl2(rng));

        // Case 1.1 pair condition u != 0.
        ComplexScalar tx = tr.X.trace(), ty = tr.Y.trace(), txy = (tr.X * tr.Y).trace();
        ComplexScalar ucond = txy * txy - txy * tx * ty + tx * tx + ty * ty - ComplexScalar(4);
        if (ucond.abs() <= rank_tolerance()) continue;

        // Irreducibility: no eigenvector of X fixed by Y and all meridians.
        bool reducible = false;
        for (int col = 0; col < 2 && !reducible; ++col) {
            ComplexScalar v0 = g1.at(0, col), v1 = g1.at(1, col);
            bool common = eigen_defect(tr.Y, v0, v1) <= rank_tolerance();
            for (const auto& m : tr.Ms)
                common = common && eigen_defect(m, v0, v1) <= rank_tolerance();
            reducible = common;
        }
        if (reducible) continue;

        tr.s = tr.Y.at(0, 0);
        tr.u = tr.Y.at(1, 0);
        tr.v = tr.Y.at(1, 1);
        return tr;
    }
    throw error("random_case11_triple: rejection sampling failed");
}

ConstancyReport local_constancy_experiment(const TorusLinkParams& params, int a, int b,
                                           int count, std::uint64_t seed) {
    if (count < 1) throw validation_error("sample count must be >= 1");
    SampleRng rng(seed);
    Presentation pres = torus_link_presentation(params);

    ConstancyReport report;
    report.max_deviation = BigFloat(0);
    std::vector<std::vector<ComplexScalar>> coeff_lists;

    for (int i = 0; i < count; ++i) {
        MatrixTriple<ComplexScalar> tr = random_case11_triple(params, a, b, rng);
        Representation<ComplexScalar> rep = torus_representation_from_triple(tr, params);
        WadaInvariant<ComplexScalar> w = wada_invariant(pres, rep);

        ConstancySample sample;
        sample.point = extract_coordinates(tr);
        sample.reduced = w.reduced_in_t;
        sample.polynomial = w.polynomial;
        report.samples.push_back(sample);

        // Unit alignment: shift the support to start at exponent 0 and
        // normalize the trailing coefficient to 1.
        LaurentPoly<ComplexScalar> poly = w.reduced_in_t.num;
        poly.chop_below(numeric_context::tolerance() * poly.max_coeff_magnitude());
        if (poly.is_zero()) throw error("constancy experiment: invariant vanished");
        auto mn = poly.min_exponents();
        mn[0] = -mn[0];
        poly = poly.shifted(mn);
        ComplexScalar trail = poly.lex_min_term().second;
        poly = poly * inverse(trail);

        int span = univariate_span(poly);
        std::vector<ComplexScalar> coeffs(static_cast<std::size_t>(span) + 1);
        for (const auto& [e, c] : poly.terms()) coeffs[static_cast<std::size_t>(e[0])] = c;
        coeff_lists.push_back(std::move(coeffs));
    }

    for (std::size_t i = 0; i < coeff_lists.size(); ++i)
        for (std::size_t j = i + 1; j < coeff_lists.size(); ++j) {
            std::size_t len = std::max(coeff_lists[i].size(), coeff_lists[j].size());
            for (std::size_t k = 0; k < len; ++k) {
                ComplexScalar ci = k < coeff_lists[i].size() ? coeff_lists[i][k] : ComplexScalar();
                ComplexScalar cj = k < coeff_lists[j].size() ? coeff_lists[j][k] : ComplexScalar();
                report.max_deviation = std::max(report.max_deviation, (ci - cj).abs());
            }
        }
    return report;
}

}  // namespace talex
