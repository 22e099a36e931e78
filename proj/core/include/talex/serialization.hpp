#ifndef TALEX_SERIALIZATION_HPP
#define TALEX_SERIALIZATION_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "talex/laurent.hpp"
#include "talex/repn.hpp"
#include "talex/twisted.hpp"

namespace talex {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars: cyclotomic {"N": 12, "coeffs": ["1/2", "0", ...]},
//          complex {"re": "...", "im": "..."} (decimal strings).
// ---------------------------------------------------------------------------

inline Json to_json(const CyclotomicScalar& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_string(c));
    return Json{{"N", s.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const ComplexScalar& s) {
    return Json{{"re", s.re.str(0, std::ios_base::scientific)},
                {"im", s.im.str(0, std::ios_base::scientific)}};
}

template <ScalarField S>
S scalar_from_json(const Json& j);

template <>
inline CyclotomicScalar scalar_from_json<CyclotomicScalar>(const Json& j) {
    if (!j.contains("N") || !j.contains("coeffs"))
        throw validation_error("cyclotomic scalar JSON needs fields N and coeffs");
    unsigned n = j.at("N").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return CyclotomicScalar::from_coeffs(n, std::move(coeffs));
}

template <>
inline ComplexScalar scalar_from_json<ComplexScalar>(const Json& j) {
    if (!j.contains("re") || !j.contains("im"))
        throw validation_error("complex scalar JSON needs fields re and im");
    return {BigFloat(j.at("re").get<std::string>()), BigFloat(j.at("im").get<std::string>())};
}

// ---------------------------------------------------------------------------
// Polynomials and rational functions
// ---------------------------------------------------------------------------

inline std::vector<std::string> default_var_names(int num_vars) {
    if (num_vars == 1) return {"t"};
    std::vector<std::string> names;
    for (int i = 1; i <= num_vars; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

template <ScalarField S>
Json to_json(const LaurentPoly<S>& p, std::vector<std::string> vars = {}) {
    if (vars.empty()) vars = default_var_names(p.num_vars());
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", e}, {"coef", to_json(c)}});
    return Json{{"vars", vars}, {"terms", terms}};
}

template <ScalarField S>
LaurentPoly<S> poly_from_json(const Json& j) {
    int nv = static_cast<int>(j.at("vars").size());
    LaurentPoly<S> p(nv);
    for (const auto& t : j.at("terms")) {
        std::vector<int> e = t.at("exp").get<std::vector<int>>();
        p.add_term(std::move(e), scalar_from_json<S>(t.at("coef")));
    }
    return p;
}

template <ScalarField S>
Json to_json(const RationalFn<S>& f, std::vector<std::string> vars = {}) {
    if (vars.empty()) vars = default_var_names(f.num_vars());
    return Json{{"num", to_json(f.num, vars)}, {"den", to_json(f.den, vars)}};
}

template <ScalarField S>
RationalFn<S> rational_fn_from_json(const Json& j) {
    return RationalFn<S>(poly_from_json<S>(j.at("num")), poly_from_json<S>(j.at("den")));
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

template <ScalarField S>
Json to_json(const Representation<S>& rep, const Presentation& pres) {
    Json gens = Json::object();
    Json abel = Json::object();
    for (int g = 0; g < rep.num_generators(); ++g) {
        Json rows = Json::array();
        for (int i = 0; i < rep.dim; ++i) {
            Json row = Json::array();
            for (int j = 0; j < rep.dim; ++j) row.push_back(to_json(rep.images[g].at(i, j)));
            rows.push_back(row);
        }
        gens[pres.generator_names[g]] = rows;
        abel[pres.generator_names[g]] = rep.abelianization[g];
    }
    return Json{{"dim", rep.dim},
                {"backend", scalar_traits<S>::backend_name},
                {"generators", gens},
                {"abel", abel}};
}

template <ScalarField S>
Representation<S> representation_from_json(const Json& j, const Presentation& pres) {
    if (j.at("backend").get<std::string>() != scalar_traits<S>::backend_name)
        throw validation_error("representation backend is '" +
                               j.at("backend").get<std::string>() + "', expected '" +
                               scalar_traits<S>::backend_name + "'");
    Representation<S> rep;
    rep.dim = j.at("dim").get<int>();
    if (rep.dim < 1) throw validation_error("representation dimension must be >= 1");
    const Json& gens = j.at("generators");
    const Json& abel = j.at("abel");
    for (const auto& name : pres.generator_names) {
        if (!gens.contains(name))
            throw validation_error("representation file missing generator '" + name + "'");
        const Json& rows = gens.at(name);
        if (static_cast<int>(rows.size()) != rep.dim)
            throw validation_error("matrix for '" + name + "' has wrong row count");
        ScalarMatrix<S> m(rep.dim);
        for (int i = 0; i < rep.dim; ++i) {
            if (static_cast<int>(rows[i].size()) != rep.dim)
                throw validation_error("matrix for '" + name + "' is not square");
            for (int jj = 0; jj < rep.dim; ++jj) m.at(i, jj) = scalar_from_json<S>(rows[i][jj]);
        }
        rep.images.push_back(std::move(m));
        if (!abel.contains(name))
            throw validation_error("representation file missing abel vector for '" + name + "'");
        rep.abelianization.push_back(abel.at(name).get<std::vector<int>>());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

template <ScalarField S>
Json to_json(const UnitWitness<S>& w) {
    if (!w.equal) return Json(nullptr);
    return Json{{"coeff", to_json(w.coeff)}, {"exp", w.exponent}};
}

template <ScalarField S>
Json wada_report_json(const WadaInvariant<S>& w, const Presentation& pres) {
    return Json{{"delta", to_json(w.value)},
                {"reduced_in_t", to_json(w.reduced_in_t)},
                {"polynomial", w.polynomial},
                {"removed_column", pres.generator_names[w.removed_column]},
                {"backend", scalar_traits<S>::backend_name},
                {"unit_witness", Json(nullptr)}};
}

template <ScalarField S>
Json compare_report_json(const CompareReport<S>& r) {
    return Json{{"equal", r.equal},
                {"unit_witness", to_json(r.witness)},
                {"engine_reduced", to_json(r.engine_reduced)},
                {"formula_reduced", to_json(r.formula_reduced)},
                {"engine_in_product_variable", r.engine_in_product_variable}};
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace talex

#endif
