// Test-only oracles, independent of the implementation paths they check.
#ifndef TALEX_TESTS_ORACLES_HPP
#define TALEX_TESTS_ORACLES_HPP

#include <random>

#include "talex/poly_matrix.hpp"
#include "talex/word.hpp"

namespace talex::testing {

/// Determinant by recursive cofactor expansion along the first row.
template <ScalarField S>
LaurentPoly<S> cofactor_determinant(const PolyMatrix<S>& m) {
    const int n = m.rows();
    const int nv = m.num_vars();
    if (n == 0) return LaurentPoly<S>::constant(nv, scalar_traits<S>::one());
    if (n == 1) return m.at(0, 0);
    LaurentPoly<S> det(nv);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix<S> minor(n - 1, n - 1, nv);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        LaurentPoly<S> term = m.at(0, j) * cofactor_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

/// Random freely reduced word with letters from `num_gens` generators.
inline Word random_word(std::mt19937_64& rng, int num_gens, int max_letters) {
    std::uniform_int_distribution<int> len_dist(0, max_letters);
    std::uniform_int_distribution<int> gen_dist(0, num_gens - 1);
    std::uniform_int_distribution<int> exp_dist(-3, 3);
    int syllables = len_dist(rng);
    std::vector<Word::Syllable> syl;
    for (int i = 0; i < syllables; ++i) {
        int e = exp_dist(rng);
        if (e == 0) e = 1;
        syl.push_back({gen_dist(rng), e});
    }
    return Word::from_syllables(syl);
}

}  // namespace talex::testing

#endif
