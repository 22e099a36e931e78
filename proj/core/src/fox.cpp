#include "talex/fox.hpp"

#include "talex/errors.hpp"

namespace talex {

GroupRingElement fox_derivative(const Word& w, int generator) {
    if (generator < 0) throw validation_error("generator index out of range");
    GroupRingElement d;
    Word prefix;
    for (const auto& s : w.syllables()) {
        if (s.gen == generator) {
            if (s.exp > 0) {
                for (std::int64_t m = 0; m < s.exp; ++m)
                    d.add_term(prefix * Word::generator(generator, m), 1);
            } else {
                for (std::int64_t m = 1; m <= -s.exp; ++m)
                    d.add_term(prefix * Word::generator(generator, -m), -1);
            }
        }
        prefix = prefix * Word::generator(s.gen, s.exp);
    }
    return d;
}

GroupRingElement fox_derivative(const GroupRingElement& e, int generator) {
    GroupRingElement d;
    for (const auto& [w, c] : e.terms()) d += fox_derivative(w, generator) * c;
    return d;
}

bool fox_fundamental_check(const Word& w, int num_generators) {
    GroupRingElement lhs;
    for (int j = 0; j < num_generators; ++j) {
        GroupRingElement dj = fox_derivative(w, j);
        if (dj.is_zero()) continue;
        lhs += dj * Word::generator(j);
        lhs -= dj;
    }
    GroupRingElement rhs = GroupRingElement::from_word(w, 1);
    rhs -= GroupRingElement::one();
    return lhs == rhs;
}

}  // namespace talex
