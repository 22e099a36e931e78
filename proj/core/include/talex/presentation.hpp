#ifndef TALEX_PRESENTATION_HPP
#define TALEX_PRESENTATION_HPP

#include <string>
#include <vector>

#include "talex/word.hpp"

namespace talex {

/// Finite group presentation together with the abelianization data used by
/// the twisted Alexander machinery: each generator maps to an integer vector
/// of length mu (one slot per link component, written multiplicatively).
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;
    int num_components = 1;                  // mu
    std::vector<std::vector<int>> abelianization;  // per generator, length mu

    int num_generators() const { return static_cast<int>(generator_names.size()); }

    /// Index of a named generator, or -1.
    int generator_index(const std::string& name) const;

    /// Image of a word under the abelianization, as an exponent vector.
    std::vector<int> word_abelianization(const Word& w) const;

    /// Throws validation_error on broken invariants: bad/duplicate names,
    /// wrong vector lengths, or a relator outside the abelianization kernel.
    void validate() const;
};

/// Parameters of the torus link T(mu*p, mu*q); r and s satisfy p*s + q*r = 1.
struct TorusLinkParams {
    int mu = 1;
    int p = 2;
    int q = 3;
    long r = 0;
    long s = 0;

    /// Computes the canonical (r, s): |r| minimal among r = q^{-1} (mod p),
    /// ties broken toward r < 0 except r >= 0 when q = 1.
    /// Throws validation_error unless mu >= 1, p,q >= 1 and gcd(p,q) = 1.
    static TorusLinkParams make(int mu, int p, int q);
};

/// Parses the line-based presentation text format:
///   gens: x y
///   mu: 1
///   abel: x=(3) y=(2)
///   rels: x^2*y^-3
/// Words are `name[^int]` factors joined by `*`; a relation `u=v` is stored
/// as u*v^-1.  Throws parse_error (with line/column) or validation_error.
Presentation parse_presentation(const std::string& text);

/// Renders a presentation back into the text format accepted by the parser.
std::string presentation_to_text(const Presentation& p);

/// Reduced presentation of the torus-link group on generators
/// m_1..m_{mu-1}, x, y with relators x^p m_i x^-p m_i^-1 and x^p y^-q.
/// Abelianization: m_i -> e_i, x -> q*(1..1), y -> p*(1..1).
Presentation torus_link_presentation(const TorusLinkParams& params);

/// Unreduced presentation on m_1..m_mu, x, y, l with relators
/// m_mu...m_1 (x^r y^s)^-1, [l, m_i] (1<=i<=mu), l x^-p, x^p y^-q.
Presentation torus_link_presentation_full(const TorusLinkParams& params);

}  // namespace talex

#endif
