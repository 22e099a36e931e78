#ifndef TALEX_WORD_HPP
#define TALEX_WORD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace talex {

/// Freely reduced word in a free group, stored in run-length syllable form:
/// adjacent syllables always have distinct generators and nonzero exponents.
class Word {
public:
    struct Syllable {
        int gen;           // 0-based generator index
        std::int64_t exp;  // nonzero
        auto operator<=>(const Syllable&) const = default;
    };

    Word() = default;

    static Word generator(int gen, std::int64_t exp = 1);
    /// Reduces an arbitrary syllable list (merges runs, drops zero exponents).
    static Word from_syllables(const std::vector<Syllable>& syllables);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    /// Number of letters, counting multiplicity.
    std::int64_t letter_length() const;
    /// Largest generator index used; -1 for the empty word.
    int max_generator() const;

    Word inverse() const;
    Word pow(std::int64_t e) const;

    friend Word operator*(const Word& a, const Word& b);

    auto operator<=>(const Word&) const = default;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Syllable> syl_;
};

/// Formal integer combination of words: an element of Z[F_l].
/// No zero coefficients are stored.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return from_word(Word{}, 1); }
    static GroupRingElement from_word(const Word& w, std::int64_t c = 1);

    const std::map<Word, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    GroupRingElement& add_term(const Word& w, std::int64_t c);

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        return a -= b;
    }
    friend GroupRingElement operator-(const GroupRingElement& a);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const GroupRingElement& a, const Word& w);
    friend GroupRingElement operator*(const Word& w, const GroupRingElement& a);
    friend GroupRingElement operator*(const GroupRingElement& a, std::int64_t c);

    bool operator==(const GroupRingElement&) const = default;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<Word, std::int64_t> terms_;
};

}  // namespace talex

#endif
