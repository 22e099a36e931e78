#include "talex/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace talex {

Word Word::generator(int gen, std::int64_t exp) {
    Word w;
    if (exp != 0) w.syl_.push_back({gen, exp});
    return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
    Word w;
    for (const auto& s : syllables) {
        if (s.exp == 0) continue;
        if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
            w.syl_.back().exp += s.exp;
            if (w.syl_.back().exp == 0) w.syl_.pop_back();
        } else {
            w.syl_.push_back(s);
        }
    }
    return w;
}

std::int64_t Word::letter_length() const {
    std::int64_t n = 0;
    for (const auto& s : syl_) n += std::llabs(s.exp);
    return n;
}

int Word::max_generator() const {
    int m = -1;
    for (const auto& s : syl_) m = std::max(m, s.gen);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
        w.syl_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(std::int64_t e) const {
    if (e == 0) return {};
    Word base = e > 0 ? *this : inverse();
    std::int64_t n = e > 0 ? e : -e;
    Word acc;
    for (std::int64_t i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

Word operator*(const Word& a, const Word& b) {
    // Interior of each factor is already reduced; only the seam can cascade.
    std::vector<Word::Syllable> out = a.syl_;
    for (const auto& s : b.syl_) {
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    Word w;
    w.syl_ = std::move(out);
    return w;
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (syl_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << "*";
        first = false;
        if (s.gen >= 0 && s.gen < static_cast<int>(names.size()))
            os << names[s.gen];
        else
            os << "g" << s.gen;
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

GroupRingElement GroupRingElement::from_word(const Word& w, std::int64_t c) {
    GroupRingElement e;
    e.add_term(w, c);
    return e;
}

GroupRingElement& GroupRingElement::add_term(const Word& w, std::int64_t c) {
    if (c == 0) return *this;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement r;
    for (const auto& [w, c] : a.terms_) r.add_term(w, -c);
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, const Word& w) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_) r.add_term(wa * w, ca);
    return r;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& a) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_) r.add_term(w * wa, ca);
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, std::int64_t c) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_) r.add_term(wa, ca * c);
    return r;
}

std::string GroupRingElement::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (c >= 0 && !first) os << " + ";
        if (c < 0) os << (first ? "-" : " - ");
        std::int64_t ac = c < 0 ? -c : c;
        if (ac != 1 || w.is_identity()) os << ac;
        if (!w.is_identity()) {
            if (ac != 1) os << "*";
            os << w.str(names);
        }
        first = false;
    }
    return os.str();
}

}  // namespace talex
