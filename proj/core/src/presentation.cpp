#include "talex/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "talex/errors.hpp"

namespace talex {

int Presentation::generator_index(const std::string& name) const {
    for (int i = 0; i < num_generators(); ++i)
        if (generator_names[i] == name) return i;
    return -1;
}

std::vector<int> Presentation::word_abelianization(const Word& w) const {
    std::vector<int> v(num_components, 0);
    for (const auto& s : w.syllables()) {
        if (s.gen < 0 || s.gen >= num_generators())
            throw validation_error("word uses generator index out of range");
        const auto& g = abelianization[s.gen];
        for (int k = 0; k < num_components; ++k)
            v[k] += static_cast<int>(s.exp) * g[k];
    }
    return v;
}

namespace {

bool valid_generator_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

void Presentation::validate() const {
    if (num_components < 1) throw validation_error("mu must be >= 1");
    if (generator_names.empty()) throw validation_error("presentation needs at least one generator");
    std::set<std::string> seen;
    for (const auto& n : generator_names) {
        if (!valid_generator_name(n))
            throw validation_error("invalid generator name '" + n + "'");
        if (!seen.insert(n).second)
            throw validation_error("duplicate generator name '" + n + "'");
    }
    if (abelianization.size() != generator_names.size())
        throw validation_error("abelianization must assign a vector to every generator");
    for (std::size_t i = 0; i < abelianization.size(); ++i)
        if (static_cast<int>(abelianization[i].size()) != num_components)
            throw validation_error("abelianization vector for '" + generator_names[i] +
                                   "' has wrong length (expected mu = " +
                                   std::to_string(num_components) + ")");
    for (std::size_t i = 0; i < relators.size(); ++i) {
        auto v = word_abelianization(relators[i]);
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }))
            throw validation_error("relator r_" + std::to_string(i + 1) +
                                   " not in kernel of abelianization");
    }
}

TorusLinkParams TorusLinkParams::make(int mu, int p, int q) {
    if (mu < 1) throw validation_error("mu must be >= 1");
    if (p < 1 || q < 1) throw validation_error("p and q must be >= 1");
    if (std::gcd(p, q) != 1)
        throw validation_error("p,q not coprime: gcd(" + std::to_string(p) + "," +
                               std::to_string(q) + ") != 1");
    // Extended Euclid for p*s + q*r = 1, then pick the representative of
    // r = q^{-1} (mod p) with minimal |r|.
    long s0 = 0, r0 = 0;
    {
        long old_r = p, cur_r = q;
        long old_x = 1, cur_x = 0;  // coefficients of p
        long old_y = 0, cur_y = 1;  // coefficients of q
        while (cur_r != 0) {
            long quot = old_r / cur_r;
            std::swap(old_r -= quot * cur_r, cur_r);
            std::swap(old_x -= quot * cur_x, cur_x);
            std::swap(old_y -= quot * cur_y, cur_y);
        }
        s0 = old_x;
        r0 = old_y;  // p*s0 + q*r0 = gcd = 1
    }
    long r = ((r0 % p) + p) % p;  // representative in [0, p)
    if (p > 1 && r > p - r && q != 1) r -= p;
    if (p > 1 && 2 * r == p && q != 1) r -= p;  // tie |r| = |r-p|: prefer r < 0
    TorusLinkParams t;
    t.mu = mu;
    t.p = p;
    t.q = q;
    t.r = r;
    t.s = (1 - q * r) / p;
    return t;
}

// ---------------------------------------------------------------------------
// Text format parser
// ---------------------------------------------------------------------------

namespace {

// Character-level cursor over one line, reporting 1-based columns.
struct LineCursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, static_cast<int>(pos) + 1);
    }
    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!eof() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool consume(char c) {
        if (!eof() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        if (eof() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected generator name");
        while (!eof() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
    long read_int() {
        skip_ws();
        std::size_t start = pos;
        if (consume('-') || consume('+')) {
        }
        if (eof() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        while (!eof() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::stol(text.substr(start, pos - start));
    }
};

Word parse_word(LineCursor& c, const std::vector<std::string>& gens) {
    std::vector<Word::Syllable> syl;
    while (true) {
        std::string name = c.read_name();
        auto it = std::find(gens.begin(), gens.end(), name);
        if (it == gens.end()) c.fail("unknown generator '" + name + "'");
        long e = 1;
        c.skip_ws();
        if (c.consume('^')) e = c.read_int();
        syl.push_back({static_cast<int>(it - gens.begin()), e});
        c.skip_ws();
        if (!c.consume('*')) break;
    }
    return Word::from_syllables(syl);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool have_gens = false, have_mu = false, have_abel = false, have_rels = false;
    std::vector<std::pair<std::string, std::vector<int>>> abel_entries;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        LineCursor c{raw, lineno};
        c.skip_ws();
        if (c.eof() || c.peek() == '#') continue;

        std::string key = c.read_name();
        if (!c.consume(':')) c.fail("expected ':' after '" + key + "'");

        if (key == "gens") {
            if (have_gens) c.fail("duplicate 'gens:' line");
            have_gens = true;
            c.skip_ws();
            while (!c.eof()) {
                p.generator_names.push_back(c.read_name());
                c.skip_ws();
            }
            if (p.generator_names.empty()) c.fail("expected at least one generator");
        } else if (key == "mu") {
            if (have_mu) c.fail("duplicate 'mu:' line");
            have_mu = true;
            p.num_components = static_cast<int>(c.read_int());
            c.skip_ws();
            if (!c.eof()) c.fail("trailing characters after mu");
        } else if (key == "abel") {
            if (have_abel) c.fail("duplicate 'abel:' line");
            have_abel = true;
            c.skip_ws();
            while (!c.eof()) {
                std::string name = c.read_name();
                c.skip_ws();
                if (!c.consume('=')) c.fail("expected '=' in abel assignment");
                if (!c.consume('(')) c.fail("expected '(' in abel assignment");
                std::vector<int> v;
                while (true) {
                    v.push_back(static_cast<int>(c.read_int()));
                    c.skip_ws();
                    if (c.consume(',')) continue;
                    if (c.consume(')')) break;
                    c.fail("expected ',' or ')' in abel vector");
                }
                abel_entries.emplace_back(name, v);
                c.skip_ws();
            }
        } else if (key == "rels") {
            if (have_rels) c.fail("duplicate 'rels:' line");
            have_rels = true;
            c.skip_ws();
            while (!c.eof()) {
                Word u = parse_word(c, p.generator_names);
                c.skip_ws();
                if (c.consume('=')) {
                    Word v = parse_word(c, p.generator_names);
                    p.relators.push_back(u * v.inverse());
                } else {
                    p.relators.push_back(u);
                }
                c.skip_ws();
                if (!c.consume(',')) break;
            }
            c.skip_ws();
            if (!c.eof()) c.fail("trailing characters after relator list");
        } else {
            c.fail("unknown section '" + key + "'");
        }
    }

    if (!have_gens) throw parse_error("missing 'gens:' line", lineno, 1);
    if (!have_mu) throw parse_error("missing 'mu:' line", lineno, 1);
    if (!have_abel) throw parse_error("missing 'abel:' line", lineno, 1);
    if (!have_rels) throw parse_error("missing 'rels:' line", lineno, 1);

    p.abelianization.assign(p.generator_names.size(), {});
    for (const auto& [name, v] : abel_entries) {
        int idx = p.generator_index(name);
        if (idx < 0) throw validation_error("abel assignment for unknown generator '" + name + "'");
        if (!p.abelianization[idx].empty())
            throw validation_error("duplicate abel assignment for '" + name + "'");
        p.abelianization[idx] = v;
    }
    for (int i = 0; i < p.num_generators(); ++i)
        if (p.abelianization[i].empty())
            throw validation_error("missing abel assignment for '" + p.generator_names[i] + "'");

    p.validate();
    return p;
}

std::string presentation_to_text(const Presentation& p) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& n : p.generator_names) os << " " << n;
    os << "\nmu: " << p.num_components << "\nabel:";
    for (int i = 0; i < p.num_generators(); ++i) {
        os << " " << p.generator_names[i] << "=(";
        for (int k = 0; k < p.num_components; ++k) {
            if (k) os << ",";
            os << p.abelianization[i][k];
        }
        os << ")";
    }
    os << "\nrels:";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        os << (i ? ", " : " ") << p.relators[i].str(p.generator_names);
    }
    os << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Torus-link presentations
// ---------------------------------------------------------------------------

Presentation torus_link_presentation(const TorusLinkParams& params) {
    const int mu = params.mu, p = params.p, q = params.q;
    Presentation pres;
    pres.num_components = mu;
    for (int i = 1; i < mu; ++i) pres.generator_names.push_back("m" + std::to_string(i));
    pres.generator_names.push_back("x");
    pres.generator_names.push_back("y");
    const int xi = mu - 1, yi = mu;

    pres.abelianization.assign(mu + 1, std::vector<int>(mu, 0));
    for (int i = 0; i < mu - 1; ++i) pres.abelianization[i][i] = 1;
    pres.abelianization[xi].assign(mu, q);
    pres.abelianization[yi].assign(mu, p);

    Word xp = Word::generator(xi, p);
    for (int i = 0; i < mu - 1; ++i) {
        Word mi = Word::generator(i);
        pres.relators.push_back(xp * mi * xp.inverse() * mi.inverse());
    }
    pres.relators.push_back(xp * Word::generator(yi, -q));

    pres.validate();
    return pres;
}

Presentation torus_link_presentation_full(const TorusLinkParams& params) {
    const int mu = params.mu, p = params.p, q = params.q;
    const long r = params.r, s = params.s;
    Presentation pres;
    pres.num_components = mu;
    for (int i = 1; i <= mu; ++i) pres.generator_names.push_back("m" + std::to_string(i));
    pres.generator_names.push_back("x");
    pres.generator_names.push_back("y");
    pres.generator_names.push_back("l");
    const int xi = mu, yi = mu + 1, li = mu + 2;

    pres.abelianization.assign(mu + 3, std::vector<int>(mu, 0));
    for (int i = 0; i < mu; ++i) pres.abelianization[i][i] = 1;
    pres.abelianization[xi].assign(mu, q);
    pres.abelianization[yi].assign(mu, p);
    pres.abelianization[li].assign(mu, p * q);

    // m_mu m_{mu-1} ... m_1 = x^r y^s
    Word lhs;
    for (int i = mu - 1; i >= 0; --i) lhs = lhs * Word::generator(i);
    Word rhs = Word::generator(xi, r) * Word::generator(yi, s);
    pres.relators.push_back(lhs * rhs.inverse());
    // [l, m_i] = 1
    Word l = Word::generator(li);
    for (int i = 0; i < mu; ++i) {
        Word mi = Word::generator(i);
        pres.relators.push_back(l * mi * l.inverse() * mi.inverse());
    }
    // l = x^p, x^p = y^q
    pres.relators.push_back(l * Word::generator(xi, -p));
    pres.relators.push_back(Word::generator(xi, p) * Word::generator(yi, -q));

    pres.validate();
    return pres;
}

}  // namespace talex
