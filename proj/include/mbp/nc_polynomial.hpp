#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mbp {

enum class Alphabet { ab, cd };

/// Degree of a word: every letter counts 1, except d which counts 2.
inline int word_degree(Alphabet a, const std::string& w) {
    int deg = static_cast<int>(w.size());
    if (a == Alphabet::cd)
        for (char ch : w)
            if (ch == 'd') deg++;
    return deg;
}

namespace detail {

inline void check_letters(Alphabet a, const std::string& w) {
    const char lo = (a == Alphabet::ab) ? 'a' : 'c';
    const char hi = (a == Alphabet::ab) ? 'b' : 'd';
    for (char ch : w)
        if (ch != lo && ch != hi)
            fail(ErrorKind::InputParse, std::string("bad letter '") + ch + "' in word \"" + w + "\"");
}

/// Graded-lexicographic word order (degree first, then lex; a<b, c<d).
struct WordOrder {
    Alphabet alphabet = Alphabet::ab;
    bool operator()(const std::string& x, const std::string& y) const {
        int dx = word_degree(alphabet, x), dy = word_degree(alphabet, y);
        if (dx != dy) return dx < dy;
        return x < y;
    }
};

}  // namespace detail

/// Integer-coefficient polynomial in noncommuting variables over {a,b} or
/// {c,d}. Terms are kept in graded-lex order and zero coefficients dropped.
class NCPolynomial {
public:
    using Terms = std::map<std::string, long long, detail::WordOrder>;

    explicit NCPolynomial(Alphabet a = Alphabet::ab)
        : alphabet_(a), terms_(detail::WordOrder{a}) {}

    static NCPolynomial zero(Alphabet a) { return NCPolynomial(a); }
    static NCPolynomial one(Alphabet a) { return monomial(a, "", 1); }
    static NCPolynomial monomial(Alphabet a, const std::string& word, long long coeff = 1) {
        detail::check_letters(a, word);
        NCPolynomial p(a);
        p.add_term(word, coeff);
        return p;
    }

    Alphabet alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(const std::string& word) const {
        auto it = terms_.find(word);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const std::string& word, long long coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(word, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NCPolynomial& operator+=(const NCPolynomial& o) {
        require_same_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& o) {
        require_same_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }

    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
        a.require_same_alphabet(b);
        NCPolynomial out(a.alphabet_);
        for (const auto& [w1, c1] : a.terms_)
            for (const auto& [w2, c2] : b.terms_) out.add_term(w1 + w2, c1 * c2);
        return out;
    }
    friend NCPolynomial operator*(long long k, NCPolynomial p) {
        NCPolynomial out(p.alphabet_);
        for (const auto& [w, c] : p.terms_) out.add_term(w, k * c);
        return out;
    }

    bool operator==(const NCPolynomial& o) const {
        return alphabet_ == o.alphabet_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = word_degree(alphabet_, terms_.begin()->first);
        for (const auto& [w, c] : terms_)
            if (word_degree(alphabet_, w) != d) return false;
        return true;
    }

    /// Degree of a homogeneous polynomial; 0 for the zero polynomial.
    int degree() const {
        int d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, word_degree(alphabet_, w));
        return d;
    }

    /// Every word written in reverse order.
    NCPolynomial reversed() const {
        NCPolynomial out(alphabet_);
        for (const auto& [w, c] : terms_) out.add_term(std::string(w.rbegin(), w.rend()), c);
        return out;
    }

    /// Text form with runs collapsed to powers: "c^3 + 3cd + 3dc".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            long long a = c < 0 ? -c : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            std::string mono = collapse(w);
            if (mono.empty())
                out += std::to_string(a);
            else
                out += (a == 1 ? "" : std::to_string(a)) + mono;
        }
        return out;
    }

private:
    void require_same_alphabet(const NCPolynomial& o) const {
        if (alphabet_ != o.alphabet_)
            fail(ErrorKind::BadParameters, "mixed-alphabet polynomial arithmetic");
    }

    static std::string collapse(const std::string& w) {
        std::string s;
        size_t i = 0;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            s += w[i];
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    Alphabet alphabet_;
    Terms terms_;
};

/// Substitutes c -> a+b and d -> ab+ba in a single cd word.
inline NCPolynomial expand_cd_monomial(const std::string& word) {
    detail::check_letters(Alphabet::cd, word);
    NCPolynomial out = NCPolynomial::one(Alphabet::ab);
    for (char ch : word) {
        NCPolynomial factor(Alphabet::ab);
        if (ch == 'c') {
            factor.add_term("a", 1);
            factor.add_term("b", 1);
        } else {
            factor.add_term("ab", 1);
            factor.add_term("ba", 1);
        }
        out = out * factor;
    }
    return out;
}

inline NCPolynomial expand_cd(const NCPolynomial& p) {
    if (p.alphabet() != Alphabet::cd) fail(ErrorKind::BadParameters, "expected a cd polynomial");
    NCPolynomial out(Alphabet::ab);
    for (const auto& [w, c] : p.terms()) out += c * expand_cd_monomial(w);
    return out;
}

/// Writes a homogeneous ab polynomial in the c, d basis by exact integer
/// elimination. The expanded cd monomials are triangular with respect to the
/// graded-lex order of their leading ab words (the leading word of w is the
/// image of w under c -> a, d -> ab, with coefficient 1), so peeling the
/// current leading term decides each cd coefficient uniquely. Failure to
/// decode a leading word means the polynomial is outside the cd span.
inline NCPolynomial ab_to_cd(const NCPolynomial& p) {
    if (p.alphabet() != Alphabet::ab) fail(ErrorKind::BadParameters, "expected an ab polynomial");
    if (!p.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "ab polynomial is not homogeneous");
    NCPolynomial rest = p;
    NCPolynomial out(Alphabet::cd);
    while (!rest.is_zero()) {
        const auto& [word, coeff] = *rest.terms().begin();
        std::string cdw;
        size_t i = 0;
        while (i < word.size()) {
            if (word[i] == 'a') {
                if (i + 1 < word.size() && word[i + 1] == 'b') {
                    cdw += 'd';
                    i += 2;
                } else {
                    cdw += 'c';
                    i += 1;
                }
            } else {
                fail(ErrorKind::NotRepresentable,
                     "leading word \"" + word + "\" is not in the span of cd monomials");
            }
        }
        out.add_term(cdw, coeff);
        rest -= coeff * expand_cd_monomial(cdw);
    }
    return out;
}

/// All cd words of a given degree, graded-lex sorted (Fibonacci-many).
inline std::vector<std::string> cd_words_of_degree(int degree) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        cur += 'c';
        self(self, left - 1);
        cur.pop_back();
        if (left >= 2) {
            cur += 'd';
            self(self, left - 2);
            cur.pop_back();
        }
    };
    rec(rec, degree);
    std::sort(out.begin(), out.end(), detail::WordOrder{Alphabet::cd});
    return out;
}

}  // namespace mbp
