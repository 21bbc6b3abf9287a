#include "biquad/ncpoly.hpp"

#include <sstream>

#include "biquad/errors.hpp"

namespace biquad {

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    for (auto l : letters_)
        if (l < 1 || l > 3) throw DomainError("generator index out of range");
}

Word::Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) {
        if (l < 1 || l > 3) throw DomainError("generator index out of range");
        letters_.push_back(static_cast<std::uint8_t>(l));
    }
}

Word Word::gen(int i) { return Word{i}; }

Word Word::concat(const Word& tail) const {
    Word r = *this;
    r.letters_.insert(r.letters_.end(), tail.letters_.begin(), tail.letters_.end());
    return r;
}

Word Word::prefix(std::size_t n) const {
    Word r;
    r.letters_.assign(letters_.begin(), letters_.begin() + n);
    return r;
}

Word Word::suffix(std::size_t from) const {
    Word r;
    r.letters_.assign(letters_.begin() + from, letters_.end());
    return r;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) s += "*";
        s += "x";
        s += static_cast<char>('0' + letters_[i]);
    }
    return s;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    for (std::size_t i = 0; i < u.degree(); ++i)
        if (u.at(i) != v.at(i)) return u.at(i) <=> v.at(i);
    return std::strong_ordering::equal;
}

std::optional<std::size_t> leftmost_descent(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.degree(); ++i)
        if (w.at(i) > w.at(i + 1)) return i;
    return std::nullopt;
}

bool is_ordered_word(const Word& w) { return !leftmost_descent(w).has_value(); }

Word PBWMonomial::word() const {
    std::vector<std::uint8_t> letters;
    letters.reserve(degree());
    letters.insert(letters.end(), e1, 1);
    letters.insert(letters.end(), e2, 2);
    letters.insert(letters.end(), e3, 3);
    return Word(std::move(letters));
}

std::optional<PBWMonomial> PBWMonomial::from_word(const Word& w) {
    if (!is_ordered_word(w)) return std::nullopt;
    PBWMonomial m;
    for (auto l : w.letters()) {
        if (l == 1) ++m.e1;
        else if (l == 2) ++m.e2;
        else ++m.e3;
    }
    return m;
}

NcPoly NcPoly::constant(Rat c) {
    NcPoly p;
    p.add_term(Word{}, c);
    return p;
}

NcPoly NcPoly::monomial(Word w, Rat c) {
    NcPoly p;
    p.add_term(w, c);
    return p;
}

void NcPoly::add_term(const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

NcPoly NcPoly::operator-() const {
    NcPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) r.add_term(u.concat(v), cu * cv);
    return r;
}

NcPoly operator*(const Rat& c, const NcPoly& p) {
    NcPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : p.terms()) r.add_term(w, c * cw);
    return r;
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty()) throw DomainError("leading word of the zero polynomial");
    return terms_.rbegin()->first;
}

unsigned NcPoly::degree() const {
    return terms_.empty() ? 0 : static_cast<unsigned>(leading_word().degree());
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (w.empty()) {
            os << mag.str();
        } else if (mag.is_one()) {
            os << w.str();
        } else {
            os << mag.str() << "*" << w.str();
        }
    }
    return os.str();
}

NcPoly rewrite_rhs(const Presentation& P, int hi, int lo) {
    if (!(hi > lo && lo >= 1 && hi <= 3)) throw DomainError("rewrite_rhs needs a descending pair");
    // Relation row for the pair: (2,1) -> row 1, (3,1) -> row 2, (3,2) -> row 3.
    int rel = (hi == 2) ? 1 : (lo == 1 ? 2 : 3);
    NcPoly r = NcPoly::monomial(Word{lo, hi}, P.q(rel));
    for (int k = 1; k <= 3; ++k) r.add_term(Word::gen(k), P.A(rel, k));
    r.add_term(Word{}, P.B(rel));
    return r;
}

NcPoly normal_form(NcPoly p, const Presentation& P, std::vector<Word>* trace) {
    NcPoly done;
    while (!p.is_zero()) {
        const Word w = p.leading_word();
        const Rat c = p.coeff(w);
        auto pos = leftmost_descent(w);
        if (!pos) {
            done.add_term(w, c);
            p.add_term(w, -c);
            continue;
        }
        if (trace) trace->push_back(w);
        p.add_term(w, -c);
        const Word head = w.prefix(*pos);
        const Word tail = w.suffix(*pos + 2);
        const NcPoly rhs = rewrite_rhs(P, w.at(*pos), w.at(*pos + 1));
        for (const auto& [m, cm] : rhs.terms()) p.add_term(head.concat(m).concat(tail), c * cm);
    }
    return done;
}

NcPoly mul_nf(const NcPoly& a, const NcPoly& b, const Presentation& P) {
    return normal_form(a * b, P);
}

unsigned long long pbw_count(unsigned n) {
    // C(n+3, 3)
    unsigned long long m = n;
    return (m + 1) * (m + 2) * (m + 3) / 6;
}

std::vector<PBWMonomial> pbw_monomials_up_to(unsigned maxdeg) {
    std::vector<PBWMonomial> out;
    out.reserve(pbw_count(maxdeg));
    // Ascending deglex: more leading x1's first within a degree.
    for (unsigned d = 0; d <= maxdeg; ++d)
        for (unsigned e1 = d + 1; e1-- > 0;)
            for (unsigned e2 = d - e1 + 1; e2-- > 0;)
                out.push_back(PBWMonomial{e1, e2, d - e1 - e2});
    return out;
}

unsigned long long normal_monomial_count(const Presentation& P, unsigned maxdeg) {
    // Walk every word of degree <= maxdeg and ask the reducer for a redex;
    // q-entries of P are already validated nonzero, so a redex always fires.
    (void)P;
    unsigned long long count = 1;  // the empty word
    std::vector<std::uint8_t> w;
    for (unsigned d = 1; d <= maxdeg; ++d) {
        w.assign(d, 1);
        while (true) {
            if (!leftmost_descent(Word(w)).has_value()) ++count;
            // Odometer over {1,2,3}^d.
            std::size_t i = d;
            while (i > 0 && w[i - 1] == 3) w[--i] = 1;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return count;
}

}  // namespace biquad
