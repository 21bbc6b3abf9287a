#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biquad/presentation.hpp"
#include "biquad/rational.hpp"

namespace biquad {

// A word in the free monoid on x1, x2, x3, stored as generator indices.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> letters);
    Word(std::initializer_list<int> letters);

    static Word gen(int i);  // i in 1..3

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::uint8_t at(std::size_t k) const { return letters_[k]; }
    const std::vector<std::uint8_t>& letters() const { return letters_; }

    Word concat(const Word& tail) const;
    Word prefix(std::size_t n) const;       // first n letters
    Word suffix(std::size_t from) const;    // letters from index `from` on

    friend bool operator==(const Word&, const Word&) = default;

    std::string str() const;  // "x2*x1", "1" for the empty word

private:
    std::vector<std::uint8_t> letters_;
};

// Degree first, then left-to-right by generator index (x1 < x2 < x3).
std::strong_ordering deglex_compare(const Word& u, const Word& v);

struct DeglexLess {
    bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v) < 0; }
};

// Index of the leftmost adjacent descent w[k] > w[k+1]; nullopt when the
// word is nondecreasing, i.e. an ordered (PBW) monomial.
std::optional<std::size_t> leftmost_descent(const Word& w);
bool is_ordered_word(const Word& w);

// Exponent triple of an ordered monomial x1^e1 x2^e2 x3^e3.
struct PBWMonomial {
    unsigned e1 = 0, e2 = 0, e3 = 0;
    unsigned degree() const { return e1 + e2 + e3; }
    Word word() const;
    static std::optional<PBWMonomial> from_word(const Word& w);
    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

// Noncommutative polynomial over Q in x1,x2,x3: a finite deglex-sorted map
// from words to nonzero rational coefficients.  Multiplication concatenates
// words (no reduction); see normal_form/mul_nf for arithmetic modulo a
// presentation's relations.
class NcPoly {
public:
    NcPoly() = default;

    static NcPoly constant(Rat c);
    static NcPoly unit() { return constant(Rat(1)); }
    static NcPoly monomial(Word w, Rat c = Rat(1));
    static NcPoly gen(int i) { return monomial(Word::gen(i)); }

    void add_term(const Word& w, const Rat& c);  // merges; drops zeros
    Rat coeff(const Word& w) const;

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);  // free product
    friend NcPoly operator*(const Rat& c, const NcPoly& p);

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rat, DeglexLess>& terms() const { return terms_; }
    const Word& leading_word() const;  // deglex-greatest; requires nonzero
    unsigned degree() const;           // degree of the leading word; 0 for zero poly

    // Terms in descending deglex order, e.g. "30*x1*x2*x3 - 1/2*x3".
    std::string str() const;

private:
    std::map<Word, Rat, DeglexLess> terms_;
};

// Right-hand side of the rewrite rule for the descending pair x_hi x_lo,
// read off the presentation's relations: x_hi x_lo -> q x_lo x_hi + linear
// + constant.  Requires hi > lo.
NcPoly rewrite_rhs(const Presentation& P, int hi, int lo);

// Reduce to the PBW normal form: repeatedly rewrite the deglex-greatest
// unfinished word at its leftmost descent.  Every step strictly lowers the
// rewritten word in deglex, which is the termination certificate; when
// `trace` is given the rewritten words are appended to it in order.
NcPoly normal_form(NcPoly p, const Presentation& P, std::vector<Word>* trace = nullptr);

// normal_form(a * b).
NcPoly mul_nf(const NcPoly& a, const NcPoly& b, const Presentation& P);

// Number of ordered monomials of total degree <= n: C(n+3, 3).
unsigned long long pbw_count(unsigned n);

// All ordered monomials of degree <= maxdeg, ascending deglex.
std::vector<PBWMonomial> pbw_monomials_up_to(unsigned maxdeg);

// Engine-counted number of degree-<=maxdeg words that the reducer leaves
// untouched (no redex).  Agrees with pbw_count for every valid presentation.
unsigned long long normal_monomial_count(const Presentation& P, unsigned maxdeg);

}  // namespace biquad
