#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "biquad/params.hpp"
#include "biquad/rational.hpp"

namespace biquad {

// Commutative polynomial with rational coefficients in the 15 presentation
// parameters.  Canonical form: no zero coefficients stored.  Used to hold
// the closed-form consistency and smoothness conditions symbolically, so
// that the same expression can be printed and evaluated at any presentation.
class ParamPoly {
public:
    // Exponent of each symbol, indexed by ParamSymbol order.
    using Expo = std::array<std::uint8_t, kParamCount>;

    ParamPoly() = default;
    static ParamPoly constant(Rat c);
    static ParamPoly symbol(ParamSymbol s);

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }

    // Ring-homomorphism evaluation.  The assignment must cover every symbol
    // occurring with positive exponent; otherwise DomainError names the
    // missing symbol.
    Rat eval(const std::map<ParamSymbol, Rat>& assignment) const;

    const std::map<Expo, Rat>& terms() const { return terms_; }
    std::string str() const;

private:
    void add_term(const Expo& e, const Rat& c);
    std::map<Expo, Rat> terms_;
};

inline ParamPoly operator*(const Rat& c, const ParamPoly& p) { return ParamPoly::constant(c) * p; }

// Convenience spellings for building condition polynomials.
ParamPoly pp(ParamSymbol s);
ParamPoly pp(long n);

}  // namespace biquad
