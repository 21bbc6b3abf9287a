#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace biquad {

// The 15 parameters of a bi-quadratic presentation on three generators:
// the deformation triple q, the coefficient matrix rows (a,b,c), (alpha,
// beta,gamma), (lambda,mu,nu) and the constant column (b1,b2,b3).
// The listed order is the fixed total order on the alphabet.
enum class ParamSymbol : int {
    q1, q2, q3,
    a, b, c,
    alpha, beta, gamma,
    lambda, mu, nu,
    b1, b2, b3,
};

inline constexpr int kParamCount = 15;

inline constexpr std::array<ParamSymbol, kParamCount> kAllParams = {
    ParamSymbol::q1, ParamSymbol::q2, ParamSymbol::q3,
    ParamSymbol::a, ParamSymbol::b, ParamSymbol::c,
    ParamSymbol::alpha, ParamSymbol::beta, ParamSymbol::gamma,
    ParamSymbol::lambda, ParamSymbol::mu, ParamSymbol::nu,
    ParamSymbol::b1, ParamSymbol::b2, ParamSymbol::b3,
};

std::string_view param_name(ParamSymbol s);
std::optional<ParamSymbol> param_from_name(std::string_view name);

}  // namespace biquad
