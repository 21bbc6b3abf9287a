#include "biquad/param_poly.hpp"

#include <sstream>

#include "biquad/errors.hpp"

namespace biquad {

namespace {
constexpr std::array<std::string_view, kParamCount> kNames = {
    "q1", "q2", "q3", "a", "b", "c", "alpha", "beta", "gamma",
    "lambda", "mu", "nu", "b1", "b2", "b3",
};
}

std::string_view param_name(ParamSymbol s) { return kNames[static_cast<int>(s)]; }

std::optional<ParamSymbol> param_from_name(std::string_view name) {
    for (int i = 0; i < kParamCount; ++i)
        if (kNames[i] == name) return static_cast<ParamSymbol>(i);
    return std::nullopt;
}

ParamPoly ParamPoly::constant(Rat c) {
    ParamPoly p;
    p.add_term(Expo{}, c);
    return p;
}

ParamPoly ParamPoly::symbol(ParamSymbol s) {
    ParamPoly p;
    Expo e{};
    e[static_cast<int>(s)] = 1;
    p.add_term(e, Rat(1));
    return p;
}

void ParamPoly::add_term(const Expo& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            ParamPoly::Expo e{};
            for (int i = 0; i < kParamCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

Rat ParamPoly::eval(const std::map<ParamSymbol, Rat>& assignment) const {
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < kParamCount; ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(static_cast<ParamSymbol>(i));
            if (it == assignment.end())
                throw DomainError("assignment missing value for symbol '" +
                                  std::string(kNames[i]) + "'");
            term *= it->second.pow(e[i]);
        }
        total += term;
    }
    return total;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent vector first, matching how the conditions are written.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        std::ostringstream vars;
        for (int i = 0; i < kParamCount; ++i) {
            if (e[i] == 0) continue;
            if (has_vars) vars << "*";
            vars << kNames[i];
            if (e[i] > 1) vars << "^" << int(e[i]);
            has_vars = true;
        }
        if (!has_vars) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

ParamPoly pp(ParamSymbol s) { return ParamPoly::symbol(s); }
ParamPoly pp(long n) { return ParamPoly::constant(Rat(n)); }

}  // namespace biquad
