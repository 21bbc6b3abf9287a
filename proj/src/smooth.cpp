#include "biquad/smooth.hpp"

#include <cassert>
#include <sstream>

#include "biquad/errors.hpp"
#include "biquad/ncpoly.hpp"
#include "biquad/pbw.hpp"

namespace biquad {

std::string_view verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::smooth: return "smooth";
        case Verdict::Kind::not_smooth: return "not_smooth";
        case Verdict::Kind::undecided: return "undecided";
    }
    return "?";
}

std::string_view verdict_name(TwoGenVerdict::Kind k) {
    switch (k) {
        case TwoGenVerdict::Kind::smooth_a: return "smooth_a";
        case TwoGenVerdict::Kind::smooth_b: return "smooth_b";
        case TwoGenVerdict::Kind::smooth_c: return "smooth_c";
        case TwoGenVerdict::Kind::unknown: return "unknown";
    }
    return "?";
}

Presentation reparametrize(const Presentation& P, const std::array<Rat, 3>& s,
                           const std::array<Rat, 3>& t) {
    for (int i = 0; i < 3; ++i)
        if (t[i].is_zero())
            throw DomainError("scaling t" + std::to_string(i + 1) + " must be nonzero");

    // Generator images x_i = t_i y_i + s_i in the free algebra on y.
    std::array<NcPoly, 3> X;
    for (int i = 0; i < 3; ++i) {
        X[i] = NcPoly::monomial(Word::gen(i + 1), t[i]);
        X[i].add_term(Word{}, s[i]);
    }

    const int pairs[3][2] = {{2, 1}, {3, 1}, {3, 2}};
    std::array<std::array<Rat, 3>, 3> newA{};
    std::array<Rat, 3> newB{};

    for (int rel = 0; rel < 3; ++rel) {
        const int hi = pairs[rel][0], lo = pairs[rel][1];
        NcPoly R = X[hi - 1] * X[lo - 1] - P.q(rel + 1) * (X[lo - 1] * X[hi - 1]);
        for (int k = 1; k <= 3; ++k) R -= P.A(rel + 1, k) * X[k - 1];
        R -= NcPoly::constant(P.B(rel + 1));

        const Rat scale = t[lo - 1] * t[hi - 1];
        // The quadratic part must be exactly scale * (y_hi y_lo - q y_lo y_hi).
        assert(R.coeff(Word{hi, lo}) == scale);
        assert(R.coeff(Word{lo, hi}) == -P.q(rel + 1) * scale);
        assert(R.degree() <= 2);

        for (int k = 1; k <= 3; ++k) newA[rel][k - 1] = -R.coeff(Word::gen(k)) / scale;
        newB[rel] = -R.coeff(Word{}) / scale;
    }

    return Presentation({P.q(1), P.q(2), P.q(3)}, newA, newB);
}

namespace {

std::array<std::pair<std::string, Rat>, 4> condition_values(const Presentation& P) {
    using S = ParamSymbol;
    auto v = [&](S s) { return P.param(s); };
    return {{
        {"b1*(q1-1)-a*b", v(S::b1) * (v(S::q1) - Rat(1)) - v(S::a) * v(S::b)},
        {"b2*(q2-1)-alpha*gamma", v(S::b2) * (v(S::q2) - Rat(1)) - v(S::alpha) * v(S::gamma)},
        {"b3*(q3-1)-mu*nu", v(S::b3) * (v(S::q3) - Rat(1)) - v(S::mu) * v(S::nu)},
        {"mu*a", v(S::mu) * v(S::a)},
    }};
}

}  // namespace

Verdict classify(const Presentation& P, Mode mode) {
    if (!is_pbw(P)) throw PreconditionError("not PBW: classification requires a PBW presentation");

    Verdict v;
    v.conditions = condition_values(P);

    for (ParamSymbol s : {ParamSymbol::c, ParamSymbol::beta, ParamSymbol::lambda}) {
        const Rat val = P.param(s);
        if (!val.is_zero()) {
            v.kind = Verdict::Kind::not_smooth;
            v.obstruction = s;
            v.obstruction_value = val;
            return v;
        }
    }

    const bool invariants_hold = v.conditions[0].second.is_zero() &&
                                 v.conditions[1].second.is_zero() &&
                                 v.conditions[2].second.is_zero();
    const bool mu_a_zero = v.conditions[3].second.is_zero();

    if (mode == Mode::literal) {
        v.kind = (invariants_hold && mu_a_zero) ? Verdict::Kind::smooth : Verdict::Kind::undecided;
        return v;
    }

    // up_to_shift: the three invariant conditions cannot be moved by an
    // affine change of generators; mu*a can, whenever q3 != 1 or q1 != 1.
    const Rat one(1);
    if (!invariants_hold) {
        v.kind = Verdict::Kind::undecided;
        return v;
    }
    if (mu_a_zero) {
        v.kind = Verdict::Kind::smooth;
        return v;
    }
    if (P.q(3) != one) {
        v.shift[2] = -P.param(ParamSymbol::mu) / (P.q(3) - one);
    } else if (P.q(1) != one) {
        v.shift[1] = -P.param(ParamSymbol::a) / (P.q(1) - one);
    } else {
        v.kind = Verdict::Kind::undecided;
        return v;
    }
    // The returned shift must make the conditions hold literally.
    const Presentation shifted = reparametrize(P, v.shift, {Rat(1), Rat(1), Rat(1)});
    const auto after = condition_values(shifted);
    for (const auto& [label, value] : after) {
        if (!value.is_zero())
            throw PreconditionError("witness shift failed to normalize condition " + label);
    }
    v.kind = Verdict::Kind::smooth;
    return v;
}

TwoGenVerdict classify_two_gen(const Rat& q, const Rat& a, const Rat& b, const Rat& c) {
    if (q.is_zero()) throw DomainError("q must be nonzero");
    const Rat one(1);
    // sigma(x1) = q x1 + b, delta(x1) = a x1 + c, i.e. r = b, p(t) = a t + c.
    if (q == one) {
        if (b.is_zero()) return {TwoGenVerdict::Kind::smooth_a};
        if (a.is_zero()) return {TwoGenVerdict::Kind::smooth_b};
        return {TwoGenVerdict::Kind::unknown};
    }
    // p(t) must be a multiple of t + b/(q-1): a*t + c matches iff c(q-1) = a*b.
    if (c * (q - one) == a * b) return {TwoGenVerdict::Kind::smooth_c};
    return {TwoGenVerdict::Kind::unknown};
}

CatalogReport catalog_report(std::uint64_t seed) {
    CatalogReport rep;
    rep.seed = seed;

    for (const auto& entry : catalog3()) {
        const Presentation P = instantiate_default(entry);
        CatalogRow row;
        row.entry = &entry;
        row.literal = classify(P, Mode::literal);
        row.shifted = classify(P, Mode::up_to_shift);

        switch (row.shifted.kind) {
            case Verdict::Kind::smooth:
                ++rep.smooth;
                row.agree = entry.claimed == Claim::smooth;
                break;
            case Verdict::Kind::not_smooth:
                ++rep.not_smooth;
                row.agree = entry.claimed == Claim::not_smooth;
                break;
            case Verdict::Kind::undecided:
                ++rep.undecided;
                row.agree = entry.claimed == Claim::unknown;
                break;
        }
        row.divergence = entry.claimed == Claim::smooth && row.shifted.kind != Verdict::Kind::smooth;
        if (row.divergence) ++rep.divergences;
        rep.rows3.push_back(std::move(row));
    }

    for (const auto& entry : catalog2()) {
        TwoGenRow row;
        row.entry = &entry;
        row.verdict = classify_two_gen(entry.q, entry.a, entry.b, entry.c);
        const bool smooth = row.verdict.kind != TwoGenVerdict::Kind::unknown;
        if (smooth) ++rep.two_gen_smooth;
        else ++rep.two_gen_unknown;
        row.agree = smooth ? entry.claimed == Claim::smooth : entry.claimed == Claim::unknown;
        rep.rows2.push_back(std::move(row));
    }

    return rep;
}

namespace {

std::string verdict_witness(const Verdict& v) {
    std::ostringstream os;
    switch (v.kind) {
        case Verdict::Kind::not_smooth:
            os << param_name(v.obstruction) << "=" << v.obstruction_value;
            break;
        case Verdict::Kind::smooth:
            os << "s=(" << v.shift[0] << "," << v.shift[1] << "," << v.shift[2] << ")";
            break;
        case Verdict::Kind::undecided: {
            bool first = true;
            for (const auto& [label, value] : v.conditions) {
                if (value.is_zero()) continue;
                if (!first) os << ",";
                os << label << "=" << value;
                first = false;
            }
            if (first) os << "-";
            break;
        }
    }
    return os.str();
}

}  // namespace

std::string render_machine(const CatalogReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows3) {
        os << "entry=" << row.entry->name << " table=" << row.entry->table
           << " computed=" << verdict_name(row.shifted.kind)
           << " claimed=" << claim_name(row.entry->claimed)
           << " agree=" << (row.agree ? "true" : "false")
           << " witness=" << verdict_witness(row.shifted)
           << " literal=" << verdict_name(row.literal.kind)
           << " divergence=" << (row.divergence ? "true" : "false") << "\n";
    }
    for (const auto& row : r.rows2) {
        os << "entry=" << row.entry->name << " table=0"
           << " computed=" << verdict_name(row.verdict.kind)
           << " claimed=" << claim_name(row.entry->claimed)
           << " agree=" << (row.agree ? "true" : "false") << " witness=-\n";
    }
    os << "smooth=" << r.smooth << " not_smooth=" << r.not_smooth << " undecided=" << r.undecided
       << " divergences=" << r.divergences << " two_gen_smooth=" << r.two_gen_smooth
       << " two_gen_unknown=" << r.two_gen_unknown << " seed=" << r.seed << "\n";
    return os.str();
}

std::string render_text(const CatalogReport& r) {
    std::ostringstream os;
    os << "three-generator catalog (44 entries)\n";
    os << "------------------------------------\n";
    for (const auto& row : r.rows3) {
        os << "  [" << row.entry->table << "] " << row.entry->display << " (" << row.entry->name
           << "): computed " << verdict_name(row.shifted.kind) << " (literal "
           << verdict_name(row.literal.kind) << "), claimed " << claim_name(row.entry->claimed)
           << (row.agree ? "" : "  << DIVERGES") << "\n";
        if (row.shifted.kind == Verdict::Kind::not_smooth) {
            os << "      obstruction: " << param_name(row.shifted.obstruction) << " = "
               << row.shifted.obstruction_value << "\n";
        } else if (row.shifted.kind == Verdict::Kind::undecided) {
            for (const auto& [label, value] : row.shifted.conditions)
                if (!value.is_zero()) os << "      failing: " << label << " = " << value << "\n";
        }
    }
    os << "two-generator catalog (5 entries)\n";
    os << "---------------------------------\n";
    for (const auto& row : r.rows2) {
        os << "  " << row.entry->display << " (" << row.entry->name << "): computed "
           << verdict_name(row.verdict.kind) << ", claimed " << claim_name(row.entry->claimed)
           << (row.agree ? "" : "  << DIVERGES") << "\n";
    }
    os << "summary: smooth=" << r.smooth << " not_smooth=" << r.not_smooth
       << " undecided=" << r.undecided << " divergences=" << r.divergences
       << " two_gen_smooth=" << r.two_gen_smooth << " two_gen_unknown=" << r.two_gen_unknown
       << "\n";
    return os.str();
}

}  // namespace biquad
