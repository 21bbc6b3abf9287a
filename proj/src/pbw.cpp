#include "biquad/pbw.hpp"

#include <sstream>

namespace biquad {

const std::array<ParamPoly, 10>& pbw_condition_polys() {
    using S = ParamSymbol;
    static const std::array<ParamPoly, 10> conds = [] {
        ParamPoly q1 = pp(S::q1), q2 = pp(S::q2), q3 = pp(S::q3);
        ParamPoly a = pp(S::a), b = pp(S::b), c = pp(S::c);
        ParamPoly al = pp(S::alpha), be = pp(S::beta), ga = pp(S::gamma);
        ParamPoly la = pp(S::lambda), mu = pp(S::mu), nu = pp(S::nu);
        ParamPoly b1 = pp(S::b1), b2 = pp(S::b2), b3 = pp(S::b3);
        ParamPoly one = pp(1);
        return std::array<ParamPoly, 10>{
            (one - q3) * al - (one - q2) * mu,
            (one - q3) * a - (one - q1) * nu,
            (one - q2) * b - (one - q1) * ga,
            (one - q1 * q2) * la,
            (q1 - q3) * be,
            (one - q2 * q3) * c,
            ((one - q3) * al - mu) * a + (b + q1 * ga) * la - nu * al + (q1 * q2 - one) * b3,
            (a - nu) * be + q1 * ga * mu - q3 * al * b + (q1 - q3) * b2,
            (a + (q1 - one) * nu) * ga + b * nu - (mu + q3 * al) * c + (one - q2 * q3) * b1,
            -((mu + q3 * al) * b1) + (a - nu) * b2 + (b + q1 * ga) * b3,
        };
    }();
    return conds;
}

std::array<Rat, 10> pbw_residuals(const Presentation& P) {
    const auto assignment = P.assignment();
    std::array<Rat, 10> r;
    const auto& conds = pbw_condition_polys();
    for (int i = 0; i < 10; ++i) r[i] = conds[i].eval(assignment);
    return r;
}

NcPoly overlap_defect(const Presentation& P) {
    // x3*x2*x1 rewritten at the prefix pair first ...
    NcPoly left = rewrite_rhs(P, 3, 2) * NcPoly::gen(1);
    // ... versus at the suffix pair first.
    NcPoly right = NcPoly::gen(3) * rewrite_rhs(P, 2, 1);
    return normal_form(left, P) - normal_form(right, P);
}

bool is_pbw(const Presentation& P) {
    for (const auto& r : pbw_residuals(P))
        if (!r.is_zero()) return false;
    return true;
}

PbwReport pbw_report(const Presentation& P) {
    return PbwReport{pbw_residuals(P), overlap_defect(P), is_pbw(P)};
}

std::string render(const PbwReport& r) {
    std::ostringstream os;
    for (int i = 0; i < 10; ++i) os << "r" << (11 + i) << " = " << r.residuals[i] << "\n";
    os << "defect = " << r.defect.str() << "\n";
    os << "pbw = " << (r.pbw ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace biquad
