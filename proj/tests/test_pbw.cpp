#include <doctest.h>

#include "biquad/catalog.hpp"
#include "biquad/ncpoly.hpp"
#include "biquad/pbw.hpp"
#include "biquad/sampling.hpp"

using namespace biquad;
using S = ParamSymbol;

namespace {

Presentation lambda_breaker() {
    // q = (2,1,1), lambda = 1, everything else zero: violates r14.
    std::array<std::array<Rat, 3>, 3> A{};
    A[2][0] = Rat(1);
    return Presentation({Rat(2), Rat(1), Rat(1)}, A, {});
}

// Hand-coded residuals, kept independent of the ParamPoly route.
std::array<Rat, 10> residuals_by_hand(const Presentation& P) {
    const Rat one(1);
    const Rat q1 = P.q(1), q2 = P.q(2), q3 = P.q(3);
    const Rat a = P.param(S::a), b = P.param(S::b), c = P.param(S::c);
    const Rat al = P.param(S::alpha), be = P.param(S::beta), ga = P.param(S::gamma);
    const Rat la = P.param(S::lambda), mu = P.param(S::mu), nu = P.param(S::nu);
    const Rat b1 = P.param(S::b1), b2 = P.param(S::b2), b3 = P.param(S::b3);
    return {
        (one - q3) * al - (one - q2) * mu,
        (one - q3) * a - (one - q1) * nu,
        (one - q2) * b - (one - q1) * ga,
        (one - q1 * q2) * la,
        (q1 - q3) * be,
        (one - q2 * q3) * c,
        ((one - q3) * al - mu) * a + (b + q1 * ga) * la - nu * al + (q1 * q2 - one) * b3,
        (a - nu) * be + q1 * ga * mu - q3 * al * b + (q1 - q3) * b2,
        (a + (q1 - one) * nu) * ga + b * nu - (mu + q3 * al) * c + (one - q2 * q3) * b1,
        -(mu + q3 * al) * b1 + (a - nu) * b2 + (b + q1 * ga) * b3,
    };
}

}  // namespace

TEST_SUITE_BEGIN("pbw");

TEST_CASE("u_sl2 satisfies all ten conditions") {
    const Presentation P = instantiate_default(*find_entry("u_sl2"));
    for (const Rat& r : pbw_residuals(P)) CHECK(r.is_zero());
    CHECK(is_pbw(P));
    CHECK(overlap_defect(P).is_zero());
}

TEST_CASE("a lone lambda breaks exactly r14") {
    const Presentation P = lambda_breaker();
    const auto rs = pbw_residuals(P);
    for (int i = 0; i < 10; ++i) {
        if (i == 3) CHECK(rs[i] == Rat(-1));  // (1 - q1 q2) lambda = -1
        else CHECK(rs[i].is_zero());
    }
    CHECK_FALSE(is_pbw(P));

    const NcPoly defect = overlap_defect(P);
    CHECK_FALSE(defect.is_zero());
    CHECK(defect.degree() <= 2);
}

TEST_CASE("trivial presentations are consistent") {
    const Presentation P = Presentation::commutative();
    for (const Rat& r : pbw_residuals(P)) CHECK(r.is_zero());
    CHECK(overlap_defect(P).is_zero());
}

TEST_CASE("oracle equivalence on 200 seeded random presentations") {
    Sampler sampler(2024);
    int pbw_count_seen = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const Presentation P = sampler.oracle_presentation();
        const bool closed_form = is_pbw(P);
        const bool oracle = overlap_defect(P).is_zero();
        CAPTURE(iter);
        CHECK(closed_form == oracle);
        if (closed_form) ++pbw_count_seen;
    }
    // The sample must exercise both sides of the equivalence.
    CHECK(pbw_count_seen > 0);
    CHECK(pbw_count_seen < 200);
}

TEST_CASE("symbolic and hand-coded residuals agree") {
    Sampler sampler(99);
    for (int iter = 0; iter < 100; ++iter) {
        const Presentation P = sampler.presentation();
        const auto symbolic = pbw_residuals(P);
        const auto numeric = residuals_by_hand(P);
        for (int i = 0; i < 10; ++i) CHECK(symbolic[i] == numeric[i]);
    }
}

TEST_CASE("mul_nf is associative on PBW presentations") {
    Sampler sampler(5);
    const Presentation samples[] = {
        instantiate_default(*find_entry("u_sl2")),
        instantiate_default(*find_entry("a1")),
        instantiate_default(*find_entry("f1")),
        instantiate_default(*find_entry("a3_q")),
    };
    for (const auto& P : samples) {
        for (int iter = 0; iter < 50; ++iter) {
            const NcPoly u = NcPoly::monomial(sampler.pbw_monomial(2).word());
            const NcPoly v = NcPoly::monomial(sampler.pbw_monomial(2).word());
            const NcPoly w = NcPoly::monomial(sampler.pbw_monomial(2).word());
            CHECK(mul_nf(mul_nf(u, v, P), w, P) == mul_nf(u, mul_nf(v, w, P), P));
        }
    }
}

TEST_CASE("report rendering") {
    const auto rep = pbw_report(lambda_breaker());
    const std::string text = render(rep);
    CHECK(text.find("r14 = -1") != std::string::npos);
    CHECK(text.find("pbw = false") != std::string::npos);
    CHECK(text.find("defect = ") != std::string::npos);

    const auto ok = pbw_report(Presentation::commutative());
    CHECK(render(ok).find("pbw = true") != std::string::npos);
}

TEST_SUITE_END();
