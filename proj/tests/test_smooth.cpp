#include <doctest.h>

#include <set>

#include "biquad/catalog.hpp"
#include "biquad/errors.hpp"
#include "biquad/pbw.hpp"
#include "biquad/sampling.hpp"
#include "biquad/smooth.hpp"

using namespace biquad;
using S = ParamSymbol;

namespace {

const std::array<Rat, 3> kNoShift{Rat(0), Rat(0), Rat(0)};
const std::array<Rat, 3> kUnitScale{Rat(1), Rat(1), Rat(1)};

std::array<Rat, 3> invariants(const Presentation& P) {
    return {
        P.param(S::b1) * (P.q(1) - Rat(1)) - P.param(S::a) * P.param(S::b),
        P.param(S::b2) * (P.q(2) - Rat(1)) - P.param(S::alpha) * P.param(S::gamma),
        P.param(S::b3) * (P.q(3) - Rat(1)) - P.param(S::mu) * P.param(S::nu),
    };
}

Presentation zero_obstructions(const Presentation& P) {
    // Copy of P with c = beta = lambda = 0.
    std::array<std::array<Rat, 3>, 3> A{};
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) A[r - 1][k - 1] = P.A(r, k);
    A[0][2] = Rat(0);
    A[1][1] = Rat(0);
    A[2][0] = Rat(0);
    return Presentation({P.q(1), P.q(2), P.q(3)}, A, {P.B(1), P.B(2), P.B(3)});
}

// The new relations, written in the old generators, must reduce to zero
// under the old presentation's normal form.
bool substitution_oracle(const Presentation& P, const Presentation& Pnew,
                         const std::array<Rat, 3>& s, const std::array<Rat, 3>& t) {
    std::array<NcPoly, 3> Y;
    for (int i = 0; i < 3; ++i) {
        // y_i = (x_i - s_i) / t_i
        Y[i] = NcPoly::monomial(Word::gen(i + 1), t[i].inverse());
        Y[i].add_term(Word{}, -s[i] / t[i]);
    }
    const int pairs[3][2] = {{2, 1}, {3, 1}, {3, 2}};
    for (int rel = 0; rel < 3; ++rel) {
        const int hi = pairs[rel][0], lo = pairs[rel][1];
        NcPoly R = Y[hi - 1] * Y[lo - 1] - Pnew.q(rel + 1) * (Y[lo - 1] * Y[hi - 1]);
        for (int k = 1; k <= 3; ++k) R -= Pnew.A(rel + 1, k) * Y[k - 1];
        R -= NcPoly::constant(Pnew.B(rel + 1));
        if (!normal_form(R, P).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("smooth");

TEST_CASE("u_sl2 is obstructed by c") {
    const Presentation P = instantiate_default(*find_entry("u_sl2"));
    for (Mode m : {Mode::literal, Mode::up_to_shift}) {
        const Verdict v = classify(P, m);
        CHECK(v.kind == Verdict::Kind::not_smooth);
        CHECK(v.obstruction == S::c);
        CHECK(v.obstruction_value == Rat(-1));
    }
}

TEST_CASE("the commutative algebra is smooth") {
    const Verdict v = classify(Presentation::commutative(), Mode::literal);
    CHECK(v.kind == Verdict::Kind::smooth);
    for (const auto& [label, value] : v.conditions) CHECK(value.is_zero());
}

TEST_CASE("d1 stays undecided in both modes") {
    const Presentation P = instantiate_default(*find_entry("d1"));
    for (Mode m : {Mode::literal, Mode::up_to_shift}) {
        const Verdict v = classify(P, m);
        CHECK(v.kind == Verdict::Kind::undecided);
        CHECK(v.conditions[0].second == Rat(1));  // b1(q1-1) - ab = 1
    }
}

TEST_CASE("a1 at q1=2, mu=3 satisfies the sufficient conditions") {
    const Presentation P = instantiate(*find_entry("a1"), {{S::q1, Rat(2)}, {S::mu, Rat(3)}});
    const Verdict v = classify(P, Mode::literal);
    CHECK(v.kind == Verdict::Kind::smooth);
}

TEST_CASE("classification requires a PBW presentation") {
    std::array<std::array<Rat, 3>, 3> A{};
    A[2][0] = Rat(1);  // lambda = 1 with q1 = 2 breaks consistency
    const Presentation P({Rat(2), Rat(1), Rat(1)}, A, {});
    CHECK_THROWS_AS(classify(P, Mode::literal), PreconditionError);
}

TEST_CASE("reparametrize: identity") {
    const Presentation P = instantiate_default(*find_entry("c1"));
    CHECK(reparametrize(P, kNoShift, kUnitScale) == P);
}

TEST_CASE("reparametrize: a pure shift moves the linear data") {
    // a = b = c = 0, b1 = 1, q1 = 2; shift s = (0,1,0).
    const Presentation P({Rat(2), Rat(1), Rat(1)}, {}, {Rat(1), Rat(0), Rat(0)});
    const Presentation Q = reparametrize(P, {Rat(0), Rat(1), Rat(0)}, kUnitScale);
    CHECK(Q.param(S::a) == Rat(1));   // a' = a + s2 (q1 - 1)
    CHECK(Q.param(S::b) == Rat(0));
    CHECK(Q.param(S::b1) == Rat(1));  // b1' = b1 + a s1 + b s2 + c s3 + s1 s2 (q1-1)
}

TEST_CASE("reparametrize rejects zero scalings") {
    const Presentation P = Presentation::commutative();
    CHECK_THROWS_AS(reparametrize(P, kNoShift, {Rat(1), Rat(0), Rat(1)}), DomainError);
}

TEST_CASE("pure-shift closed forms match the expansion") {
    Sampler sampler(21);
    for (int iter = 0; iter < 100; ++iter) {
        const Presentation P = sampler.presentation();
        const std::array<Rat, 3> s{sampler.rat(), sampler.rat(), sampler.rat()};
        const Presentation Q = reparametrize(P, s, kUnitScale);
        const Rat one(1);
        auto v = [&](S sym) { return P.param(sym); };
        CHECK(Q.param(S::a) == v(S::a) + s[1] * (P.q(1) - one));
        CHECK(Q.param(S::b) == v(S::b) + s[0] * (P.q(1) - one));
        CHECK(Q.param(S::c) == v(S::c));
        CHECK(Q.param(S::b1) == v(S::b1) + v(S::a) * s[0] + v(S::b) * s[1] + v(S::c) * s[2] +
                                    s[0] * s[1] * (P.q(1) - one));
        CHECK(Q.param(S::alpha) == v(S::alpha) + s[2] * (P.q(2) - one));
        CHECK(Q.param(S::beta) == v(S::beta));
        CHECK(Q.param(S::gamma) == v(S::gamma) + s[0] * (P.q(2) - one));
        CHECK(Q.param(S::b2) == v(S::b2) + v(S::alpha) * s[0] + v(S::beta) * s[1] +
                                    v(S::gamma) * s[2] + s[0] * s[2] * (P.q(2) - one));
        CHECK(Q.param(S::lambda) == v(S::lambda));
        CHECK(Q.param(S::mu) == v(S::mu) + s[2] * (P.q(3) - one));
        CHECK(Q.param(S::nu) == v(S::nu) + s[1] * (P.q(3) - one));
        CHECK(Q.param(S::b3) == v(S::b3) + v(S::lambda) * s[0] + v(S::mu) * s[1] +
                                    v(S::nu) * s[2] + s[1] * s[2] * (P.q(3) - one));
    }
}

TEST_CASE("general reparametrization factors as shift then scale") {
    Sampler sampler(31);
    for (int iter = 0; iter < 50; ++iter) {
        const Presentation P = sampler.presentation();
        const std::array<Rat, 3> s{sampler.rat(), sampler.rat(), sampler.rat()};
        const std::array<Rat, 3> t{sampler.nonzero_rat(), sampler.nonzero_rat(),
                                   sampler.nonzero_rat()};
        CHECK(reparametrize(P, s, t) ==
              reparametrize(reparametrize(P, s, kUnitScale), kNoShift, t));
    }
}

TEST_CASE("substitution oracle and pbw preservation") {
    Sampler sampler(41);
    for (int iter = 0; iter < 100; ++iter) {
        const Presentation P = sampler.presentation();
        const std::array<Rat, 3> s{sampler.rat(), sampler.rat(), sampler.rat()};
        const std::array<Rat, 3> t{sampler.nonzero_rat(), sampler.nonzero_rat(),
                                   sampler.nonzero_rat()};
        const Presentation Q = reparametrize(P, s, t);
        CHECK(substitution_oracle(P, Q, s, t));
        CHECK(is_pbw(P) == is_pbw(Q));
    }
}

TEST_CASE("the dimension obstruction is reparametrization-invariant") {
    Sampler sampler(51);
    for (int iter = 0; iter < 100; ++iter) {
        const Presentation P = sampler.presentation();
        const std::array<Rat, 3> s{sampler.rat(), sampler.rat(), sampler.rat()};
        const std::array<Rat, 3> t{sampler.nonzero_rat(), sampler.nonzero_rat(),
                                   sampler.nonzero_rat()};

        // Pure shifts leave c, beta, lambda untouched.
        const Presentation Sh = reparametrize(P, s, kUnitScale);
        CHECK(Sh.param(S::c) == P.param(S::c));
        CHECK(Sh.param(S::beta) == P.param(S::beta));
        CHECK(Sh.param(S::lambda) == P.param(S::lambda));

        // Scalings multiply them by explicit nonzero units.
        const Presentation Sc = reparametrize(P, kNoShift, t);
        CHECK(Sc.param(S::c) == P.param(S::c) * t[2] / (t[0] * t[1]));
        CHECK(Sc.param(S::beta) == P.param(S::beta) * t[1] / (t[0] * t[2]));
        CHECK(Sc.param(S::lambda) == P.param(S::lambda) * t[0] / (t[1] * t[2]));

        // So vanishing is invariant under any affine change.
        const Presentation Q = reparametrize(P, s, t);
        CHECK(Q.param(S::c).is_zero() == P.param(S::c).is_zero());
        CHECK(Q.param(S::beta).is_zero() == P.param(S::beta).is_zero());
        CHECK(Q.param(S::lambda).is_zero() == P.param(S::lambda).is_zero());
    }
}

TEST_CASE("the three sufficient-condition expressions are shift invariants") {
    Sampler sampler(61);
    for (int iter = 0; iter < 100; ++iter) {
        const Presentation P = zero_obstructions(sampler.presentation());
        const std::array<Rat, 3> s{sampler.rat(), sampler.rat(), sampler.rat()};
        CHECK(invariants(reparametrize(P, s, kUnitScale)) == invariants(P));

        // Scalings multiply each expression by a nonzero unit.
        const std::array<Rat, 3> t{sampler.nonzero_rat(), sampler.nonzero_rat(),
                                   sampler.nonzero_rat()};
        const auto before = invariants(P);
        const auto after = invariants(reparametrize(P, kNoShift, t));
        CHECK(after[0] == before[0] / (t[0] * t[1]));
        CHECK(after[1] == before[1] / (t[0] * t[2]));
        CHECK(after[2] == before[2] / (t[1] * t[2]));
    }
}

TEST_CASE("classification is stable across reparametrizations") {
    Sampler sampler(71);
    const char* names[] = {"a1", "c1", "b1", "e2", "f7", "a3_q", "b2", "d1", "u_sl2"};
    for (const char* name : names) {
        const Presentation P = instantiate_default(*find_entry(name));
        const Verdict base = classify(P, Mode::up_to_shift);
        for (int iter = 0; iter < 12; ++iter) {
            const std::array<Rat, 3> s{sampler.rat(), sampler.rat(), sampler.rat()};
            const std::array<Rat, 3> t{sampler.nonzero_rat(), sampler.nonzero_rat(),
                                       sampler.nonzero_rat()};
            const Verdict v = classify(reparametrize(P, s, t), Mode::up_to_shift);
            CHECK(v.kind == base.kind);
        }
    }
}

TEST_CASE("a shift-smooth presentation gets a usable witness") {
    // Shift a1 so that mu*a != 0 literally; the classifier must undo it.
    const Presentation P = instantiate(*find_entry("a1"), {{S::q1, Rat(2)}, {S::mu, Rat(3)}});
    const Presentation Sh = reparametrize(P, {Rat(0), Rat(1), Rat(0)}, kUnitScale);
    CHECK(Sh.param(S::a) == Rat(1));
    CHECK(Sh.param(S::mu) == Rat(3));

    CHECK(classify(Sh, Mode::literal).kind == Verdict::Kind::undecided);
    const Verdict v = classify(Sh, Mode::up_to_shift);
    CHECK(v.kind == Verdict::Kind::smooth);
    const Presentation back = reparametrize(Sh, v.shift, kUnitScale);
    CHECK(classify(back, Mode::literal).kind == Verdict::Kind::smooth);
}

TEST_CASE("two-generator classification") {
    CHECK(classify_two_gen(Rat(1), Rat(0), Rat(0), Rat(0)).kind == TwoGenVerdict::Kind::smooth_a);
    CHECK(classify_two_gen(Rat(1), Rat(0), Rat(0), Rat(1)).kind == TwoGenVerdict::Kind::smooth_a);
    CHECK(classify_two_gen(Rat(1), Rat(1), Rat(0), Rat(0)).kind == TwoGenVerdict::Kind::smooth_a);
    CHECK(classify_two_gen(Rat(2), Rat(0), Rat(0), Rat(0)).kind == TwoGenVerdict::Kind::smooth_c);
    CHECK(classify_two_gen(Rat(2), Rat(0), Rat(0), Rat(1)).kind == TwoGenVerdict::Kind::unknown);
    // q = 1, r != 0 with constant p(t).
    CHECK(classify_two_gen(Rat(1), Rat(0), Rat(1), Rat(5)).kind == TwoGenVerdict::Kind::smooth_b);
    CHECK(classify_two_gen(Rat(1), Rat(2), Rat(1), Rat(5)).kind == TwoGenVerdict::Kind::unknown);
    // q != 1 with matching p(t) = c (t + r/(q-1)).
    CHECK(classify_two_gen(Rat(3), Rat(2), Rat(1), Rat(1)).kind == TwoGenVerdict::Kind::smooth_c);
    CHECK_THROWS_AS(classify_two_gen(Rat(0), Rat(0), Rat(0), Rat(0)), DomainError);
}

TEST_CASE("catalog report reproduces the expected counts") {
    const CatalogReport rep = catalog_report(0);
    CHECK(rep.rows3.size() == 44);
    CHECK(rep.rows2.size() == 5);
    CHECK(rep.smooth == 15);
    CHECK(rep.not_smooth == 21);
    CHECK(rep.undecided == 8);
    CHECK(rep.divergences == 7);
    CHECK(rep.two_gen_smooth == 4);
    CHECK(rep.two_gen_unknown == 1);

    const std::set<std::string> expected_divergent{"b2", "f8", "f9", "f10", "g2", "h2", "i2"};
    std::set<std::string> divergent;
    for (const auto& row : rep.rows3) {
        if (row.divergence) divergent.insert(row.entry->name);
        if (row.entry->name == "d1") {
            CHECK(row.shifted.kind == Verdict::Kind::undecided);
            CHECK(row.agree);
        }
        if (row.entry->claimed == Claim::not_smooth) {
            CHECK(row.shifted.kind == Verdict::Kind::not_smooth);
            CHECK(row.agree);
        }
    }
    CHECK(divergent == expected_divergent);
}

TEST_CASE("machine report format is stable") {
    const CatalogReport rep = catalog_report(0);
    const std::string a = render_machine(rep);
    const std::string b = render_machine(catalog_report(0));
    CHECK(a == b);

    int lines = 0;
    for (char ch : a)
        if (ch == '\n') ++lines;
    CHECK(lines == 50);  // 44 + 5 entries + summary
    CHECK(a.find("entry=u_sl2 table=1 computed=not_smooth claimed=not_smooth agree=true "
                 "witness=c=-1") != std::string::npos);
    CHECK(a.find("smooth=15 not_smooth=21 undecided=8 divergences=7") != std::string::npos);
}

TEST_SUITE_END();
