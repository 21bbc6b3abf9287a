#pragma once

#include <cstdint>
#include <random>

#include "biquad/ncpoly.hpp"
#include "biquad/presentation.hpp"
#include "biquad/rational.hpp"

namespace biquad {

// Seeded sampler shared by the property tests, the random-presentation
// oracle runs and the Leibniz spot checks.  Fixed distribution: numerators
// in [-5, 5], denominators in [1, 4], q entries resampled until nonzero.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t index(std::uint64_t bound) { return rng_() % bound; }  // [0, bound)

    long integer(long lo, long hi) { return lo + static_cast<long>(index(hi - lo + 1)); }

    Rat rat() { return Rat(integer(-5, 5), integer(1, 4)); }

    Rat nonzero_rat() {
        Rat r = rat();
        while (r.is_zero()) r = rat();
        return r;
    }

    Presentation presentation() {
        std::array<Rat, 3> q{nonzero_rat(), nonzero_rat(), nonzero_rat()};
        std::array<std::array<Rat, 3>, 3> A;
        for (auto& row : A)
            for (auto& v : row) v = rat();
        std::array<Rat, 3> B{rat(), rat(), rat()};
        return Presentation(q, A, B);
    }

    // Mixed draw for the consistency oracle: dense presentations are almost
    // never consistent, so alternate them with sparse ones biased toward
    // degenerate q values, which land on both sides of the equivalence.
    Presentation oracle_presentation() {
        if (index(2) == 0) return presentation();
        auto degenerate_q = [&] { return index(2) == 0 ? Rat(1) : nonzero_rat(); };
        std::array<Rat, 3> q{degenerate_q(), degenerate_q(), degenerate_q()};
        auto sparse = [&] { return index(4) == 0 ? rat() : Rat(0); };
        std::array<std::array<Rat, 3>, 3> A;
        for (auto& row : A)
            for (auto& v : row) v = sparse();
        std::array<Rat, 3> B{sparse(), sparse(), sparse()};
        return Presentation(q, A, B);
    }

    PBWMonomial pbw_monomial(unsigned maxdeg) {
        unsigned d = static_cast<unsigned>(index(maxdeg + 1));
        unsigned e1 = static_cast<unsigned>(index(d + 1));
        unsigned e2 = static_cast<unsigned>(index(d - e1 + 1));
        return PBWMonomial{e1, e2, d - e1 - e2};
    }

    NcPoly poly(unsigned maxdeg, unsigned maxterms) {
        NcPoly p;
        unsigned nterms = 1 + static_cast<unsigned>(index(maxterms));
        for (unsigned i = 0; i < nterms; ++i) p.add_term(pbw_monomial(maxdeg).word(), rat());
        return p;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace biquad
