#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biquad/catalog.hpp"
#include "biquad/presentation.hpp"

namespace biquad {

enum class Mode { literal, up_to_shift };

// Outcome of the differential-smoothness classification of a PBW
// presentation.  NotSmooth requires one of c, beta, lambda nonzero (the
// dimension-drop obstruction); Smooth requires the sufficient conditions to
// hold, after the witness shift in up_to_shift mode; everything else is
// Undecided, never NotSmooth.
struct Verdict {
    enum class Kind { smooth, not_smooth, undecided };
    Kind kind;
    // For not_smooth: the nonzero obstruction (c, beta or lambda) and its value.
    ParamSymbol obstruction = ParamSymbol::c;
    Rat obstruction_value;
    // For smooth in up_to_shift mode: shift making the conditions hold literally.
    std::array<Rat, 3> shift{Rat(0), Rat(0), Rat(0)};
    // The four condition values at the (unshifted) presentation, for reporting:
    // b1(q1-1)-ab, b2(q2-1)-alpha*gamma, b3(q3-1)-mu*nu, mu*a.
    std::array<std::pair<std::string, Rat>, 4> conditions;

    bool is(Kind k) const { return kind == k; }
};

std::string_view verdict_name(Verdict::Kind k);

// Change of generators x_i = t_i y_i + s_i; computed by expanding the
// relations in the free algebra and reading off the new coefficients.
// Requires t_i != 0.  q is unchanged.
Presentation reparametrize(const Presentation& P, const std::array<Rat, 3>& s,
                           const std::array<Rat, 3>& t);

// Requires is_pbw(P); throws PreconditionError otherwise.
Verdict classify(const Presentation& P, Mode mode);

// Smoothness of k[x1,x2; q,a,b,c] via the Ore-extension criterion with
// sigma(x1) = q x1 + b and delta(x1) = a x1 + c.
struct TwoGenVerdict {
    enum class Kind { smooth_a, smooth_b, smooth_c, unknown };
    Kind kind;
};
std::string_view verdict_name(TwoGenVerdict::Kind k);

TwoGenVerdict classify_two_gen(const Rat& q, const Rat& a, const Rat& b, const Rat& c);

struct CatalogRow {
    const CatalogEntry* entry;
    Verdict literal;
    Verdict shifted;
    bool agree;       // computed (shift mode) matches the claimed verdict
    bool divergence;  // claimed smooth but not mechanically recovered
};

struct TwoGenRow {
    const TwoGenEntry* entry;
    TwoGenVerdict verdict;
    bool agree;
};

struct CatalogReport {
    std::uint64_t seed;
    std::vector<CatalogRow> rows3;
    std::vector<TwoGenRow> rows2;
    int smooth = 0, not_smooth = 0, undecided = 0, divergences = 0;
    int two_gen_smooth = 0, two_gen_unknown = 0;
};

// Classify every catalog entry at its default generic instantiation, in both
// modes, against the claimed verdict.
CatalogReport catalog_report(std::uint64_t seed);

std::string render_text(const CatalogReport& r);
std::string render_machine(const CatalogReport& r);

}  // namespace biquad
