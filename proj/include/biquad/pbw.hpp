#pragma once

#include <array>
#include <string>

#include "biquad/ncpoly.hpp"
#include "biquad/param_poly.hpp"
#include "biquad/presentation.hpp"

namespace biquad {

// The ten closed-form consistency conditions for the ordered monomials to be
// a basis, as polynomials in the presentation parameters.  A presentation
// has a PBW basis iff all ten vanish at it.
const std::array<ParamPoly, 10>& pbw_condition_polys();

// The conditions evaluated at P, in order r11..r20.
std::array<Rat, 10> pbw_residuals(const Presentation& P);

// Difference of the two complete reductions of x3*x2*x1: the route that
// first rewrites the prefix x3*x2 minus the route that first rewrites the
// suffix x2*x1, each followed by full normal-form reduction.  Zero iff the
// rewriting system is confluent on the unique minimal overlap.
NcPoly overlap_defect(const Presentation& P);

bool is_pbw(const Presentation& P);

struct PbwReport {
    std::array<Rat, 10> residuals;  // r11..r20
    NcPoly defect;
    bool pbw;
};

PbwReport pbw_report(const Presentation& P);
std::string render(const PbwReport& r);

}  // namespace biquad
