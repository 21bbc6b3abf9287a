#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biquad/ncpoly.hpp"
#include "biquad/presentation.hpp"
#include "biquad/smooth.hpp"

namespace biquad {

// Algebra endomorphism determined by generator images (kept in normal form);
// extended multiplicatively and linearly.
struct Endomorphism {
    std::array<NcPoly, 3> images;  // images of x1, x2, x3

    static Endomorphism identity();

    NcPoly apply_word(const Word& w, const Presentation& P) const;
    NcPoly apply(const NcPoly& p, const Presentation& P) const;
};

struct AutoResidual {
    std::string context;  // e.g. "nu_x1 on relation x3*x1" or "commutation nu_x1,nu_x2 on x3"
    NcPoly value;
};

// The three twisting maps nu_{x_i} with their affine generator images, plus
// the residuals obstructing them when the construction fails.
struct AutoBuild {
    std::array<Endomorphism, 3> nu;
    std::vector<AutoResidual> failures;  // empty iff all maps extend and commute
    bool ok() const { return failures.empty(); }
};

AutoBuild build_automorphisms(const Presentation& P);

// Graded element of Omega^0 + Omega^1 + Omega^2 + Omega^3 with right-module
// coordinates against the generator bases (dx1,dx2,dx3),
// (dx1^dx2, dx1^dx3, dx2^dx3) and w = dx1^dx2^dx3.
struct Form {
    NcPoly deg0;
    std::array<NcPoly, 3> deg1{};
    std::array<NcPoly, 3> deg2{};
    NcPoly deg3;

    static Form scalar(NcPoly p);
    static Form one_form(int i, NcPoly coeff);        // dx_i . coeff, i in 1..3
    static Form two_form(int t, NcPoly coeff);        // t in 0..2 for 12, 13, 23
    static Form volume(NcPoly coeff);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend bool operator==(const Form&, const Form&) = default;

    bool is_zero() const;
    std::string str() const;
};

// Differential calculus attached to a presentation whose twisting maps exist.
// Coefficients are always reduced to normal form; left multiplication is
// turned into right multiplication through the nu maps.
class Calculus {
public:
    Calculus(Presentation P, std::array<Endomorphism, 3> nu);

    // Convenience: build the automorphisms and the calculus in one step;
    // returns nullopt (with residuals) when the maps do not extend.
    static std::optional<Calculus> try_build(const Presentation& P,
                                             std::vector<AutoResidual>* failures = nullptr);

    const Presentation& pres() const { return pres_; }
    const Endomorphism& nu(int i) const { return nu_[i - 1]; }  // i in 1..3

    NcPoly apply_nu(int i, const NcPoly& p) const { return nu_[i - 1].apply(p, pres_); }
    NcPoly nu_omega(const NcPoly& p) const;  // nu_x1 . nu_x2 . nu_x3

    Form left_mul(const NcPoly& p, const Form& f) const;
    Form right_mul(Form f, const NcPoly& p) const;
    Form wedge(const Form& f, const Form& g) const;

    Form d0(const NcPoly& p) const;  // exterior derivative on degree 0
    Form d(const Form& f) const;     // graded extension, d(dx_i) = 0

    NcPoly pi_omega(const Form& f) const;  // right coefficient against the volume form

    // Closed-form partial derivatives of an ordered monomial (the direct
    // formulas; cross-checked against the Leibniz route by verify_calculus).
    std::array<NcPoly, 3> partials_closed_form(const PBWMonomial& m) const;

    // Reconstruction generators for the degree-1/-2 splitting identities,
    // derived by solving the identities on basis forms.
    struct ReconstructionGenerators {
        std::array<Form, 3> omega1;      // dx_i
        std::array<Form, 3> omega2;      // paired with omega1-bar = dx_i
        std::array<Form, 3> omega2_bar;  // paired with omega1 = dx_i
    };
    ReconstructionGenerators reconstruction_generators() const;

private:
    Presentation pres_;
    std::array<Endomorphism, 3> nu_;
};

struct VerificationCheck {
    std::string name;
    bool pass;
    std::string detail;  // counterexample description when failing
};

struct VerificationReport {
    std::array<Rat, 3> shift{Rat(0), Rat(0), Rat(0)};  // witness shift applied first
    std::vector<VerificationCheck> checks;
    bool all_pass() const;
};

// Runs the full verification suite on P (after the witness shift when the
// presentation is smooth only up to shift): automorphisms + commutation,
// d-compatibility with the relations, d.d = 0, connectedness, Leibniz on
// seeded random pairs, closed-form partials vs the Leibniz route, and the
// two reconstruction identities.  Throws PreconditionError unless P is PBW
// and classifies as smooth.
VerificationReport verify_calculus(const Presentation& P, unsigned degree_bound, unsigned samples,
                                   std::uint64_t seed);

std::string render_text(const VerificationReport& r);
std::string render_machine(const VerificationReport& r);

}  // namespace biquad
