#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "biquad/params.hpp"
#include "biquad/rational.hpp"

namespace biquad {

// A bi-quadratic presentation on three generators:
//   x2 x1 - q1 x1 x2 = a x1 + b x2 + c x3 + b1
//   x3 x1 - q2 x1 x3 = alpha x1 + beta x2 + gamma x3 + b2
//   x3 x2 - q3 x2 x3 = lambda x1 + mu x2 + nu x3 + b3
// q entries must be nonzero (checked at construction).
class Presentation {
public:
    Presentation(std::array<Rat, 3> q, std::array<std::array<Rat, 3>, 3> A, std::array<Rat, 3> B);

    // All zero matrix and B, q = (1,1,1): the commutative polynomial algebra.
    static Presentation commutative();

    const Rat& q(int i) const { return q_[i - 1]; }              // i in 1..3
    const Rat& A(int row, int col) const { return A_[row - 1][col - 1]; }
    const Rat& B(int i) const { return B_[i - 1]; }

    Rat param(ParamSymbol s) const;
    std::map<ParamSymbol, Rat> assignment() const;

    friend bool operator==(const Presentation& x, const Presentation& y) {
        return x.q_ == y.q_ && x.A_ == y.A_ && x.B_ == y.B_;
    }

private:
    std::array<Rat, 3> q_;
    std::array<std::array<Rat, 3>, 3> A_;
    std::array<Rat, 3> B_;
};

// Text format (see README): a "biquadratic v1" header line followed by
// q = [...], A = [[...],[...],[...]], B = [...] in any order, one per line.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);

Presentation load_presentation_file(const std::string& path);

}  // namespace biquad
