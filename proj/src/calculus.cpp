#include "biquad/calculus.hpp"

#include <cassert>
#include <sstream>

#include "biquad/errors.hpp"
#include "biquad/pbw.hpp"
#include "biquad/sampling.hpp"

namespace biquad {

namespace {

// Basis index lists per degree: deg2 slot t -> generator pair.
constexpr int kPair[3][2] = {{1, 2}, {1, 3}, {2, 3}};

// q factor of the anti-commutation rule for the descending pair (hi, lo).
const Rat& q_pair(const Presentation& P, int hi, int lo) {
    const int rel = (hi == 2) ? 1 : (lo == 1 ? 2 : 3);
    return P.q(rel);
}

}  // namespace

Endomorphism Endomorphism::identity() {
    return Endomorphism{{NcPoly::gen(1), NcPoly::gen(2), NcPoly::gen(3)}};
}

NcPoly Endomorphism::apply_word(const Word& w, const Presentation& P) const {
    NcPoly acc = NcPoly::unit();
    for (auto letter : w.letters()) acc = mul_nf(acc, images[letter - 1], P);
    return acc;
}

NcPoly Endomorphism::apply(const NcPoly& p, const Presentation& P) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) out += c * apply_word(w, P);
    return out;
}

AutoBuild build_automorphisms(const Presentation& P) {
    using S = ParamSymbol;
    auto v = [&](S s) { return P.param(s); };
    const Rat q1i = P.q(1).inverse(), q2i = P.q(2).inverse(), q3i = P.q(3).inverse();

    auto affine = [](int gen, Rat scale, Rat offset) {
        NcPoly p = NcPoly::monomial(Word::gen(gen), scale);
        p.add_term(Word{}, offset);
        return p;
    };

    AutoBuild out;
    out.nu[0] = {{NcPoly::gen(1), affine(2, P.q(1), v(S::a)), affine(3, P.q(2), v(S::alpha))}};
    out.nu[1] = {{affine(1, q1i, -v(S::b) * q1i), NcPoly::gen(2), affine(3, P.q(3), v(S::mu))}};
    out.nu[2] = {{affine(1, q2i, -v(S::gamma) * q2i), affine(2, q3i, -v(S::nu) * q3i),
                  NcPoly::gen(3)}};

    const int pairs[3][2] = {{2, 1}, {3, 1}, {3, 2}};
    static const char* kNuName[3] = {"nu_x1", "nu_x2", "nu_x3"};
    for (int n = 0; n < 3; ++n) {
        const auto& nu = out.nu[n];
        for (int rel = 0; rel < 3; ++rel) {
            const int hi = pairs[rel][0], lo = pairs[rel][1];
            NcPoly res = mul_nf(nu.images[hi - 1], nu.images[lo - 1], P) -
                         P.q(rel + 1) * mul_nf(nu.images[lo - 1], nu.images[hi - 1], P);
            for (int k = 1; k <= 3; ++k) res -= P.A(rel + 1, k) * nu.images[k - 1];
            res -= NcPoly::constant(P.B(rel + 1));
            if (!res.is_zero()) {
                out.failures.push_back({std::string(kNuName[n]) + " on relation x" +
                                            std::to_string(hi) + "*x" + std::to_string(lo),
                                        res});
            }
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int g = 1; g <= 3; ++g) {
                NcPoly ij = out.nu[i].apply(out.nu[j].images[g - 1], P);
                NcPoly ji = out.nu[j].apply(out.nu[i].images[g - 1], P);
                if (ij != ji) {
                    out.failures.push_back({std::string("commutation ") + kNuName[i] + "," +
                                                kNuName[j] + " on x" + std::to_string(g),
                                            ij - ji});
                }
            }
        }
    }
    return out;
}

Form Form::scalar(NcPoly p) {
    Form f;
    f.deg0 = std::move(p);
    return f;
}

Form Form::one_form(int i, NcPoly coeff) {
    Form f;
    f.deg1[i - 1] = std::move(coeff);
    return f;
}

Form Form::two_form(int t, NcPoly coeff) {
    Form f;
    f.deg2[t] = std::move(coeff);
    return f;
}

Form Form::volume(NcPoly coeff) {
    Form f;
    f.deg3 = std::move(coeff);
    return f;
}

Form& Form::operator+=(const Form& o) {
    deg0 += o.deg0;
    for (int i = 0; i < 3; ++i) deg1[i] += o.deg1[i];
    for (int i = 0; i < 3; ++i) deg2[i] += o.deg2[i];
    deg3 += o.deg3;
    return *this;
}

Form& Form::operator-=(const Form& o) {
    deg0 -= o.deg0;
    for (int i = 0; i < 3; ++i) deg1[i] -= o.deg1[i];
    for (int i = 0; i < 3; ++i) deg2[i] -= o.deg2[i];
    deg3 -= o.deg3;
    return *this;
}

bool Form::is_zero() const {
    if (!deg0.is_zero() || !deg3.is_zero()) return false;
    for (int i = 0; i < 3; ++i)
        if (!deg1[i].is_zero() || !deg2[i].is_zero()) return false;
    return true;
}

std::string Form::str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const std::string& basis, const NcPoly& c) {
        if (c.is_zero()) return;
        if (any) os << " + ";
        if (basis.empty()) os << "(" << c.str() << ")";
        else os << basis << "*(" << c.str() << ")";
        any = true;
    };
    emit("", deg0);
    for (int i = 0; i < 3; ++i) emit("dx" + std::to_string(i + 1), deg1[i]);
    for (int t = 0; t < 3; ++t)
        emit("dx" + std::to_string(kPair[t][0]) + "^dx" + std::to_string(kPair[t][1]), deg2[t]);
    emit("w", deg3);
    return any ? os.str() : "0";
}

Calculus::Calculus(Presentation P, std::array<Endomorphism, 3> nu)
    : pres_(std::move(P)), nu_(std::move(nu)) {}

std::optional<Calculus> Calculus::try_build(const Presentation& P,
                                            std::vector<AutoResidual>* failures) {
    AutoBuild ab = build_automorphisms(P);
    if (!ab.ok()) {
        if (failures) *failures = std::move(ab.failures);
        return std::nullopt;
    }
    return Calculus(P, std::move(ab.nu));
}

NcPoly Calculus::nu_omega(const NcPoly& p) const {
    return apply_nu(1, apply_nu(2, apply_nu(3, p)));
}

namespace {

// p . dx_I = dx_I . (moved p): apply the nu of each basis letter, left to right.
NcPoly move_through(const Calculus& calc, const int* idx, int count, const NcPoly& p) {
    NcPoly out = p;
    for (int k = 0; k < count; ++k) out = calc.apply_nu(idx[k], out);
    return out;
}

}  // namespace

Form Calculus::left_mul(const NcPoly& p, const Form& f) const {
    Form out;
    out.deg0 = mul_nf(p, f.deg0, pres_);
    for (int i = 0; i < 3; ++i) {
        if (f.deg1[i].is_zero()) continue;
        const int idx[1] = {i + 1};
        out.deg1[i] = mul_nf(move_through(*this, idx, 1, p), f.deg1[i], pres_);
    }
    for (int t = 0; t < 3; ++t) {
        if (f.deg2[t].is_zero()) continue;
        out.deg2[t] = mul_nf(move_through(*this, kPair[t], 2, p), f.deg2[t], pres_);
    }
    if (!f.deg3.is_zero()) {
        const int idx[3] = {1, 2, 3};
        out.deg3 = mul_nf(move_through(*this, idx, 3, p), f.deg3, pres_);
    }
    return out;
}

Form Calculus::right_mul(Form f, const NcPoly& p) const {
    f.deg0 = mul_nf(f.deg0, p, pres_);
    for (int i = 0; i < 3; ++i) f.deg1[i] = mul_nf(f.deg1[i], p, pres_);
    for (int t = 0; t < 3; ++t) f.deg2[t] = mul_nf(f.deg2[t], p, pres_);
    f.deg3 = mul_nf(f.deg3, p, pres_);
    return f;
}

namespace {

struct BasisComponent {
    int count;       // 0..3 basis letters
    const int* idx;  // ascending generator indices
    const NcPoly* coeff;
};

// Collect the nonzero graded components of a form.
void components(const Form& f, std::vector<BasisComponent>& out) {
    static constexpr int kVol[3] = {1, 2, 3};
    static constexpr int kOne[3][1] = {{1}, {2}, {3}};
    if (!f.deg0.is_zero()) out.push_back({0, nullptr, &f.deg0});
    for (int i = 0; i < 3; ++i)
        if (!f.deg1[i].is_zero()) out.push_back({1, kOne[i], &f.deg1[i]});
    for (int t = 0; t < 3; ++t)
        if (!f.deg2[t].is_zero()) out.push_back({2, kPair[t], &f.deg2[t]});
    if (!f.deg3.is_zero()) out.push_back({3, kVol, &f.deg3});
}

// Sort a concatenated index list with the q-anti-commutation rules.
// Returns false when two equal letters meet (the product vanishes).
bool straighten(const Presentation& P, int* idx, int count, Rat& factor) {
    for (int pass = 0; pass < count; ++pass) {
        for (int k = 0; k + 1 < count; ++k) {
            if (idx[k] == idx[k + 1]) return false;
            if (idx[k] > idx[k + 1]) {
                factor *= -q_pair(P, idx[k], idx[k + 1]);
                std::swap(idx[k], idx[k + 1]);
            }
        }
    }
    return true;
}

void add_component(Form& f, const int* idx, int count, const NcPoly& coeff) {
    if (count == 0) {
        f.deg0 += coeff;
    } else if (count == 1) {
        f.deg1[idx[0] - 1] += coeff;
    } else if (count == 2) {
        for (int t = 0; t < 3; ++t)
            if (kPair[t][0] == idx[0] && kPair[t][1] == idx[1]) {
                f.deg2[t] += coeff;
                return;
            }
        assert(false);
    } else {
        f.deg3 += coeff;
    }
}

}  // namespace

Form Calculus::wedge(const Form& f, const Form& g) const {
    std::vector<BasisComponent> fc, gc;
    components(f, fc);
    components(g, gc);

    Form out;
    for (const auto& a : fc) {
        for (const auto& b : gc) {
            if (a.count + b.count > 3) continue;  // Omega^{>3} = 0
            // Move a's coefficient through b's basis letters, then combine.
            NcPoly moved = move_through(*this, b.idx, b.count, *a.coeff);
            NcPoly coeff = mul_nf(moved, *b.coeff, pres_);
            if (coeff.is_zero()) continue;
            int idx[3];
            for (int k = 0; k < a.count; ++k) idx[k] = a.idx[k];
            for (int k = 0; k < b.count; ++k) idx[a.count + k] = b.idx[k];
            Rat factor(1);
            if (!straighten(pres_, idx, a.count + b.count, factor)) continue;
            add_component(out, idx, a.count + b.count, factor * coeff);
        }
    }
    return out;
}

Form Calculus::d0(const NcPoly& p) const {
    Form out;
    for (const auto& [w, cw] : p.terms()) {
        for (std::size_t t = 0; t < w.degree(); ++t) {
            const int i = w.at(t);
            NcPoly head = apply_nu(i, NcPoly::monomial(w.prefix(t)));
            NcPoly contrib = mul_nf(head, NcPoly::monomial(w.suffix(t + 1)), pres_);
            out.deg1[i - 1] += cw * contrib;
        }
    }
    return out;
}

Form Calculus::d(const Form& f) const {
    Form out = d0(f.deg0);
    for (int i = 0; i < 3; ++i) {
        if (f.deg1[i].is_zero()) continue;
        // d(dx_i . c) = - dx_i ^ d(c)
        Form df = wedge(Form::one_form(i + 1, NcPoly::unit()), d0(f.deg1[i]));
        out -= df;
    }
    for (int t = 0; t < 3; ++t) {
        if (f.deg2[t].is_zero()) continue;
        out += wedge(Form::two_form(t, NcPoly::unit()), d0(f.deg2[t]));
    }
    return out;
}

NcPoly Calculus::pi_omega(const Form& f) const { return f.deg3; }

std::array<NcPoly, 3> Calculus::partials_closed_form(const PBWMonomial& m) const {
    using S = ParamSymbol;
    const unsigned k = m.e1, l = m.e2, s = m.e3;
    std::array<NcPoly, 3> out;

    auto affine_pow = [&](const Rat& offset, unsigned e) {
        // (x1 - offset)^e etc. stay ordered, so the free product is exact.
        NcPoly base = NcPoly::gen(1);
        base.add_term(Word{}, -offset);
        NcPoly acc = NcPoly::unit();
        for (unsigned t = 0; t < e; ++t) acc = acc * base;
        return acc;
    };
    auto affine_pow2 = [&](const Rat& offset, unsigned e) {
        NcPoly base = NcPoly::gen(2);
        base.add_term(Word{}, -offset);
        NcPoly acc = NcPoly::unit();
        for (unsigned t = 0; t < e; ++t) acc = acc * base;
        return acc;
    };
    auto mono = [](unsigned a, unsigned b, unsigned c) { return PBWMonomial{a, b, c}.word(); };

    if (k > 0) out[0] = NcPoly::monomial(mono(k - 1, l, s), Rat(long(k)));
    if (l > 0) {
        NcPoly head = affine_pow(pres_.param(S::b), k);
        out[1] = Rat(long(l)) * pres_.q(1).pow(-long(k)) *
                 (head * NcPoly::monomial(mono(0, l - 1, s)));
    }
    if (s > 0) {
        NcPoly head = affine_pow(pres_.param(S::gamma), k) * affine_pow2(pres_.param(S::nu), l);
        out[2] = Rat(long(s)) * pres_.q(2).pow(-long(k)) * pres_.q(3).pow(-long(l)) *
                 (head * NcPoly::monomial(mono(0, 0, s - 1)));
    }
    return out;
}

namespace {

// Exact 3x3 inverse by Gauss-Jordan; throws on a singular matrix.
std::array<std::array<Rat, 3>, 3> invert3(std::array<std::array<Rat, 3>, 3> m) {
    std::array<std::array<Rat, 3>, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[i][i] = Rat(1);
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int r = col; r < 3; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw PreconditionError("reconstruction pairing matrix is singular");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rat d = m[col][col].inverse();
        for (int c = 0; c < 3; ++c) {
            m[col][c] *= d;
            inv[col][c] *= d;
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rat f = m[r][col];
            for (int c = 0; c < 3; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

Rat constant_of(const NcPoly& p) {
    assert(p.term_count() <= 1);
    return p.coeff(Word{});
}

}  // namespace

Calculus::ReconstructionGenerators Calculus::reconstruction_generators() const {
    ReconstructionGenerators g;
    for (int i = 0; i < 3; ++i) g.omega1[i] = Form::one_form(i + 1, NcPoly::unit());

    // pairing(t, j) = pi_w(B_t ^ dx_j) determines the bar generators:
    // sum_i dx_i . pi_w(bar_i ^ dx_j) = dx_j forces pi_w(bar_i ^ dx_j) = delta_ij.
    std::array<std::array<Rat, 3>, 3> E{};
    for (int t = 0; t < 3; ++t)
        for (int j = 0; j < 3; ++j)
            E[t][j] = constant_of(
                pi_omega(wedge(Form::two_form(t, NcPoly::unit()), g.omega1[j])));
    const auto C = invert3(E);  // rows: coordinates of bar_i against the 2-form basis
    for (int i = 0; i < 3; ++i) {
        Form f;
        for (int t = 0; t < 3; ++t) f += Form::two_form(t, NcPoly::constant(C[i][t]));
        g.omega2_bar[i] = std::move(f);
    }

    // pairing(i, u) = pi_w(dx_i ^ B_u) determines the unbarred 2-form
    // generators via sum_i w2_i . pi_w(dx_i ^ B_u) = B_u.
    std::array<std::array<Rat, 3>, 3> F{};
    for (int i = 0; i < 3; ++i)
        for (int u = 0; u < 3; ++u)
            F[i][u] = constant_of(
                pi_omega(wedge(g.omega1[i], Form::two_form(u, NcPoly::unit()))));
    const auto Finv = invert3(F);
    for (int i = 0; i < 3; ++i) {
        Form f;
        for (int t = 0; t < 3; ++t) f += Form::two_form(t, NcPoly::constant(Finv[t][i]));
        g.omega2[i] = std::move(f);
    }
    return g;
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VerificationReport verify_calculus(const Presentation& P, unsigned degree_bound, unsigned samples,
                                   std::uint64_t seed) {
    if (!is_pbw(P)) throw PreconditionError("not PBW: calculus verification needs a PBW basis");
    const Verdict verdict = classify(P, Mode::up_to_shift);
    if (verdict.kind != Verdict::Kind::smooth)
        throw PreconditionError(std::string("presentation does not classify as smooth (") +
                                std::string(verdict_name(verdict.kind)) + ")");

    VerificationReport report;
    report.shift = verdict.shift;
    const bool shifted = !(verdict.shift[0].is_zero() && verdict.shift[1].is_zero() &&
                           verdict.shift[2].is_zero());
    const Presentation W =
        shifted ? reparametrize(P, verdict.shift, {Rat(1), Rat(1), Rat(1)}) : P;

    auto add_check = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    std::vector<AutoResidual> failures;
    auto calc_opt = Calculus::try_build(W, &failures);
    if (!calc_opt) {
        add_check("automorphisms", false,
                  failures.empty() ? "construction failed"
                                   : failures.front().context + ": " + failures.front().value.str());
        for (const char* name : {"relation_compatibility", "d_squared", "connectedness", "leibniz",
                                 "partials", "reconstruction"})
            add_check(name, false, "automorphisms unavailable");
        return report;
    }
    const Calculus& calc = *calc_opt;
    const auto monomials = pbw_monomials_up_to(degree_bound);

    // (i) the maps extend and pairwise commute on the whole monomial span.
    {
        bool pass = true;
        std::string detail;
        for (const auto& m : monomials) {
            const NcPoly p = NcPoly::monomial(m.word());
            for (int i = 1; i <= 3 && pass; ++i) {
                for (int j = i + 1; j <= 3 && pass; ++j) {
                    if (calc.apply_nu(i, calc.apply_nu(j, p)) !=
                        calc.apply_nu(j, calc.apply_nu(i, p))) {
                        pass = false;
                        detail = "nu_x" + std::to_string(i) + ", nu_x" + std::to_string(j) +
                                 " disagree on " + m.word().str();
                    }
                }
            }
            if (!pass) break;
        }
        add_check("automorphisms", pass, detail);
    }

    // (ii) d is compatible with the three defining relations.
    {
        bool pass = true;
        std::string detail;
        const int pairs[3][2] = {{2, 1}, {3, 1}, {3, 2}};
        for (int rel = 0; rel < 3 && pass; ++rel) {
            const int hi = pairs[rel][0], lo = pairs[rel][1];
            Form lhs = calc.right_mul(Form::one_form(hi, NcPoly::unit()), NcPoly::gen(lo)) +
                       calc.left_mul(NcPoly::gen(hi), Form::one_form(lo, NcPoly::unit()));
            Form rhs = calc.right_mul(Form::one_form(lo, NcPoly::unit()), NcPoly::gen(hi)) +
                       calc.left_mul(NcPoly::gen(lo), Form::one_form(hi, NcPoly::unit()));
            rhs = calc.right_mul(rhs, NcPoly::constant(W.q(rel + 1)));
            for (int k = 1; k <= 3; ++k)
                rhs += Form::one_form(k, NcPoly::constant(W.A(rel + 1, k)));
            if (!(lhs - rhs).is_zero()) {
                pass = false;
                detail = "relation x" + std::to_string(hi) + "*x" + std::to_string(lo);
            }
        }
        add_check("relation_compatibility", pass, detail);
    }

    // (iii) d.d = 0 on the whole monomial span.
    {
        bool pass = true;
        std::string detail;
        for (const auto& m : monomials) {
            if (!calc.d(calc.d0(NcPoly::monomial(m.word()))).is_zero()) {
                pass = false;
                detail = "d(d(" + m.word().str() + ")) != 0";
                break;
            }
        }
        add_check("d_squared", pass, detail);
    }

    // (iv) connectedness: ker d on the degree-bounded span is the scalars.
    {
        // Columns: monomials of degree <= N; rows: (dx index, coefficient word).
        struct RowKeyLess {
            bool operator()(const std::pair<int, Word>& a, const std::pair<int, Word>& b) const {
                if (a.first != b.first) return a.first < b.first;
                return deglex_compare(a.second, b.second) < 0;
            }
        };
        std::map<std::pair<int, Word>, std::size_t, RowKeyLess> row_index;
        std::vector<std::vector<Rat>> columns;
        for (const auto& m : monomials) {
            const Form dm = calc.d0(NcPoly::monomial(m.word()));
            std::vector<std::pair<std::size_t, Rat>> entries;
            for (int i = 0; i < 3; ++i) {
                for (const auto& [w, cc] : dm.deg1[i].terms()) {
                    auto key = std::make_pair(i, w);
                    auto it = row_index.find(key);
                    if (it == row_index.end())
                        it = row_index.emplace(key, row_index.size()).first;
                    entries.emplace_back(it->second, cc);
                }
            }
            columns.push_back({});
            auto& col = columns.back();
            col.resize(row_index.size());
            for (auto& [r, value] : entries) col[r] = value;
        }
        const std::size_t rows = row_index.size(), cols = columns.size();
        for (auto& col : columns) col.resize(rows);
        // Column-space rank via Gaussian elimination.
        std::size_t rank = 0;
        std::vector<bool> used(cols, false);
        for (std::size_t r = 0; r < rows && rank < cols; ++r) {
            std::size_t pick = cols;
            for (std::size_t cidx = 0; cidx < cols; ++cidx)
                if (!used[cidx] && !columns[cidx][r].is_zero()) {
                    pick = cidx;
                    break;
                }
            if (pick == cols) continue;
            used[pick] = true;
            ++rank;
            for (std::size_t cidx = 0; cidx < cols; ++cidx) {
                if (cidx == pick || columns[cidx][r].is_zero()) continue;
                const Rat f = columns[cidx][r] / columns[pick][r];
                for (std::size_t rr = 0; rr < rows; ++rr)
                    columns[cidx][rr] -= f * columns[pick][rr];
            }
        }
        const std::size_t kernel_dim = cols - rank;
        add_check("connectedness", kernel_dim == 1,
                  kernel_dim == 1 ? ""
                                  : "kernel dimension " + std::to_string(kernel_dim) +
                                        " on the degree-" + std::to_string(degree_bound) + " span");
    }

    // (v) Leibniz rule on seeded random pairs.
    {
        Sampler sampler(seed);
        bool pass = true;
        std::string detail;
        for (unsigned t = 0; t < samples; ++t) {
            const NcPoly p = sampler.poly(degree_bound, 3);
            const NcPoly q = sampler.poly(degree_bound, 3);
            const Form lhs = calc.d0(mul_nf(p, q, W));
            const Form rhs = calc.right_mul(calc.d0(p), q) + calc.left_mul(p, calc.d0(q));
            if (!(lhs - rhs).is_zero()) {
                pass = false;
                detail = "d(p*q) != d(p)*q + p*d(q) for p = " + p.str() + ", q = " + q.str();
                break;
            }
        }
        add_check("leibniz", pass, detail);
    }

    // (vi) closed-form partials agree with the Leibniz route.
    {
        bool pass = true;
        std::string detail;
        for (const auto& m : monomials) {
            const Form dm = calc.d0(NcPoly::monomial(m.word()));
            const auto partials = calc.partials_closed_form(m);
            for (int i = 0; i < 3; ++i) {
                if (dm.deg1[i] != partials[i]) {
                    pass = false;
                    detail = "partial_x" + std::to_string(i + 1) + " of " + m.word().str();
                    break;
                }
            }
            if (!pass) break;
        }
        add_check("partials", pass, detail);
    }

    // (vii) reconstruction identities on basis forms with monomial coefficients.
    {
        bool pass = true;
        std::string detail;
        const auto gens = calc.reconstruction_generators();
        const unsigned bound = std::min(degree_bound, 3u);
        const auto small = pbw_monomials_up_to(bound);
        for (const auto& m : small) {
            const NcPoly coeff = NcPoly::monomial(m.word());
            for (int j = 1; j <= 3 && pass; ++j) {
                const Form w1 = Form::one_form(j, coeff);
                Form sum;
                for (int i = 0; i < 3; ++i)
                    sum += calc.right_mul(gens.omega1[i],
                                          calc.pi_omega(calc.wedge(gens.omega2_bar[i], w1)));
                if (!(sum - w1).is_zero()) {
                    pass = false;
                    detail = "degree-1 identity fails on dx" + std::to_string(j) + "." +
                             m.word().str();
                }
            }
            for (int t = 0; t < 3 && pass; ++t) {
                const Form w2 = Form::two_form(t, coeff);
                Form sum;
                for (int i = 0; i < 3; ++i)
                    sum += calc.right_mul(gens.omega2[i],
                                          calc.pi_omega(calc.wedge(gens.omega1[i], w2)));
                if (!(sum - w2).is_zero()) {
                    pass = false;
                    detail = "degree-2 identity fails on basis slot " + std::to_string(t) + "." +
                             m.word().str();
                }
            }
            if (!pass) break;
        }
        add_check("reconstruction", pass, detail);
    }

    return report;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    if (!(r.shift[0].is_zero() && r.shift[1].is_zero() && r.shift[2].is_zero()))
        os << "witness shift applied: (" << r.shift[0] << ", " << r.shift[1] << ", " << r.shift[2]
           << ")\n";
    for (const auto& c : r.checks) {
        os << "check=" << c.name << " status=" << (c.pass ? "pass" : "fail");
        if (!c.pass && !c.detail.empty()) os << " detail=" << c.detail;
        os << "\n";
    }
    os << (r.all_pass() ? "all checks passed" : "VERIFICATION FAILED") << "\n";
    return os.str();
}

std::string render_machine(const VerificationReport& r) {
    std::ostringstream os;
    os << "shift=(" << r.shift[0] << "," << r.shift[1] << "," << r.shift[2] << ")\n";
    for (const auto& c : r.checks) {
        os << "check=" << c.name << " status=" << (c.pass ? "pass" : "fail") << " detail=";
        if (c.detail.empty()) os << "-";
        else {
            // Machine lines are space-free per field.
            std::string d = c.detail;
            for (auto& ch : d)
                if (ch == ' ') ch = '_';
            os << d;
        }
        os << "\n";
    }
    os << "result=" << (r.all_pass() ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace biquad
