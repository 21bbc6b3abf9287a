#include "biquad/catalog.hpp"

#include "biquad/errors.hpp"

namespace biquad {

std::string_view claim_name(Claim c) {
    switch (c) {
        case Claim::smooth: return "smooth";
        case Claim::not_smooth: return "not_smooth";
        case Claim::unknown: return "unknown";
    }
    return "?";
}

std::vector<ParamSymbol> CatalogEntry::free_symbols() const {
    std::vector<ParamSymbol> out;
    for (ParamSymbol s : kAllParams)
        if (slots[static_cast<int>(s)].kind == SlotSpec::Kind::free) out.push_back(s);
    return out;
}

std::map<ParamSymbol, Rat> CatalogEntry::default_assignment() const {
    std::map<ParamSymbol, Rat> m;
    for (ParamSymbol s : kAllParams) {
        const SlotSpec& spec = slots[static_cast<int>(s)];
        if (spec.kind == SlotSpec::Kind::free) m.emplace(s, spec.value);
    }
    return m;
}

namespace {

using S = ParamSymbol;

// Builder keeping the per-row transcription compact.
struct EntryBuilder {
    CatalogEntry e;

    EntryBuilder(int table, std::string name, std::string display, Claim claimed) {
        e.table = table;
        e.name = std::move(name);
        e.display = std::move(display);
        e.claimed = claimed;
        for (auto& s : e.slots) s = SlotSpec{SlotSpec::Kind::fixed, Rat(0), S::q1};
    }

    EntryBuilder& fixed(S s, Rat v) {
        e.slots[static_cast<int>(s)] = {SlotSpec::Kind::fixed, std::move(v), S::q1};
        return *this;
    }
    EntryBuilder& free(S s, Rat preferred) {
        e.slots[static_cast<int>(s)] = {SlotSpec::Kind::free, std::move(preferred), S::q1};
        return *this;
    }
    EntryBuilder& inverse(S s, S of) {
        e.slots[static_cast<int>(s)] = {SlotSpec::Kind::inverse_of, Rat(0), of};
        return *this;
    }
    EntryBuilder& equal(S s, S to) {
        e.slots[static_cast<int>(s)] = {SlotSpec::Kind::equal_to, Rat(0), to};
        return *this;
    }
    EntryBuilder& matrix(std::array<std::array<long, 3>, 3> A) {
        const S names[3][3] = {{S::a, S::b, S::c},
                               {S::alpha, S::beta, S::gamma},
                               {S::lambda, S::mu, S::nu}};
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 3; ++k) fixed(names[r][k], Rat(A[r][k]));
        return *this;
    }
    EntryBuilder& bcol(std::array<long, 3> B) {
        fixed(S::b1, Rat(B[0]));
        fixed(S::b2, Rat(B[1]));
        fixed(S::b3, Rat(B[2]));
        return *this;
    }
    EntryBuilder& require(ParamPoly nonzero, std::string label) {
        e.constraints.push_back({std::move(nonzero), std::move(label)});
        return *this;
    }
    EntryBuilder& note(std::string n) {
        e.note = std::move(n);
        return *this;
    }

    // Common q-patterns for the eight tables.
    EntryBuilder& q_lie() {  // q1 = q2 = q3 = 1
        return fixed(S::q1, 1).fixed(S::q2, 1).fixed(S::q3, 1);
    }
    EntryBuilder& q_table2() {  // q1 != 1, q2 = q3 = 1
        fixed(S::q2, 1).fixed(S::q3, 1).free(S::q1, 2);
        return require(pp(S::q1) - pp(1), "q1 != 1");
    }
    EntryBuilder& q_table3_generic() {  // q1, q2 != 1, q3 = 1, q1*q2 != 1
        free(S::q1, 2).free(S::q2, 3).fixed(S::q3, 1);
        require(pp(S::q1) - pp(1), "q1 != 1");
        require(pp(S::q2) - pp(1), "q2 != 1");
        return require(pp(S::q1) * pp(S::q2) - pp(1), "q1*q2 != 1");
    }
    EntryBuilder& q_table3_inverse() {  // q1, q2 != 1, q3 = 1, q2 = q1^{-1}
        free(S::q1, 2).inverse(S::q2, S::q1).fixed(S::q3, 1);
        require(pp(S::q1) - pp(1), "q1 != 1");
        return require(pp(S::q2) - pp(1), "q2 != 1");
    }
    EntryBuilder& quantum_base() {  // q1, q2, q3 all outside {0, 1}
        require(pp(S::q1) - pp(1), "q1 != 1");
        require(pp(S::q2) - pp(1), "q2 != 1");
        return require(pp(S::q3) - pp(1), "q3 != 1");
    }
    EntryBuilder& q_table4() {  // q1 - q3 = 0 and 1 - q1*q2 = 0
        free(S::q1, 2).inverse(S::q2, S::q1).equal(S::q3, S::q1);
        return quantum_base();
    }
    EntryBuilder& q_table5() {  // q1 - q3 = 0 and 1 - q1*q2 != 0
        free(S::q1, 2).free(S::q2, 3).equal(S::q3, S::q1);
        quantum_base();
        return require(pp(1) - pp(S::q1) * pp(S::q2), "1 - q1*q2 != 0");
    }
    EntryBuilder& q_table6() {  // q1 - q3 != 0, 1 - q1*q2 = 0, 1 - q2*q3 != 0
        free(S::q1, 2).inverse(S::q2, S::q1).free(S::q3, 5);
        quantum_base();
        require(pp(S::q1) - pp(S::q3), "q1 - q3 != 0");
        return require(pp(1) - pp(S::q2) * pp(S::q3), "1 - q2*q3 != 0");
    }
    EntryBuilder& q_table7() {  // q1 - q3 != 0, 1 - q1*q2 != 0, 1 - q2*q3 = 0
        free(S::q1, 2).free(S::q2, 3).inverse(S::q3, S::q2);
        quantum_base();
        require(pp(S::q1) - pp(S::q3), "q1 - q3 != 0");
        return require(pp(1) - pp(S::q1) * pp(S::q2), "1 - q1*q2 != 0");
    }
    EntryBuilder& q_table8() {  // all three expressions nonzero
        free(S::q1, 2).free(S::q2, 3).free(S::q3, 5);
        quantum_base();
        require(pp(S::q1) - pp(S::q3), "q1 - q3 != 0");
        require(pp(1) - pp(S::q1) * pp(S::q2), "1 - q1*q2 != 0");
        return require(pp(1) - pp(S::q2) * pp(S::q3), "1 - q2*q3 != 0");
    }
};

std::vector<CatalogEntry> build_catalog3() {
    std::vector<CatalogEntry> out;
    auto add = [&](EntryBuilder& b) { out.push_back(std::move(b.e)); };

    // Table 1: Lie type, q1 = q2 = q3 = 1.
    {
        EntryBuilder b(1, "poly3", "k[x1,x2,x3]", Claim::smooth);
        b.q_lie().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(1, "u_sl2", "U(sl2)", Claim::not_smooth);
        b.q_lie().matrix({{{0, 0, -1}, {2, 0, 0}, {0, -2, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(1, "u_h3", "U(H3)", Claim::not_smooth);
        b.q_lie().matrix({{{0, 0, -1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(1, "u_n_c1", "U(N)/(c-1)", Claim::not_smooth);
        b.q_lie().matrix({{{0, 0, -1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, -1});
        add(b);
    }
    {
        EntryBuilder b(1, "u_aff1", "k<x1,x2,x3 | [x1,x2]=x2>", Claim::smooth);
        b.q_lie().matrix({{{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(1, "u_m_c1", "U(M)/(c-1)", Claim::smooth);
        b.q_lie().matrix({{{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, -1, 0});
        add(b);
    }

    // Table 2: q1 != 1, q2 = q3 = 1.
    {
        EntryBuilder b(2, "a1", "A1", Claim::smooth);
        b.q_table2().matrix({{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        b.free(S::mu, 1).require(pp(S::mu) + pp(1), "mu != -1");
        add(b);
    }
    {
        EntryBuilder b(2, "a2", "A2", Claim::smooth);
        b.q_table2().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "b1", "B1", Claim::smooth);
        b.q_table2().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "b2", "B2", Claim::smooth);
        b.q_table2().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "b3", "B3", Claim::not_smooth);
        b.q_table2().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "b4", "B4", Claim::not_smooth);
        b.q_table2().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "c1", "C1", Claim::smooth);
        b.q_table2().matrix({{{0, 0, 0}, {1, 0, 0}, {0, -1, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "c2", "C2", Claim::not_smooth);
        b.q_table2().matrix({{{0, 0, 1}, {1, 0, 0}, {0, -1, 0}}}).bcol({1, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "d1", "D1", Claim::unknown);
        b.q_table2().matrix({{{0, 0, 0}, {1, 0, 0}, {0, -1, 0}}}).bcol({1, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(2, "d2", "D2", Claim::not_smooth);
        b.q_table2().matrix({{{0, 0, 1}, {1, 0, 0}, {0, -1, 0}}}).bcol({0, 0, 0});
        b.free(S::b1, 2).require(pp(S::b1) - pp(1), "b1 != 1");
        add(b);
    }

    // Table 3: q1 != 1, q2 != 1, q3 = 1.
    {
        EntryBuilder b(3, "a3_q1_q2_1", "A^3_(q1,q2,1)", Claim::smooth);
        b.q_table3_generic().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(3, "e1", "E1", Claim::smooth);
        b.q_table3_inverse().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(3, "e2", "E2", Claim::smooth);
        b.q_table3_inverse().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 1});
        add(b);
    }
    {
        EntryBuilder b(3, "e3", "E3", Claim::not_smooth);
        b.q_table3_inverse().matrix({{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(3, "e4", "E4", Claim::not_smooth);
        b.q_table3_inverse().matrix({{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}).bcol({0, 0, 1});
        add(b);
    }

    // Table 4: q1 - q3 = 0 and 1 - q1*q2 = 0.
    {
        EntryBuilder b(4, "f1", "F1", Claim::not_smooth);
        b.q_table4().matrix({{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}});
        b.free(S::b1, 1).free(S::b2, 1).free(S::b3, 1);
        add(b);
    }
    {
        EntryBuilder b(4, "f2", "F2", Claim::not_smooth);
        b.q_table4().matrix({{{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        b.free(S::b1, 1).free(S::b2, 1);
        add(b);
    }
    {
        EntryBuilder b(4, "f3", "F3", Claim::not_smooth);
        b.q_table4().matrix({{{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}}).bcol({0, 0, 1});
        b.free(S::b1, 1).free(S::b2, 1);
        add(b);
    }
    {
        EntryBuilder b(4, "f4", "F4", Claim::not_smooth);
        b.q_table4().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        b.free(S::b1, 1);
        add(b);
    }
    {
        EntryBuilder b(4, "f5", "F5", Claim::not_smooth);
        b.q_table4().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 1, 0});
        b.free(S::b1, 1);
        add(b);
    }
    {
        EntryBuilder b(4, "f6", "F6", Claim::not_smooth);
        b.q_table4().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 1, 1});
        b.free(S::b1, 1);
        add(b);
    }
    {
        EntryBuilder b(4, "f7", "F7", Claim::smooth);
        b.q_table4().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(4, "f8", "F8", Claim::smooth);
        b.q_table4().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(4, "f9", "F9", Claim::smooth);
        b.q_table4().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 1, 0});
        add(b);
    }
    {
        EntryBuilder b(4, "f10", "F10", Claim::smooth);
        b.q_table4().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 1, 1});
        add(b);
    }

    // Table 5: q1 - q3 = 0 and 1 - q1*q2 != 0.
    {
        EntryBuilder b(5, "g1", "G1", Claim::smooth);
        b.q_table5().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(5, "g2", "G2", Claim::smooth);
        b.q_table5().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 1, 0});
        add(b);
    }
    {
        EntryBuilder b(5, "g3", "G3", Claim::not_smooth);
        b.q_table5().matrix({{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(5, "g4", "G4", Claim::not_smooth);
        b.q_table5().matrix({{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}}).bcol({0, 1, 0});
        add(b);
    }

    // Table 6: q1 - q3 != 0, 1 - q1*q2 = 0, 1 - q2*q3 != 0.
    {
        EntryBuilder b(6, "h1", "H1", Claim::smooth);
        b.q_table6().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(6, "h2", "H2", Claim::smooth);
        b.q_table6().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 1});
        add(b);
    }
    {
        EntryBuilder b(6, "h3", "H3", Claim::not_smooth);
        b.q_table6().matrix({{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(6, "h4", "H4", Claim::not_smooth);
        b.q_table6().matrix({{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}).bcol({0, 0, 1});
        add(b);
    }

    // Table 7: q1 - q3 != 0, 1 - q1*q2 != 0, 1 - q2*q3 = 0.
    {
        EntryBuilder b(7, "i1", "I1", Claim::smooth);
        b.q_table7().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(7, "i2", "I2", Claim::smooth);
        b.q_table7().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(7, "i3", "I3", Claim::not_smooth);
        b.q_table7().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }
    {
        EntryBuilder b(7, "i4", "I4", Claim::not_smooth);
        b.q_table7().matrix({{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}}).bcol({1, 0, 0});
        add(b);
    }

    // Table 8: q1 - q3 != 0, 1 - q1*q2 != 0, 1 - q2*q3 != 0.
    {
        EntryBuilder b(8, "a3_q", "A^3_Q", Claim::smooth);
        b.q_table8().matrix({{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}).bcol({0, 0, 0});
        add(b);
    }

    return out;
}

std::vector<TwoGenEntry> build_catalog2() {
    return {
        {"poly2", "k[x1,x2]", false, Rat(1), Rat(0), Rat(0), Rat(0), Claim::smooth},
        {"weyl", "A_1(k)", false, Rat(1), Rat(0), Rat(0), Rat(1), Claim::smooth},
        {"u_n2", "U(n_2)", false, Rat(1), Rat(1), Rat(0), Rat(0), Claim::smooth},
        {"quantum_plane", "O_q(k)", true, Rat(2), Rat(0), Rat(0), Rat(0), Claim::smooth},
        {"quantum_weyl", "A_1(q)", true, Rat(2), Rat(0), Rat(0), Rat(1), Claim::unknown},
    };
}

}  // namespace

const std::vector<CatalogEntry>& catalog3() {
    static const std::vector<CatalogEntry> entries = build_catalog3();
    return entries;
}

const std::vector<TwoGenEntry>& catalog2() {
    static const std::vector<TwoGenEntry> entries = build_catalog2();
    return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
    for (const auto& e : catalog3())
        if (e.name == name) return &e;
    return nullptr;
}

Presentation instantiate(const CatalogEntry& entry, const std::map<ParamSymbol, Rat>& assignment) {
    std::array<Rat, 15> values;
    std::array<bool, 15> resolved{};

    for (ParamSymbol s : kAllParams) {
        const int i = static_cast<int>(s);
        const SlotSpec& spec = entry.slots[i];
        if (spec.kind == SlotSpec::Kind::fixed) {
            values[i] = spec.value;
            resolved[i] = true;
        } else if (spec.kind == SlotSpec::Kind::free) {
            auto it = assignment.find(s);
            if (it == assignment.end())
                throw DomainError("entry '" + entry.name + "': assignment missing free symbol '" +
                                  std::string(param_name(s)) + "'");
            values[i] = it->second;
            resolved[i] = true;
        }
    }
    for (ParamSymbol s : kAllParams) {
        const int i = static_cast<int>(s);
        const SlotSpec& spec = entry.slots[i];
        if (resolved[i]) continue;
        const int j = static_cast<int>(spec.other);
        if (!resolved[j])
            throw DomainError("entry '" + entry.name + "': unresolved derived slot");
        if (spec.kind == SlotSpec::Kind::inverse_of) {
            if (values[j].is_zero())
                throw DomainError("entry '" + entry.name + "': cannot invert zero value of '" +
                                  std::string(param_name(spec.other)) + "'");
            values[i] = values[j].inverse();
        } else {
            values[i] = values[j];
        }
    }

    std::map<ParamSymbol, Rat> full;
    for (ParamSymbol s : kAllParams) full.emplace(s, values[static_cast<int>(s)]);
    for (const auto& sc : entry.constraints) {
        if (sc.nonzero.eval(full).is_zero())
            throw DomainError("entry '" + entry.name + "': side constraint '" + sc.label +
                              "' violated");
    }

    auto v = [&](ParamSymbol s) { return values[static_cast<int>(s)]; };
    return Presentation(
        {v(S::q1), v(S::q2), v(S::q3)},
        {{{v(S::a), v(S::b), v(S::c)},
          {v(S::alpha), v(S::beta), v(S::gamma)},
          {v(S::lambda), v(S::mu), v(S::nu)}}},
        {v(S::b1), v(S::b2), v(S::b3)});
}

Presentation instantiate_default(const CatalogEntry& entry) {
    return instantiate(entry, entry.default_assignment());
}

}  // namespace biquad
