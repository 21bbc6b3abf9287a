#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "biquad/param_poly.hpp"
#include "biquad/presentation.hpp"

namespace biquad {

// Verdict printed in the source classification tables.
enum class Claim { smooth, not_smooth, unknown };
std::string_view claim_name(Claim c);

// How one of the 15 presentation slots is filled for a catalog entry.
struct SlotSpec {
    enum class Kind { fixed, free, inverse_of, equal_to };
    Kind kind = Kind::fixed;
    Rat value;                            // fixed value, or the default for a free slot
    ParamSymbol other = ParamSymbol::q1;  // referenced slot for derived kinds
};

// Inequality side constraint: the expression must be nonzero at any
// instantiation.  The label carries the printed form, e.g. "mu != -1".
struct SideConstraint {
    ParamPoly nonzero;
    std::string label;
};

struct CatalogEntry {
    std::string name;     // machine name, e.g. "u_sl2"
    std::string display;  // e.g. "U(sl2)"
    int table;            // 1..8
    Claim claimed;
    std::array<SlotSpec, 15> slots;  // indexed by ParamSymbol order
    std::vector<SideConstraint> constraints;
    std::string note;  // transcription metadata; empty when the row is clean

    std::vector<ParamSymbol> free_symbols() const;
    std::map<ParamSymbol, Rat> default_assignment() const;
};

struct TwoGenEntry {
    std::string name;
    std::string display;
    bool q_free = false;
    Rat q;  // default when free
    Rat a, b, c;
    Claim claimed;
};

// The 44 three-generator entries, in table-row order.
const std::vector<CatalogEntry>& catalog3();
// The five two-generator algebras.
const std::vector<TwoGenEntry>& catalog2();

const CatalogEntry* find_entry(std::string_view name);

// Resolve free and derived slots and check every side constraint.  The
// assignment must cover exactly the free symbols that occur.
Presentation instantiate(const CatalogEntry& entry, const std::map<ParamSymbol, Rat>& assignment);

// Instantiation at the default generic sample: free q-slots take 2, 3, 5 and
// free matrix slots take 1, except where a side constraint forbids it.
Presentation instantiate_default(const CatalogEntry& entry);

}  // namespace biquad
