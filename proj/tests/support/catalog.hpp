#pragma once

// The construction catalog: every expression over C/D/Q/S atoms whose
// group order stays within the bound, one entry per atom multiset (the
// product is commutative up to isomorphism). Order-1 atoms appear only as
// the standalone expressions "C1" and "S1".

#include <string>
#include <vector>

#include "cyclo/constructions.hpp"
#include "cyclo/group.hpp"

namespace catalog {

struct Entry {
    std::string expr;
    cyclo::Group group;
};

inline std::vector<Entry> construction_catalog(int max_order) {
    struct Atom {
        std::string text;
        int order;
    };
    std::vector<Atom> atoms;
    for (int k = 2; k <= max_order; ++k) atoms.push_back({"C" + std::to_string(k), k});
    for (int m = 3; 2 * m <= max_order; ++m) atoms.push_back({"D" + std::to_string(m), 2 * m});
    for (int k : {8, 16, 32})
        if (k <= max_order) atoms.push_back({"Q" + std::to_string(k), k});
    for (int k = 2, f = 2; k <= 5; ++k, f *= k)
        if (f <= max_order) atoms.push_back({"S" + std::to_string(k), f});

    std::vector<std::string> exprs{"C1", "S1"};
    std::vector<std::string> stack;
    auto emit = [&] {
        std::string text;
        for (std::size_t i = 0; i < stack.size(); ++i) {
            if (i) text += " x ";
            text += stack[i];
        }
        exprs.push_back(text);
    };
    auto recurse = [&](auto&& self, std::size_t from, int remaining) -> void {
        for (std::size_t i = from; i < atoms.size(); ++i) {
            if (atoms[i].order > remaining) continue;
            stack.push_back(atoms[i].text);
            emit();
            self(self, i, remaining / atoms[i].order);
            stack.pop_back();
        }
    };
    recurse(recurse, 0, max_order);

    std::vector<Entry> out;
    out.reserve(exprs.size());
    for (auto& text : exprs) out.push_back({text, cyclo::build_expr(text)});
    return out;
}

}  // namespace catalog
