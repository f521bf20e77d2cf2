#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclo/classifier.hpp"
#include "cyclo/group.hpp"

namespace cyclo {

// Above 16 the search needs canonization to be practical; refuse.
inline constexpr int kEnumHardCap = 16;

struct EnumOptions {
    int cap = 12;  // enumerate_groups throws OrderTooLarge above this
    int jobs = 1;  // parallel subtree tasks; output is identical for any value
};

// All groups of order n up to isomorphism, by exhaustive Cayley-table
// search: identity row/column fixed, cells filled row-major, pruning on
// Latin-square violations, on associativity violations among fully
// determined triples, and on element-order feasibility; each completed
// table is validated and discarded if isomorphic to an already-emitted
// group. Output is sorted by table, lexicographically.
std::vector<Group> enumerate_groups(int n, const EnumOptions& opts = {});

struct DiffEntry {
    Group group;
    int count_cyclic = 0;
    ClassLabel label;
};

struct Mismatch {
    enum class Kind { PaperGap, MissingFamily };
    Kind kind = Kind::PaperGap;
    int entry_index = -1;  // PaperGap: index into the order's entries
    ClassLabel label;      // the gap label, or the family that was not found
};

struct OrderReport {
    int n = 0;
    int total_groups = 0;
    std::vector<DiffEntry> entries;
    std::vector<Mismatch> mismatches;
};

// Two-directional check of the classification against the enumeration:
// entries with |C(G)| <= 5 outside the listed families become PaperGap
// mismatches, and every listed family of order <= max_order must appear
// among the enumerated groups with |C| <= 5.
struct DiffReport {
    int max_order = 0;
    std::vector<OrderReport> orders;
    bool has_mismatches() const;
};

DiffReport verify_theorem(int max_order, const EnumOptions& opts = {});

// All enumerated groups of order <= max_order with |C(G)| == count_target,
// each with its classification.
std::vector<std::pair<Group, ClassLabel>> lemma_sweep(int count_target, int max_order,
                                                      const EnumOptions& opts = {});

// The family references the classification lists at order n, with their
// labels, in a fixed order.
std::vector<std::pair<ClassLabel, Group>> listed_families(int n);

std::string to_json(const DiffReport& report);
std::string to_text(const DiffReport& report);

}  // namespace cyclo
