#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo {

// Orders above this refuse full-lattice operations (all_subgroups,
// sylow, is_dedekind). Cyclic-poset operations have no such cap.
inline constexpr int kLatticeCap = 64;

// A subgroup of a fixed parent group, stored as its sorted element list.
// Equality is element-list equality.
struct Subgroup {
    std::vector<int> elements;  // strictly increasing, always contains 0
    int parent_order = 1;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
    bool is_subset_of(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const { return elements == other.elements; }
};

// The poset C(G) of all cyclic subgroups, the histogram c_k and the Hasse
// covering relation. Members are sorted by (order, element list).
struct CyclicPoset {
    std::vector<Subgroup> members;
    std::map<int, int> c_histogram;                // order k -> c_k
    std::vector<std::pair<int, int>> inclusion;    // covering pairs (i, j): members[i] < members[j]
};

// Both lines of the counting identity: |G| = sum c_k * phi(k) and
// |C(G)| = sum c_k. They hold for every valid group; the report exists
// for test diagnostics.
struct CountingReport {
    int group_order = 0;
    long long phi_weighted_sum = 0;
    int poset_size = 0;
    long long histogram_sum = 0;
    bool order_identity = false;  // phi_weighted_sum == group_order
    bool count_identity = false;  // histogram_sum == poset_size
};

// Smallest subgroup containing the seed, by closure.
Subgroup generated_subgroup(const Group& g, const std::vector<int>& seed);

// The cyclic subgroup generated by one element.
Subgroup cyclic_subgroup(const Group& g, int x);

CyclicPoset cyclic_subgroups(const Group& g);
CountingReport check_counting_identities(const Group& g);

// Every subgroup, as the join-closure fixpoint of the cyclic subgroups.
// Sorted by (order, element list). Throws LatticeTooLarge above the cap.
std::vector<Subgroup> all_subgroups(const Group& g, int lattice_cap = kLatticeCap);

bool is_normal(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);

// One subgroup of order equal to the full p-part of |G|: the first such
// entry in the sorted all_subgroups list. Throws PrimeDoesNotDivide.
Subgroup sylow(const Group& g, int p);

// True iff every subgroup is normal.
bool is_dedekind(const Group& g, int lattice_cap = kLatticeCap);

// The set product AB = {a*b}, which is a subgroup exactly when AB = BA;
// throws NotASubgroup otherwise.
Subgroup internal_product(const Group& g, const Subgroup& a, const Subgroup& b);

// Hasse diagram of C(G) in DOT form, one node per member ("C_k #i"),
// one edge per covering pair, bottom-up.
std::string poset_dot(const CyclicPoset& poset, const std::string& graph_name = "cyclic_poset");

}  // namespace cyclo
