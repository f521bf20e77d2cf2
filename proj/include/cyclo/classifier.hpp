#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo {

// Outcome of the classification predicate. Outside means |C(G)| > 5;
// PaperGap means |C(G)| <= 5 but the group matches no listed family.
// PaperGap is a first-class finding, never an error default.
struct ClassLabel {
    enum class Family {
        Trivial,
        PrimeCyclic,     // C_p
        CyclicPSquared,  // C_p^2
        CyclicPCubed,    // C_p^3
        CyclicPFourth,   // C_p^4
        CyclicPQ,        // C_pq, p != q
        Sym3,
        Quaternion8,
        ElemAbelian3x3,  // C_3 x C_3
        Outside,
        PaperGap,
    };

    Family family = Family::Trivial;
    int p = 0;      // prime parameter where applicable
    int q = 0;      // CyclicPQ only
    int count = 0;  // |C(G)| for Outside / PaperGap

    bool operator==(const ClassLabel&) const = default;

    // Stable text token, e.g. "C_p^2(p=3)", "S3", "PAPER_GAP(n=4)".
    std::string str() const;

    static ClassLabel trivial() { return {}; }
    static ClassLabel prime_cyclic(int p) { return {Family::PrimeCyclic, p, 0, 0}; }
    static ClassLabel cyclic_p2(int p) { return {Family::CyclicPSquared, p, 0, 0}; }
    static ClassLabel cyclic_p3(int p) { return {Family::CyclicPCubed, p, 0, 0}; }
    static ClassLabel cyclic_p4(int p) { return {Family::CyclicPFourth, p, 0, 0}; }
    static ClassLabel cyclic_pq(int p, int q) { return {Family::CyclicPQ, p, q, 0}; }
    static ClassLabel sym3() { return {Family::Sym3, 0, 0, 0}; }
    static ClassLabel quaternion8() { return {Family::Quaternion8, 0, 0, 0}; }
    static ClassLabel elem_abelian_3x3() { return {Family::ElemAbelian3x3, 0, 0, 0}; }
    static ClassLabel outside(int count) { return {Family::Outside, 0, 0, count}; }
    static ClassLabel paper_gap(int count) { return {Family::PaperGap, 0, 0, count}; }
};

// Cheap isomorphism invariants; equality is necessary, not sufficient.
struct Fingerprint {
    int order = 0;
    bool abelian = false;
    std::vector<int> element_orders;  // sorted multiset
    std::map<int, int> c_histogram;
    int center_size = 0;

    auto operator<=>(const Fingerprint&) const = default;
};

// |C(G)|.
int count_cyclic(const Group& g);

Fingerprint fingerprint(const Group& g);

// Prepared isomorphism test against a fixed left-hand group: the
// fingerprint and a greedy generating sequence are computed once, then
// each matches() call backtracks over order-compatible images of that
// sequence, extending by closure and pruning on table conflicts.
class IsoTester {
public:
    explicit IsoTester(const Group& g);
    const Fingerprint& fp() const { return fp_; }
    bool matches(const Group& h) const;
    // Variant for callers that already computed h's fingerprint.
    bool matches(const Group& h, const Fingerprint& h_fp) const;

private:
    const Group g_;
    Fingerprint fp_;
    std::vector<int> generators_;
};

// May be slow above order ~64 when the groups really are isomorphic and
// highly symmetric; fingerprint rejection keeps the common case fast.
bool are_isomorphic(const Group& g, const Group& h);

// The classification predicate: Outside(count) when |C(G)| > 5, otherwise
// the matching family by explicit isomorphism test against freshly
// constructed references, or PaperGap(count) when none matches.
ClassLabel paper_predicate(const Group& g);

// |C(G)| each family is known to have; nullopt for Outside / PaperGap.
std::optional<int> predicted_count(const ClassLabel& label);

}  // namespace cyclo
