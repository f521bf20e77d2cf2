#pragma once

#include <string>
#include <vector>

#include "cyclo/group.hpp"

namespace cyclo {

// Largest table any constructor will produce; keeps full validation cheap.
inline constexpr int kTableCap = 4096;

// One atom of the expression grammar. Conventions (both spelled out in
// error messages because the literature uses both): D m is the dihedral
// group of ORDER 2m, Q k is the dicyclic 2-group of ORDER k.
struct GroupAtom {
    enum class Kind { Cyclic, Dihedral, Quaternion, Symmetric, ElemAbelian };
    Kind kind;
    int a = 0;  // C n / D m / Q k / S k / E p
    int b = 0;  // E only: the exponent in p^b
    int order() const;
    std::string text() const;
};

// Parse tree of EXPR := TERM (" x " TERM)*. The product operator is
// associative, so the tree is kept as a flat factor list.
struct GroupExpr {
    std::vector<GroupAtom> factors;
    std::string text() const;
};

// Cyclic group of order n; index i is the i-th power of the generator.
Group cyclic(int n);

// Product on pairs ordered lexicographically, (0,0) at index 0.
// Throws ProductTooLarge when |g|*|h| > kTableCap.
Group direct_product(const Group& g, const Group& h);

// Dihedral group of order 2m presented by r^m = s^2 = 1, s r s = r^-1.
Group dihedral(int m);

// Generalized quaternion (dicyclic) group of order k, k in {8, 16, 32}:
// a^(k/2) = 1, b^2 = a^(k/4), b a b^-1 = a^-1.
Group generalized_quaternion(int k);

// Symmetric group on k letters, 1 <= k <= 5, generated by the
// transposition (1 2) and the k-cycle (1 2 ... k).
Group symmetric(int k);

// Direct product of k copies of C_p.
Group elementary_abelian(int p, int k);

// Closure of the given permutations of [0, d) under composition, as a
// Cayley table; elements labeled breadth-first from the identity over the
// listed generators. Throws NotAPermutation or ClosureTooLarge.
Group from_generators(const std::vector<std::vector<int>>& perms);

// Atoms are case-insensitive; whitespace around the "x" operator is
// required. Throws ParseError with the byte position of the problem.
GroupExpr parse_expr(const std::string& text);
Group build(const GroupExpr& expr);
Group build_expr(const std::string& text);

}  // namespace cyclo
