#include "doctest.h"

#include <numeric>
#include <sstream>

#include "cyclo/classifier.hpp"
#include "cyclo/constructions.hpp"
#include "cyclo/group.hpp"

#include "support/catalog.hpp"
#include "support/naive.hpp"

using namespace cyclo;

namespace {

std::vector<std::vector<int>> mod_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<int>> rows_of(const Group& g) {
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) t[i][j] = g.mul(i, j);
    return t;
}

}  // namespace

TEST_CASE("euler_phi matches the gcd-scan definition") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(8) == 4);  // coprime residues 1, 3, 5, 7
    for (int k = 1; k <= 200; ++k) CHECK(euler_phi(k) == naive::phi_by_gcd(k));
}

TEST_CASE("euler_phi is multiplicative on coprime arguments") {
    for (int m = 1; m <= 50; ++m)
        for (int n = 1; n <= 50; ++n)
            if (std::gcd(m, n) == 1) CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
}

TEST_CASE("number helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(!is_prime(1));
    CHECK(!is_prime(51));
    CHECK(smallest_prime_factor(12) == 2);
    CHECK(smallest_prime_factor(35) == 5);
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(12) == std::vector<int>{2, 3});
    CHECK(factorize(360) == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("validate_cayley accepts the trivial group") {
    const Group g = validate_cayley({{0}});
    CHECK(g.order() == 1);
    CHECK(g.element_order(0) == 1);
}

TEST_CASE("validate_cayley accepts addition mod 4") {
    const Group g = validate_cayley(mod_table(4));
    CHECK(g.order() == 4);
    CHECK(g.mul(1, 1) == 2);
    CHECK(g.element_order(1) == 4);
}

TEST_CASE("validate_cayley rejects bad tables") {
    CHECK_THROWS_AS(validate_cayley({{0, 1}, {1, 1}}), NotLatin);
    CHECK_THROWS_AS(validate_cayley({{0, 1}, {1, 2}}), BadEntry);
    CHECK_THROWS_AS(validate_cayley({{0, 1}, {1}}), BadEntry);
    CHECK_THROWS_AS(validate_cayley(std::vector<std::vector<int>>{}), BadEntry);
    // Latin square whose index 0 is not an identity.
    CHECK_THROWS_AS(validate_cayley({{1, 0}, {0, 1}}), NoIdentity);
}

TEST_CASE("validate_cayley reports an associativity witness") {
    // A Latin square with identity that is a loop but not a group.
    const std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    try {
        validate_cayley(loop);
        FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
        // The witness must be a real violation.
        const auto& t = loop;
        CHECK(t[t[e.a][e.b]][e.c] != t[e.a][t[e.b][e.c]]);
    }
}

TEST_CASE("identity and inverse laws") {
    const Group c4 = cyclic(4);
    for (int b = 0; b < 4; ++b) CHECK(c4.mul(0, b) == b);
    CHECK(cyclic(2).mul(1, 1) == 0);
    CHECK(c4.inverse(0) == 0);
    CHECK(c4.inverse(1) == 3);

    const Group klein = direct_product(cyclic(2), cyclic(2));
    for (int a = 0; a < 4; ++a) CHECK(klein.inverse(a) == a);
}

TEST_CASE("element orders") {
    const Group c6 = cyclic(6);
    CHECK(c6.element_order(0) == 1);
    CHECK(c6.element_order(1) == 6);

    // S3: identity, three transpositions, two 3-cycles.
    auto orders = symmetric(3).element_orders();
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("element_order agrees with the naive walk and with inverses") {
    for (const Group& g : {symmetric(4), generalized_quaternion(16), dihedral(5), cyclic(12)}) {
        const auto rows = rows_of(g);
        for (int a = 0; a < g.order(); ++a) {
            CHECK(g.element_order(a) == naive::element_order(rows, a));
            CHECK(g.element_order(a) == g.element_order(g.inverse(a)));
        }
    }
}

TEST_CASE("order_spectrum") {
    const auto klein = direct_product(cyclic(2), cyclic(2)).order_spectrum();
    auto orders = klein.element_orders;
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 2, 2});
    CHECK(klein.pi_e == std::vector<int>{1, 2});
    CHECK(klein.pi == std::vector<int>{2});
    CHECK(klein.exponent == 2);

    const auto trivial = cyclic(1).order_spectrum();
    CHECK(trivial.element_orders == std::vector<int>{1});
    CHECK(trivial.pi_e == std::vector<int>{1});
    CHECK(trivial.pi.empty());
    CHECK(trivial.exponent == 1);

    const auto s3 = symmetric(3).order_spectrum();
    CHECK(s3.pi_e == std::vector<int>{1, 2, 3});
    CHECK(s3.pi == std::vector<int>{2, 3});
    CHECK(s3.exponent == 6);
}

TEST_CASE("exponent divides the order; equality means cyclic") {
    for (const auto& entry : catalog::construction_catalog(64)) {
        const Group& g = entry.group;
        CHECK(g.order() % g.exponent() == 0);
        const bool cyclic_group = are_isomorphic(g, cyclic(g.order()));
        CHECK((g.exponent() == g.order()) == cyclic_group);
    }
}

TEST_CASE("cayley text format golden output") {
    std::ostringstream out;
    write_cayley(out, cyclic(4));
    CHECK(out.str() == "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
}

TEST_CASE("cayley text format reads comments and round-trips") {
    std::istringstream in("# a comment\n4\n# another\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
    const Group g = read_cayley(in, "mod4");
    CHECK(g.order() == 4);
    CHECK(g.name() == "mod4");
    CHECK(g.mul(1, 1) == 2);

    for (const Group& original : {symmetric(4), generalized_quaternion(8), cyclic(9)}) {
        std::ostringstream out;
        write_cayley(out, original);
        std::istringstream back(out.str());
        CHECK(read_cayley(back).table() == original.table());
    }
}

TEST_CASE("cayley text format rejects malformed input") {
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return read_cayley(in);
    };
    CHECK_THROWS_AS(read(""), FormatError);
    CHECK_THROWS_AS(read("x\n"), FormatError);
    CHECK_THROWS_AS(read("2\n0 1\n"), FormatError);          // missing row
    CHECK_THROWS_AS(read("2\n0 1 0\n1 0\n"), FormatError);   // extra token
    CHECK_THROWS_AS(read("2\n0\n1 0\n"), FormatError);       // short row
    CHECK_THROWS_AS(read("0\n"), FormatError);
    CHECK_THROWS_AS(read("2\n0 1\n1 1\n"), NotLatin);        // semantic error propagates
}
