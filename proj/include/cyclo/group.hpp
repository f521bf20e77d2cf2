#pragma once

#include <atomic>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

// --- number-theoretic helpers ---

bool is_prime(int k);
int smallest_prime_factor(int k);                       // k >= 2
std::vector<int> prime_divisors(int k);                 // sorted distinct primes
std::vector<std::pair<int, int>> factorize(int k);      // (prime, exponent), ascending
std::vector<int> divisors(int k);                       // sorted
long long euler_phi(long long k);                       // count of 1 <= i <= k coprime to k

// Element orders, distinct orders, prime divisors of |G| and the exponent
// of a group, all derived from one pass over the table.
struct OrderSpectrum {
    std::vector<int> element_orders;  // indexed by element, element_orders[0] == 1
    std::vector<int> pi_e;            // sorted distinct element orders
    std::vector<int> pi;              // sorted prime divisors of |G|
    int exponent = 1;                 // lcm of element orders
};

// A finite group given by its full multiplication table over element
// indices 0..n-1, with the identity fixed at index 0. Immutable after
// construction; safe to share across threads. The per-element order cache
// is filled once on first use.
class Group {
public:
    // The trivial group.
    Group() : Group(1, {0}, "") {}

    // Wraps a table the caller guarantees to satisfy the group axioms
    // (constructors and the enumerator produce such tables directly).
    // Untrusted input goes through validate_cayley instead.
    static Group trusted(int n, std::vector<int> table, std::string name = "");

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Product of elements a and b (a table lookup).
    int mul(int a, int b) const { return table_[a * n_ + b]; }

    // The unique x with a*x == x*a == 0.
    int inverse(int a) const;

    // Least k >= 1 with a^k == 0. Served from the cache once the full
    // spectrum has been computed.
    int element_order(int a) const;

    // Orders of all elements; computed once per group, then cached.
    const std::vector<int>& element_orders() const;

    OrderSpectrum order_spectrum() const;
    int exponent() const;
    bool is_abelian() const;

    // Row-major n*n table.
    const std::vector<int>& table() const { return table_; }

private:
    Group(int n, std::vector<int> table, std::string name);

    struct OrderCache {
        std::once_flag once;
        std::atomic<bool> ready{false};
        std::vector<int> orders;
    };

    int n_;
    std::vector<int> table_;
    std::string name_;
    std::shared_ptr<OrderCache> orders_;
};

// Checks all group axioms on the given table and wraps it unmodified.
// Throws BadEntry (shape or out-of-range), NoIdentity (index 0 is not a
// two-sided identity), NotLatin (repeated value in a row or column) or
// NotAssociative (with a witness triple).
Group validate_cayley(const std::vector<std::vector<int>>& rows, std::string name = "");
Group validate_cayley(int n, std::vector<int> table, std::string name = "");

// --- Cayley table text format ---
//
// Optional comment lines starting with '#', then one line holding n, then
// n lines of n whitespace-separated element indices; row i, column j is
// the product i*j and index 0 must be the identity. Writers emit no
// trailing whitespace and end with a newline.

Group read_cayley(std::istream& in, std::string name = "");
Group read_cayley_file(const std::string& path);
void write_cayley(std::ostream& out, const Group& g);
void write_cayley_file(const std::string& path, const Group& g);

}  // namespace cyclo
