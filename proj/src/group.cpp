#include "cyclo/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cyclo {

bool is_prime(int k) {
    if (k < 2) return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

int smallest_prime_factor(int k) {
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return d;
    return k;
}

std::vector<std::pair<int, int>> factorize(int k) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        int e = 0;
        while (k % p == 0) k /= p, ++e;
        out.emplace_back(p, e);
    }
    if (k > 1) out.emplace_back(k, 1);
    return out;
}

std::vector<int> prime_divisors(int k) {
    std::vector<int> out;
    for (auto [p, e] : factorize(k)) out.push_back(p);
    return out;
}

std::vector<int> divisors(int k) {
    std::vector<int> out;
    for (int d = 1; d * d <= k; ++d) {
        if (k % d) continue;
        out.push_back(d);
        if (d != k / d) out.push_back(k / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long euler_phi(long long k) {
    long long result = k;
    for (long long p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

// --- Group ---

Group::Group(int n, std::vector<int> table, std::string name)
    : n_(n),
      table_(std::move(table)),
      name_(std::move(name)),
      orders_(std::make_shared<OrderCache>()) {}

Group Group::trusted(int n, std::vector<int> table, std::string name) {
    return Group(n, std::move(table), std::move(name));
}

int Group::inverse(int a) const {
    for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0) return b;
    throw Error("internal: element " + std::to_string(a) + " has no inverse");
}

int Group::element_order(int a) const {
    if (orders_->ready.load(std::memory_order_acquire)) return orders_->orders[a];
    int x = a, k = 1;
    while (x != 0) {
        x = mul(a, x);
        ++k;
    }
    return k;
}

const std::vector<int>& Group::element_orders() const {
    std::call_once(orders_->once, [this] {
        std::vector<int> ord(n_);
        for (int a = 0; a < n_; ++a) {
            int x = a, k = 1;
            while (x != 0) {
                x = mul(a, x);
                ++k;
            }
            ord[a] = k;
        }
        orders_->orders = std::move(ord);
        orders_->ready.store(true, std::memory_order_release);
    });
    return orders_->orders;
}

OrderSpectrum Group::order_spectrum() const {
    OrderSpectrum s;
    s.element_orders = element_orders();
    s.pi_e = s.element_orders;
    std::sort(s.pi_e.begin(), s.pi_e.end());
    s.pi_e.erase(std::unique(s.pi_e.begin(), s.pi_e.end()), s.pi_e.end());
    s.pi = prime_divisors(n_);
    s.exponent = 1;
    for (int k : s.pi_e) s.exponent = std::lcm(s.exponent, k);
    return s;
}

int Group::exponent() const {
    int e = 1;
    for (int k : element_orders()) e = std::lcm(e, k);
    return e;
}

bool Group::is_abelian() const {
    for (int a = 1; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

// --- validation ---

Group validate_cayley(int n, std::vector<int> table, std::string name) {
    if (n < 1) throw BadEntry("group order must be positive, got " + std::to_string(n));
    if (table.size() != static_cast<std::size_t>(n) * n)
        throw BadEntry("table has " + std::to_string(table.size()) + " entries, expected " +
                       std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] < 0 || table[i] >= n)
            throw BadEntry("entry at row " + std::to_string(i / n) + ", column " +
                           std::to_string(i % n) + " is " + std::to_string(table[i]) +
                           ", outside [0, " + std::to_string(n) + ")");

    auto at = [&](int a, int b) { return table[a * n + b]; };

    for (int j = 0; j < n; ++j)
        if (at(0, j) != j)
            throw NoIdentity("0*" + std::to_string(j) + " = " + std::to_string(at(0, j)) +
                             ", index 0 is not a left identity");
    for (int i = 0; i < n; ++i)
        if (at(i, 0) != i)
            throw NoIdentity(std::to_string(i) + "*0 = " + std::to_string(at(i, 0)) +
                             ", index 0 is not a right identity");

    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            if (seen[at(i, j)]++)
                throw NotLatin("row " + std::to_string(i) + " repeats value " +
                               std::to_string(at(i, j)));
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            if (seen[at(i, j)]++)
                throw NotLatin("column " + std::to_string(j) + " repeats value " +
                               std::to_string(at(i, j)));
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) +
                                             ")*" + std::to_string(c) + " != " +
                                             std::to_string(a) + "*(" + std::to_string(b) + "*" +
                                             std::to_string(c) + ")",
                                         a, b, c);

    // Implied by the axioms above; asserted explicitly.
    for (int a = 0; a < n; ++a) {
        bool ok = false;
        for (int b = 0; b < n && !ok; ++b) ok = at(a, b) == 0 && at(b, a) == 0;
        if (!ok)
            throw Error("internal: element " + std::to_string(a) +
                        " has no two-sided inverse despite passing the group axioms");
    }

    return Group::trusted(n, std::move(table), std::move(name));
}

Group validate_cayley(const std::vector<std::vector<int>>& rows, std::string name) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw BadEntry("table is empty");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (rows[i].size() != static_cast<std::size_t>(n))
            throw BadEntry("row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return validate_cayley(n, std::move(flat), std::move(name));
}

// --- Cayley text format ---

Group read_cayley(std::istream& in, std::string name) {
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) throw FormatError("missing group order line");
    int n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n)) throw FormatError("expected group order, got \"" + line + "\"");
        std::string rest;
        if (ls >> rest) throw FormatError("unexpected token \"" + rest + "\" after group order");
    }
    if (n < 1) throw FormatError("group order must be positive, got " + std::to_string(n));

    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (!next_data_line())
            throw FormatError("table ends after " + std::to_string(i) + " of " +
                              std::to_string(n) + " rows");
        std::istringstream ls(line);
        for (int j = 0; j < n; ++j) {
            int v;
            if (!(ls >> v))
                throw FormatError("row " + std::to_string(i) + " has fewer than " +
                                  std::to_string(n) + " entries");
            table.push_back(v);
        }
        std::string rest;
        if (ls >> rest)
            throw FormatError("row " + std::to_string(i) + " has more than " +
                              std::to_string(n) + " entries");
    }
    return validate_cayley(n, std::move(table), std::move(name));
}

Group read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_cayley(in, path);
}

void write_cayley(std::ostream& out, const Group& g) {
    const int n = g.order();
    out << n << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << g.mul(i, j);
        }
        out << "\n";
    }
}

void write_cayley_file(const std::string& path, const Group& g) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    write_cayley(out, g);
    if (!out) throw FormatError("error writing " + path);
}

}  // namespace cyclo
