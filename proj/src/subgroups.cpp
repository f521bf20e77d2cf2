#include "cyclo/subgroups.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cyclo {

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                         elements.end());
}

namespace {

Subgroup make_subgroup(std::vector<int> sorted_elements, int parent_order) {
    Subgroup h;
    h.elements = std::move(sorted_elements);
    h.parent_order = parent_order;
    return h;
}

// Closure of the seed under multiplication; enough for finite groups.
std::vector<int> close_under_mul(const Group& g, const std::vector<int>& seed) {
    const int n = g.order();
    std::vector<char> in(n, 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    };
    add(0);
    for (int x : seed) {
        if (x < 0 || x >= n)
            throw BadEntry("seed element " + std::to_string(x) + " outside [0, " +
                           std::to_string(n) + ")");
        add(x);
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(g.mul(elems[i], elems[j]));
            add(g.mul(elems[j], elems[i]));
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

Subgroup generated_subgroup(const Group& g, const std::vector<int>& seed) {
    return make_subgroup(close_under_mul(g, seed), g.order());
}

Subgroup cyclic_subgroup(const Group& g, int x) {
    if (x < 0 || x >= g.order())
        throw BadEntry("element " + std::to_string(x) + " outside [0, " +
                       std::to_string(g.order()) + ")");
    std::vector<int> elems{0};
    int y = x;
    while (y != 0) {
        elems.push_back(y);
        y = g.mul(x, y);
    }
    std::sort(elems.begin(), elems.end());
    return make_subgroup(std::move(elems), g.order());
}

CyclicPoset cyclic_subgroups(const Group& g) {
    const int n = g.order();
    const auto& orders = g.element_orders();

    // order -> distinct sorted element lists of that order
    std::map<int, std::set<std::vector<int>>> by_order;
    for (int x = 0; x < n; ++x) {
        const int k = orders[x];
        auto& bucket = by_order[k];
        // <x> equals any known order-k member containing x.
        bool known = false;
        for (const auto& m : bucket)
            if (std::binary_search(m.begin(), m.end(), x)) {
                known = true;
                break;
            }
        if (!known) bucket.insert(cyclic_subgroup(g, x).elements);
    }

    CyclicPoset poset;
    for (auto& [k, bucket] : by_order) {
        poset.c_histogram[k] = static_cast<int>(bucket.size());
        for (const auto& elems : bucket) poset.members.push_back(make_subgroup(elems, n));
    }
    // by_order iterates k ascending and each bucket lexicographically, so
    // members are already sorted by (order, element list).

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < poset.members.size(); ++i)
        index[poset.members[i].elements] = static_cast<int>(i);

    // Every cyclic subgroup below <x> is itself a member, so the covers of
    // <x> are exactly its subgroups of index a prime q | k.
    for (std::size_t j = 0; j < poset.members.size(); ++j) {
        const auto& member = poset.members[j];
        const int k = member.order();
        if (k == 1) continue;
        int generator = -1;
        for (int x : member.elements)
            if (orders[x] == k) {
                generator = x;
                break;
            }
        for (int q : prime_divisors(k)) {
            int xq = generator;
            for (int step = 1; step < q; ++step) xq = g.mul(generator, xq);
            const auto child = cyclic_subgroup(g, xq);
            poset.inclusion.emplace_back(index.at(child.elements), static_cast<int>(j));
        }
    }
    std::sort(poset.inclusion.begin(), poset.inclusion.end());
    return poset;
}

CountingReport check_counting_identities(const Group& g) {
    const CyclicPoset poset = cyclic_subgroups(g);
    CountingReport report;
    report.group_order = g.order();
    report.poset_size = static_cast<int>(poset.members.size());
    for (const auto& [k, ck] : poset.c_histogram) {
        report.phi_weighted_sum += static_cast<long long>(ck) * euler_phi(k);
        report.histogram_sum += ck;
    }
    report.order_identity = report.phi_weighted_sum == report.group_order;
    report.count_identity = report.histogram_sum == report.poset_size;
    return report;
}

namespace {

// Mask-backed closure for the lattice walk (parent order <= 64).
uint64_t close_mask(const Group& g, uint64_t seed) {
    std::vector<int> elems;
    uint64_t mask = seed | 1;
    for (int x = 0; x < g.order(); ++x)
        if (mask >> x & 1) elems.push_back(x);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            for (int p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
                if (!(mask >> p & 1)) {
                    mask |= uint64_t{1} << p;
                    elems.push_back(p);
                }
            }
        }
    return mask;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const Group& g, int lattice_cap) {
    const int n = g.order();
    if (n > lattice_cap)
        throw LatticeTooLarge("order " + std::to_string(n) + " exceeds lattice cap " +
                              std::to_string(lattice_cap));

    std::vector<uint64_t> found;
    std::unordered_set<uint64_t> seen;
    auto add = [&](uint64_t mask) {
        if (seen.insert(mask).second) found.push_back(mask);
    };
    for (int x = 0; x < n; ++x) {
        uint64_t mask = 1;
        int y = x;
        while (y != 0) {
            mask |= uint64_t{1} << y;
            y = g.mul(x, y);
        }
        add(mask);
    }
    // Join-closure fixpoint: adjoin one cyclic generator at a time.
    for (std::size_t head = 0; head < found.size(); ++head) {
        const uint64_t base = found[head];
        for (int x = 1; x < n; ++x) {
            if (base >> x & 1) continue;
            add(close_mask(g, base | uint64_t{1} << x));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (uint64_t mask : found) {
        std::vector<int> elems;
        for (int x = 0; x < n; ++x)
            if (mask >> x & 1) elems.push_back(x);
        out.push_back(make_subgroup(std::move(elems), n));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

bool is_normal(const Group& g, const Subgroup& h) {
    const int n = g.order();
    std::vector<char> in(n, 0);
    for (int a : h.elements) in[a] = 1;
    for (int x = 0; x < n; ++x) {
        const int xi = g.inverse(x);
        for (int a : h.elements)
            if (!in[g.mul(g.mul(x, a), xi)]) return false;
    }
    return true;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
    const int n = g.order();
    std::vector<char> in(n, 0);
    for (int a : h.elements) in[a] = 1;
    std::vector<int> elems;
    for (int x = 0; x < n; ++x) {
        const int xi = g.inverse(x);
        bool fixes = true;
        for (int a : h.elements)
            if (!in[g.mul(g.mul(x, a), xi)]) {
                fixes = false;
                break;
            }
        if (fixes) elems.push_back(x);
    }
    return make_subgroup(std::move(elems), n);
}

Subgroup sylow(const Group& g, int p) {
    if (!is_prime(p))
        throw PrimeDoesNotDivide("p = " + std::to_string(p) + " is not prime");
    const int n = g.order();
    if (n % p != 0)
        throw PrimeDoesNotDivide("p = " + std::to_string(p) + " does not divide |G| = " +
                                 std::to_string(n));
    int p_part = 1;
    for (int m = n; m % p == 0; m /= p) p_part *= p;
    for (const auto& h : all_subgroups(g))
        if (h.order() == p_part) return h;
    throw Error("internal: no Sylow " + std::to_string(p) + "-subgroup found");
}

bool is_dedekind(const Group& g, int lattice_cap) {
    for (const auto& h : all_subgroups(g, lattice_cap))
        if (!is_normal(g, h)) return false;
    return true;
}

Subgroup internal_product(const Group& g, const Subgroup& a, const Subgroup& b) {
    const int n = g.order();
    std::vector<char> ab(n, 0), ba(n, 0);
    int ab_size = 0;
    for (int x : a.elements)
        for (int y : b.elements) {
            ab_size += !ab[g.mul(x, y)];
            ab[g.mul(x, y)] = 1;
            ba[g.mul(y, x)] = 1;
        }
    if (ab != ba)
        throw NotASubgroup("AB != BA, the set product is not a subgroup");

    int common = 0;
    for (int x : a.elements) common += b.contains(x);
    if (static_cast<long long>(ab_size) * common !=
        static_cast<long long>(a.order()) * b.order())
        throw Error("internal: |AB| * |A intersect B| != |A| * |B|");

    std::vector<int> elems;
    elems.reserve(ab_size);
    for (int x = 0; x < n; ++x)
        if (ab[x]) elems.push_back(x);
    return make_subgroup(std::move(elems), n);
}

std::string poset_dot(const CyclicPoset& poset, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < poset.members.size(); ++i)
        out << "  n" << i << " [label=\"C_" << poset.members[i].order() << " #" << i << "\"];\n";
    for (const auto& [lo, hi] : poset.inclusion) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cyclo
