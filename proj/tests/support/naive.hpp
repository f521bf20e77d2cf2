#pragma once

// Small brute-force reference implementations used to pin expected values
// in tests. They work on raw tables only and share no code with the
// library paths they check.

#include <numeric>
#include <set>
#include <vector>

namespace naive {

// Order of element x by repeated multiplication on a raw table.
inline int element_order(const std::vector<std::vector<int>>& t, int x) {
    int y = x, k = 1;
    while (y != 0) {
        y = t[x][y];
        ++k;
    }
    return k;
}

// All distinct cyclic subgroups as sorted element sets.
inline std::set<std::set<int>> cyclic_subgroup_sets(const std::vector<std::vector<int>>& t) {
    std::set<std::set<int>> out;
    const int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x) {
        std::set<int> sub{0};
        int y = x;
        while (y != 0) {
            sub.insert(y);
            y = t[x][y];
        }
        out.insert(sub);
    }
    return out;
}

inline int cyclic_count(const std::vector<std::vector<int>>& t) {
    return static_cast<int>(cyclic_subgroup_sets(t).size());
}

// c_k histogram as (order, count) pairs, ascending.
inline std::vector<std::pair<int, int>> cyclic_histogram(const std::vector<std::vector<int>>& t) {
    std::vector<std::pair<int, int>> out;
    for (const auto& sub : cyclic_subgroup_sets(t)) {
        const int k = static_cast<int>(sub.size());
        bool merged = false;
        for (auto& [order, count] : out)
            if (order == k) {
                ++count;
                merged = true;
            }
        if (!merged) out.emplace_back(k, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every subgroup by subset scan; only usable for tiny groups.
inline std::set<std::set<int>> all_subgroup_sets(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    std::set<std::set<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1)) continue;  // must contain the identity
        std::vector<int> elems;
        for (int x = 0; x < n; ++x)
            if (mask >> x & 1) elems.push_back(x);
        bool closed = true;
        for (int a : elems)
            for (int b : elems)
                if (!(mask >> t[a][b] & 1)) {
                    closed = false;
                    break;
                }
        if (closed) out.insert(std::set<int>(elems.begin(), elems.end()));
    }
    return out;
}

inline int divisor_count(int n) {
    int count = 0;
    for (int d = 1; d <= n; ++d) count += n % d == 0;
    return count;
}

// phi by gcd scan.
inline int phi_by_gcd(int k) {
    int count = 0;
    for (int i = 1; i <= k; ++i) count += std::gcd(i, k) == 1;
    return count;
}

}  // namespace naive
