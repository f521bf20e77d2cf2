#include "cyclo/classifier.hpp"

#include <algorithm>

#include "cyclo/constructions.hpp"
#include "cyclo/subgroups.hpp"

namespace cyclo {

std::string ClassLabel::str() const {
    switch (family) {
        case Family::Trivial: return "TRIVIAL";
        case Family::PrimeCyclic: return "C_p(p=" + std::to_string(p) + ")";
        case Family::CyclicPSquared: return "C_p^2(p=" + std::to_string(p) + ")";
        case Family::CyclicPCubed: return "C_p^3(p=" + std::to_string(p) + ")";
        case Family::CyclicPFourth: return "C_p^4(p=" + std::to_string(p) + ")";
        case Family::CyclicPQ:
            return "C_pq(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
        case Family::Sym3: return "S3";
        case Family::Quaternion8: return "Q8";
        case Family::ElemAbelian3x3: return "C3xC3";
        case Family::Outside: return "OUTSIDE(n=" + std::to_string(count) + ")";
        case Family::PaperGap: return "PAPER_GAP(n=" + std::to_string(count) + ")";
    }
    return "";
}

int count_cyclic(const Group& g) {
    return static_cast<int>(cyclic_subgroups(g).members.size());
}

Fingerprint fingerprint(const Group& g) {
    const int n = g.order();
    Fingerprint fp;
    fp.order = n;
    fp.abelian = g.is_abelian();
    fp.element_orders = g.element_orders();
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    fp.c_histogram = cyclic_subgroups(g).c_histogram;
    fp.center_size = 0;
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int y = 0; y < n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        fp.center_size += central;
    }
    return fp;
}

namespace {

// Closure of base ∪ {x} under multiplication, as a membership array.
int closure_with(const Group& g, const std::vector<char>& base, int x, std::vector<char>& out) {
    const int n = g.order();
    out = base;
    std::vector<int> elems;
    for (int e = 0; e < n; ++e)
        if (out[e]) elems.push_back(e);
    out[x] = 1;
    elems.push_back(x);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (int p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])})
                if (!out[p]) {
                    out[p] = 1;
                    elems.push_back(p);
                }
    return static_cast<int>(elems.size());
}

// Backtracking state: a partial map g -> h, extended by closure so the
// homomorphism property holds on every mapped pair.
struct MatchState {
    const Group& g;
    const Group& h;
    const std::vector<int>& g_orders;
    const std::vector<int>& h_orders;
    std::vector<int> gmap;   // g element -> h element, -1 unset
    std::vector<char> used;  // h elements taken
    std::vector<int> mapped; // assignment order, for rollback

    MatchState(const Group& g, const Group& h)
        : g(g),
          h(h),
          g_orders(g.element_orders()),
          h_orders(h.element_orders()),
          gmap(g.order(), -1),
          used(h.order(), 0) {}

    bool raw_assign(int a, int b) {
        if (used[b] || g_orders[a] != h_orders[b]) return false;
        gmap[a] = b;
        used[b] = 1;
        mapped.push_back(a);
        return true;
    }

    bool require(int a, int b) {
        if (gmap[a] != -1) return gmap[a] == b;
        return raw_assign(a, b);
    }

    // Assign a -> b and close under products against everything mapped.
    bool assign(int a, int b) {
        std::size_t head = mapped.size();
        if (!require(a, b)) return false;
        while (head < mapped.size()) {
            const int x = mapped[head++];
            const int y = gmap[x];
            for (std::size_t i = 0; i < mapped.size(); ++i) {
                const int u = mapped[i], v = gmap[u];
                if (!require(g.mul(x, u), h.mul(y, v))) return false;
                if (!require(g.mul(u, x), h.mul(v, y))) return false;
            }
        }
        return true;
    }

    void rollback(std::size_t to) {
        while (mapped.size() > to) {
            const int x = mapped.back();
            mapped.pop_back();
            used[gmap[x]] = 0;
            gmap[x] = -1;
        }
    }
};

}  // namespace

IsoTester::IsoTester(const Group& g) : g_(g), fp_(fingerprint(g)) {
    const int n = g_.order();
    const auto& orders = g_.element_orders();
    std::vector<char> closure(n, 0);
    closure[0] = 1;
    int closure_size = 1;
    while (closure_size < n) {
        int best = -1, best_size = 0;
        std::vector<char> best_closure, candidate;
        for (int x = 1; x < n; ++x) {
            if (closure[x]) continue;
            if (generators_.empty()) {
                if (orders[x] > best_size) {
                    best_size = orders[x];
                    best = x;
                }
            } else {
                const int size = closure_with(g_, closure, x, candidate);
                if (size > best_size) {
                    best_size = size;
                    best = x;
                    best_closure.swap(candidate);
                }
            }
        }
        if (generators_.empty()) closure_size = closure_with(g_, closure, best, best_closure);
        else closure_size = best_size;
        closure.swap(best_closure);
        generators_.push_back(best);
    }
}

bool IsoTester::matches(const Group& h) const {
    if (h.order() != g_.order()) return false;
    if (g_.order() == 1) return true;
    return matches(h, fingerprint(h));
}

bool IsoTester::matches(const Group& h, const Fingerprint& h_fp) const {
    if (h.order() != g_.order()) return false;
    if (g_.order() == 1) return true;
    if (h_fp != fp_) return false;

    MatchState state(g_, h);
    state.raw_assign(0, 0);

    const int n = g_.order();
    auto dfs = [&](auto&& self, std::size_t gi) -> bool {
        if (gi == generators_.size()) return static_cast<int>(state.mapped.size()) == n;
        const int a = generators_[gi];
        if (state.gmap[a] != -1) return self(self, gi + 1);
        for (int b = 1; b < n; ++b) {
            if (state.used[b] || state.h_orders[b] != state.g_orders[a]) continue;
            const std::size_t snap = state.mapped.size();
            if (state.assign(a, b) && self(self, gi + 1)) return true;
            state.rollback(snap);
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool are_isomorphic(const Group& g, const Group& h) { return IsoTester(g).matches(h); }

ClassLabel paper_predicate(const Group& g) {
    const int n = g.order();
    const int count = count_cyclic(g);
    if (count > 5) return ClassLabel::outside(count);
    if (n == 1) return ClassLabel::trivial();

    const auto factors = factorize(n);
    std::vector<std::pair<ClassLabel, Group>> candidates;
    if (factors.size() == 1) {
        const auto [p, e] = factors[0];
        if (e == 1) candidates.emplace_back(ClassLabel::prime_cyclic(p), cyclic(n));
        if (e == 2) candidates.emplace_back(ClassLabel::cyclic_p2(p), cyclic(n));
        if (e == 3) candidates.emplace_back(ClassLabel::cyclic_p3(p), cyclic(n));
        if (e == 4) candidates.emplace_back(ClassLabel::cyclic_p4(p), cyclic(n));
        if (n == 8) candidates.emplace_back(ClassLabel::quaternion8(), generalized_quaternion(8));
        if (n == 9)
            candidates.emplace_back(ClassLabel::elem_abelian_3x3(), elementary_abelian(3, 2));
    } else if (factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1) {
        candidates.emplace_back(ClassLabel::cyclic_pq(factors[0].first, factors[1].first),
                                cyclic(n));
        if (n == 6) candidates.emplace_back(ClassLabel::sym3(), symmetric(3));
    }

    for (const auto& [label, reference] : candidates)
        if (are_isomorphic(reference, g)) return label;
    return ClassLabel::paper_gap(count);
}

std::optional<int> predicted_count(const ClassLabel& label) {
    using Family = ClassLabel::Family;
    switch (label.family) {
        case Family::Trivial: return 1;
        case Family::PrimeCyclic: return 2;
        case Family::CyclicPSquared: return 3;
        case Family::CyclicPCubed: return 4;
        case Family::CyclicPQ: return 4;
        case Family::CyclicPFourth: return 5;
        case Family::Sym3: return 5;
        case Family::Quaternion8: return 5;
        case Family::ElemAbelian3x3: return 5;
        case Family::Outside:
        case Family::PaperGap: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace cyclo
