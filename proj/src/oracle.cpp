#include "cyclo/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <sstream>
#include <thread>

#include "cyclo/constructions.hpp"
#include "cyclo/subgroups.hpp"

#include "json.hpp"

namespace cyclo {

namespace {

// Backtracking completion of an n x n Cayley table with the identity row
// and column fixed. Decisions run over the free cells row-major; each
// assignment propagates:
//   - Latin-square violations (row/column value masks),
//   - associativity: any triple with three of its four lookups determined
//     forces the fourth, cascading until a fixpoint or a contradiction,
//   - two-sided-inverse pairing (t[a][b] == 0 iff t[b][a] == 0),
//   - element-order feasibility along each row's power chain.
// One symmetry constraint cuts the relabeling orbit of every group: the
// element-order sequence must be non-decreasing in the element index.
// Every group can be labeled that way (sort elements by order, identity
// first), so every isomorphism class still appears; the constraint forces
// ord(1) to equal the smallest prime divisor of n.
class CayleySearch {
public:
    // One recorded decision: index into the free-cell list plus the value.
    using Decision = std::pair<int, int>;

    explicit CayleySearch(int n)
        : n_(n),
          full_((n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1)),
          p_min_(n > 1 ? smallest_prime_factor(n) : 1) {
        for (int a = 1; a < n_; ++a)
            for (int b = 1; b < n_; ++b) cells_.emplace_back(a, b);
        reset();
    }

    // Enumerates every consistent prefix of the first `max_decisions`
    // decisions; a subtree may close earlier when propagation completes
    // the table.
    std::vector<std::vector<Decision>> prefixes(int max_decisions) {
        reset();
        std::vector<std::vector<Decision>> out;
        std::vector<Decision> current;
        collect(0, max_decisions, current, out);
        return out;
    }

    // Replays a recorded prefix, then emits every completed table in its
    // subtree.
    template <typename Emit>
    void run_prefix(const std::vector<Decision>& prefix, Emit&& emit) {
        reset();
        for (const auto& [cell, value] : prefix) {
            if (next_cell(0) != cell || !propagate(cells_[cell].first, cells_[cell].second, value))
                throw Error("internal: recorded search prefix fails to replay");
        }
        dfs(emit);
    }

private:
    struct TrailEntry {
        int8_t kind;  // 0 = cell assignment, 1 = ord_ becoming known
        int8_t a, b, c;
    };

    void reset() {
        table_.assign(static_cast<std::size_t>(n_) * n_, -1);
        col_of_.assign(static_cast<std::size_t>(n_) * n_, -1);
        rowmask_.assign(n_, 0);
        colmask_.assign(n_, 0);
        ord_.assign(n_, 0);
        ord_[0] = 1;
        trail_.clear();
        for (int j = 0; j < n_; ++j) set(0, j, j);
        for (int i = 1; i < n_; ++i) set(i, 0, i);
    }

    int at(int a, int b) const { return table_[a * n_ + b]; }

    void set(int a, int b, int c) {
        table_[a * n_ + b] = c;
        col_of_[a * n_ + c] = b;
        rowmask_[a] |= uint32_t{1} << c;
        colmask_[b] |= uint32_t{1} << c;
    }

    void unset(int a, int b, int c) {
        table_[a * n_ + b] = -1;
        col_of_[a * n_ + c] = -1;
        rowmask_[a] &= ~(uint32_t{1} << c);
        colmask_[b] &= ~(uint32_t{1} << c);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry e = trail_.back();
            trail_.pop_back();
            if (e.kind == 0) unset(e.a, e.b, e.c);
            else ord_[e.a] = 0;
        }
    }

    bool enqueue(int a, int b, int c) {
        const int cur = at(a, b);
        if (cur >= 0) return cur == c;
        pending_.push_back({a, b, c});
        return true;
    }

    // Assigns (a,b) := c and runs the propagation queue to a fixpoint.
    // On false the caller must undo_to its trail mark.
    bool propagate(int a0, int b0, int c0) {
        pending_.clear();
        pending_.push_back({a0, b0, c0});
        for (std::size_t head = 0; head < pending_.size(); ++head) {
            const auto [a, b, c] = pending_[head];
            const int cur = at(a, b);
            if (cur >= 0) {
                if (cur != c) return false;
                continue;
            }
            if ((rowmask_[a] | colmask_[b]) >> c & 1) return false;
            set(a, b, c);
            trail_.push_back({0, static_cast<int8_t>(a), static_cast<int8_t>(b),
                              static_cast<int8_t>(c)});
            if (c == 0) {
                if (!enqueue(b, a, 0)) return false;
            } else if (at(b, a) == 0) {
                return false;
            }
            if (!scan_triples(a, b, c)) return false;
            if (!chain_update(a)) return false;
        }
        return true;
    }

    // Associativity rules around a fresh cell (a,b) = c. Each instance
    // with one undetermined lookup forces it; fully determined instances
    // are checked.
    bool scan_triples(int a, int b, int c) {
        const int* t = table_.data();
        const int* co = col_of_.data();
        const int n = n_;
        // (a, b, z): t[c][z] == t[a][t[b][z]]
        for (int z = 1; z < n; ++z) {
            const int v = t[b * n + z];
            if (v < 0) continue;
            const int u = t[c * n + z];
            const int w = t[a * n + v];
            if (w >= 0) {
                if (u < 0) {
                    if (!enqueue(c, z, w)) return false;
                } else if (u != w) {
                    return false;
                }
            } else if (u >= 0) {
                if (!enqueue(a, v, u)) return false;
            }
        }
        // (x, a, b): t[t[x][a]][b] == t[x][c]
        for (int x = 1; x < n; ++x) {
            const int u = t[x * n + a];
            if (u < 0) continue;
            const int w = t[u * n + b];
            const int y = t[x * n + c];
            if (w >= 0) {
                if (y < 0) {
                    if (!enqueue(x, c, w)) return false;
                } else if (y != w) {
                    return false;
                }
            } else if (y >= 0) {
                if (!enqueue(u, b, y)) return false;
            }
        }
        // (x, y, b) with t[x][y] == a: c == t[x][t[y][b]]
        for (int x = 1; x < n; ++x) {
            const int y = co[x * n + a];
            if (y < 0) continue;
            const int v = t[y * n + b];
            if (v < 0) continue;
            const int w = t[x * n + v];
            if (w < 0) {
                if (!enqueue(x, v, c)) return false;
            } else if (w != c) {
                return false;
            }
        }
        // (a, y, z) with t[y][z] == b: t[t[a][y]][z] == c
        for (int y = 1; y < n; ++y) {
            const int z = co[y * n + b];
            if (z < 0) continue;
            const int u = t[a * n + y];
            if (u < 0) continue;
            const int w = t[u * n + z];
            if (w < 0) {
                if (!enqueue(u, z, c)) return false;
            } else if (w != c) {
                return false;
            }
        }
        return true;
    }

    // Walks the power chain of element a. A closed chain pins ord(a): it
    // must divide n, keep the order sequence non-decreasing, and equal
    // p_min for a == 1 (the smallest non-identity order in a sorted
    // labeling, by Cauchy). For a == 1 an open chain one step short of
    // p_min forces the closing zero.
    bool chain_update(int a) {
        if (a == 0 || ord_[a] != 0) return true;
        int x = a, k = 1;
        while (true) {
            const int nx = at(a, x);
            if (nx < 0) {
                if (a == 1) {
                    if (k >= p_min_) return false;
                    if (k == p_min_ - 1) return enqueue(a, x, 0);
                }
                return true;
            }
            if (nx == 0) {
                const int ord = k + 1;
                if (n_ % ord) return false;
                if (ord < ord_[a - 1] && ord_[a - 1] != 0) return false;
                if (a + 1 < n_ && ord_[a + 1] != 0 && ord_[a + 1] < ord) return false;
                if (a == 1 && ord != p_min_) return false;
                ord_[a] = ord;
                trail_.push_back({1, static_cast<int8_t>(a), 0, 0});
                return true;
            }
            x = nx;
            if (++k > n_) return false;
        }
    }

    // First undetermined free cell at or after `from`.
    int next_cell(int from) const {
        const int end = static_cast<int>(cells_.size());
        while (from < end && at(cells_[from].first, cells_[from].second) >= 0) ++from;
        return from;
    }

    template <typename Emit>
    void dfs(Emit&& emit, int from = 0) {
        const int cell = next_cell(from);
        if (cell == static_cast<int>(cells_.size())) {
            emit(table_);
            return;
        }
        const auto [a, b] = cells_[cell];
        uint32_t avail = ~(rowmask_[a] | colmask_[b]) & full_;
        while (avail) {
            const int c = std::countr_zero(avail);
            avail &= avail - 1;
            const std::size_t mark = trail_.size();
            if (propagate(a, b, c)) dfs(emit, cell + 1);
            undo_to(mark);
        }
    }

    void collect(int from, int decisions_left, std::vector<Decision>& current,
                 std::vector<std::vector<Decision>>& out) {
        const int cell = next_cell(from);
        if (decisions_left == 0 || cell == static_cast<int>(cells_.size())) {
            out.push_back(current);
            return;
        }
        const auto [a, b] = cells_[cell];
        uint32_t avail = ~(rowmask_[a] | colmask_[b]) & full_;
        while (avail) {
            const int c = std::countr_zero(avail);
            avail &= avail - 1;
            const std::size_t mark = trail_.size();
            if (propagate(a, b, c)) {
                current.emplace_back(cell, c);
                collect(cell + 1, decisions_left - 1, current, out);
                current.pop_back();
            }
            undo_to(mark);
        }
    }

    const int n_;
    const uint32_t full_;
    const int p_min_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<int> table_;
    std::vector<int> col_of_;
    std::vector<uint32_t> rowmask_, colmask_;
    std::vector<int> ord_;
    std::vector<TrailEntry> trail_;
    std::vector<std::array<int, 3>> pending_;
};

// Isomorphism-class collector: fingerprint bucket, then a real
// isomorphism test against each representative sharing the fingerprint.
struct RepSet {
    struct Rep {
        Group group;
        IsoTester tester;
    };
    std::vector<Rep> reps;

    void add(const std::vector<int>& table, int n) {
        Group g = validate_cayley(n, table);
        const Fingerprint fp = fingerprint(g);
        for (const auto& rep : reps)
            if (rep.tester.fp() == fp && rep.tester.matches(g, fp)) return;
        reps.push_back({g, IsoTester(g)});
    }

    void absorb(RepSet&& other) {
        for (auto& rep : other.reps) {
            bool known = false;
            for (const auto& mine : reps)
                if (mine.tester.fp() == rep.tester.fp() &&
                    mine.tester.matches(rep.group, rep.tester.fp())) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(std::move(rep));
        }
    }
};

}  // namespace

std::vector<Group> enumerate_groups(int n, const EnumOptions& opts) {
    if (n < 1) throw BadEntry("order must be >= 1, got " + std::to_string(n));
    const int cap = std::min(opts.cap, kEnumHardCap);
    if (n > cap)
        throw OrderTooLarge("order " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap));

    CayleySearch seed(n);
    const int split_depth = std::min(6, seed.free_cell_count());
    const std::vector<std::vector<int>> prefixes = seed.prefixes(split_depth);

    std::vector<RepSet> results(prefixes.size());
    const int jobs = std::clamp(opts.jobs, 1, 64);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        CayleySearch search(n);
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            search.run_prefix(prefixes[i],
                              [&](const std::vector<int>& table) { results[i].add(table, n); });
        }
    };
    if (jobs == 1 || prefixes.size() <= 1) {
        worker();
    } else {
        const int count =
            static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                   prefixes.size()));
        std::vector<std::thread> pool;
        pool.reserve(count);
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Merge in prefix order so the kept representative per class does not
    // depend on scheduling, then fix the output order by table.
    RepSet merged;
    for (auto& local : results) merged.absorb(std::move(local));
    std::vector<Group> out;
    out.reserve(merged.reps.size());
    for (auto& rep : merged.reps) out.push_back(std::move(rep.group));
    std::sort(out.begin(), out.end(),
              [](const Group& a, const Group& b) { return a.table() < b.table(); });
    return out;
}

std::vector<std::pair<ClassLabel, Group>> listed_families(int n) {
    std::vector<std::pair<ClassLabel, Group>> out;
    if (n == 1) {
        out.emplace_back(ClassLabel::trivial(), cyclic(1));
        return out;
    }
    const auto factors = factorize(n);
    if (factors.size() == 1) {
        const auto [p, e] = factors[0];
        if (e == 1) out.emplace_back(ClassLabel::prime_cyclic(p), cyclic(n));
        if (e == 2) out.emplace_back(ClassLabel::cyclic_p2(p), cyclic(n));
        if (e == 3) out.emplace_back(ClassLabel::cyclic_p3(p), cyclic(n));
        if (e == 4) out.emplace_back(ClassLabel::cyclic_p4(p), cyclic(n));
        if (n == 8) out.emplace_back(ClassLabel::quaternion8(), generalized_quaternion(8));
        if (n == 9) out.emplace_back(ClassLabel::elem_abelian_3x3(), elementary_abelian(3, 2));
    } else if (factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1) {
        out.emplace_back(ClassLabel::cyclic_pq(factors[0].first, factors[1].first), cyclic(n));
        if (n == 6) out.emplace_back(ClassLabel::sym3(), symmetric(3));
    }
    return out;
}

bool DiffReport::has_mismatches() const {
    for (const auto& order : orders)
        if (!order.mismatches.empty()) return true;
    return false;
}

DiffReport verify_theorem(int max_order, const EnumOptions& opts) {
    DiffReport report;
    report.max_order = max_order;
    for (int n = 1; n <= max_order; ++n) {
        OrderReport order;
        order.n = n;
        for (Group& g : enumerate_groups(n, opts)) {
            DiffEntry entry;
            entry.count_cyclic = count_cyclic(g);
            entry.label = paper_predicate(g);
            entry.group = std::move(g);
            order.entries.push_back(std::move(entry));
        }
        order.total_groups = static_cast<int>(order.entries.size());

        // "only if" direction: anything within the bound must be listed.
        for (std::size_t i = 0; i < order.entries.size(); ++i) {
            if (order.entries[i].label.family == ClassLabel::Family::PaperGap) {
                Mismatch m;
                m.kind = Mismatch::Kind::PaperGap;
                m.entry_index = static_cast<int>(i);
                m.label = order.entries[i].label;
                order.mismatches.push_back(m);
            }
        }
        // "if" direction: every listed family of this order must show up
        // among the enumerated groups with |C| <= 5.
        for (const auto& [label, reference] : listed_families(n)) {
            if (count_cyclic(reference) > 5) continue;
            const IsoTester tester(reference);
            bool found = false;
            for (const auto& entry : order.entries)
                if (entry.count_cyclic <= 5 && tester.matches(entry.group)) {
                    found = true;
                    break;
                }
            if (!found) {
                Mismatch m;
                m.kind = Mismatch::Kind::MissingFamily;
                m.label = label;
                order.mismatches.push_back(m);
            }
        }
        report.orders.push_back(std::move(order));
    }
    return report;
}

std::vector<std::pair<Group, ClassLabel>> lemma_sweep(int count_target, int max_order,
                                                      const EnumOptions& opts) {
    std::vector<std::pair<Group, ClassLabel>> out;
    for (int n = 1; n <= max_order; ++n)
        for (Group& g : enumerate_groups(n, opts))
            if (count_cyclic(g) == count_target) {
                ClassLabel label = paper_predicate(g);
                out.emplace_back(std::move(g), label);
            }
    return out;
}

namespace {

nlohmann::ordered_json group_rows_json(const Group& g) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < n; ++j) row.push_back(g.mul(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string to_json(const DiffReport& report) {
    nlohmann::ordered_json j;
    j["max_order"] = report.max_order;
    j["orders"] = nlohmann::ordered_json::array();
    for (const auto& order : report.orders) {
        nlohmann::ordered_json jo;
        jo["n"] = order.n;
        jo["total_groups"] = order.total_groups;
        jo["entries"] = nlohmann::ordered_json::array();
        for (const auto& entry : order.entries) {
            nlohmann::ordered_json je;
            je["cayley"] = group_rows_json(entry.group);
            je["count_cyclic"] = entry.count_cyclic;
            je["label"] = entry.label.str();
            jo["entries"].push_back(std::move(je));
        }
        jo["mismatches"] = nlohmann::ordered_json::array();
        for (const auto& m : order.mismatches) {
            nlohmann::ordered_json jm;
            jm["kind"] = m.kind == Mismatch::Kind::PaperGap ? "paper_gap" : "missing_family";
            if (m.kind == Mismatch::Kind::PaperGap) jm["entry_index"] = m.entry_index;
            jm["label"] = m.label.str();
            jo["mismatches"].push_back(std::move(jm));
        }
        j["orders"].push_back(std::move(jo));
    }
    return j.dump(2) + "\n";
}

std::string to_text(const DiffReport& report) {
    std::ostringstream out;
    int mismatch_count = 0;
    out << "theorem check up to order " << report.max_order << "\n";
    for (const auto& order : report.orders) {
        out << "order " << order.n << ": " << order.total_groups
            << (order.total_groups == 1 ? " group\n" : " groups\n");
        for (std::size_t i = 0; i < order.entries.size(); ++i) {
            const auto& entry = order.entries[i];
            out << "  #" << i << "  |C(G)| = " << entry.count_cyclic << "  "
                << entry.label.str() << "\n";
        }
        for (const auto& m : order.mismatches) {
            ++mismatch_count;
            if (m.kind == Mismatch::Kind::PaperGap)
                out << "  MISMATCH: entry #" << m.entry_index
                    << " has |C(G)| <= 5 but matches no listed family\n";
            else
                out << "  MISMATCH: listed family " << m.label.str()
                    << " not found at this order\n";
        }
    }
    out << (mismatch_count ? "mismatches: " + std::to_string(mismatch_count)
                           : std::string("mismatches: none"))
        << "\n";
    return out.str();
}

}  // namespace cyclo
