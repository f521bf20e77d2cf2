#include "cyclo/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace cyclo {

namespace {

// Relabels a table so elements get indices in breadth-first discovery
// order from the identity, multiplying on the right by the given
// generators in order. The generators must generate the whole group.
Group bfs_relabel(int n, const std::vector<int>& table, const std::vector<int>& gens,
                  std::string name) {
    std::vector<int> new_of_old(n, -1), old_of_new;
    old_of_new.reserve(n);
    new_of_old[0] = 0;
    old_of_new.push_back(0);
    for (std::size_t head = 0; head < old_of_new.size(); ++head) {
        const int x = old_of_new[head];
        for (int g : gens) {
            const int y = table[x * n + g];
            if (new_of_old[y] < 0) {
                new_of_old[y] = static_cast<int>(old_of_new.size());
                old_of_new.push_back(y);
            }
        }
    }
    if (static_cast<int>(old_of_new.size()) != n)
        throw Error("internal: generators do not generate the presented group");

    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[a * n + b] = new_of_old[table[old_of_new[a] * n + old_of_new[b]]];
    return Group::trusted(n, std::move(out), std::move(name));
}

}  // namespace

Group cyclic(int n) {
    if (n < 1) throw BadEntry("cyclic: order must be >= 1, got " + std::to_string(n));
    if (n > kTableCap)
        throw ProductTooLarge("cyclic: order " + std::to_string(n) + " exceeds table cap " +
                              std::to_string(kTableCap));
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    return Group::trusted(n, std::move(table), "C" + std::to_string(n));
}

Group direct_product(const Group& g, const Group& h) {
    const long long n = static_cast<long long>(g.order()) * h.order();
    if (n > kTableCap)
        throw ProductTooLarge("direct_product: order " + std::to_string(n) +
                              " exceeds table cap " + std::to_string(kTableCap));
    const int ng = g.order(), nh = h.order(), nn = static_cast<int>(n);
    std::vector<int> table(static_cast<std::size_t>(nn) * nn);
    for (int a1 = 0; a1 < ng; ++a1)
        for (int b1 = 0; b1 < nh; ++b1)
            for (int a2 = 0; a2 < ng; ++a2)
                for (int b2 = 0; b2 < nh; ++b2)
                    table[(a1 * nh + b1) * nn + (a2 * nh + b2)] =
                        g.mul(a1, a2) * nh + h.mul(b1, b2);
    std::string name = g.name().empty() || h.name().empty()
                           ? std::string()
                           : g.name() + " x " + h.name();
    return Group::trusted(nn, std::move(table), std::move(name));
}

Group dihedral(int m) {
    if (m < 3)
        throw BadEntry("dihedral: D m means the dihedral group of ORDER 2m and needs m >= 3, "
                       "got m = " + std::to_string(m));
    const int n = 2 * m;
    if (n > kTableCap)
        throw ProductTooLarge("dihedral: order " + std::to_string(n) + " exceeds table cap");
    // Natural labels r^i s^j -> i + m*j.
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    const int i = j1 == 0 ? (i1 + i2) % m : (i1 - i2 + m) % m;
                    const int j = j1 ^ j2;
                    table[(i1 + m * j1) * n + (i2 + m * j2)] = i + m * j;
                }
    return bfs_relabel(n, table, {1, m}, "D" + std::to_string(m));
}

Group generalized_quaternion(int k) {
    if (k != 8 && k != 16 && k != 32)
        throw BadEntry("generalized_quaternion: Q k means the dicyclic group of ORDER k and "
                       "needs k in {8, 16, 32}, got k = " + std::to_string(k));
    const int h = k / 2;  // order of a
    const int n = k;
    // Natural labels a^i b^j -> i + h*j, with b^2 = a^(h/2).
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i1 = 0; i1 < h; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < h; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i, j;
                    if (j1 == 0) {
                        i = (i1 + i2) % h;
                        j = j2;
                    } else if (j2 == 0) {
                        i = (i1 - i2 + h) % h;
                        j = 1;
                    } else {
                        i = (i1 - i2 + h / 2 + h) % h;
                        j = 0;
                    }
                    table[(i1 + h * j1) * n + (i2 + h * j2)] = i + h * j;
                }
    return bfs_relabel(n, table, {1, h}, "Q" + std::to_string(k));
}

Group symmetric(int k) {
    if (k < 1 || k > 5)
        throw BadEntry("symmetric: k must be in 1..5, got " + std::to_string(k));
    if (k == 1) {
        Group g = cyclic(1);
        g.set_name("S1");
        return g;
    }
    std::vector<int> transposition(k), cycle(k);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
    Group g = from_generators({transposition, cycle});
    g.set_name("S" + std::to_string(k));
    return g;
}

Group elementary_abelian(int p, int k) {
    if (!is_prime(p))
        throw BadEntry("elementary_abelian: p must be prime, got " + std::to_string(p));
    if (k < 1) throw BadEntry("elementary_abelian: exponent must be >= 1");
    Group g = cyclic(p);
    for (int i = 1; i < k; ++i) g = direct_product(g, cyclic(p));
    g.set_name("E" + std::to_string(p) + "^" + std::to_string(k));
    return g;
}

Group from_generators(const std::vector<std::vector<int>>& perms) {
    if (perms.empty()) throw NotAPermutation("from_generators: no generators given");
    const std::size_t d = perms[0].size();
    if (d == 0) throw NotAPermutation("from_generators: empty permutation");
    for (const auto& p : perms) {
        if (p.size() != d)
            throw NotAPermutation("from_generators: permutations act on different point counts");
        std::vector<char> seen(d, 0);
        for (int v : p) {
            if (v < 0 || static_cast<std::size_t>(v) >= d || seen[v]++)
                throw NotAPermutation("from_generators: not a bijection on [0, " +
                                      std::to_string(d) + ")");
        }
    }

    // apply x then g
    auto compose = [d](const std::vector<int>& x, const std::vector<int>& g) {
        std::vector<int> y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = g[x[i]];
        return y;
    };

    std::vector<int> identity(d);
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<std::vector<int>> elems{identity};
    std::map<std::vector<int>, int> index{{identity, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : perms) {
            auto y = compose(elems[head], g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                if (static_cast<int>(elems.size()) >= kTableCap)
                    throw ClosureTooLarge("from_generators: closure exceeds table cap " +
                                          std::to_string(kTableCap));
                elems.push_back(std::move(y));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
    return Group::trusted(n, std::move(table));
}

// --- expression grammar ---

int GroupAtom::order() const {
    switch (kind) {
        case Kind::Cyclic: return a;
        case Kind::Dihedral: return 2 * a;
        case Kind::Quaternion: return a;
        case Kind::Symmetric: {
            int f = 1;
            for (int i = 2; i <= a; ++i) f *= i;
            return f;
        }
        case Kind::ElemAbelian: {
            int o = 1;
            for (int i = 0; i < b; ++i) o *= a;
            return o;
        }
    }
    return 0;
}

std::string GroupAtom::text() const {
    switch (kind) {
        case Kind::Cyclic: return "C" + std::to_string(a);
        case Kind::Dihedral: return "D" + std::to_string(a);
        case Kind::Quaternion: return "Q" + std::to_string(a);
        case Kind::Symmetric: return "S" + std::to_string(a);
        case Kind::ElemAbelian: return "E" + std::to_string(a) + "^" + std::to_string(b);
    }
    return "";
}

std::string GroupExpr::text() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].text();
    }
    return out;
}

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({text.substr(start, i - start), start});
    }
    return out;
}

int parse_int(const std::string& digits, const Token& tok) {
    if (digits.empty() || digits.size() > 6)
        throw ParseError("expected a number in \"" + tok.text + "\"", tok.pos);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a number in \"" + tok.text + "\"", tok.pos);
    return std::stoi(digits);
}

GroupAtom parse_atom(const Token& tok) {
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(tok.text[0])));
    const std::string rest = tok.text.substr(1);
    GroupAtom atom;
    switch (head) {
        case 'C': atom.kind = GroupAtom::Kind::Cyclic; break;
        case 'D': atom.kind = GroupAtom::Kind::Dihedral; break;
        case 'Q': atom.kind = GroupAtom::Kind::Quaternion; break;
        case 'S': atom.kind = GroupAtom::Kind::Symmetric; break;
        case 'E': atom.kind = GroupAtom::Kind::ElemAbelian; break;
        default:
            throw ParseError("unknown atom \"" + tok.text + "\" (expected C, D, Q, S or E)",
                             tok.pos);
    }
    if (atom.kind == GroupAtom::Kind::ElemAbelian) {
        const auto caret = rest.find('^');
        atom.a = parse_int(rest.substr(0, caret), tok);
        atom.b = caret == std::string::npos ? 1 : parse_int(rest.substr(caret + 1), tok);
        if (!is_prime(atom.a))
            throw ParseError("E atom needs a prime base, got " + std::to_string(atom.a), tok.pos);
        if (atom.b < 1) throw ParseError("E atom needs exponent >= 1", tok.pos);
        long long o = 1;
        for (int i = 0; i < atom.b; ++i) o *= atom.a;
        if (o > 256)
            throw ParseError("E atom order " + std::to_string(o) + " exceeds 256", tok.pos);
        return atom;
    }
    atom.a = parse_int(rest, tok);
    switch (atom.kind) {
        case GroupAtom::Kind::Cyclic:
            if (atom.a < 1) throw ParseError("C atom needs n >= 1", tok.pos);
            break;
        case GroupAtom::Kind::Dihedral:
            if (atom.a < 3)
                throw ParseError("D m is the dihedral group of ORDER 2m and needs m >= 3",
                                 tok.pos);
            break;
        case GroupAtom::Kind::Quaternion:
            if (atom.a != 8 && atom.a != 16 && atom.a != 32)
                throw ParseError("Q k is the dicyclic group of ORDER k and needs k in "
                                 "{8, 16, 32}", tok.pos);
            break;
        case GroupAtom::Kind::Symmetric:
            if (atom.a < 1 || atom.a > 5) throw ParseError("S atom needs k in 1..5", tok.pos);
            break;
        default: break;
    }
    return atom;
}

}  // namespace

GroupExpr parse_expr(const std::string& text) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("empty expression", 0);
    GroupExpr expr;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i % 2 == 1) {
            if (tokens[i].text != "x" && tokens[i].text != "X")
                throw ParseError("expected \"x\" between terms, got \"" + tokens[i].text + "\"",
                                 tokens[i].pos);
            continue;
        }
        expr.factors.push_back(parse_atom(tokens[i]));
    }
    if (tokens.size() % 2 == 0)
        throw ParseError("expression ends with an operator", tokens.back().pos);
    return expr;
}

Group build(const GroupExpr& expr) {
    auto build_atom = [](const GroupAtom& atom) {
        switch (atom.kind) {
            case GroupAtom::Kind::Cyclic: return cyclic(atom.a);
            case GroupAtom::Kind::Dihedral: return dihedral(atom.a);
            case GroupAtom::Kind::Quaternion: return generalized_quaternion(atom.a);
            case GroupAtom::Kind::Symmetric: return symmetric(atom.a);
            case GroupAtom::Kind::ElemAbelian: return elementary_abelian(atom.a, atom.b);
        }
        throw Error("internal: unhandled atom kind");
    };
    Group g = build_atom(expr.factors.at(0));
    for (std::size_t i = 1; i < expr.factors.size(); ++i)
        g = direct_product(g, build_atom(expr.factors[i]));
    g.set_name(expr.text());
    return g;
}

Group build_expr(const std::string& text) { return build(parse_expr(text)); }

}  // namespace cyclo
