#include "vtc/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <string>

#include "vtc/graph_io.hpp"

namespace vtc {

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Permutation inverse_permutation(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

void FiniteGroup::finish() {
    const int n = order_;
    if (n <= 0) throw std::invalid_argument("group order must be positive");
    if (table_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("multiplication table has wrong shape");
    for (auto e : table_)
        if (e >= n) throw std::invalid_argument("table entry out of range");

    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw std::invalid_argument("group has no identity");

    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(b, a) == identity_ && mul(a, b) == identity_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0)
            throw std::invalid_argument("element " + std::to_string(a) +
                                        " has no inverse");
    }

    // Associativity: full check up to order 64, sampled above.
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("table is not associative");
    } else {
        std::mt19937 rng(0x5eed5u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 10 * n; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::invalid_argument("table is not associative");
        }
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.order_ = static_cast<int>(table.size());
    g.table_.reserve(static_cast<std::size_t>(g.order_) * g.order_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != g.order_)
            throw std::invalid_argument("multiplication table is not square");
        for (int e : row) {
            if (e < 0 || e >= g.order_)
                throw std::invalid_argument("table entry out of range");
            g.table_.push_back(static_cast<std::uint16_t>(e));
        }
    }
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group requires n >= 1");
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table_[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>((a + b) % n);
    g.perms_.reserve(n);
    for (int a = 0; a < n; ++a) {
        Permutation p(n);
        for (int i = 0; i < n; ++i) p[i] = (i + a) % n;
        g.perms_.push_back(std::move(p));
    }
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral group requires n >= 3");
    // 0..n-1 rotations i -> i+k, n..2n-1 reflections i -> k-i.
    std::vector<Permutation> elems;
    for (int k = 0; k < n; ++k) {
        Permutation p(n);
        for (int i = 0; i < n; ++i) p[i] = (i + k) % n;
        elems.push_back(std::move(p));
    }
    for (int k = 0; k < n; ++k) {
        Permutation p(n);
        for (int i = 0; i < n; ++i) p[i] = ((k - i) % n + n) % n;
        elems.push_back(std::move(p));
    }
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], static_cast<int>(i));
    FiniteGroup g;
    g.order_ = 2 * n;
    g.table_.resize(static_cast<std::size_t>(g.order_) * g.order_);
    for (int a = 0; a < g.order_; ++a)
        for (int b = 0; b < g.order_; ++b)
            g.table_[static_cast<std::size_t>(a) * g.order_ + b] =
                static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
    g.perms_ = std::move(elems);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
    std::vector<Permutation> elems;
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do elems.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], static_cast<int>(i));
    const int ord = static_cast<int>(elems.size());
    FiniteGroup g;
    g.order_ = ord;
    g.table_.resize(static_cast<std::size_t>(ord) * ord);
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b)
            g.table_[static_cast<std::size_t>(a) * ord + b] =
                static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
    g.perms_ = std::move(elems);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(std::span<const Permutation> generators,
                                           int order_cap) {
    if (generators.empty())
        throw std::invalid_argument("need at least one generator");
    const std::size_t degree = generators.front().size();
    for (const auto& gen : generators) {
        if (gen.size() != degree)
            throw std::invalid_argument("generators act on different sets");
        if (!is_permutation(gen))
            throw std::invalid_argument("generator is not a permutation");
    }

    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);

    // breadth-first closure; identity gets index 0
    std::vector<Permutation> elems{id};
    std::map<Permutation, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : generators) {
            Permutation next = compose(elems[head], gen);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > order_cap)
                    throw OrderCapExceeded(
                        "group closure exceeds order cap " +
                        std::to_string(order_cap));
            }
        }
    }

    const int ord = static_cast<int>(elems.size());
    FiniteGroup g;
    g.order_ = ord;
    g.table_.resize(static_cast<std::size_t>(ord) * ord);
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b)
            g.table_[static_cast<std::size_t>(a) * ord + b] =
                static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
    for (const auto& gen : generators) g.generators_.push_back(index.at(gen));
    g.perms_ = std::move(elems);
    g.finish();
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_of(const Permutation& p) const {
    for (std::size_t i = 0; i < perms_.size(); ++i)
        if (perms_[i] == p) return static_cast<int>(i);
    return -1;
}

void validate_connection_set(const FiniteGroup& g, const ConnectionSet& c) {
    std::vector<char> present(g.order(), 0);
    for (int e : c.elements) {
        if (e < 0 || e >= g.order())
            throw std::invalid_argument("connection set element out of range");
        if (e == g.identity())
            throw std::invalid_argument("connection set contains the identity");
        present[e] = 1;
    }
    for (int e : c.elements)
        if (!present[g.inv(e)])
            throw std::invalid_argument(
                "connection set is not closed under inverse (element " +
                std::to_string(e) + ")");
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& c) {
    validate_connection_set(g, c);
    std::vector<char> in_c(g.order(), 0);
    for (int e : c.elements) in_c[e] = 1;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (in_c[g.mul(g.inv(i), j)]) es.emplace_back(i, j);
    return Graph(g.order(), es);
}

bool is_normal_connection_set(const FiniteGroup& g, const ConnectionSet& c) {
    validate_connection_set(g, c);
    std::vector<char> in_c(g.order(), 0);
    for (int e : c.elements) in_c[e] = 1;
    for (int a = 0; a < g.order(); ++a)
        for (int e : c.elements)
            if (!in_c[g.mul(g.mul(g.inv(a), e), a)]) return false;
    return true;
}

Permutation left_translation(const FiniteGroup& g, int a) {
    Permutation p(g.order());
    for (int x = 0; x < g.order(); ++x) p[x] = g.mul(a, x);
    return p;
}

Permutation right_translation(const FiniteGroup& g, int a) {
    Permutation p(g.order());
    for (int x = 0; x < g.order(); ++x) p[x] = g.mul(x, a);
    return p;
}

bool preserves_adjacency(const Graph& g, const Permutation& p) {
    if (static_cast<int>(p.size()) != g.vertex_count() || !is_permutation(p))
        return false;
    for (auto [u, v] : g.edges())
        if (!g.adjacent(p[u], p[v])) return false;
    // a bijection mapping all edges to edges maps non-edges to non-edges
    return true;
}

namespace {

std::vector<std::vector<int>> parse_cycles(std::string_view line) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
    };
    skip_ws();
    while (i < line.size()) {
        if (line[i] != '(') throw InputError("expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < line.size() && line[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(line[i])))
                throw InputError("expected point in cycle notation");
            int v = 0;
            while (i < line.size() &&
                   std::isdigit(static_cast<unsigned char>(line[i])))
                v = v * 10 + (line[i++] - '0');
            cycle.push_back(v);
            skip_ws();
            if (i < line.size() && line[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i == line.size()) throw InputError("unterminated cycle");
        ++i;  // ')'
        cycles.push_back(std::move(cycle));
        skip_ws();
    }
    return cycles;
}

}  // namespace

std::vector<Permutation> parse_generator_file(std::string_view text) {
    std::vector<std::vector<std::vector<int>>> parsed;
    int degree = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto h = line.find('#'); h != std::string_view::npos)
            line = line.substr(0, h);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) {
            if (start > text.size()) break;
            continue;
        }
        auto cycles = parse_cycles(line);
        for (const auto& cyc : cycles)
            for (int v : cyc) degree = std::max(degree, v + 1);
        parsed.push_back(std::move(cycles));
        if (start > text.size()) break;
    }
    if (parsed.empty()) throw InputError("no generators in input");
    degree = std::max(degree, 1);

    std::vector<Permutation> gens;
    for (const auto& cycles : parsed) {
        Permutation p(degree);
        for (int i = 0; i < degree; ++i) p[i] = i;
        std::vector<char> moved(degree, 0);
        for (const auto& cyc : cycles) {
            for (int v : cyc) {
                if (moved[v])
                    throw InputError("point repeated within one permutation");
                moved[v] = 1;
            }
            for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
                p[cyc[k]] = cyc[k + 1];
            if (cyc.size() > 1) p[cyc.back()] = cyc.front();
        }
        gens.push_back(std::move(p));
    }
    return gens;
}

namespace {

int element_power(const FiniteGroup& g, int base, long long exp) {
    int b = exp < 0 ? g.inv(base) : base;
    long long e = exp < 0 ? -exp : exp;
    int acc = g.identity();
    for (long long i = 0; i < e; ++i) acc = g.mul(acc, b);
    return acc;
}

int parse_word(const FiniteGroup& g, std::string_view word) {
    const auto& gens = g.generator_elements();
    int acc = g.identity();
    std::size_t i = 0;
    while (i < word.size()) {
        if (word[i] != 'g') throw InputError("expected generator reference 'g<k>'");
        ++i;
        if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i])))
            throw InputError("expected generator number after 'g'");
        int k = 0;
        while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i])))
            k = k * 10 + (word[i++] - '0');
        if (k >= static_cast<int>(gens.size()))
            throw InputError("generator index out of range: g" + std::to_string(k));
        long long exp = 1;
        if (i < word.size() && word[i] == '^') {
            ++i;
            bool neg = false;
            if (i < word.size() && word[i] == '-') {
                neg = true;
                ++i;
            }
            if (i >= word.size() ||
                !std::isdigit(static_cast<unsigned char>(word[i])))
                throw InputError("expected exponent after '^'");
            exp = 0;
            while (i < word.size() &&
                   std::isdigit(static_cast<unsigned char>(word[i])))
                exp = exp * 10 + (word[i++] - '0');
            if (neg) exp = -exp;
        }
        acc = g.mul(acc, element_power(g, gens[k], exp));
        if (i < word.size()) {
            if (word[i] != '*') throw InputError("expected '*' between factors");
            ++i;
        }
    }
    return acc;
}

}  // namespace

std::vector<int> parse_connection_spec(const FiniteGroup& g,
                                       std::string_view spec) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string_view::npos) end = spec.size();
        std::string_view tok = spec.substr(start, end - start);
        start = end + 1;
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.remove_suffix(1);
        if (tok.empty()) {
            if (end == spec.size()) break;
            continue;
        }
        bool digits = true;
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch))) digits = false;
        if (digits) {
            long long v = std::stoll(std::string(tok));
            if (v < 0 || v >= g.order())
                throw InputError("connection element out of range: " +
                                 std::string(tok));
            out.push_back(static_cast<int>(v));
        } else {
            if (g.generator_elements().empty())
                throw InputError(
                    "generator words need a group built from generators");
            out.push_back(parse_word(g, tok));
        }
        if (end == spec.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace vtc
