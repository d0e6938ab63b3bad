#include "vtc/theorems.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vtc {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_isomorphism_map(const Graph& a, const Graph& b,
                        const std::vector<int>& f) {
    const int n = a.vertex_count();
    if (b.vertex_count() != n || static_cast<int>(f.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int w : f) {
        if (w < 0 || w >= n || hit[w]) return false;
        hit[w] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.adjacent(u, v) != b.adjacent(f[u], f[v])) return false;
    return true;
}

Budget& local_or(Budget*& budget, Budget& storage) {
    if (!budget) budget = &storage;
    return *budget;
}

}  // namespace

std::optional<QuotientMatrix> equitable_check(const Graph& x,
                                              const VertexPartition& p) {
    const int n = x.vertex_count();
    validate_partition(p, n);
    const int k = static_cast<int>(p.blocks.size());
    std::vector<int> block_of(n, -1);
    for (int i = 0; i < k; ++i)
        for (int v : p.blocks[i]) block_of[v] = i;

    QuotientMatrix q;
    q.entries.assign(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            int expected = -1;
            for (int v : p.blocks[i]) {
                int count = 0;
                for (int w : x.neighbors(v))
                    if (block_of[w] == j) ++count;
                if (expected == -1)
                    expected = count;
                else if (count != expected)
                    return std::nullopt;
            }
            q.entries[i][j] = expected;
        }
    }
    return q;
}

SpectrumCheck quotient_spectrum_check(const Graph& x, const QuotientMatrix& q) {
    if (q.entries.size() != 2 || q.entries[0].size() != 2 ||
        q.entries[1].size() != 2)
        throw std::invalid_argument("expected a 2x2 quotient matrix");
    const int a = q.entries[0][0], b = q.entries[0][1];
    if (q.entries[1][0] != b || q.entries[1][1] != a)
        throw std::invalid_argument(
            "expected the symmetric half-size quotient [[d1,d-d1],[d-d1,d1]]");
    SpectrumCheck out;
    out.d = a + b;
    out.two_d1_minus_d = a - b;
    out.d_is_eigenvalue = is_adjacency_eigenvalue(x, out.d);
    out.second_is_eigenvalue = is_adjacency_eigenvalue(x, out.two_d1_minus_d);
    return out;
}

// ---------------------------------------------------------------------------

CorePartitionResult core_partition_normal_cayley(const FiniteGroup& g,
                                                 const ConnectionSet& c,
                                                 Budget* budget) {
    if (!is_normal_connection_set(g, c))
        throw std::invalid_argument("connection set is not normal");
    Budget local;
    Budget& b = local_or(budget, local);
    const std::uint64_t before = b.used;

    Graph x = cayley_graph(g, c);
    CoreResult core = find_core(x, &b);
    CorePartitionResult out{core.status, std::nullopt, 0};
    if (core.status != SearchStatus::found) {
        out.nodes = b.used - before;
        return out;
    }

    const std::vector<int>& t = core.core_vertices;
    const int y = t.front();
    std::vector<int> fibre;
    for (int a = 0; a < x.vertex_count(); ++a)
        if (core.witness->map()[a] == y) fibre.push_back(a);

    VertexPartition partition;
    for (int a : fibre) {
        std::vector<int> block;
        block.reserve(t.size());
        for (int tv : t) block.push_back(g.mul(tv, g.inv(a)));
        std::sort(block.begin(), block.end());
        partition.blocks.push_back(std::move(block));
    }

    bool verified = true;
    std::vector<char> seen(x.vertex_count(), 0);
    int covered = 0;
    for (const auto& block : partition.blocks)
        for (int v : block) {
            if (seen[v]) verified = false;
            seen[v] = 1;
            ++covered;
        }
    if (covered != x.vertex_count()) verified = false;

    for (const auto& block : partition.blocks) {
        IsoResult iso = find_isomorphism(induced_subgraph(x, block), core.core, &b);
        if (iso.status == SearchStatus::inconclusive) {
            out.status = SearchStatus::inconclusive;
            out.nodes = b.used - before;
            return out;
        }
        if (iso.status != SearchStatus::found) verified = false;
    }

    out.report.emplace(CorePartitionReport{std::move(partition),
                                           std::move(core.core), t,
                                           std::move(*core.witness), y,
                                           std::move(fibre), verified});
    out.nodes = b.used - before;
    return out;
}

DisjointnessReport check_cayley_lemma_disjointness(const FiniteGroup& g,
                                                   const ConnectionSet& c,
                                                   const Homomorphism& endo,
                                                   int y, Budget* budget) {
    Graph x = cayley_graph(g, c);
    if (!(endo.source() == x) || !endo.is_endomorphism())
        throw std::invalid_argument("expected an endomorphism of X(G,C)");
    std::vector<int> img = endo.image();
    if (!std::binary_search(img.begin(), img.end(), y))
        throw std::invalid_argument("y is not in the image");
    std::optional<bool> core = is_core(induced_subgraph(x, img), budget);
    if (!core.has_value())
        throw std::invalid_argument(
            "budget exhausted while checking that the image is a core");
    if (!*core)
        throw std::invalid_argument("image of the endomorphism is not a core");

    DisjointnessReport report;
    report.base_image_vertex = y;
    for (int a = 0; a < x.vertex_count(); ++a)
        if (endo.map()[a] == y) report.fibre.push_back(a);
    for (int a : report.fibre) {
        std::vector<int> translate;
        translate.reserve(img.size());
        for (int tv : img) translate.push_back(g.mul(tv, g.inv(a)));
        std::sort(translate.begin(), translate.end());
        report.translates.push_back(std::move(translate));
    }
    report.disjoint = true;
    std::vector<char> seen(g.order(), 0);
    for (const auto& tr : report.translates)
        for (int v : tr) {
            if (seen[v]) report.disjoint = false;
            seen[v] = 1;
        }
    return report;
}

// ---------------------------------------------------------------------------

HalfSizeResult half_size_structure(const Graph& x, Budget* budget, int aut_cap) {
    if (x.vertex_count() == 0)
        throw std::invalid_argument("graph has no vertices");
    if (!is_vertex_transitive(x, aut_cap))
        throw std::invalid_argument("graph is not vertex transitive");
    Budget local;
    Budget& b = local_or(budget, local);
    const std::uint64_t before = b.used;
    const int n = x.vertex_count();

    CoreResult core = find_core(x, &b);
    if (core.status != SearchStatus::found)
        return {SearchStatus::inconclusive, std::nullopt, b.used - before};
    if (2 * static_cast<int>(core.core_vertices.size()) != n)
        throw std::invalid_argument("core is not half the graph size");

    const std::vector<int>& x1 = core.core_vertices;
    std::vector<char> in_x1(n, 0);
    for (int v : x1) in_x1[v] = 1;
    std::vector<int> x2;
    for (int v = 0; v < n; ++v)
        if (!in_x1[v]) x2.push_back(v);

    auto dx = regular_valency(x);
    auto d1 = regular_valency(core.core);
    if (!dx || !d1)
        throw std::logic_error("vertex transitive graph or its core not regular");

    HalfSizeReport report{.x1 = x1,
                          .x2 = x2,
                          .iso_x2_to_x1 = {},
                          .retraction = *core.witness,
                          .cross = Graph(),
                          .d = *dx,
                          .d1 = *d1,
                          .cross_degree = *dx - *d1};
    const std::vector<int>& rho = core.witness->map();

    // (2) the restriction of the retraction to X2 is an isomorphism onto X1
    std::vector<int> preimage_in_x2(n, -1);
    bool restriction_ok = true;
    for (int v : x2) {
        report.iso_x2_to_x1.push_back(rho[v]);
        if (preimage_in_x2[rho[v]] != -1) restriction_ok = false;
        preimage_in_x2[rho[v]] = v;
    }
    for (int t : x1)
        if (preimage_in_x2[t] == -1) restriction_ok = false;
    if (restriction_ok)
        for (std::size_t i = 0; i < x2.size() && restriction_ok; ++i)
            for (std::size_t j = i + 1; j < x2.size(); ++j)
                if (x.adjacent(x2[i], x2[j]) !=
                    x.adjacent(rho[x2[i]], rho[x2[j]])) {
                    restriction_ok = false;
                    break;
                }
    report.conclusion_restriction_iso = restriction_ok;

    // (1) X1 isomorphic to X2, independently of the retraction
    IsoResult iso = find_isomorphism(core.core, induced_subgraph(x, x2), &b);
    if (iso.status == SearchStatus::inconclusive)
        return {SearchStatus::inconclusive, std::nullopt, b.used - before};
    report.conclusion_isomorphic = iso.status == SearchStatus::found;

    // (3) the cross graph: regular of degree d - d1, edges {x, phi(y)} with x ~ y
    std::vector<std::pair<int, int>> cross_edges;
    for (auto [u, v] : x.edges())
        if (in_x1[u] != in_x1[v]) cross_edges.emplace_back(u, v);
    report.cross = Graph(n, cross_edges);
    report.cross_regular = true;
    for (int v = 0; v < n; ++v)
        if (report.cross.degree(v) != report.d - report.d1)
            report.cross_regular = false;
    report.conclusion_cross_form = restriction_ok;
    for (auto [u, v] : cross_edges) {
        int side2 = in_x1[u] ? v : u;   // end in X2
        int side1 = in_x1[u] ? u : v;   // end in X1
        int y = preimage_in_x2[side1];  // phi(y) = side1 with y in X2
        if (y < 0 || y == side2 || !x.adjacent(side2, y)) {
            report.conclusion_cross_form = false;
            break;
        }
    }

    VertexPartition partition{{x1, x2}};
    auto quotient = equitable_check(x, partition);
    if (!quotient)
        throw std::logic_error("half-size partition is not equitable");
    report.quotient = *quotient;
    report.spectrum = quotient_spectrum_check(x, report.quotient);

    if (report.cross.edge_count() == 0) {
        report.cross_vertex_transitive = true;
    } else {
        try {
            report.cross_vertex_transitive = is_vertex_transitive(report.cross, aut_cap);
        } catch (const AutomorphismOverflow&) {
            report.cross_vertex_transitive = std::nullopt;
        }
    }

    return {SearchStatus::found, std::move(report), b.used - before};
}

// ---------------------------------------------------------------------------

SelfCoreReport self_core_by_spectral_test(const Graph& x, int aut_cap) {
    const int n = x.vertex_count();
    if (n % 2 != 0 || !is_prime(n / 2))
        throw std::invalid_argument("vertex count is not twice a prime");
    auto d = regular_valency(x);
    if (!d) throw std::invalid_argument("graph is not regular");
    if (!is_vertex_transitive(x, aut_cap))
        throw std::invalid_argument("graph is not vertex transitive");

    SelfCoreReport report;
    report.valency = *d;
    report.interpretation =
        "integer eigenvalues tested on [0, d) with the parity of d; "
        "lambda = d is excluded as it is always present for a connected "
        "regular graph, and connectivity is required";
    if (!is_connected(x)) report.reasons.push_back("graph is disconnected");
    if (is_bipartite(x)) report.reasons.push_back("graph is bipartite");
    for (long long lambda = *d % 2; lambda < *d; lambda += 2) {
        report.tested.push_back(lambda);
        if (is_adjacency_eigenvalue(x, lambda))
            report.reasons.push_back(
                "integer eigenvalue " + std::to_string(lambda) +
                " of the same parity as the valency is present");
    }
    report.certified = report.reasons.empty();
    return report;
}

// ---------------------------------------------------------------------------

LineGraphCounterexampleReport verify_line_graph_counterexample(int n,
                                                               Budget* budget) {
    if (n < 3)
        throw std::invalid_argument(
            "requires n >= 3: for n = 2 the triangles of L(K_4) include "
            "non-star cliques and the argument fails");
    Budget local;
    Budget& b = local_or(budget, local);

    const int points = 2 * n;
    LineGraphResult lg = line_graph(Graph::complete(points));
    const int m = lg.graph.vertex_count();

    LineGraphCounterexampleReport report;
    report.n = n;
    report.core_order = 2 * n - 1;
    report.graph = lg.graph;
    report.vertex_edge = lg.vertex_edge;

    // clique: the star of point 0
    for (int i = 0; i < m; ++i)
        if (lg.vertex_edge[i].first == 0 || lg.vertex_edge[i].second == 0)
            report.clique.push_back(i);
    report.clique_ok =
        static_cast<int>(report.clique.size()) == report.core_order;
    for (std::size_t i = 0; i < report.clique.size() && report.clique_ok; ++i)
        for (std::size_t j = i + 1; j < report.clique.size(); ++j)
            if (!lg.graph.adjacent(report.clique[i], report.clique[j])) {
                report.clique_ok = false;
                break;
            }

    // proper (2n-1)-coloring: round-robin one-factorization of K_{2n}
    std::map<std::pair<int, int>, int> edge_color;
    const int rounds = points - 1;
    for (int r = 0; r < rounds; ++r) {
        edge_color[{std::min(r, points - 1), std::max(r, points - 1)}] = r;
        for (int k = 1; k < n; ++k) {
            int u = (r + k) % rounds, v = ((r - k) % rounds + rounds) % rounds;
            edge_color[{std::min(u, v), std::max(u, v)}] = r;
        }
    }
    report.coloring.resize(m);
    for (int i = 0; i < m; ++i) report.coloring[i] = edge_color.at(lg.vertex_edge[i]);
    report.coloring_ok = true;
    std::set<int> used_colors(report.coloring.begin(), report.coloring.end());
    if (static_cast<int>(used_colors.size()) != report.core_order)
        report.coloring_ok = false;
    for (auto [u, v] : lg.graph.edges())
        if (report.coloring[u] == report.coloring[v]) {
            report.coloring_ok = false;
            break;
        }

    // every maximum clique is a vertex star, and any two stars intersect
    auto cliques = induced_copies(Graph::complete(report.core_order), lg.graph, &b);
    auto larger = induced_copies(Graph::complete(report.core_order + 1), lg.graph, &b);
    if (!cliques || !larger) {
        report.verified = false;
        return report;
    }
    report.max_cliques = *cliques;
    report.no_larger_clique = larger->empty();
    report.all_stars = !report.max_cliques.empty();
    for (const auto& clique : report.max_cliques) {
        std::vector<int> common;  // endpoints shared by all member edges
        for (std::size_t i = 0; i < clique.size(); ++i) {
            auto [a, c] = lg.vertex_edge[clique[i]];
            if (i == 0) {
                common = {a, c};
            } else {
                std::vector<int> next;
                for (int p : common)
                    if (p == a || p == c) next.push_back(p);
                common = next;
            }
        }
        if (common.size() == 1) {
            report.star_centers.push_back(common.front());
        } else {
            report.star_centers.push_back(-1);
            report.all_stars = false;
        }
    }
    report.pairwise_intersecting = true;
    for (std::size_t i = 0; i < report.max_cliques.size(); ++i)
        for (std::size_t j = i + 1; j < report.max_cliques.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(
                report.max_cliques[i].begin(), report.max_cliques[i].end(),
                report.max_cliques[j].begin(), report.max_cliques[j].end(),
                std::back_inserter(inter));
            if (inter.empty()) report.pairwise_intersecting = false;
        }

    report.verified = report.clique_ok && report.coloring_ok &&
                      report.all_stars && report.pairwise_intersecting &&
                      report.no_larger_clique;

    if (n == 3) {
        ExactCoverResult cover = exact_cover(m, report.max_cliques, &b);
        if (cover.status == SearchStatus::inconclusive) {
            report.verified = false;
        } else {
            report.exact_cover_infeasible = cover.status == SearchStatus::none;
        }
        CoreResult core = find_core(lg.graph, &b);
        if (core.status == SearchStatus::found) {
            IsoResult iso = find_isomorphism(
                core.core, Graph::complete(report.core_order), &b);
            report.core_by_search_matches = iso.status == SearchStatus::found;
        }
        report.verified = report.verified &&
                          report.exact_cover_infeasible.value_or(false) &&
                          report.core_by_search_matches.value_or(false);
    }
    return report;
}

// ---------------------------------------------------------------------------

PartitionSearchResult core_partition_search(const Graph& x, Budget* budget) {
    Budget local;
    Budget& b = local_or(budget, local);
    const std::uint64_t before = b.used;
    const int n = x.vertex_count();

    CoreResult core = find_core(x, &b);
    if (core.status != SearchStatus::found)
        return {SearchStatus::inconclusive, std::nullopt, core.core,
                b.used - before};

    PartitionSearchResult out{SearchStatus::none, std::nullopt, core.core, 0};
    if (n == 0) {
        out.status = SearchStatus::found;
        out.partition = VertexPartition{};
        out.nodes = b.used - before;
        return out;
    }
    if (static_cast<int>(core.core_vertices.size()) == n) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        out.status = SearchStatus::found;
        out.partition = VertexPartition{{all}};
        out.nodes = b.used - before;
        return out;
    }

    auto copies = induced_copies(core.core, x, &b);
    if (!copies)
        return {SearchStatus::inconclusive, std::nullopt, core.core,
                b.used - before};
    ExactCoverResult cover = exact_cover(n, *copies, &b);
    out.nodes = b.used - before;
    if (cover.status == SearchStatus::inconclusive) {
        out.status = SearchStatus::inconclusive;
        return out;
    }
    if (cover.status == SearchStatus::none) return out;
    VertexPartition partition;
    for (int s : *cover.cover) partition.blocks.push_back((*copies)[s]);
    out.status = SearchStatus::found;
    out.partition = std::move(partition);
    return out;
}

// ---------------------------------------------------------------------------

ArcClassifyReport arc_transitive_half_size_classify(const Graph& x,
                                                    Budget* budget,
                                                    int aut_cap) {
    ArcClassifyReport report;
    if (x.edge_count() == 0) {
        report.reason = "graph has no edges";
        return report;
    }
    if (!is_arc_transitive(x, aut_cap)) {
        report.reason = "graph is not arc transitive";
        return report;
    }
    Budget local;
    Budget& b = local_or(budget, local);

    CoreResult core = find_core(x, &b);
    if (core.status != SearchStatus::found) {
        report.status = SearchStatus::inconclusive;
        report.reason = "core search exceeded the node budget";
        return report;
    }
    const int n = x.vertex_count();
    if (2 * static_cast<int>(core.core_vertices.size()) != n) {
        report.reason = "core is not half the graph size";
        return report;
    }

    auto dx = regular_valency(x);
    auto d1 = regular_valency(core.core);
    if (!dx || !d1)
        throw std::logic_error("arc transitive graph or its core not regular");
    report.d = *dx;
    report.d1 = *d1;
    report.core = core.core;
    report.core_vertices = core.core_vertices;
    if (*d1 == 0 || *dx % *d1 != 0)
        throw std::logic_error(
            "core valency does not divide the graph valency");
    if (*dx != *d1 && *dx != 2 * *d1)
        throw std::logic_error("valency dichotomy violated");

    std::vector<char> in_core(n, 0);
    for (int v : core.core_vertices) in_core[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_core[v]) rest.push_back(v);

    if (*dx == *d1) {
        bool no_cross = true;
        for (auto [u, v] : x.edges())
            if (in_core[u] != in_core[v]) no_cross = false;
        IsoResult other = find_isomorphism(induced_subgraph(x, rest), core.core, &b);
        if (other.status == SearchStatus::inconclusive) {
            report.status = SearchStatus::inconclusive;
            report.reason = "isomorphism search exceeded the node budget";
            return report;
        }
        report.kind = ArcClassification::disjoint_copies;
        report.certified = no_cross && other.status == SearchStatus::found;
        return report;
    }

    // d = 2*d1: x is the core blown up by complement(K_2)
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < core.core_vertices.size(); ++i)
        pos[core.core_vertices[i]] = static_cast<int>(i);
    const std::vector<int>& rho = core.witness->map();
    report.iso_to_product.resize(n);
    for (int v = 0; v < n; ++v)
        report.iso_to_product[v] =
            in_core[v] ? pos[v] * 2 : pos[rho[v]] * 2 + 1;
    report.kind = ArcClassification::lexicographic;
    report.certified =
        is_isomorphism_map(x, multiple(core.core, 2), report.iso_to_product);
    return report;
}

// ---------------------------------------------------------------------------

SabidussiResult sabidussi_multiple(const Graph& x, int aut_cap) {
    AutomorphismList auts = automorphism_group(x, aut_cap);
    if (!auts.complete)
        throw AutomorphismOverflow("automorphism count exceeds cap " +
                                   std::to_string(aut_cap));
    const int n = x.vertex_count();
    if (n == 0) throw std::invalid_argument("graph has no vertices");
    {
        std::vector<char> orbit(n, 0);
        for (const auto& p : auts.perms) orbit[p[0]] = 1;
        for (int v = 0; v < n; ++v)
            if (!orbit[v])
                throw std::invalid_argument("graph is not vertex transitive");
    }
    const int order = static_cast<int>(auts.perms.size());
    if (order > kDefaultGroupOrderCap)
        throw OrderCapExceeded(
            "automorphism group too large for a multiplication table");

    std::map<Permutation, int> index;
    for (int i = 0; i < order; ++i) index.emplace(auts.perms[i], i);
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            table[i][j] = index.at(compose(auts.perms[i], auts.perms[j]));
    FiniteGroup group = FiniteGroup::from_table(std::move(table));

    int m = 0;
    for (const auto& p : auts.perms)
        if (p[0] == 0) ++m;
    if (m * n != order)
        throw std::logic_error("orbit-stabilizer accounting failed");

    ConnectionSet connection;
    for (int i = 0; i < order; ++i)
        if (x.adjacent(auts.perms[i][0], 0)) connection.elements.push_back(i);

    std::vector<int> iso(order);
    std::vector<int> rank(n, 0);
    for (int i = 0; i < order; ++i) {
        int img = auts.perms[i][0];
        iso[i] = img * m + rank[img];
        ++rank[img];
    }

    Graph cayley = cayley_graph(group, connection);
    Graph blown_up = multiple(x, m);
    bool verified = is_isomorphism_map(cayley, blown_up, iso);
    return SabidussiResult{m,
                           std::move(group),
                           std::move(connection),
                           std::move(iso),
                           std::move(cayley),
                           std::move(blown_up),
                           verified};
}

Homomorphism lift_endomorphism_to_multiple(const Graph& x,
                                           const Homomorphism& endo, int m) {
    if (!(endo.source() == x) || !endo.is_endomorphism())
        throw std::invalid_argument("expected an endomorphism of x");
    if (m < 1) throw std::invalid_argument("multiple requires m >= 1");
    Graph z = multiple(x, m);
    std::vector<int> lifted(z.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v)
        for (int i = 0; i < m; ++i) lifted[v * m + i] = endo.map()[v] * m;
    return Homomorphism(z, z, std::move(lifted));
}

}  // namespace vtc
