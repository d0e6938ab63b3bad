#include "vtc/symmetry.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vtc {

AutomorphismList automorphism_group(const Graph& g, int cap) {
    if (cap < 1) throw std::invalid_argument("automorphism cap must be positive");
    AutomorphismList out;
    HomOptions opts;
    opts.injective = true;
    opts.induced = true;
    opts.domain_filter = [&g](int v, int w) {
        return g.degree(v) == g.degree(w);
    };
    Budget budget{.limit = UINT64_MAX};
    EnumStats st = enumerate_homomorphisms(
        g, g, opts, budget, [&](std::span<const int> m) {
            out.perms.emplace_back(m.begin(), m.end());
            return static_cast<int>(out.perms.size()) <= cap;
        });
    if (static_cast<int>(out.perms.size()) > cap) {
        out.perms.resize(cap);
        out.complete = false;
    } else {
        out.complete = st.complete;
    }
    return out;
}

namespace {

AutomorphismList require_complete(const Graph& g, int cap) {
    AutomorphismList auts = automorphism_group(g, cap);
    if (!auts.complete)
        throw AutomorphismOverflow("automorphism count exceeds cap " +
                                   std::to_string(cap));
    return auts;
}

}  // namespace

bool is_vertex_transitive(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    AutomorphismList auts = require_complete(g, cap);
    std::vector<char> orbit(n, 0);
    int hit = 0;
    for (const auto& p : auts.perms)
        if (!orbit[p[0]]) {
            orbit[p[0]] = 1;
            ++hit;
        }
    return hit == n;
}

bool is_arc_transitive(const Graph& g, int cap) {
    auto es = g.edges();
    if (es.empty())
        throw std::invalid_argument("arc transitivity needs at least one edge");
    AutomorphismList auts = require_complete(g, cap);
    std::set<std::pair<int, int>> orbit;
    auto [u0, v0] = es.front();
    for (const auto& p : auts.perms) {
        orbit.emplace(p[u0], p[v0]);
        orbit.emplace(p[v0], p[u0]);
    }
    return orbit.size() == 2 * es.size();
}

OrbitalsReport check_lemma_orbitals(const Graph& x, const Homomorphism& endo,
                                    const Retraction& core_retraction,
                                    int cap, Budget* budget) {
    if (!(endo.source() == x) || !endo.is_endomorphism())
        throw std::invalid_argument("expected an endomorphism of x");
    if (!(core_retraction.graph() == x))
        throw std::invalid_argument("retraction is not on x");
    std::optional<bool> core =
        is_core(induced_subgraph(x, core_retraction.image()), budget);
    if (!core.has_value())
        throw std::invalid_argument(
            "budget exhausted while checking the retract is a core");
    if (!*core)
        throw std::invalid_argument("retraction image is not a core");

    AutomorphismList auts = require_complete(x, cap);
    const std::vector<int>& k = core_retraction.image();
    const std::vector<int>& h = endo.map();

    OrbitalsReport report;
    for (std::size_t s = 0; s < auts.perms.size(); ++s) {
        const Permutation& sigma = auts.perms[s];
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = i + 1; j < k.size(); ++j) {
                ++report.checked;
                int a = sigma[k[i]], b = sigma[k[j]];
                if (h[a] == h[b])
                    report.violations.push_back(
                        {k[i], k[j], a, b, static_cast<int>(s)});
            }
    }
    report.passed = report.violations.empty();
    return report;
}

}  // namespace vtc
