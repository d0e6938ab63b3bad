#include "vtc/hom_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace vtc {

Homomorphism::Homomorphism(Graph source, Graph target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (static_cast<int>(map_.size()) != source_.vertex_count())
        throw std::invalid_argument("homomorphism map has wrong length");
    for (int w : map_)
        if (w < 0 || w >= target_.vertex_count())
            throw std::invalid_argument("homomorphism image vertex out of range");
    for (auto [u, v] : source_.edges())
        if (!target_.adjacent(map_[u], map_[v]))
            throw std::invalid_argument(
                "map does not preserve adjacency on edge " + std::to_string(u) +
                "-" + std::to_string(v));
}

std::vector<int> Homomorphism::image() const {
    std::vector<int> img(map_);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

Retraction::Retraction(Graph g, std::vector<int> map)
    : hom_(g, g, map), image_(hom_.image()) {
    const auto& m = hom_.map();
    for (int v = 0; v < static_cast<int>(m.size()); ++v)
        if (m[m[v]] != m[v])
            throw std::invalid_argument("retraction map is not idempotent");
}

FibrePartition fibres(const Homomorphism& h) {
    FibrePartition out;
    for (int y : h.image()) out.fibres.emplace_back(y, std::vector<int>{});
    for (int v = 0; v < static_cast<int>(h.map().size()); ++v) {
        int y = h.map()[v];
        auto it = std::lower_bound(
            out.fibres.begin(), out.fibres.end(), y,
            [](const auto& f, int key) { return f.first < key; });
        it->second.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Engine

namespace {

class HomEngine {
public:
    HomEngine(const Graph& source, const Graph& target, const HomOptions& opts,
              Budget& budget, const std::function<bool(std::span<const int>)>& emit)
        : src_(source), tgt_(target), opts_(opts), budget_(budget), emit_(emit) {
        n_ = src_.vertex_count();
        t_ = tgt_.vertex_count();
        words_ = std::max(1, (t_ + 63) / 64);
    }

    EnumStats run() {
        if (n_ == 0) {
            // the empty map is always valid
            if (!budget_.spend()) return stats_;
            stats_.solutions = 1;
            stats_.complete = emit_({});
            return stats_;
        }
        if (t_ == 0) {
            stats_.complete = true;
            return stats_;
        }
        if (!opts_.fixed.empty() &&
            static_cast<int>(opts_.fixed.size()) != n_)
            throw std::invalid_argument("fixed vector has wrong length");

        build_order();
        if (!build_initial_domains()) {
            stats_.complete = true;  // some domain empty up front
            return stats_;
        }
        map_.assign(n_, -1);
        recurse(0, domains_);
        stats_.complete = !stopped_ && !aborted_;
        return stats_;
    }

private:
    using Words = std::vector<std::uint64_t>;

    void build_order() {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        auto fixed_at = [&](int v) {
            return !opts_.fixed.empty() && opts_.fixed[v] >= 0;
        };
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (fixed_at(a) != fixed_at(b)) return fixed_at(a);
            if (src_.degree(a) != src_.degree(b))
                return src_.degree(a) > src_.degree(b);
            return a < b;
        });
    }

    bool build_initial_domains() {
        Words full(words_, 0);
        for (int w = 0; w < t_; ++w) full[w >> 6] |= std::uint64_t{1} << (w & 63);
        domains_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int v = 0; v < n_; ++v) {
            Words dom = full;
            if (!opts_.fixed.empty() && opts_.fixed[v] >= 0) {
                int w = opts_.fixed[v];
                if (w >= t_)
                    throw std::invalid_argument("fixed target out of range");
                dom.assign(words_, 0);
                dom[w >> 6] = std::uint64_t{1} << (w & 63);
            }
            if (opts_.injective || opts_.domain_filter) {
                for (int w = 0; w < t_; ++w) {
                    bool keep = true;
                    if (opts_.injective && tgt_.degree(w) < src_.degree(v))
                        keep = false;
                    if (keep && opts_.domain_filter && !opts_.domain_filter(v, w))
                        keep = false;
                    if (!keep) dom[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
                }
            }
            bool empty = true;
            for (int k = 0; k < words_; ++k) {
                domains_[static_cast<std::size_t>(v) * words_ + k] = dom[k];
                if (dom[k]) empty = false;
            }
            if (empty) return false;
        }
        return true;
    }

    void recurse(int depth, const Words& doms) {
        if (stopped_ || aborted_) return;
        if (depth == n_) {
            ++stats_.solutions;
            if (!emit_(map_)) stopped_ = true;
            return;
        }
        const int v = order_[depth];
        const std::uint64_t* dom = doms.data() + static_cast<std::size_t>(v) * words_;
        for (int k = 0; k < words_; ++k) {
            std::uint64_t bitsleft = dom[k];
            while (bitsleft) {
                const int w = k * 64 + std::countr_zero(bitsleft);
                bitsleft &= bitsleft - 1;
                if (!budget_.spend()) {
                    aborted_ = true;
                    return;
                }
                map_[v] = w;
                Words next(doms);
                if (propagate(depth, v, w, next)) recurse(depth + 1, next);
                map_[v] = -1;
                if (stopped_ || aborted_) return;
            }
        }
    }

    // prune the domains of the still-unassigned vertices against v -> w
    bool propagate(int depth, int v, int w, Words& doms) {
        const std::uint64_t* wrow = tgt_.row_bits(w);
        for (int di = depth + 1; di < n_; ++di) {
            const int u = order_[di];
            std::uint64_t* dom = doms.data() + static_cast<std::size_t>(u) * words_;
            bool empty = true;
            const bool nb = src_.adjacent(u, v);
            for (int k = 0; k < words_; ++k) {
                std::uint64_t m = dom[k];
                if (nb)
                    m &= wrow[k];
                else if (opts_.induced)
                    m &= ~wrow[k];
                if (opts_.injective && k == (w >> 6))
                    m &= ~(std::uint64_t{1} << (w & 63));
                dom[k] = m;
                if (m) empty = false;
            }
            if (empty) return false;
        }
        return true;
    }

    const Graph& src_;
    const Graph& tgt_;
    const HomOptions& opts_;
    Budget& budget_;
    const std::function<bool(std::span<const int>)>& emit_;
    int n_ = 0, t_ = 0, words_ = 1;
    std::vector<int> order_;
    std::vector<int> map_;
    Words domains_;
    EnumStats stats_;
    bool stopped_ = false;
    bool aborted_ = false;
};

Budget& local_or(Budget*& budget, Budget& storage) {
    if (!budget) budget = &storage;
    return *budget;
}

}  // namespace

EnumStats enumerate_homomorphisms(
    const Graph& source, const Graph& target, const HomOptions& opts,
    Budget& budget, const std::function<bool(std::span<const int>)>& emit) {
    return HomEngine(source, target, opts, budget, emit).run();
}

// ---------------------------------------------------------------------------
// Search operations

HomResult find_homomorphism(const Graph& x, const Graph& y, Budget* budget) {
    Budget local;
    Budget& b = local_or(budget, local);
    const std::uint64_t before = b.used;
    std::vector<int> found;
    EnumStats st = enumerate_homomorphisms(
        x, y, {}, b, [&](std::span<const int> m) {
            found.assign(m.begin(), m.end());
            return false;
        });
    HomResult out{SearchStatus::none, std::nullopt, b.used - before};
    if (st.solutions > 0) {
        out.status = SearchStatus::found;
        out.hom.emplace(x, y, std::move(found));
    } else if (!st.complete) {
        out.status = SearchStatus::inconclusive;
    }
    return out;
}

RetractionResult find_retraction_to(const Graph& x, std::span<const int> image,
                                    Budget* budget) {
    if (image.empty())
        throw std::invalid_argument("retraction image must be nonempty");
    const int n = x.vertex_count();
    std::vector<char> in_image(n, 0);
    for (int v : image) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("retraction image vertex out of range");
        if (in_image[v])
            throw std::invalid_argument("retraction image vertex repeated");
        in_image[v] = 1;
    }

    HomOptions opts;
    opts.fixed.assign(n, -1);
    for (int v : image) opts.fixed[v] = v;
    opts.domain_filter = [&in_image](int, int w) { return in_image[w] != 0; };

    Budget local;
    Budget& b = local_or(budget, local);
    const std::uint64_t before = b.used;
    std::vector<int> found;
    EnumStats st = enumerate_homomorphisms(
        x, x, opts, b, [&](std::span<const int> m) {
            found.assign(m.begin(), m.end());
            return false;
        });
    RetractionResult out{SearchStatus::none, std::nullopt, b.used - before};
    if (st.solutions > 0) {
        out.status = SearchStatus::found;
        out.retraction.emplace(x, std::move(found));
    } else if (!st.complete) {
        out.status = SearchStatus::inconclusive;
    }
    return out;
}

Retraction normalize_to_retraction(const Graph& x, std::vector<int> endo_map) {
    const int n = x.vertex_count();
    auto image_of = [n](const std::vector<int>& m) {
        std::vector<int> img(m);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    };
    std::vector<int> img = image_of(endo_map);
    for (;;) {
        std::vector<int> squared(n);
        for (int v = 0; v < n; ++v) squared[v] = endo_map[endo_map[v]];
        std::vector<int> img2 = image_of(squared);
        if (img2.size() == img.size()) break;
        endo_map = std::move(squared);
        img = std::move(img2);
    }
    // endo_map now permutes its image; cancel that permutation
    std::vector<int> inv(n, -1);
    for (int y : img) inv[endo_map[y]] = y;
    std::vector<int> final_map(n);
    for (int v = 0; v < n; ++v) final_map[v] = inv[endo_map[v]];
    return Retraction(x, std::move(final_map));
}

CoreResult find_core(const Graph& x, Budget* budget) {
    Budget local;
    Budget& b = local_or(budget, local);
    const std::uint64_t before = b.used;
    const int n = x.vertex_count();

    std::vector<int> current(n);
    std::iota(current.begin(), current.end(), 0);
    std::vector<int> rho(n);  // composite map, x -> current
    std::iota(rho.begin(), rho.end(), 0);

    bool out_of_budget = false;
    bool shrunk = true;
    while (shrunk && current.size() > 1) {
        shrunk = false;
        Graph sub = induced_subgraph(x, current);
        for (std::size_t drop = 0; drop < current.size(); ++drop) {
            std::vector<int> rest;
            rest.reserve(current.size() - 1);
            for (std::size_t i = 0; i < current.size(); ++i)
                if (i != drop) rest.push_back(current[i]);
            Graph target = induced_subgraph(x, rest);
            HomResult hr = find_homomorphism(sub, target, &b);
            if (hr.status == SearchStatus::inconclusive) {
                out_of_budget = true;
                break;
            }
            if (hr.status == SearchStatus::found) {
                // fold the step into the global composite
                std::vector<int> pos(n, -1);
                for (std::size_t i = 0; i < current.size(); ++i)
                    pos[current[i]] = static_cast<int>(i);
                const auto& step = hr.hom->map();
                for (int v = 0; v < n; ++v) rho[v] = rest[step[pos[rho[v]]]];
                current = std::move(rest);
                shrunk = true;
                break;
            }
        }
        if (out_of_budget) break;
    }

    CoreResult out;
    out.nodes = b.used - before;
    out.status = out_of_budget ? SearchStatus::inconclusive : SearchStatus::found;
    Retraction witness = normalize_to_retraction(x, rho);
    out.core_vertices = witness.image();
    out.core = induced_subgraph(x, out.core_vertices);
    out.witness = std::move(witness);
    return out;
}

std::optional<bool> is_core(const Graph& x, Budget* budget) {
    Budget local;
    Budget& b = local_or(budget, local);
    const int n = x.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        HomResult hr = find_homomorphism(x, induced_subgraph(x, rest), &b);
        if (hr.status == SearchStatus::inconclusive) return std::nullopt;
        if (hr.status == SearchStatus::found) return false;
    }
    return true;
}

std::optional<bool> homomorphically_equivalent(const Graph& x, const Graph& y,
                                               Budget* budget) {
    Budget local;
    Budget& b = local_or(budget, local);
    HomResult xy = find_homomorphism(x, y, &b);
    if (xy.status == SearchStatus::inconclusive) return std::nullopt;
    if (xy.status == SearchStatus::none) return false;
    HomResult yx = find_homomorphism(y, x, &b);
    if (yx.status == SearchStatus::inconclusive) return std::nullopt;
    return yx.status == SearchStatus::found;
}

IsoResult find_isomorphism(const Graph& a, const Graph& b, Budget* budget) {
    Budget local;
    Budget& bud = local_or(budget, local);
    const std::uint64_t before = bud.used;
    IsoResult out{SearchStatus::none, std::nullopt, 0};
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return out;

    const int n = a.vertex_count();
    auto nbr_degrees = [](const Graph& g, int v) {
        std::vector<int> ds;
        for (int w : g.neighbors(v)) ds.push_back(g.degree(w));
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    std::vector<std::vector<int>> sig_a(n), sig_b(n);
    for (int v = 0; v < n; ++v) {
        sig_a[v] = nbr_degrees(a, v);
        sig_b[v] = nbr_degrees(b, v);
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return out;
    }

    HomOptions opts;
    opts.injective = true;
    opts.induced = true;
    opts.domain_filter = [&](int v, int w) {
        return a.degree(v) == b.degree(w) && sig_a[v] == sig_b[w];
    };
    std::vector<int> found;
    EnumStats st = enumerate_homomorphisms(
        a, b, opts, bud, [&](std::span<const int> m) {
            found.assign(m.begin(), m.end());
            return false;
        });
    out.nodes = bud.used - before;
    if (st.solutions > 0) {
        out.status = SearchStatus::found;
        out.iso = std::move(found);
    } else if (!st.complete) {
        out.status = SearchStatus::inconclusive;
    }
    return out;
}

std::optional<std::vector<std::vector<int>>> induced_copies(
    const Graph& pattern, const Graph& host, Budget* budget) {
    Budget local;
    Budget& b = local_or(budget, local);
    HomOptions opts;
    opts.injective = true;
    opts.induced = true;
    std::set<std::vector<int>> found;
    EnumStats st = enumerate_homomorphisms(
        pattern, host, opts, b, [&](std::span<const int> m) {
            std::vector<int> verts(m.begin(), m.end());
            std::sort(verts.begin(), verts.end());
            found.insert(std::move(verts));
            return true;
        });
    if (!st.complete) return std::nullopt;
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

FibreReport verify_equal_fibres(const Graph& x, const Homomorphism& h,
                                Budget* budget) {
    if (!(h.source() == x) || !h.is_endomorphism())
        throw std::invalid_argument("expected an endomorphism of x");
    std::vector<int> img = h.image();
    std::optional<bool> core = is_core(induced_subgraph(x, img), budget);
    if (!core.has_value())
        throw std::invalid_argument(
            "budget exhausted while checking that the image is a core");
    if (!*core)
        throw std::invalid_argument("image of the endomorphism is not a core");

    FibreReport report;
    FibrePartition fp = fibres(h);
    for (const auto& [y, fibre] : fp.fibres)
        report.sizes.emplace_back(y, static_cast<int>(fibre.size()));
    report.equal = true;
    for (const auto& [y, size] : report.sizes)
        if (size != report.sizes.front().second) report.equal = false;
    const int n = x.vertex_count();
    const int k = static_cast<int>(img.size());
    report.expected = (k > 0 && n % k == 0) ? n / k : 0;
    return report;
}

}  // namespace vtc
