#include "vtc/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace vtc {

namespace {

struct CoverSearch {
    int universe;
    const std::vector<std::vector<int>>& sets;
    Budget& budget;
    std::vector<std::vector<int>> containing;  // per element, set indices
    std::vector<char> set_active;
    std::vector<char> covered;
    std::vector<int> chosen;
    std::vector<int> solution;
    bool done = false;
    bool aborted = false;

    CoverSearch(int universe_, const std::vector<std::vector<int>>& sets_,
                Budget& budget_)
        : universe(universe_), sets(sets_), budget(budget_) {
        containing.resize(universe);
        for (std::size_t s = 0; s < sets.size(); ++s)
            for (int e : sets[s]) {
                if (e < 0 || e >= universe)
                    throw std::invalid_argument("set element out of range");
                containing[e].push_back(static_cast<int>(s));
            }
        set_active.assign(sets.size(), 1);
        covered.assign(universe, 0);
    }

    int pick_element() const {
        int best = -1, best_count = -1;
        for (int e = 0; e < universe; ++e) {
            if (covered[e]) continue;
            int count = 0;
            for (int s : containing[e])
                if (set_active[s]) ++count;
            if (best == -1 || count < best_count) {
                best = e;
                best_count = count;
            }
        }
        return best;
    }

    void search() {
        if (done || aborted) return;
        int e = pick_element();
        if (e == -1) {  // everything covered
            solution = chosen;
            done = true;
            return;
        }
        for (int s : containing[e]) {
            if (!set_active[s]) continue;
            if (!budget.spend()) {
                aborted = true;
                return;
            }
            // place set s; deactivate sets clashing with it
            std::vector<int> deactivated;
            for (int el : sets[s]) {
                covered[el] = 1;
                for (int other : containing[el])
                    if (set_active[other]) {
                        set_active[other] = 0;
                        deactivated.push_back(other);
                    }
            }
            chosen.push_back(s);
            search();
            chosen.pop_back();
            for (int el : sets[s]) covered[el] = 0;
            for (int other : deactivated) set_active[other] = 1;
            if (done || aborted) return;
        }
    }
};

}  // namespace

ExactCoverResult exact_cover(int universe,
                             const std::vector<std::vector<int>>& sets,
                             Budget* budget) {
    if (universe < 0) throw std::invalid_argument("universe must be nonnegative");
    Budget local;
    Budget& b = budget ? *budget : local;
    const std::uint64_t before = b.used;
    CoverSearch cs(universe, sets, b);
    cs.search();
    ExactCoverResult out{SearchStatus::none, std::nullopt, b.used - before};
    if (cs.done) {
        std::sort(cs.solution.begin(), cs.solution.end());
        out.status = SearchStatus::found;
        out.cover = std::move(cs.solution);
    } else if (cs.aborted) {
        out.status = SearchStatus::inconclusive;
    }
    return out;
}

}  // namespace vtc
