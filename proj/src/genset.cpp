#include "alcove/genset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace alcove {

CoverInstance build_cover_instance(const IncidenceStructure& inc)
{
    CoverInstance inst;
    const std::size_t nroots = inc.support.size();
    inst.universe.resize(nroots);
    std::iota(inst.universe.begin(), inst.universe.end(), 0);
    inst.covers = inc.vertex_support;
    validate(inst);
    return inst;
}

CoverInstance build_cover_instance(const HPolytope& P, const dd::Options& options)
{
    return build_cover_instance(incidence(P, options));
}

CoverInstance make_cover_instance(int universe_size, const std::vector<std::vector<int>>& sets)
{
    if (universe_size < 0)
        throw std::invalid_argument("make_cover_instance: negative universe size");
    CoverInstance inst;
    inst.universe.resize(static_cast<std::size_t>(universe_size));
    std::iota(inst.universe.begin(), inst.universe.end(), 0);
    for (const auto& s : sets) {
        Bitset b(static_cast<std::size_t>(universe_size));
        for (int e : s) {
            if (e < 0 || e >= universe_size)
                throw std::invalid_argument("make_cover_instance: element out of range");
            b.set(static_cast<std::size_t>(e));
        }
        inst.covers.push_back(std::move(b));
    }
    return inst;
}

void validate(const CoverInstance& inst)
{
    Bitset all(inst.universe.size());
    for (const auto& c : inst.covers) {
        if (c.size() != inst.universe.size())
            throw std::invalid_argument("cover instance: candidate bitset has the wrong size");
        all |= c;
    }
    if (!all.all())
        throw std::invalid_argument("cover instance: element " +
                                    std::to_string((~all).find_first()) + " has no candidate");
}

bool covers_all(const CoverInstance& inst, const std::vector<int>& chosen)
{
    Bitset covered(inst.universe.size());
    for (int c : chosen)
        covered |= inst.covers.at(static_cast<std::size_t>(c));
    return covered.all();
}

CoverSolution greedy_cover(const CoverInstance& inst)
{
    validate(inst);
    CoverSolution sol;
    Bitset uncovered(inst.universe.size());
    uncovered.set();
    while (uncovered.any()) {
        int best = -1;
        std::size_t best_gain = 0;
        for (int c = 0; c < inst.candidate_count(); ++c) {
            const std::size_t gain = (inst.covers[static_cast<std::size_t>(c)] & uncovered).count();
            if (gain > best_gain) {
                best = c;
                best_gain = gain;
            }
        }
        sol.chosen.push_back(best);
        uncovered -= inst.covers[static_cast<std::size_t>(best)];
    }
    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.lower_bound = cover_lower_bound(inst);
    sol.optimal = sol.size() == sol.lower_bound;
    return sol;
}

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

class Search {
public:
    explicit Search(const CoverInstance& inst) : inst_(inst)
    {
        const std::size_t nu = inst.universe.size();
        const std::size_t nc = inst.covers.size();
        element_candidates_.assign(nu, Bitset(nc));
        for (std::size_t c = 0; c < nc; ++c)
            for (auto e = inst.covers[c].find_first(); e != Bitset::npos; e = inst.covers[c].find_next(e))
                element_candidates_[e].set(c);

        // Drop candidates whose coverage is contained in another's (equal sets keep the lowest id).
        active_ = Bitset(nc);
        active_.set();
        for (std::size_t c = 0; c < nc; ++c) {
            for (std::size_t d = 0; d < nc; ++d) {
                if (c == d || !active_.test(d))
                    continue;
                const Bitset& C = inst.covers[c];
                const Bitset& D = inst.covers[d];
                if (C.is_subset_of(D) && (C != D || d < c)) {
                    active_.reset(c);
                    break;
                }
            }
        }
    }

    const Bitset& active() const { return active_; }

    int bound(const Bitset& uncovered, const Bitset& allowed) const
    {
        const std::size_t need = uncovered.count();
        if (need == 0)
            return 0;

        std::vector<std::size_t> gains;
        for (auto c = allowed.find_first(); c != Bitset::npos; c = allowed.find_next(c)) {
            const std::size_t g = (inst_.covers[c] & uncovered).count();
            if (g > 0)
                gains.push_back(g);
        }
        std::sort(gains.begin(), gains.end(), std::greater<>());
        int counting = kInfeasible;
        std::size_t sum = 0;
        for (std::size_t k = 0; k < gains.size(); ++k) {
            sum += gains[k];
            if (sum >= need) {
                counting = static_cast<int>(k + 1);
                break;
            }
        }
        if (counting == kInfeasible)
            return kInfeasible;

        // Elements with pairwise disjoint candidate sets each need their own candidate.
        std::vector<std::pair<std::size_t, std::size_t>> order;
        for (auto e = uncovered.find_first(); e != Bitset::npos; e = uncovered.find_next(e)) {
            const std::size_t k = (element_candidates_[e] & allowed).count();
            if (k == 0)
                return kInfeasible;
            order.emplace_back(k, e);
        }
        std::sort(order.begin(), order.end());
        Bitset used(inst_.covers.size());
        int disjoint = 0;
        for (const auto& [k, e] : order) {
            Bitset cands = element_candidates_[e] & allowed;
            if (cands.intersects(used))
                continue;
            used |= cands;
            ++disjoint;
        }
        return std::max(counting, disjoint);
    }

    /// Searches for covers with fewer than limit candidates.
    void run(int limit, std::optional<std::uint64_t> budget)
    {
        limit_ = limit;
        budget_ = budget;
        Bitset uncovered(inst_.universe.size());
        uncovered.set();
        std::vector<int> chosen;
        dfs(uncovered, active_, chosen);
    }

    std::optional<std::vector<int>> best;
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    void dfs(const Bitset& uncovered, Bitset allowed, std::vector<int>& chosen)
    {
        if (budget_ && nodes >= *budget_) {
            aborted = true;
            return;
        }
        ++nodes;
        if (uncovered.none()) {
            if (static_cast<int>(chosen.size()) < limit_) {
                best = chosen;
                std::sort(best->begin(), best->end());
                limit_ = static_cast<int>(chosen.size());
            }
            return;
        }
        if (static_cast<int>(chosen.size()) + bound(uncovered, allowed) >= limit_)
            return;

        std::size_t pick = Bitset::npos;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (auto e = uncovered.find_first(); e != Bitset::npos; e = uncovered.find_next(e)) {
            const std::size_t k = (element_candidates_[e] & allowed).count();
            if (k < fewest) {
                fewest = k;
                pick = e;
            }
        }

        std::vector<std::pair<std::size_t, std::size_t>> branches;
        const Bitset cands = element_candidates_[pick] & allowed;
        for (auto c = cands.find_first(); c != Bitset::npos; c = cands.find_next(c))
            branches.emplace_back((inst_.covers[c] & uncovered).count(), c);
        std::stable_sort(branches.begin(), branches.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        for (const auto& [gain, c] : branches) {
            if (static_cast<int>(chosen.size()) + 1 >= limit_)
                return;
            chosen.push_back(static_cast<int>(c));
            dfs(uncovered - inst_.covers[c], allowed, chosen);
            chosen.pop_back();
            if (aborted)
                return;
            allowed.reset(c);
        }
    }

    const CoverInstance& inst_;
    std::vector<Bitset> element_candidates_;
    Bitset active_;
    int limit_ = 0;
    std::optional<std::uint64_t> budget_;
};

void require_budget(const CoverInstance& inst, const std::optional<std::uint64_t>& budget)
{
    if (!budget && inst.candidate_count() > kUnbudgetedCandidateLimit)
        throw std::invalid_argument("min_cover: a node budget is required above " +
                                    std::to_string(kUnbudgetedCandidateLimit) + " candidates");
}

} // namespace

int cover_lower_bound(const CoverInstance& inst)
{
    validate(inst);
    Search s(inst);
    Bitset uncovered(inst.universe.size());
    uncovered.set();
    Bitset all(inst.covers.size());
    all.set();
    return s.bound(uncovered, all);
}

CoverSolution min_cover(const CoverInstance& inst, std::optional<std::uint64_t> node_budget)
{
    validate(inst);
    require_budget(inst, node_budget);
    CoverSolution sol = greedy_cover(inst);
    if (sol.size() == sol.lower_bound) {
        sol.optimal = true;
        return sol;
    }
    Search s(inst);
    s.run(sol.size(), node_budget);
    if (s.best)
        sol.chosen = *s.best;
    sol.nodes = s.nodes;
    sol.optimal = !s.aborted;
    return sol;
}

SizedSearch find_cover_of_size(const CoverInstance& inst, int k, std::optional<std::uint64_t> node_budget)
{
    validate(inst);
    require_budget(inst, node_budget);
    SizedSearch out;
    if (k < 0)
        return out;
    Search s(inst);
    s.run(k + 1, node_budget);
    out.cover = s.best;
    out.exhausted = !s.aborted;
    return out;
}

} // namespace alcove
