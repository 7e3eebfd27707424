#include "cdsgame/pile.hpp"

#include <string>
#include <unordered_map>

#include "cdsgame/errors.hpp"

namespace cds {

CycleGraph::CycleGraph(const Permutation& perm) : n_(perm.size()), black_(perm.size() + 2, 0) {
    const auto e = perm.entries();
    black_[e[0]] = 0;
    for (int i = 1; i < n_; ++i) black_[e[i]] = e[i - 1];
    black_[n_ + 1] = e[n_ - 1];
}

CycleGraph build_cycle_graph(const Permutation& perm) { return CycleGraph(perm); }

AltCycleDecomposition alternating_cycles(const CycleGraph& cg) {
    const int n = cg.n();
    std::vector<bool> used(n + 1, false);
    AltCycleDecomposition out;
    for (int start = 0; start <= n; ++start) {
        if (used[start]) continue;
        AltCycle cycle;
        int i = start;
        do {
            used[i] = true;
            cycle.dotted.push_back(i);
            i = cg.black_successor(i + 1);
        } while (i != start);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

std::vector<Pointer> strategic_pile(const Permutation& perm) {
    const CycleGraph cg(perm);
    const int n = perm.size();
    std::vector<Pointer> walk;
    int i = cg.black_successor(n + 1);
    while (i != 0 && i != n) {
        walk.emplace_back(i);
        i = cg.black_successor(i + 1);
    }
    if (i == n) return {}; // closed up without meeting 0 -> 1
    return walk;
}

bool is_sortable(const Permutation& perm) { return strategic_pile(perm).empty(); }

namespace {

void check_bound(const Permutation& perm, int max_n) {
    if (perm.size() > max_n)
        throw BoundExceeded("exhaustive search refused: n = " + std::to_string(perm.size()) + " exceeds bound " +
                            std::to_string(max_n));
}

std::string key_of(const Permutation& perm) {
    std::string k;
    for (int v : perm.entries()) k.push_back(static_cast<char>(v));
    return k;
}

// Fixed points reachable from a permutation, memoized over the reachable set.
class ReachSearch {
  public:
    const AchievableFixedPoints& visit(const Permutation& perm) {
        const auto key = key_of(perm);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        AchievableFixedPoints result;
        const auto moves = legal_moves(perm);
        if (moves.empty()) {
            if (auto code = fixed_point_code(perm))
                result.codes.insert(*code);
            else
                result.identity = true;
        }
        for (const auto& m : moves) {
            const auto& child = visit(apply_cds(perm, m));
            result.codes.insert(child.codes.begin(), child.codes.end());
            result.identity = result.identity || child.identity;
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

  private:
    std::unordered_map<std::string, AchievableFixedPoints> memo_;
};

} // namespace

bool sortable_bruteforce(const Permutation& perm, int max_n) {
    check_bound(perm, max_n);
    std::unordered_map<std::string, bool> memo;
    auto reach = [&](auto&& self, const Permutation& p) -> bool {
        const auto key = key_of(p);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool ok = p == Permutation::identity(p.size());
        for (const auto& m : legal_moves(p)) {
            if (ok) break;
            ok = self(self, apply_cds(p, m));
        }
        memo.emplace(key, ok);
        return ok;
    };
    return reach(reach, perm);
}

AchievableFixedPoints achievable_fixed_points(const Permutation& perm, int max_n) {
    check_bound(perm, max_n);
    ReachSearch search;
    return search.visit(perm);
}

} // namespace cds
