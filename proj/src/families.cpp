#include "cdsgame/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdsgame/errors.hpp"
#include "cdsgame/overlap.hpp"

namespace cds {

Graph gen_chain(int m) {
    if (m < 1) throw RangeError("chain index must be >= 1");
    std::vector<int> v;
    for (int i = 1; i <= 2 * m + 1; ++i) v.push_back(i);
    std::vector<std::pair<int, int>> e{{1, 2}, {1, 3}, {2, 3}};
    for (int k = 1; k < m; ++k) {
        e.emplace_back(2 * k + 1, 2 * k + 2);
        e.emplace_back(2 * k + 1, 2 * k + 3);
        e.emplace_back(2 * k + 2, 2 * k + 3);
    }
    return graph_from_ints(v, e);
}

std::vector<Label> gen_favorable(int m) {
    if (m < 1) throw RangeError("chain index must be >= 1");
    std::vector<Label> out{"2"};
    for (int k = 4; k <= 2 * m + 1; k += 4) out.push_back(std::to_string(k));
    return out;
}

Permutation gen_alpha(int n) {
    if (n <= 4 || n % 4 != 0) throw RangeError("alpha_n needs n > 4 with 4 | n, got " + std::to_string(n));
    std::vector<int> e{5};
    for (int j = 3; j <= n / 2 - 1; ++j) {
        e.push_back(2 * j + 1);
        e.push_back(2 * j);
    }
    for (int v : {3, 2, 4, n, 1}) e.push_back(v);
    return Permutation(std::move(e));
}

TightInstance tight_instance(int n) {
    Permutation alpha = gen_alpha(n);
    const int m = (n - 2) / 2;
    const Graph chain = gen_chain(m);
    const Graph overlap = overlap_graph(alpha);
    auto iso = are_isomorphic(chain, overlap);
    if (!iso)
        throw std::runtime_error("construction failure: overlap graph of alpha_" + std::to_string(n) +
                                 " is not isomorphic to the chain of " + std::to_string(m) + " triangles");
    std::set<Pointer> fav;
    for (const auto& a : gen_favorable(m)) fav.insert(Pointer(std::stoi(iso->at(a))));
    return {std::move(alpha), m, std::move(*iso), std::move(fav)};
}

NpStatus expected_np(int m) {
    if (m < 1) throw RangeError("chain index must be >= 1");
    return m % 2 == 1 ? NpStatus::N : NpStatus::P;
}

std::string_view to_string(BoundRule r) {
    switch (r) {
    case BoundRule::EndgameOneLow: return "endgame-1a";
    case BoundRule::EndgameOneHigh: return "endgame-1b";
    case BoundRule::EndgameTwo: return "endgame-2";
    case BoundRule::ProportionOne: return "proportion-1";
    case BoundRule::ProportionTwo: return "proportion-2";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::One: return "ONE";
    case Verdict::Two: return "TWO";
    case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

namespace {

bool is_one_rule(BoundRule r) {
    return r == BoundRule::EndgameOneLow || r == BoundRule::EndgameOneHigh || r == BoundRule::ProportionOne;
}

} // namespace

BoundPrediction bound_prediction(int pile_size, int a_size) {
    if (pile_size < 1) throw ArgumentError("pile size must be >= 1");
    if (a_size < 0 || a_size > pile_size) throw ArgumentError("favourable size must lie in 0..pile size");
    const int j = pile_size % 4;
    const int quarter_block = 3 * (pile_size - j) / 4; // pile_size - j is a multiple of 4

    BoundPrediction out;
    if (j < 2 && a_size >= quarter_block + j) out.fired.push_back(BoundRule::EndgameOneLow);
    if (j >= 2 && a_size >= quarter_block + (j - 1)) out.fired.push_back(BoundRule::EndgameOneHigh);
    if (pile_size - a_size >= quarter_block + j) out.fired.push_back(BoundRule::EndgameTwo);
    if (4 * a_size >= 3 * pile_size) out.fired.push_back(BoundRule::ProportionOne);
    if (4 * a_size <= std::max(pile_size - 8, 0)) out.fired.push_back(BoundRule::ProportionTwo);

    bool one = false, two = false;
    for (auto r : out.fired) (is_one_rule(r) ? one : two) = true;
    if (one && two) throw std::logic_error("bound rules disagree at |P|=" + std::to_string(pile_size) +
                                           ", |A|=" + std::to_string(a_size));
    out.verdict = one ? Verdict::One : two ? Verdict::Two : Verdict::Undetermined;
    return out;
}

BoundAudit audit_bound_rules(int max_pile) {
    BoundAudit audit;
    for (int p = 1; p <= max_pile; ++p) {
        for (int a = 0; a <= p; ++a) {
            ++audit.pairs_checked;
            BoundPrediction pred;
            try {
                pred = bound_prediction(p, a);
            } catch (const std::logic_error&) {
                audit.contradictions.emplace_back(p, a);
                continue;
            }
            auto has = [&](BoundRule r) {
                return std::find(pred.fired.begin(), pred.fired.end(), r) != pred.fired.end();
            };
            const bool endgame_one = has(BoundRule::EndgameOneLow) || has(BoundRule::EndgameOneHigh);
            if ((has(BoundRule::ProportionOne) && !endgame_one) ||
                (has(BoundRule::ProportionTwo) && !has(BoundRule::EndgameTwo)))
                audit.refinement_gaps.emplace_back(p, a);
        }
    }
    return audit;
}

} // namespace cds
