#include "tametilt/localize.hpp"

#include "tametilt/tube.hpp"

#include <algorithm>

namespace tametilt {

std::set<int> QuasiSimpleSet::indices_in(const std::string& tube_id) const {
    std::set<int> out;
    for (const auto& s : members)
        if (s.tube == tube_id) out.insert(s.index);
    return out;
}

bool QuasiSimpleSet::is_full_clique(const TubeRegistry& reg,
                                    const std::string& tube_id) const {
    return static_cast<int>(indices_in(tube_id).size()) == reg.rank(tube_id);
}

bool QuasiSimpleSet::contains_complete_clique(const TubeRegistry& reg) const {
    if (all_unnamed_homogeneous && reg.has_unnamed_homogeneous_rest) return true;
    for (const auto& id : reg.named_tube_ids())
        if (is_full_clique(reg, id)) return true;
    return false;
}

void QuasiSimpleSet::validate(const TubeRegistry& reg) const {
    for (const auto& s : members) {
        const int r = reg.rank(s.tube);
        if (s.index < 1 || s.index > r)
            throw DomainError("qsset/bad-index",
                              "index out of range for tube '" + s.tube + "'");
    }
    if (all_unnamed_homogeneous && !reg.has_unnamed_homogeneous_rest)
        throw DomainError("qsset/rest-mismatch",
                          "registry has no unnamed homogeneous rest");
}

std::optional<RegPoint> tensor_qs(const TubeRegistry& reg, const QuasiSimpleRef& s_in,
                                  const QuasiSimpleSet& y) {
    const QuasiSimpleRef s = check_qs(reg, s_in);
    if (y.contains(s)) return std::nullopt;
    const int r = reg.rank(s.tube);
    int run = 0;
    while (run < r - 1 &&
           y.contains(QuasiSimpleRef{s.tube, norm_index(s.index + run + 1, r)}))
        ++run;
    return RegPoint::finite(s, run + 1);
}

LocalizedRegistry localize_registry(const TubeRegistry& reg, const QuasiSimpleSet& u) {
    u.validate(reg);
    LocalizedRegistry loc;
    loc.base = reg;
    loc.at = u;

    std::vector<std::pair<std::string, int>> new_nonhom;
    std::set<std::string> new_hom = reg.homogeneous_named;

    for (const auto& [tube_id, r] : reg.nonhomogeneous) {
        const std::set<int> dead = u.indices_in(tube_id);
        const int new_rank = r - static_cast<int>(dead.size());
        if (new_rank == 0) {
            loc.order_flag = true;
            continue;
        }
        int next = 1;
        for (int i = 1; i <= r; ++i) {
            if (dead.count(i)) continue;
            loc.survivor_map.emplace(QuasiSimpleRef{tube_id, i},
                                     QuasiSimpleRef{tube_id, next++});
        }
        if (new_rank == 1)
            new_hom.insert(tube_id);
        else
            new_nonhom.emplace_back(tube_id, new_rank);
    }
    for (const auto& tube_id : reg.homogeneous_named) {
        if (u.indices_in(tube_id).count(1)) {
            loc.order_flag = true;
            new_hom.erase(tube_id);
            continue;
        }
        loc.survivor_map.emplace(QuasiSimpleRef{tube_id, 1}, QuasiSimpleRef{tube_id, 1});
    }

    bool new_rest = reg.has_unnamed_homogeneous_rest;
    if (u.all_unnamed_homogeneous && reg.has_unnamed_homogeneous_rest) {
        loc.order_flag = true;
        new_rest = false;
    }
    loc.result = TubeRegistry::custom(std::move(new_nonhom), std::move(new_hom), new_rest);
    return loc;
}

namespace {

// Maximal tau_inv-runs of a proper index subset, as (start, length) pairs in
// increasing start order.
std::vector<std::pair<int, int>> cyclic_segments(const std::set<int>& picked, int r) {
    std::vector<std::pair<int, int>> segments;
    for (int i = 1; i <= r; ++i) {
        if (!picked.count(i)) continue;
        if (picked.count(norm_index(i - 1, r))) continue; // not a run start
        int len = 1;
        while (picked.count(norm_index(i + len, r))) ++len;
        segments.emplace_back(i, len);
    }
    return segments;
}

} // namespace

QuotientDecomposition quotient_decomposition(const TubeRegistry& reg,
                                             const QuasiSimpleSet& u,
                                             const MultiplicityMap& alpha) {
    u.validate(reg);
    alpha.validate(reg);
    QuotientDecomposition out;
    for (const auto& tube_id : reg.named_tube_ids()) {
        const int r = reg.rank(tube_id);
        const std::set<int> picked = u.indices_in(tube_id);
        if (picked.empty()) continue;
        if (static_cast<int>(picked.size()) == r) {
            for (int i : picked) {
                const QuasiSimpleRef s{tube_id, i};
                out.parts[RegPoint::pruefer(s)] += alpha.at(s);
            }
            continue;
        }
        for (const auto& [start, len] : cyclic_segments(picked, r))
            for (int t = 0; t < len; ++t) {
                const QuasiSimpleRef s{tube_id, norm_index(start + t, r)};
                out.parts[RegPoint::finite(s, len - t)] += alpha.at(s);
            }
    }
    out.rest_pruefer_all = u.all_unnamed_homogeneous;
    return out;
}

std::optional<std::pair<BranchModule, LambdaSet>>
localization_tilting(const TubeRegistry& reg, const QuasiSimpleSet& u) {
    u.validate(reg);
    LambdaSet l;
    l.include_unnamed_rest = u.all_unnamed_homogeneous;
    BranchModule y;
    for (const auto& tube_id : reg.named_tube_ids()) {
        const int r = reg.rank(tube_id);
        const std::set<int> picked = u.indices_in(tube_id);
        if (picked.empty()) continue;
        if (static_cast<int>(picked.size()) == r) {
            l.named.insert(tube_id);
            continue;
        }
        for (const auto& [start, len] : cyclic_segments(picked, r))
            for (int t = 0; t < len; ++t)
                y.summands.insert(RegPoint::finite(
                    QuasiSimpleRef{tube_id, norm_index(start + t, r)}, len - t));
    }
    if (lambda_is_empty(l)) return std::nullopt; // R_u is finite dimensional
    return std::make_pair(std::move(y), std::move(l));
}

} // namespace tametilt
