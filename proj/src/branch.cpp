#include "tametilt/branch.hpp"

#include "tametilt/text.hpp"

#include <algorithm>

namespace tametilt {

std::set<RegPoint> BranchModule::in_tube(const std::string& tube_id) const {
    std::set<RegPoint> out;
    for (const auto& p : summands)
        if (p.qs.tube == tube_id) out.insert(p);
    return out;
}

BranchCheck check_branch_module(const TubeRegistry& reg, const std::set<RegPoint>& s) {
    BranchCheck res;
    auto fail = [&](const char* clause, const std::string& witness) {
        res.ok = false;
        res.failed_clause = clause;
        res.witness = witness;
        return res;
    };

    for (const auto& p : s) {
        if (!p.is_finite()) return fail("branch/not-finite", point_to_text(p));
        const RegPoint q = check_point(reg, p);
        const int r = reg.rank(q.qs.tube);
        if (r < 2 || q.length >= r)
            return fail("branch/length-bound", point_to_text(p));
    }
    for (const auto& a : s)
        for (const auto& b : s) {
            const HomResult e = ext_dim(reg, a, b);
            if (!e.is_dim() || e.dim != 0)
                return fail("branch/not-exceptional",
                            point_to_text(a) + " -> " + point_to_text(b));
        }
    for (const auto& p : s) {
        int count = 0;
        for (const auto& q : s)
            if (in_wing(reg, q, p)) ++count;
        if (count != p.length) return fail("branch/condition-b", point_to_text(p));
    }
    return res;
}

bool is_branch_module(const TubeRegistry& reg, const std::set<RegPoint>& s) {
    return check_branch_module(reg, s).ok;
}

std::vector<std::set<RegPoint>> enumerate_tube_branch_sets(const TubeRegistry& reg,
                                                           const std::string& tube_id) {
    const int r = reg.rank(tube_id);
    std::vector<std::set<RegPoint>> out;
    out.push_back({});
    if (r < 2) return out;

    std::vector<RegPoint> points;
    for (int i = 1; i <= r; ++i)
        for (int l = 1; l < r; ++l)
            points.push_back(RegPoint::finite(QuasiSimpleRef{tube_id, i}, l));

    const size_t n = points.size();
    // Compatibility graph: p and q may coexist iff Ext vanishes both ways.
    std::vector<std::vector<char>> compatible(n, std::vector<char>(n, 0));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            compatible[a][b] = ext_dim(reg, points[a], points[b]).dim == 0 &&
                               ext_dim(reg, points[b], points[a]).dim == 0;

    std::vector<size_t> chosen;
    auto emit = [&]() {
        std::set<RegPoint> cand;
        for (size_t idx : chosen) cand.insert(points[idx]);
        if (is_branch_module(reg, cand)) out.push_back(std::move(cand));
    };
    // Backtracking over Ext-compatible subsets; condition (B) filters at the
    // leaves.
    auto rec = [&](auto&& self, size_t start) -> void {
        for (size_t idx = start; idx < n; ++idx) {
            bool ok = true;
            for (size_t prev : chosen)
                if (!compatible[prev][idx]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(idx);
            emit();
            self(self, idx + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BranchModule> enumerate_branch_modules(const TubeRegistry& reg) {
    std::vector<std::vector<std::set<RegPoint>>> per_tube;
    for (const auto& id : reg.nonhomogeneous_ids())
        per_tube.push_back(enumerate_tube_branch_sets(reg, id));

    std::vector<BranchModule> out;
    std::vector<size_t> pick(per_tube.size(), 0);
    while (true) {
        BranchModule y;
        for (size_t t = 0; t < per_tube.size(); ++t)
            for (const auto& p : per_tube[t][pick[t]]) y.summands.insert(p);
        out.push_back(std::move(y));
        size_t t = 0;
        for (; t < per_tube.size(); ++t) {
            if (++pick[t] < per_tube[t].size()) break;
            pick[t] = 0;
        }
        if (t == per_tube.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet vertices(const TubeRegistry& reg, const BranchModule& y) {
    const BranchCheck chk = check_branch_module(reg, y.summands);
    if (!chk.ok)
        throw DomainError("pair/not-branch",
                          "not a branch module (" + chk.failed_clause + ": " +
                              chk.witness + ")");
    VertexSet vs;
    for (const auto& p : y.summands) {
        bool maximal = true;
        for (const auto& q : y.summands)
            if (q != p && in_wing(reg, p, q)) {
                maximal = false;
                break;
            }
        if (maximal) vs.by_tube[p.qs.tube].push_back(p);
    }
    for (auto& [tube_id, list] : vs.by_tube) {
        std::sort(list.begin(), list.end());
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = a + 1; b < list.size(); ++b) {
                const auto wa = wing(reg, list[a]);
                const auto wb = wing(reg, list[b]);
                for (const auto& p : wa)
                    if (wb.count(p))
                        throw DomainError("branch/wings-not-laminar",
                                          "overlapping vertex wings in tube '" +
                                              tube_id + "'");
            }
    }
    return vs;
}

std::vector<BranchModule> complete_to_branch(const TubeRegistry& reg,
                                             const std::set<RegPoint>& z) {
    for (const auto& p : z) {
        if (!p.is_finite())
            throw DomainError("branch/not-finite", point_to_text(p));
        const RegPoint q = check_point(reg, p);
        const int r = reg.rank(q.qs.tube);
        if (r < 2 || q.length >= r)
            throw DomainError("branch/length-bound", point_to_text(p));
    }
    for (const auto& a : z)
        for (const auto& b : z)
            if (ext_dim(reg, a, b).dim != 0)
                throw DomainError("branch/not-exceptional",
                                  point_to_text(a) + " -> " + point_to_text(b));

    // Per tube: factor sets never couple distinct tubes.
    std::map<std::string, std::set<RegPoint>> z_by_tube;
    for (const auto& p : z) z_by_tube[check_point(reg, p).qs.tube].insert(check_point(reg, p));

    auto factor_set = [&](const std::set<RegPoint>& s) {
        std::set<QuasiSimpleRef> out;
        for (const auto& p : s)
            for (const auto& f : comp_factors(reg, p)) out.insert(f);
        return out;
    };

    std::vector<std::vector<std::set<RegPoint>>> per_tube;
    for (const auto& [tube_id, zt] : z_by_tube) {
        const auto want = factor_set(zt);
        std::vector<std::set<RegPoint>> options;
        for (const auto& cand : enumerate_tube_branch_sets(reg, tube_id)) {
            if (!std::includes(cand.begin(), cand.end(), zt.begin(), zt.end())) continue;
            if (factor_set(cand) == want) options.push_back(cand);
        }
        if (options.empty())
            throw DomainError("branch/no-completion",
                              "no branch completion in tube '" + tube_id + "'");
        per_tube.push_back(std::move(options));
    }

    std::vector<BranchModule> out;
    std::vector<size_t> pick(per_tube.size(), 0);
    while (true) {
        BranchModule y;
        for (size_t t = 0; t < per_tube.size(); ++t)
            for (const auto& p : per_tube[t][pick[t]]) y.summands.insert(p);
        out.push_back(std::move(y));
        size_t t = 0;
        for (; t < per_tube.size(); ++t) {
            if (++pick[t] < per_tube[t].size()) break;
            pick[t] = 0;
        }
        if (t == per_tube.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<QuasiSimpleRef> reg_comp_factor_set(const TubeRegistry& reg,
                                             const BranchModule& y, bool shifted) {
    std::set<QuasiSimpleRef> out;
    for (const auto& p : y.summands) {
        const RegPoint q = shifted ? tau_inv(reg, p) : check_point(reg, p);
        for (const auto& f : comp_factors(reg, q)) out.insert(f);
    }
    return out;
}

} // namespace tametilt
