#include "tametilt/classify.hpp"

#include "tametilt/text.hpp"

#include <algorithm>

namespace tametilt {

namespace {

std::set<int> factor_indices_in_tube(const TubeRegistry& reg, const BranchModule& y,
                                     const std::string& tube_id) {
    std::set<int> out;
    for (const auto& p : y.in_tube(tube_id))
        for (const auto& f : comp_factors(reg, p)) out.insert(f.index);
    return out;
}

} // namespace

TiltingDescriptor descriptor_from_pair(const TubeRegistry& reg, const BranchModule& y,
                                       const LambdaSet& l_in) {
    const LambdaSet l = validate_lambda(reg, l_in);
    const BranchCheck chk = check_branch_module(reg, y.summands);
    if (!chk.ok)
        throw DomainError("pair/not-branch",
                          "not a branch module (" + chk.failed_clause + ": " +
                              chk.witness + ")");

    TiltingDescriptor d;
    d.reg = reg;
    d.branch = y;
    d.lambda = l;

    for (const auto& tube_id : reg.named_tube_ids()) {
        const int r = reg.rank(tube_id);
        const std::set<int> factors = factor_indices_in_tube(reg, y, tube_id);
        TubeAddT slice;
        slice.finite = y.in_tube(tube_id);
        if (lambda_contains(l, tube_id)) {
            // u picks up the factors of tau_inv(Y); the complement carries
            // the Pruefer summands.
            for (int i : factors)
                d.u_set.members.insert(QuasiSimpleRef{tube_id, norm_index(i + 1, r)});
            for (int i = 1; i <= r; ++i) {
                d.v_set.members.insert(QuasiSimpleRef{tube_id, i});
                if (!factors.count(norm_index(i - 1, r))) {
                    d.r_set.members.insert(QuasiSimpleRef{tube_id, i});
                    slice.pruefer.insert(i);
                }
            }
        } else {
            for (int i : factors) {
                d.u_set.members.insert(QuasiSimpleRef{tube_id, i});
                d.v_set.members.insert(QuasiSimpleRef{tube_id, i});
            }
        }
        d.torsion.emplace(tube_id, std::move(slice));
    }
    if (l.include_unnamed_rest) {
        d.v_set.all_unnamed_homogeneous = true;
        d.r_set.all_unnamed_homogeneous = true;
        d.rest_pruefer = true;
    }
    d.label.kind = lambda_is_empty(l) ? TorsionFreeLabel::Kind::LukasOver
                                      : TorsionFreeLabel::Kind::ProjGenOver;
    d.label.locset = lambda_is_empty(l) ? d.u_set : d.v_set;
    d.generic_in_add = lambda_is_all(reg, l);
    return d;
}

bool equivalent(const TiltingDescriptor& a, const TiltingDescriptor& b) {
    if (!(a.reg == b.reg))
        throw DomainError("classify/registry-mismatch",
                          "descriptors live over different registries");
    return a.branch == b.branch && a.lambda == b.lambda;
}

DecomposeReport decompose(const TiltingDescriptor& d) {
    DecomposeReport rep;
    rep.label = d.label;
    for (const auto& tube_id : d.reg.named_tube_ids()) {
        const int r = d.reg.rank(tube_id);
        const TubeAddT& slice = d.torsion.at(tube_id);
        TubeDecomposition td;
        td.finite_count = static_cast<int>(slice.finite.size());
        td.pruefer_count = static_cast<int>(slice.pruefer.size());
        if (lambda_contains(d.lambda, tube_id)) {
            td.tag = TubeDecomposition::Case::Ray;
        } else if (!slice.finite.empty()) {
            td.tag = TubeDecomposition::Case::Branch;
            const auto factors = factor_indices_in_tube(d.reg, d.branch, tube_id);
            td.adic_count = r - static_cast<int>(factors.size());
        } else {
            td.tag = TubeDecomposition::Case::Empty;
            td.adic_count = r;
        }
        rep.tubes.emplace(tube_id, td);
    }
    rep.rest_case = d.lambda.include_unnamed_rest ? TubeDecomposition::Case::Ray
                                                  : TubeDecomposition::Case::Empty;
    return rep;
}

CotiltingDescriptor cotilting_dual(const TiltingDescriptor& d) {
    CotiltingDescriptor c;
    for (const auto& tube_id : d.reg.named_tube_ids()) {
        const int r = d.reg.rank(tube_id);
        const TubeAddT& slice = d.torsion.at(tube_id);
        CotiltingDescriptor::TubeSlice out;
        for (const auto& p : slice.finite)
            out.finite.insert(RegPoint::finite(
                QuasiSimpleRef{tube_id, norm_index(p.qs.index + p.length - 1, r)},
                p.length));
        if (lambda_contains(d.lambda, tube_id)) {
            out.adics = slice.pruefer;
        } else {
            const auto factors = factor_indices_in_tube(d.reg, d.branch, tube_id);
            for (int i = 1; i <= r; ++i)
                if (!factors.count(norm_index(i + 1, r))) out.pruefer.insert(i);
        }
        c.tubes.emplace(tube_id, std::move(out));
    }
    c.rest_adic = d.lambda.include_unnamed_rest;
    c.rest_pruefer = d.reg.has_unnamed_homogeneous_rest && !d.lambda.include_unnamed_rest;
    c.has_generic = true;
    return c;
}

namespace {

// Candidate localization sets matching the lambda part: full cliques on
// lambda tubes, arbitrary proper subsets on the tubes touched by the branch
// part, nothing elsewhere.
std::vector<QuasiSimpleSet> localization_candidates(const TiltingDescriptor& d) {
    QuasiSimpleSet base;
    base.all_unnamed_homogeneous = d.lambda.include_unnamed_rest;
    std::vector<std::string> free_tubes;
    for (const auto& tube_id : d.reg.named_tube_ids()) {
        if (lambda_contains(d.lambda, tube_id)) {
            const int r = d.reg.rank(tube_id);
            for (int i = 1; i <= r; ++i)
                base.members.insert(QuasiSimpleRef{tube_id, i});
        } else if (!d.branch.in_tube(tube_id).empty()) {
            free_tubes.push_back(tube_id);
        }
    }
    std::vector<QuasiSimpleSet> cands{base};
    for (const auto& tube_id : free_tubes) {
        const int r = d.reg.rank(tube_id);
        std::vector<QuasiSimpleSet> next;
        for (const auto& c : cands)
            for (int mask = 0; mask < (1 << r) - 1; ++mask) { // proper subsets
                QuasiSimpleSet ext = c;
                for (int i = 0; i < r; ++i)
                    if (mask & (1 << i)) ext.members.insert(QuasiSimpleRef{tube_id, i + 1});
                next.push_back(std::move(ext));
            }
        cands = std::move(next);
    }
    std::sort(cands.begin(), cands.end());
    return cands;
}

} // namespace

DescriptorPredicates predicates(const TiltingDescriptor& d) {
    DescriptorPredicates out;
    out.noetherian_over_endo = lambda_is_empty(d.lambda);
    out.sigma_pure_injective = lambda_is_all(d.reg, d.lambda);
    if (!lambda_is_empty(d.lambda)) {
        for (const auto& cand : localization_candidates(d)) {
            const auto pair = localization_tilting(d.reg, cand);
            if (!pair) continue;
            if (pair->first == d.branch && pair->second == d.lambda) {
                out.localization_form = cand;
                break;
            }
        }
    }
    return out;
}

std::optional<std::pair<BranchModule, LambdaSet>>
summand_realizability(const TubeRegistry& reg, const std::set<QuasiSimpleRef>& delta,
                      const std::set<RegPoint>& z) {
    for (const auto& s : delta) check_qs(reg, s);

    BranchModule zmod;
    zmod.summands = z;
    const auto completions = complete_to_branch(reg, z); // validates z
    const auto forbidden = reg_comp_factor_set(reg, zmod, /*shifted=*/true);
    for (const auto& s : delta)
        if (forbidden.count(check_qs(reg, s))) return std::nullopt;

    LambdaSet l;
    for (const auto& s : delta) l.named.insert(s.tube);
    return std::make_pair(completions.front(), std::move(l));
}

std::vector<std::pair<BranchModule, LambdaSet>>
enumerate_pairs(const TubeRegistry& reg, bool include_rest_variants) {
    const auto ys = enumerate_branch_modules(reg);
    const auto ids = reg.named_tube_ids();
    std::vector<bool> rest_options{false};
    if (include_rest_variants && reg.has_unnamed_homogeneous_rest)
        rest_options.push_back(true);

    std::vector<std::pair<BranchModule, LambdaSet>> out;
    for (const auto& y : ys)
        for (size_t mask = 0; mask < (size_t{1} << ids.size()); ++mask)
            for (bool rest : rest_options) {
                LambdaSet l;
                l.include_unnamed_rest = rest;
                for (size_t i = 0; i < ids.size(); ++i)
                    if (mask & (size_t{1} << i)) l.named.insert(ids[i]);
                out.emplace_back(y, std::move(l));
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tametilt
