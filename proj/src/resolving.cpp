#include "tametilt/resolving.hpp"

#include "tametilt/text.hpp"

#include <algorithm>

// Extension closure inside a tube reduces to one rule on top of submodule
// closure: whenever X and Y are in the filter and the socle of Y continues
// the top of X (socle(Y) = tau_inv(top(X))), the stacked point of length
// len(X)+len(Y) must be in the filter too. Every middle term of an extension
// between filter members decomposes as such a stack of a submodule of X with
// Y, plus a submodule of Y, so the rule is equivalent to full closure.

namespace tametilt {

bool filter_contains(const ResolvingFilter& f, const RegPoint& p) {
    auto it = f.tubes.find(p.qs.tube);
    if (it == f.tubes.end()) return false;
    if (it->second.rays.count(p.qs.index)) return true;
    return it->second.region.count(p) != 0;
}

ResolvingFilter validate_filter(const TubeRegistry& reg, ResolvingFilter f) {
    if (f.rest_rays && !reg.has_unnamed_homogeneous_rest)
        throw DomainError("filter/rest-mismatch",
                          "registry has no unnamed homogeneous rest");

    ResolvingFilter out;
    out.rest_rays = f.rest_rays;
    for (auto& [tube_id, slice] : f.tubes) {
        const int r = reg.rank(tube_id); // throws on unknown tube
        TubeFilter norm;
        for (int i : slice.rays) norm.rays.insert(norm_index(i, r));
        for (const auto& p : slice.region) {
            if (!p.is_finite() || p.qs.tube != tube_id)
                throw DomainError("filter/bad-region",
                                  "region entries must be finite points of tube '" +
                                      tube_id + "'");
            RegPoint q = check_point(reg, p);
            if (q.length >= 2 * r)
                throw DomainError("filter/region-length",
                                  "region entry " + point_to_text(q) +
                                      " exceeds the 2*rank normal form bound");
            if (r == 1 && !norm.rays.count(q.qs.index))
                throw DomainError("filter/homogeneous-region",
                                  "homogeneous tubes carry ray-or-nothing filters");
            if (!norm.rays.count(q.qs.index)) norm.region.insert(q);
        }
        if (norm.rays.empty() && norm.region.empty()) continue;
        out.tubes.emplace(tube_id, std::move(norm));
    }

    for (const auto& [tube_id, slice] : out.tubes) {
        const int r = reg.rank(tube_id);
        for (const auto& p : slice.region) {
            if (p.length > 1) {
                const RegPoint sub = RegPoint::finite(p.qs, p.length - 1);
                if (!slice.region.count(sub))
                    throw DomainError("filter/submodule-closure",
                                      "missing submodule " + point_to_text(sub) +
                                          " of " + point_to_text(p));
            }
            const int next = norm_index(p.qs.index + p.length, r);
            if (slice.rays.count(next))
                throw DomainError("filter/extension-closure",
                                  "stacking " + point_to_text(p) +
                                      " against the ray at index " +
                                      std::to_string(next) +
                                      " forces the full ray at index " +
                                      std::to_string(p.qs.index));
            for (const auto& q : slice.region) {
                if (q.qs.index != next) continue;
                const RegPoint stack = RegPoint::finite(p.qs, p.length + q.length);
                if (!slice.region.count(stack))
                    throw DomainError("filter/extension-closure",
                                      "extension of " + point_to_text(q) + " by " +
                                          point_to_text(p) + " needs " +
                                          point_to_text(stack));
            }
        }
    }
    return out;
}

namespace {

// True when the point lies in the filter slice, with rays instantiated to
// arbitrary length.
bool slice_contains(const TubeFilter& slice, const RegPoint& p) {
    return slice.rays.count(p.qs.index) != 0 || slice.region.count(p) != 0;
}

// Add T members inside the wing with the given vertex, assuming the vertex
// is one. Recursion: scan the proper coray of the vertex top for the longest
// filter member; it splits the wing into a coray branch and a ray branch.
void addt_in_wing(const TubeRegistry& reg, const std::string& tube_id,
                  const TubeFilter& slice, int vertex_index, int m,
                  std::set<RegPoint>& out) {
    if (m <= 0) return;
    const int r = reg.rank(tube_id);
    out.insert(RegPoint::finite(QuasiSimpleRef{tube_id, vertex_index}, m));
    int split = m;
    for (int i = 1; i < m; ++i) {
        const RegPoint probe =
            RegPoint::finite(QuasiSimpleRef{tube_id, norm_index(vertex_index + i, r)}, m - i);
        if (slice_contains(slice, probe)) {
            split = i;
            break;
        }
    }
    if (split < m)
        addt_in_wing(reg, tube_id, slice, norm_index(vertex_index + split, r), m - split, out);
    addt_in_wing(reg, tube_id, slice, vertex_index, split - 1, out);
}

TubeAddT addt_for_tube(const TubeRegistry& reg, const std::string& tube_id,
                       const TubeFilter& slice) {
    const int r = reg.rank(tube_id);
    TubeAddT out;

    if (static_cast<int>(slice.rays.size()) == r) {
        out.pruefer = slice.rays;
        return out;
    }
    if (slice.rays.empty() && slice.region.empty()) {
        for (int i = 1; i <= r; ++i) out.adics.insert(i);
        return out;
    }

    if (slice.rays.empty()) {
        // Vertices are the wing-maximal ray maxima of the region.
        std::map<int, int> ray_max;
        for (const auto& p : slice.region)
            ray_max[p.qs.index] = std::max(ray_max[p.qs.index], p.length);
        std::vector<RegPoint> maxima;
        for (const auto& [i, len] : ray_max)
            maxima.push_back(RegPoint::finite(QuasiSimpleRef{tube_id, i}, len));
        std::set<int> wing_qs;
        for (const auto& v : maxima) {
            bool maximal = true;
            for (const auto& w : maxima)
                if (w != v && in_wing(reg, v, w)) {
                    maximal = false;
                    break;
                }
            if (!maximal) continue;
            addt_in_wing(reg, tube_id, slice, v.qs.index, v.length, out.finite);
            for (int t = 0; t < v.length; ++t)
                wing_qs.insert(norm_index(v.qs.index + t, r));
        }
        for (int i = 1; i <= r; ++i)
            if (!wing_qs.count(norm_index(i + 1, r))) out.adics.insert(i);
        return out;
    }

    // Some but not all rays: one vertex per gap between consecutive included
    // rays, of length gap-1.
    out.pruefer = slice.rays;
    for (int j : slice.rays) {
        int gap = 1;
        while (!slice.rays.count(norm_index(j + gap, r))) ++gap;
        if (gap >= 2) addt_in_wing(reg, tube_id, slice, j, gap - 1, out.finite);
    }
    return out;
}

} // namespace

AddTProfile addt_from_filter(const TubeRegistry& reg, const ResolvingFilter& f) {
    AddTProfile prof;
    prof.rest_pruefer = f.rest_rays;
    const TubeFilter empty;
    for (const auto& tube_id : reg.named_tube_ids()) {
        auto it = f.tubes.find(tube_id);
        prof.tubes.emplace(tube_id,
                           addt_for_tube(reg, tube_id, it == f.tubes.end() ? empty : it->second));
    }
    return prof;
}

std::pair<BranchModule, LambdaSet> pair_from_resolving(const TubeRegistry& reg,
                                                       const ResolvingFilter& f) {
    const AddTProfile prof = addt_from_filter(reg, f);
    BranchModule y;
    LambdaSet l;
    for (const auto& [tube_id, slice] : prof.tubes)
        for (const auto& p : slice.finite) y.summands.insert(p);
    for (const auto& [tube_id, slice] : f.tubes)
        if (!slice.rays.empty()) l.named.insert(tube_id);
    l.include_unnamed_rest = f.rest_rays;
    return {std::move(y), std::move(l)};
}

namespace {

// Inverse of the wing recursion: the region whose Add T trace inside the
// vertex wing is exactly the given summand set.
void region_for_wing(const TubeRegistry& reg, const std::string& tube_id,
                     const std::set<RegPoint>& summands, int vertex_index, int m,
                     std::set<RegPoint>& region) {
    if (m <= 0) return;
    const int r = reg.rank(tube_id);
    const RegPoint vertex = RegPoint::finite(QuasiSimpleRef{tube_id, vertex_index}, m);
    if (!summands.count(vertex))
        throw DomainError("pair/not-branch", "missing wing vertex " + point_to_text(vertex));
    for (int k = 1; k <= m; ++k)
        region.insert(RegPoint::finite(QuasiSimpleRef{tube_id, vertex_index}, k));

    // Longest proper summand sharing the vertex top fixes the split.
    int split = m;
    for (int i = 1; i < m; ++i) {
        const RegPoint probe =
            RegPoint::finite(QuasiSimpleRef{tube_id, norm_index(vertex_index + i, r)}, m - i);
        if (summands.count(probe)) {
            split = i;
            break;
        }
    }
    std::set<RegPoint> right, left;
    const RegPoint right_vertex =
        RegPoint::finite(QuasiSimpleRef{tube_id, norm_index(vertex_index + split, r)},
                         m - split);
    const RegPoint left_vertex =
        RegPoint::finite(QuasiSimpleRef{tube_id, vertex_index}, split - 1);
    for (const auto& p : summands) {
        if (p == vertex) continue;
        if (split < m && in_wing(reg, p, right_vertex))
            right.insert(p);
        else if (split >= 2 && in_wing(reg, p, left_vertex))
            left.insert(p);
        else
            throw DomainError("pair/not-branch",
                              "summand " + point_to_text(p) +
                                  " escapes the wing decomposition of " +
                                  point_to_text(vertex));
    }
    if (split < m) region_for_wing(reg, tube_id, right, right_vertex.qs.index, m - split, region);
    if (split >= 2) region_for_wing(reg, tube_id, left, vertex_index, split - 1, region);
}

} // namespace

ResolvingFilter resolving_from_pair(const TubeRegistry& reg, const BranchModule& y,
                                    const LambdaSet& l_in) {
    const LambdaSet l = validate_lambda(reg, l_in);
    const VertexSet vs = vertices(reg, y); // validates the branch module

    ResolvingFilter f;
    f.rest_rays = l.include_unnamed_rest;
    for (const auto& tube_id : reg.named_tube_ids()) {
        const int r = reg.rank(tube_id);
        TubeFilter slice;
        auto it = vs.by_tube.find(tube_id);
        std::set<int> factor_indices;
        if (it != vs.by_tube.end()) {
            const auto summands = y.in_tube(tube_id);
            for (const auto& v : it->second) {
                std::set<RegPoint> inside;
                for (const auto& p : summands)
                    if (in_wing(reg, p, v)) inside.insert(p);
                region_for_wing(reg, tube_id, inside, v.qs.index, v.length, slice.region);
                for (int t = 0; t < v.length; ++t)
                    factor_indices.insert(norm_index(v.qs.index + t, r));
            }
        }
        if (lambda_contains(l, tube_id)) {
            // Full rays at every mouth that is not a composition factor of
            // tau_inv of the tube's summands.
            for (int i = 1; i <= r; ++i)
                if (!factor_indices.count(norm_index(i - 1, r))) slice.rays.insert(i);
        }
        if (!slice.rays.empty() || !slice.region.empty())
            f.tubes.emplace(tube_id, std::move(slice));
    }
    return validate_filter(reg, std::move(f));
}

} // namespace tametilt
