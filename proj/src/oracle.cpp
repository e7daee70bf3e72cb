#include "tametilt/oracle.hpp"

#include "tametilt/text.hpp"

#include <algorithm>

namespace tametilt {
namespace oracle {

int brute_hom(const TubeRegistry& reg, const RegPoint& x, const RegPoint& y) {
    if (!x.is_finite() || !y.is_finite())
        throw DomainError("oracle/not-finite", "brute_hom handles finite points only");
    const RegPoint a = check_point(reg, x);
    const RegPoint b = check_point(reg, y);
    if (a.qs.tube != b.qs.tube) return 0;
    const int r = reg.rank(a.qs.tube);
    if (a.length > 3 * r || b.length > 3 * r)
        throw DomainError("oracle/length-bound", "brute_hom is capped at length 3*rank");

    // Walk the quotient chain of x (quotient by the socle, step by step) and
    // the submodule chain of y; every coordinate match is one factorization.
    int count = 0;
    RegPoint quot = a;
    while (quot.length >= 1) {
        for (int k = 1; k <= b.length; ++k) {
            const RegPoint sub = RegPoint::finite(b.qs, k);
            if (quot == sub) ++count;
        }
        quot = RegPoint::finite(tau_inv_qs(reg, quot.qs), quot.length - 1);
        if (quot.length == 0) break;
    }
    return count;
}

namespace {

// Filter members of one tube with rays instantiated up to length 2*rank.
std::vector<RegPoint> instantiate_slice(const TubeRegistry& reg, const TubeFilter& slice,
                                        const std::string& tube_id) {
    const int r = reg.rank(tube_id);
    std::vector<RegPoint> out(slice.region.begin(), slice.region.end());
    for (int j : slice.rays)
        for (int n = 1; n <= 2 * r; ++n)
            out.push_back(RegPoint::finite(QuasiSimpleRef{tube_id, j}, n));
    return out;
}

} // namespace

TubeAddT brute_addt(const TubeRegistry& reg, const ResolvingFilter& f,
                    const std::string& tube_id) {
    const int r = reg.rank(tube_id);
    if (r > 6)
        throw DomainError("oracle/rank-bound", "brute_addt is capped at rank 6");
    static const TubeFilter empty;
    auto it = f.tubes.find(tube_id);
    const TubeFilter& slice = it == f.tubes.end() ? empty : it->second;
    const auto members = instantiate_slice(reg, slice, tube_id);

    TubeAddT out;
    for (int i = 1; i <= r; ++i)
        for (int l = 1; l < r; ++l) {
            const RegPoint cand = RegPoint::finite(QuasiSimpleRef{tube_id, i}, l);
            if (!slice.rays.count(i) && !slice.region.count(cand)) continue;
            bool orthogonal = true;
            for (const auto& a : members)
                if (ext_dim(reg, a, cand).dim != 0) {
                    orthogonal = false;
                    break;
                }
            if (orthogonal) out.finite.insert(cand);
        }
    out.pruefer = slice.rays;
    for (int i = 1; i <= r; ++i) {
        const RegPoint adic = RegPoint::adic(QuasiSimpleRef{tube_id, i});
        bool in_class = true;
        for (const auto& a : members)
            if (ext_dim(reg, a, adic).nz) {
                in_class = false;
                break;
            }
        if (in_class) out.adics.insert(i);
    }
    return out;
}

std::vector<TubeFilter> enumerate_tube_filters(const TubeRegistry& reg,
                                               const std::string& tube_id) {
    // A submodule-closed region is determined by its per-mouth maximal
    // lengths, so the candidate space is ray masks times {0..rank-1}^rank.
    // Stack closure on that encoding: whenever index j = i + l sits at
    // distance l <= max_i, a ray at j is forbidden and max_i >= l + max_j.
    const int r = reg.rank(tube_id);
    std::vector<TubeFilter> out;
    for (int ray_mask = 0; ray_mask < (1 << r); ++ray_mask) {
        std::vector<int> maxes(static_cast<size_t>(r), 0);
        auto emit_if_valid = [&]() {
            for (int i = 0; i < r; ++i) {
                if (maxes[i] == 0) continue;
                for (int j = 0; j < r; ++j) {
                    const int dist = ((j - i - 1) % r + r) % r + 1; // in [1, r]
                    if (dist > maxes[i]) continue;
                    if (ray_mask & (1 << j)) return;
                    if (maxes[i] < dist + maxes[j]) return;
                }
            }
            TubeFilter f;
            for (int i = 0; i < r; ++i) {
                if (ray_mask & (1 << i)) f.rays.insert(i + 1);
                for (int l = 1; l <= maxes[i]; ++l)
                    f.region.insert(RegPoint::finite(QuasiSimpleRef{tube_id, i + 1}, l));
            }
            ResolvingFilter whole;
            whole.tubes.emplace(tube_id, f);
            validate_filter(reg, whole); // encoding and checker must agree
            out.push_back(std::move(f));
        };
        auto rec = [&](auto&& self, int i) -> void {
            if (i == r) {
                emit_if_valid();
                return;
            }
            const int cap = (ray_mask & (1 << i)) ? 0 : r - 1;
            for (int m = 0; m <= cap; ++m) {
                maxes[i] = m;
                self(self, i + 1);
            }
            maxes[i] = 0;
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ResolvingFilter> enumerate_filters(const TubeRegistry& reg) {
    std::vector<std::string> ids = reg.named_tube_ids();
    std::vector<std::vector<TubeFilter>> per_tube;
    for (const auto& id : ids) per_tube.push_back(enumerate_tube_filters(reg, id));

    std::vector<bool> rest_options{false};
    if (reg.has_unnamed_homogeneous_rest) rest_options.push_back(true);

    std::vector<ResolvingFilter> out;
    std::vector<size_t> pick(per_tube.size(), 0);
    while (true) {
        for (bool rest : rest_options) {
            ResolvingFilter f;
            f.rest_rays = rest;
            for (size_t t = 0; t < per_tube.size(); ++t) {
                const TubeFilter& slice = per_tube[t][pick[t]];
                if (!slice.rays.empty() || !slice.region.empty())
                    f.tubes.emplace(ids[t], slice);
            }
            out.push_back(std::move(f));
        }
        size_t t = 0;
        for (; t < per_tube.size(); ++t) {
            if (++pick[t] < per_tube[t].size()) break;
            pick[t] = 0;
        }
        if (t == per_tube.size()) break;
    }
    return out;
}

std::vector<std::set<RegPoint>> branch_sets_with_vertex(const TubeRegistry& reg,
                                                        const QuasiSimpleRef& s_in, int m) {
    const QuasiSimpleRef s = check_qs(reg, s_in);
    const int r = reg.rank(s.tube);
    if (m >= r)
        throw DomainError("tube/wing-length", "vertex length must be below rank");
    std::vector<std::set<RegPoint>> out;
    if (m <= 0) {
        out.push_back({});
        return out;
    }
    const RegPoint vertex = RegPoint::finite(s, m);
    for (int split = 1; split <= m; ++split) {
        const auto rights =
            split < m ? branch_sets_with_vertex(
                            reg, QuasiSimpleRef{s.tube, norm_index(s.index + split, r)},
                            m - split)
                      : std::vector<std::set<RegPoint>>{{}};
        const auto lefts = split >= 2
                               ? branch_sets_with_vertex(reg, s, split - 1)
                               : std::vector<std::set<RegPoint>>{{}};
        for (const auto& right : rights)
            for (const auto& left : lefts) {
                std::set<RegPoint> cfg{vertex};
                cfg.insert(right.begin(), right.end());
                cfg.insert(left.begin(), left.end());
                out.push_back(std::move(cfg));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// ---- suite plumbing ----------------------------------------------------

struct CheckRun {
    OracleCheck check;

    void instance() { ++check.instances; }
    void expect(bool ok, const std::string& witness) {
        ++check.instances;
        if (!ok && check.pass) {
            check.pass = false;
            check.witness = witness;
        }
    }
};

CheckRun begin(const std::string& id, const std::string& params) {
    CheckRun run;
    run.check.id = id;
    run.check.params = params;
    return run;
}

std::string point_pair(const TubeRegistry&, const RegPoint& a, const RegPoint& b) {
    return point_to_text(a) + " , " + point_to_text(b);
}

std::string show_set(const std::set<RegPoint>& s) {
    std::string out = "{";
    for (const auto& p : s) out += point_to_text(p) + " ";
    out += "}";
    return out;
}

std::vector<RegPoint> finite_points(const std::string& tube_id, int r, int max_len) {
    std::vector<RegPoint> out;
    for (int i = 1; i <= r; ++i)
        for (int l = 1; l <= max_len; ++l)
            out.push_back(RegPoint::finite(QuasiSimpleRef{tube_id, i}, l));
    return out;
}

// Full subset scan over the tube's short points, the definition-level route.
std::vector<std::set<RegPoint>> branch_sets_by_subset_scan(const TubeRegistry& reg,
                                                           const std::string& tube_id) {
    const int r = reg.rank(tube_id);
    const auto points = finite_points(tube_id, r, r - 1);
    const size_t n = points.size();
    std::vector<std::set<RegPoint>> out;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::set<RegPoint> cand;
        for (size_t k = 0; k < n; ++k)
            if (mask & (size_t{1} << k)) cand.insert(points[k]);
        if (is_branch_module(reg, cand)) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Branch sets of one tube through vertex packings: compatible families of
// cyclic intervals, each filled by the vertex recursion.
std::vector<std::set<RegPoint>> branch_sets_by_packing(const TubeRegistry& reg,
                                                       const std::string& tube_id) {
    const int r = reg.rank(tube_id);
    struct Interval {
        int start, size;
    };
    std::vector<Interval> intervals;
    for (int a = 1; a <= r; ++a)
        for (int m = 1; m < r; ++m) intervals.push_back({a, m});
    auto covers = [&](const Interval& iv) {
        std::set<int> out;
        for (int t = 0; t < iv.size; ++t) out.insert(norm_index(iv.start + t, r));
        return out;
    };
    auto compatible = [&](const Interval& a, const Interval& b) {
        const auto ca = covers(a);
        const auto cb = covers(b);
        for (int i : ca)
            if (cb.count(i)) return false;
        // adjacent wings are excluded as well
        if (cb.count(norm_index(a.start + a.size, r))) return false;
        if (ca.count(norm_index(b.start + b.size, r))) return false;
        return true;
    };

    std::vector<std::set<RegPoint>> out;
    std::vector<Interval> chosen;
    auto emit = [&]() {
        std::vector<std::vector<std::set<RegPoint>>> options;
        for (const auto& iv : chosen)
            options.push_back(
                branch_sets_with_vertex(reg, QuasiSimpleRef{tube_id, iv.start}, iv.size));
        std::vector<size_t> pick(options.size(), 0);
        while (true) {
            std::set<RegPoint> cfg;
            for (size_t t = 0; t < options.size(); ++t)
                cfg.insert(options[t][pick[t]].begin(), options[t][pick[t]].end());
            out.push_back(std::move(cfg));
            size_t t = 0;
            for (; t < options.size(); ++t) {
                if (++pick[t] < options[t].size()) break;
                pick[t] = 0;
            }
            if (t == options.size()) break;
        }
    };
    auto rec = [&](auto&& self, size_t start) -> void {
        emit();
        for (size_t k = start; k < intervals.size(); ++k) {
            bool ok = true;
            for (const auto& prev : chosen)
                if (!compatible(prev, intervals[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(intervals[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

OracleCheck check_hom_oracle(const TubeRegistry& reg, const std::string& tube_id,
                             HomFn hom) {
    if (!hom)
        hom = [](const TubeRegistry& r, const RegPoint& a, const RegPoint& b) {
            return hom_dim(r, a, b);
        };
    const int r = reg.rank(tube_id);
    CheckRun run = begin("tube/hom-oracle", "tube=" + tube_id);
    const auto points = finite_points(tube_id, r, 3 * r);
    for (const auto& a : points)
        for (const auto& b : points) {
            const HomResult h = hom(reg, a, b);
            run.expect(h.is_dim() && h.dim == brute_hom(reg, a, b), point_pair(reg, a, b));
        }
    return run.check;
}

OracleReport verify_suite(const TubeRegistry& reg, const OracleBounds& bounds) {
    if (bounds.rank_max > 6)
        throw DomainError("oracle/rank-bound", "rank_max is capped at 6");
    for (const auto& [id, r] : reg.nonhomogeneous)
        if (r > bounds.rank_max)
            throw DomainError("oracle/rank-bound",
                              "tube '" + id + "' exceeds rank_max");

    OracleReport rep;
    auto add = [&](OracleCheck c) {
        rep.total_instances += c.instances;
        if (!c.pass) ++rep.failed;
        rep.checks.push_back(std::move(c));
    };

    const auto named = reg.named_tube_ids();
    const auto nonhom = reg.nonhomogeneous_ids();

    // --- tube calculus ---
    for (const auto& id : named) {
        add(check_hom_oracle(reg, id));
        const int r = reg.rank(id);
        const auto points = finite_points(id, r, 3 * r);

        CheckRun anchor = begin("tube/hom-anchor", "tube=" + id);
        for (int i = 1; i <= r; ++i)
            for (int n = 1; n <= 3 * r; ++n) {
                const RegPoint u = RegPoint::finite(QuasiSimpleRef{id, i}, 1);
                const RegPoint un = RegPoint::finite(QuasiSimpleRef{id, i}, n);
                anchor.expect(hom_dim(reg, u, un).dim == 1, point_pair(reg, u, un));
            }
        add(anchor.check);

        CheckRun ar = begin("tube/ar-symmetry", "tube=" + id);
        for (const auto& a : points)
            for (const auto& b : points)
                ar.expect(ext_dim(reg, a, b).dim == brute_hom(reg, b, tau(reg, a)),
                          point_pair(reg, a, b));
        add(ar.check);

        CheckRun trt = begin("tube/tau-roundtrip", "tube=" + id);
        for (const auto& a : finite_points(id, r, 2 * r))
            trt.expect(tau_inv(reg, tau(reg, a)) == a, point_to_text(a));
        for (int i = 1; i <= r; ++i) {
            const RegPoint pr = RegPoint::pruefer(QuasiSimpleRef{id, i});
            const RegPoint ad = RegPoint::adic(QuasiSimpleRef{id, i});
            trt.expect(tau_inv(reg, tau(reg, pr)) == pr, point_to_text(pr));
            trt.expect(tau_inv(reg, tau(reg, ad)) == ad, point_to_text(ad));
        }
        add(trt.check);

        CheckRun cf = begin("tube/comp-factors", "tube=" + id);
        for (const auto& a : finite_points(id, r, 2 * r)) {
            const auto fs = comp_factors(reg, a);
            cf.expect(static_cast<int>(fs.size()) == a.length &&
                          fs.front() == socle(reg, a) && fs.back() == top(reg, a),
                      point_to_text(a));
        }
        add(cf.check);

        // ext(S[n], X) stabilizes once n reaches len(X); this is what allows
        // truncating ray instantiation at 2*rank in the filter checks.
        CheckRun per = begin("tube/ext-stability", "tube=" + id);
        for (const auto& b : finite_points(id, r, 2 * r))
            for (int i = 1; i <= r; ++i)
                for (int n = b.length; n <= 3 * r; ++n) {
                    const RegPoint sn = RegPoint::finite(QuasiSimpleRef{id, i}, n);
                    const RegPoint base = RegPoint::finite(QuasiSimpleRef{id, i}, b.length);
                    per.expect(ext_dim(reg, sn, b) == ext_dim(reg, base, b),
                               point_pair(reg, sn, b));
                }
        add(per.check);
    }

    // --- branch modules (per non-homogeneous tube) ---
    for (const auto& id : nonhom) {
        const int r = reg.rank(id);
        const auto by_scan = branch_sets_by_subset_scan(reg, id);
        const auto by_packing = branch_sets_by_packing(reg, id);
        const auto by_library = enumerate_tube_branch_sets(reg, id);

        CheckRun complete = begin("branch/enumeration-complete", "tube=" + id);
        complete.expect(by_scan == by_library, "subset scan vs library");
        complete.expect(by_scan == by_packing, "subset scan vs vertex packing");
        add(complete.check);

        CheckRun counts = begin("branch/per-tube-count", "tube=" + id);
        for (const auto& s : by_library) {
            BranchModule y;
            y.summands = s;
            if (!is_branch_module(reg, s)) continue;
            const auto vs = vertices(reg, y);
            int wing_qs = 0;
            if (auto it = vs.by_tube.find(id); it != vs.by_tube.end())
                for (const auto& v : it->second) wing_qs += v.length;
            counts.expect(static_cast<int>(s.size()) <= r - 1 &&
                              static_cast<int>(s.size()) == wing_qs,
                          show_set(s));
        }
        add(counts.check);

        CheckRun laminar = begin("branch/laminar-wings", "tube=" + id);
        for (const auto& s : by_library)
            for (const auto& a : s)
                for (const auto& b : s) {
                    if (a == b) continue;
                    const auto wa = wing(reg, a);
                    const auto wb = wing(reg, b);
                    const bool a_in_b = std::includes(wb.begin(), wb.end(), wa.begin(), wa.end());
                    const bool b_in_a = std::includes(wa.begin(), wa.end(), wb.begin(), wb.end());
                    bool disjoint = true;
                    for (const auto& p : wa)
                        if (wb.count(p)) disjoint = false;
                    laminar.expect(a_in_b || b_in_a || disjoint, point_pair(reg, a, b));
                }
        add(laminar.check);

        CheckRun exts = begin("branch/exceptional-pairs", "tube=" + id);
        for (const auto& s : by_library)
            for (const auto& a : s)
                for (const auto& b : s)
                    exts.expect(ext_dim(reg, a, b).dim == 0, point_pair(reg, a, b));
        add(exts.check);

        CheckRun catalan = begin("branch/vertex-counts", "tube=" + id);
        for (int m = 1; m < r; ++m) {
            const auto configs =
                branch_sets_with_vertex(reg, QuasiSimpleRef{id, 1}, m);
            const RegPoint vertex = RegPoint::finite(QuasiSimpleRef{id, 1}, m);
            long from_library = 0;
            for (const auto& s : by_library) {
                BranchModule y;
                y.summands = s;
                if (!s.count(vertex)) continue;
                const auto vs = vertices(reg, y);
                auto it = vs.by_tube.find(id);
                if (it != vs.by_tube.end() &&
                    it->second == std::vector<RegPoint>{vertex} &&
                    s.size() == static_cast<size_t>(m))
                    ++from_library;
            }
            catalan.expect(from_library == static_cast<long>(configs.size()),
                           "m=" + std::to_string(m));
        }
        add(catalan.check);
    }

    // --- resolving filters ---
    {
        // Completeness of the fast filter enumerator against a raw subset
        // scan driven by validate_filter alone (ranks <= 4).
        CheckRun scan = begin("resolving/filter-enumeration", "registry");
        for (const auto& id : nonhom) {
            const int r = reg.rank(id);
            if (r > 4) continue;
            std::set<TubeFilter> accepted;
            std::vector<RegPoint> points;
            for (int i = 1; i <= r; ++i)
                for (int l = 1; l < r; ++l)
                    points.push_back(RegPoint::finite(QuasiSimpleRef{id, i}, l));
            const size_t n = points.size();
            for (int ray_mask = 0; ray_mask < (1 << r); ++ray_mask)
                for (size_t region_mask = 0; region_mask < (size_t{1} << n);
                     ++region_mask) {
                    scan.instance();
                    TubeFilter cand;
                    for (int i = 0; i < r; ++i)
                        if (ray_mask & (1 << i)) cand.rays.insert(i + 1);
                    for (size_t k = 0; k < n; ++k)
                        if (region_mask & (size_t{1} << k)) cand.region.insert(points[k]);
                    ResolvingFilter f;
                    f.tubes.emplace(id, std::move(cand));
                    try {
                        const ResolvingFilter ok = validate_filter(reg, f);
                        auto it = ok.tubes.find(id);
                        accepted.insert(it == ok.tubes.end() ? TubeFilter{}
                                                             : it->second);
                    } catch (const DomainError&) {
                    }
                }
            const auto fast = enumerate_tube_filters(reg, id);
            scan.expect(accepted == std::set<TubeFilter>(fast.begin(), fast.end()),
                        "tube=" + id);
        }
        add(scan.check);
    }
    const auto filters = enumerate_filters(reg);
    {
        CheckRun eq = begin("resolving/addt-oracle", "registry");
        CheckRun bounds_chk = begin("resolving/summand-bounds", "registry");
        CheckRun clique = begin("resolving/no-full-clique", "registry");
        CheckRun old2 = begin("resolving/ray-exclusion", "registry");
        for (const auto& f : filters) {
            const AddTProfile prof = addt_from_filter(reg, f);
            for (const auto& id : named) {
                const int r = reg.rank(id);
                const TubeAddT& got = prof.tubes.at(id);
                eq.expect(got == brute_addt(reg, f, id), "tube=" + id);

                bounds_chk.expect(static_cast<int>(got.finite.size()) <= r - 1 ||
                                      (r == 1 && got.finite.empty()),
                                  "tube=" + id);
                if (!got.pruefer.empty())
                    bounds_chk.expect(static_cast<int>(got.finite.size() +
                                                       got.pruefer.size()) == r,
                                      "tube=" + id);

                std::set<int> wing_qs;
                for (const auto& p : got.finite)
                    for (const auto& fq : comp_factors(reg, p)) wing_qs.insert(fq.index);
                if (!got.finite.empty())
                    clique.expect(static_cast<int>(wing_qs.size()) < r, "tube=" + id);

                for (const auto& p : got.finite)
                    for (int t = 0; t < p.length; ++t) {
                        const RegPoint excl = RegPoint::finite(
                            QuasiSimpleRef{id, norm_index(p.qs.index + 1 + t, r)},
                            p.length - t);
                        old2.expect(!filter_contains(f, excl),
                                    point_pair(reg, p, excl));
                    }
            }
        }
        add(eq.check);
        add(bounds_chk.check);
        add(clique.check);
        add(old2.check);
    }
    {
        CheckRun branch_out = begin("resolving/pair-is-branch", "registry");
        for (const auto& f : filters) {
            const auto [y, l] = pair_from_resolving(reg, f);
            branch_out.expect(is_branch_module(reg, y.summands), show_set(y.summands));
        }
        add(branch_out.check);
    }

    // --- pair round trip and classification ---
    const auto pairs = enumerate_pairs(reg, /*include_rest_variants=*/true);
    {
        CheckRun rt = begin("resolving/round-trip", "registry");
        CheckRun torsion = begin("classify/torsion-consistency", "registry");
        CheckRun class_count = begin("classify/per-tube-classes", "registry");
        CheckRun corank = begin("classify/cotilting-rank", "registry");
        for (const auto& [y, l] : pairs) {
            const ResolvingFilter f = resolving_from_pair(reg, y, l);
            const auto back = pair_from_resolving(reg, f);
            rt.expect(back.first == y && back.second == l, show_set(y.summands));

            const TiltingDescriptor d = descriptor_from_pair(reg, y, l);
            const AddTProfile prof = addt_from_filter(reg, f);
            for (const auto& id : named) {
                const TubeAddT& slice = prof.tubes.at(id);
                const TubeAddT& ts = d.torsion.at(id);
                torsion.expect(ts.finite == slice.finite && ts.pruefer == slice.pruefer,
                               "tube=" + id);
                const int r = reg.rank(id);
                if (lambda_contains(l, id))
                    class_count.expect(static_cast<int>(ts.finite.size() +
                                                        ts.pruefer.size()) == r,
                                       "tube=" + id);
                else if (!ts.finite.empty()) {
                    std::set<int> wing_qs;
                    for (const auto& p : ts.finite)
                        for (const auto& fq : comp_factors(reg, p)) wing_qs.insert(fq.index);
                    class_count.expect(static_cast<int>(ts.finite.size()) ==
                                               static_cast<int>(wing_qs.size()) &&
                                           static_cast<int>(wing_qs.size()) < r,
                                       "tube=" + id);
                }
            }
            const CotiltingDescriptor c = cotilting_dual(d);
            for (const auto& id : named) {
                const auto& slice = c.tubes.at(id);
                const int total = static_cast<int>(slice.finite.size() +
                                                   slice.adics.size() +
                                                   slice.pruefer.size());
                corank.expect(total == reg.rank(id), "tube=" + id);
                // the dual's Pruefer/adic census mirrors the tilting side
                if (lambda_contains(l, id))
                    corank.expect(slice.adics == d.torsion.at(id).pruefer &&
                                      slice.pruefer.empty(),
                                  "dual census tube=" + id);
                else
                    corank.expect(slice.pruefer == prof.tubes.at(id).adics &&
                                      slice.adics.empty(),
                                  "dual census tube=" + id);
            }
        }
        add(rt.check);
        add(torsion.check);
        add(class_count.check);
        add(corank.check);
    }
    {
        CheckRun distinct = begin("classify/equivalence-distinct", "registry");
        std::vector<TiltingDescriptor> ds;
        for (const auto& [y, l] : pairs) ds.push_back(descriptor_from_pair(reg, y, l));
        for (size_t a = 0; a < ds.size(); ++a)
            for (size_t b = a + 1; b < ds.size(); ++b)
                distinct.expect(!equivalent(ds[a], ds[b]),
                                std::to_string(a) + " vs " + std::to_string(b));
        add(distinct.check);

        CheckRun preds = begin("classify/predicates", "registry");
        const bool has_tubes = !named.empty() || reg.has_unnamed_homogeneous_rest;
        for (const auto& d : ds) {
            const DescriptorPredicates p = predicates(d);
            preds.expect(p.noetherian_over_endo == lambda_is_empty(d.lambda), "noetherian");
            preds.expect(p.sigma_pure_injective == lambda_is_all(reg, d.lambda), "sigma-pi");
            if (has_tubes)
                preds.expect(!(p.noetherian_over_endo && p.sigma_pure_injective),
                             "exclusive predicates");
            if (lambda_is_empty(d.lambda))
                preds.expect(!p.localization_form.has_value(), "locform-empty-lambda");
        }
        add(preds.check);
    }

    // --- realizability against brute-force witness search (small ranks) ---
    {
        CheckRun real = begin("classify/realizability", "registry");
        std::vector<QuasiSimpleRef> mouths;
        for (const auto& id : named) {
            const int r = reg.rank(id);
            for (int i = 1; i <= r; ++i) mouths.push_back(QuasiSimpleRef{id, i});
        }
        bool small = mouths.size() <= 6;
        for (const auto& id : nonhom)
            if (reg.rank(id) > 3) small = false;
        if (small) {
            std::vector<RegPoint> pool;
            for (const auto& id : nonhom)
                for (const auto& p : finite_points(id, reg.rank(id), reg.rank(id) - 1))
                    pool.push_back(p);
            const auto ys = enumerate_branch_modules(reg);

            // all exceptional multiplicity-free candidate sets z
            std::vector<std::set<RegPoint>> zs;
            for (size_t zmask = 0; zmask < (size_t{1} << pool.size()); ++zmask) {
                std::set<RegPoint> z;
                for (size_t k = 0; k < pool.size(); ++k)
                    if (zmask & (size_t{1} << k)) z.insert(pool[k]);
                bool exceptional = true;
                for (const auto& a : z)
                    for (const auto& b : z)
                        if (ext_dim(reg, a, b).dim != 0) exceptional = false;
                if (exceptional) zs.push_back(std::move(z));
            }

            for (const auto& z : zs)
                for (size_t dmask = 0; dmask < (size_t{1} << mouths.size()); ++dmask) {
                    std::set<QuasiSimpleRef> delta;
                    for (size_t k = 0; k < mouths.size(); ++k)
                        if (dmask & (size_t{1} << k)) delta.insert(mouths[k]);
                    const auto got = summand_realizability(reg, delta, z);
                    bool brute = false;
                    for (const auto& y : ys) {
                        if (!std::includes(y.summands.begin(), y.summands.end(),
                                           z.begin(), z.end()))
                            continue;
                        const auto forb = reg_comp_factor_set(reg, y, true);
                        bool ok = true;
                        for (const auto& s : delta)
                            if (forb.count(s)) ok = false;
                        if (ok) {
                            brute = true;
                            break;
                        }
                    }
                    real.expect(got.has_value() == brute, show_set(z));
                }
        }
        add(real.check);
    }

    // --- localization ---
    {
        std::vector<QuasiSimpleRef> mouths;
        for (const auto& id : named) {
            const int r = reg.rank(id);
            for (int i = 1; i <= r; ++i) mouths.push_back(QuasiSimpleRef{id, i});
        }
        CheckRun rank_chk = begin("localize/rank-bookkeeping", "registry");
        CheckRun order_chk = begin("localize/tau-order", "registry");
        CheckRun tensor_chk = begin("localize/tensor-survivors", "registry");
        CheckRun comp_chk = begin("localize/composition", "registry");
        CheckRun quot_chk = begin("localize/quotient-branch", "registry");
        CheckRun tilt_chk = begin("localize/tilting-shape", "registry");

        for (size_t mask = 0; mask < (size_t{1} << mouths.size()); ++mask) {
            QuasiSimpleSet u;
            for (size_t k = 0; k < mouths.size(); ++k)
                if (mask & (size_t{1} << k)) u.members.insert(mouths[k]);

            const bool clique_free = !u.contains_complete_clique(reg);
            const LocalizedRegistry loc = localize_registry(reg, u);
            if (clique_free) {
                int old_sum = 0, new_sum = 0;
                for (const auto& id : named) old_sum += reg.rank(id);
                for (const auto& id : loc.result.named_tube_ids())
                    new_sum += loc.result.rank(id);
                rank_chk.expect(new_sum == old_sum - static_cast<int>(u.members.size()),
                                "mask=" + std::to_string(mask));
                rank_chk.expect(!loc.order_flag, "mask=" + std::to_string(mask));

                for (const auto& id : named) {
                    // Survivors listed in old tau_inv order map to consecutive
                    // new indices.
                    const int r = reg.rank(id);
                    const std::set<int> dead = u.indices_in(id);
                    std::vector<int> surv;
                    int start = 1;
                    while (dead.count(start)) ++start; // r > |dead| here
                    for (int t = 0; t < r; ++t) {
                        const int i = norm_index(start + t, r);
                        if (!dead.count(i)) surv.push_back(i);
                    }
                    const int new_rank = loc.result.rank(id);
                    for (size_t k = 0; k < surv.size(); ++k) {
                        const auto& mapped =
                            loc.survivor_map.at(QuasiSimpleRef{id, surv[k]});
                        const auto& mapped_next = loc.survivor_map.at(
                            QuasiSimpleRef{id, surv[(k + 1) % surv.size()]});
                        order_chk.expect(norm_index(mapped.index + 1, new_rank) ==
                                             mapped_next.index,
                                         "tube=" + id);
                    }

                    std::set<int> images;
                    for (int i = 1; i <= r; ++i) {
                        if (dead.count(i)) {
                            tensor_chk.expect(!tensor_qs(reg, QuasiSimpleRef{id, i}, u)
                                                   .has_value(),
                                              "tube=" + id);
                            continue;
                        }
                        const auto t = tensor_qs(reg, QuasiSimpleRef{id, i}, u);
                        tensor_chk.expect(t.has_value() && t->is_finite(), "tube=" + id);
                        images.insert(i);
                    }
                    tensor_chk.expect(static_cast<int>(images.size()) == new_rank,
                                      "tube=" + id);
                }

                // composition over all disjoint splits
                std::vector<QuasiSimpleRef> picked(u.members.begin(), u.members.end());
                for (size_t sub = 0; sub < (size_t{1} << picked.size()); ++sub) {
                    QuasiSimpleSet a;
                    QuasiSimpleSet b_old;
                    for (size_t k = 0; k < picked.size(); ++k)
                        if (sub & (size_t{1} << k))
                            a.members.insert(picked[k]);
                        else
                            b_old.members.insert(picked[k]);
                    const LocalizedRegistry first = localize_registry(reg, a);
                    QuasiSimpleSet b_new;
                    for (const auto& s : b_old.members)
                        b_new.members.insert(first.survivor_map.at(s));
                    const LocalizedRegistry second =
                        localize_registry(first.result, b_new);
                    bool same_maps = second.result == loc.result;
                    for (const auto& [old_qs, direct] : loc.survivor_map) {
                        const auto mid = first.survivor_map.find(old_qs);
                        if (mid == first.survivor_map.end() ||
                            second.survivor_map.at(mid->second) != direct)
                            same_maps = false;
                    }
                    comp_chk.expect(same_maps, "mask=" + std::to_string(mask) +
                                                   " sub=" + std::to_string(sub));
                }
            }

            // quotient decomposition: segment corays, and a branch module
            MultiplicityMap ones;
            const QuotientDecomposition q = quotient_decomposition(reg, u, ones);
            std::set<RegPoint> finite_parts;
            for (const auto& [p, mult] : q.parts) {
                quot_chk.instance();
                if (p.is_finite()) finite_parts.insert(p);
            }
            bool proper_everywhere = true;
            for (const auto& id : named)
                if (u.is_full_clique(reg, id)) proper_everywhere = false;
            if (proper_everywhere)
                quot_chk.expect(is_branch_module(reg, finite_parts), show_set(finite_parts));

            const auto lt = localization_tilting(reg, u);
            if (!u.contains_complete_clique(reg))
                tilt_chk.expect(!lt.has_value(), "mask=" + std::to_string(mask));
            else {
                tilt_chk.expect(lt.has_value() &&
                                    is_branch_module(reg, lt->first.summands),
                                "mask=" + std::to_string(mask));
            }
        }
        add(rank_chk.check);
        add(order_chk.check);
        add(tensor_chk.check);
        add(comp_chk.check);
        add(quot_chk.check);
        add(tilt_chk.check);
    }

    // --- power-set classification over purely homogeneous registries ---
    if (nonhom.empty()) {
        CheckRun ps = begin("classify/kronecker-powerset", "registry");
        const auto named_only = enumerate_pairs(reg, /*include_rest_variants=*/false);
        ps.expect(named_only.size() ==
                      (size_t{1} << reg.homogeneous_named.size()),
                  "count=" + std::to_string(named_only.size()));
        add(ps.check);
    }

    return rep;
}

} // namespace oracle
} // namespace tametilt
