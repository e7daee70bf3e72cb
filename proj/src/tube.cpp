#include "tametilt/tube.hpp"

#include <algorithm>

// Coordinate conventions. A tube of rank r has mouth positions 1..r with
// tau_inv(i) = i+1 mod r. The ray at S collects the S[m] with fixed socle S;
// the coray at S collects the points with fixed top S. A nonzero map
// S[l] -> Y factors as a ray-quotient followed by a coray-submodule, and the
// Hom dimension over the common endomorphism division ring is the number of
// admissible quotient depths.

namespace tametilt {

int norm_index(int index, int rank) {
    return ((index - 1) % rank + rank) % rank + 1;
}

QuasiSimpleRef check_qs(const TubeRegistry& reg, QuasiSimpleRef s) {
    const int r = reg.rank(s.tube);
    s.index = norm_index(s.index, r);
    return s;
}

RegPoint check_point(const TubeRegistry& reg, RegPoint p) {
    if (p.is_generic()) return p;
    p.qs = check_qs(reg, p.qs);
    if (p.is_finite() && p.length < 1)
        throw DomainError("point/bad-length", "finite point needs length >= 1");
    return p;
}

QuasiSimpleRef tau_qs(const TubeRegistry& reg, const QuasiSimpleRef& s) {
    QuasiSimpleRef t = check_qs(reg, s);
    t.index = norm_index(t.index - 1, reg.rank(t.tube));
    return t;
}

QuasiSimpleRef tau_inv_qs(const TubeRegistry& reg, const QuasiSimpleRef& s) {
    QuasiSimpleRef t = check_qs(reg, s);
    t.index = norm_index(t.index + 1, reg.rank(t.tube));
    return t;
}

RegPoint tau(const TubeRegistry& reg, const RegPoint& p) {
    if (p.is_generic())
        throw DomainError("tube/tau-generic", "the generic point has no translate");
    RegPoint q = check_point(reg, p);
    q.qs = tau_qs(reg, q.qs);
    return q;
}

RegPoint tau_inv(const TubeRegistry& reg, const RegPoint& p) {
    if (p.is_generic())
        throw DomainError("tube/tau-generic", "the generic point has no translate");
    RegPoint q = check_point(reg, p);
    q.qs = tau_inv_qs(reg, q.qs);
    return q;
}

namespace {

void require_finite(const RegPoint& p, const char* op) {
    if (!p.is_finite())
        throw DomainError("point/not-finite", std::string(op) + " needs a finite point");
}

} // namespace

QuasiSimpleRef socle(const TubeRegistry& reg, const RegPoint& p) {
    require_finite(p, "socle");
    return check_point(reg, p).qs;
}

QuasiSimpleRef top(const TubeRegistry& reg, const RegPoint& p) {
    require_finite(p, "top");
    RegPoint q = check_point(reg, p);
    const int r = reg.rank(q.qs.tube);
    return QuasiSimpleRef{q.qs.tube, norm_index(q.qs.index + q.length - 1, r)};
}

std::vector<QuasiSimpleRef> comp_factors(const TubeRegistry& reg, const RegPoint& p) {
    require_finite(p, "comp_factors");
    RegPoint q = check_point(reg, p);
    const int r = reg.rank(q.qs.tube);
    std::vector<QuasiSimpleRef> out;
    out.reserve(static_cast<size_t>(q.length));
    for (int t = 0; t < q.length; ++t)
        out.push_back(QuasiSimpleRef{q.qs.tube, norm_index(q.qs.index + t, r)});
    return out;
}

std::set<RegPoint> wing(const TubeRegistry& reg, const RegPoint& p) {
    require_finite(p, "wing");
    RegPoint v = check_point(reg, p);
    const int r = reg.rank(v.qs.tube);
    if (v.length >= r)
        throw DomainError("tube/wing-length",
                          "wings are defined for length < rank only");
    std::set<RegPoint> out;
    for (int j = 1; j <= v.length; ++j)
        for (int k = 1; k <= v.length - j + 1; ++k)
            out.insert(RegPoint::finite(
                QuasiSimpleRef{v.qs.tube, norm_index(v.qs.index + j - 1, r)}, k));
    return out;
}

bool in_wing(const TubeRegistry& reg, const RegPoint& x, const RegPoint& vertex) {
    require_finite(x, "in_wing");
    require_finite(vertex, "in_wing");
    RegPoint a = check_point(reg, x);
    RegPoint v = check_point(reg, vertex);
    if (a.qs.tube != v.qs.tube) return false;
    const int r = reg.rank(v.qs.tube);
    if (v.length >= r)
        throw DomainError("tube/wing-length",
                          "wings are defined for length < rank only");
    const int off = ((a.qs.index - v.qs.index) % r + r) % r;
    return off <= v.length - 1 && off + a.length <= v.length;
}

namespace {

// Number of integers in [lo, hi] congruent to target mod r.
int count_congruent(int lo, int hi, int target, int r) {
    if (lo > hi) return 0;
    const int t = ((target % r) + r) % r;
    const int lo_mod = ((lo % r) + r) % r;
    const int first = lo + ((t - lo_mod) % r + r) % r;
    if (first > hi) return 0;
    return (hi - first) / r + 1;
}

} // namespace

HomResult hom_dim(const TubeRegistry& reg, const RegPoint& x, const RegPoint& y) {
    if (x.is_generic() || y.is_generic()) return HomResult::unsupported();
    RegPoint a = check_point(reg, x);
    RegPoint b = check_point(reg, y);
    const bool same_tube = a.qs.tube == b.qs.tube;

    if (a.is_finite() && b.is_finite()) {
        if (!same_tube) return HomResult::of_dim(0);
        const int r = reg.rank(a.qs.tube);
        const int n = count_congruent(std::max(0, a.length - b.length), a.length - 1,
                                      b.qs.index - a.qs.index, r);
        return HomResult::of_dim(n);
    }
    if (a.is_finite() && b.is_pruefer()) {
        if (!same_tube) return HomResult::of_dim(0);
        const int r = reg.rank(a.qs.tube);
        return HomResult::of_dim(
            count_congruent(0, a.length - 1, b.qs.index - a.qs.index, r));
    }
    if (a.is_pruefer() && b.is_finite()) return HomResult::of_dim(0);
    if (a.is_adic() && b.is_finite()) {
        // Nonzero exactly on the coray ending at the adic's mouth point.
        if (!same_tube) return HomResult::of_nonzero(false);
        return HomResult::of_nonzero(top(reg, b) == a.qs);
    }
    return HomResult::unsupported();
}

HomResult ext_dim(const TubeRegistry& reg, const RegPoint& x, const RegPoint& y) {
    if (x.is_generic() || y.is_generic()) return HomResult::unsupported();
    RegPoint a = check_point(reg, x);
    RegPoint b = check_point(reg, y);
    if (a.is_pruefer() && b.is_adic())
        return HomResult::of_nonzero(a.qs.tube == b.qs.tube);
    return hom_dim(reg, b, tau(reg, a));
}

} // namespace tametilt
