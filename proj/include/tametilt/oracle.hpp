#pragma once

#include "tametilt/classify.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tametilt {
namespace oracle {

// Hom dimension by explicit enumeration of epi-mono factorizations through
// ray quotients and coray submodules. Lengths are capped at 3*rank.
int brute_hom(const TubeRegistry& reg, const RegPoint& x, const RegPoint& y);

// Definition-level Add T slice of one tube: filter members that are
// Ext-orthogonal to every filter member, rays as Pruefer points, adics by
// Ext-nonvanishing against the filter. Rank capped at 6.
TubeAddT brute_addt(const TubeRegistry& reg, const ResolvingFilter& f,
                    const std::string& tube_id);

// All valid filters of a single tube, and their combinations over a whole
// registry (rest-flag variants included when the registry has the rest).
std::vector<TubeFilter> enumerate_tube_filters(const TubeRegistry& reg,
                                               const std::string& tube_id);
std::vector<ResolvingFilter> enumerate_filters(const TubeRegistry& reg);

// Branch sets inside one wing with the given vertex present, generated by
// the ray/coray split recursion; independent of the subset scan used by
// enumerate_tube_branch_sets.
std::vector<std::set<RegPoint>> branch_sets_with_vertex(const TubeRegistry& reg,
                                                        const QuasiSimpleRef& s, int m);

struct OracleCheck {
    std::string id;
    std::string params;
    bool pass = true;
    long instances = 0;
    std::string witness;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    long total_instances = 0;
    int failed = 0;
};

struct OracleBounds {
    int rank_max = 4;
};

using HomFn = std::function<HomResult(const TubeRegistry&, const RegPoint&, const RegPoint&)>;

// Hom-oracle equivalence check with an injectable closed-form candidate;
// defaults to the library hom_dim.
OracleCheck check_hom_oracle(const TubeRegistry& reg, const std::string& tube_id,
                             HomFn hom = {});

// Exhaustive re-derivation of every per-tube statement the library relies
// on, over all filters and pairs within bounds.
OracleReport verify_suite(const TubeRegistry& reg, const OracleBounds& bounds);

} // namespace oracle
} // namespace tametilt
