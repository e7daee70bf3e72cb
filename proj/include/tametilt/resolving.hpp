#pragma once

#include "tametilt/branch.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace tametilt {

// Per-tube trace of a resolving subcategory: full rays (by mouth index) plus
// a finite region of points not lying on an included ray. The preprojective
// part is always implicitly included.
struct TubeFilter {
    std::set<int> rays;
    std::set<RegPoint> region;

    auto operator<=>(const TubeFilter&) const = default;
};

struct ResolvingFilter {
    std::map<std::string, TubeFilter> tubes;
    bool rest_rays = false; // full ray in every unnamed homogeneous tube

    auto operator<=>(const ResolvingFilter&) const = default;
};

// True when the point lies in the filter (on an included ray or in the
// region).
bool filter_contains(const ResolvingFilter& f, const RegPoint& p);

// Checks submodule closure and extension closure per tube, normalizing the
// region (entries on included rays are dropped). Throws with a witness pair
// on a closure violation.
ResolvingFilter validate_filter(const TubeRegistry& reg, ResolvingFilter f);

// Add T trace of one tube: finite summand classes, Pruefer summand mouths,
// and the adic points that land in the tilting class.
struct TubeAddT {
    std::set<RegPoint> finite;
    std::set<int> pruefer;
    std::set<int> adics;

    auto operator<=>(const TubeAddT&) const = default;
};

struct AddTProfile {
    std::map<std::string, TubeAddT> tubes; // one slice per named tube
    bool rest_pruefer = false; // unnamed rest: Pruefer when true, adics otherwise

    auto operator<=>(const AddTProfile&) const = default;
};

AddTProfile addt_from_filter(const TubeRegistry& reg, const ResolvingFilter& f);

// The two directions of the (branch module, lambda) <-> filter
// correspondence. resolving_from_pair output passes validate_filter and
// round-trips through pair_from_resolving.
std::pair<BranchModule, LambdaSet> pair_from_resolving(const TubeRegistry& reg,
                                                       const ResolvingFilter& f);
ResolvingFilter resolving_from_pair(const TubeRegistry& reg, const BranchModule& y,
                                    const LambdaSet& l);

} // namespace tametilt
