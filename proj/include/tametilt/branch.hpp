#pragma once

#include "tametilt/tube.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tametilt {

// Multiplicity-free set of finite points in non-homogeneous tubes, pairwise
// and self Ext-orthogonal, with condition (B): each summand S[m] has exactly
// m summands inside its wing. The empty set qualifies.
struct BranchModule {
    std::set<RegPoint> summands;

    std::set<RegPoint> in_tube(const std::string& tube_id) const;
    auto operator<=>(const BranchModule&) const = default;
};

struct BranchCheck {
    bool ok = true;
    std::string failed_clause; // check-id of the violated clause
    std::string witness;
};

BranchCheck check_branch_module(const TubeRegistry& reg, const std::set<RegPoint>& s);
bool is_branch_module(const TubeRegistry& reg, const std::set<RegPoint>& s);

// Complete irredundant list, empty module first, canonical order
// (lexicographic on sorted summand lists).
std::vector<BranchModule> enumerate_branch_modules(const TubeRegistry& reg);

// All branch modules of one tube, as summand sets.
std::vector<std::set<RegPoint>> enumerate_tube_branch_sets(const TubeRegistry& reg,
                                                           const std::string& tube_id);

// Wing-maximal summands per tube. Their wings are pairwise disjoint and
// cover all summands of that tube.
struct VertexSet {
    std::map<std::string, std::vector<RegPoint>> by_tube;
};

VertexSet vertices(const TubeRegistry& reg, const BranchModule& y);

// All branch modules containing z whose quasi-simple composition-factor set
// equals that of z. z must be exceptional with all lengths below rank.
std::vector<BranchModule> complete_to_branch(const TubeRegistry& reg,
                                             const std::set<RegPoint>& z);

// Union of composition factors over the summands, with tau_inv applied to
// each summand first when shifted.
std::set<QuasiSimpleRef> reg_comp_factor_set(const TubeRegistry& reg,
                                             const BranchModule& y, bool shifted);

} // namespace tametilt
