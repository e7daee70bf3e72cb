#pragma once

#include "tametilt/branch.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>

namespace tametilt {

// A set of quasi-simple points, with an optional token for the quasi-simples
// of all unnamed homogeneous tubes.
struct QuasiSimpleSet {
    std::set<QuasiSimpleRef> members;
    bool all_unnamed_homogeneous = false;

    bool contains(const QuasiSimpleRef& s) const { return members.count(s) != 0; }
    std::set<int> indices_in(const std::string& tube_id) const;
    bool is_full_clique(const TubeRegistry& reg, const std::string& tube_id) const;
    bool contains_complete_clique(const TubeRegistry& reg) const;
    void validate(const TubeRegistry& reg) const;

    auto operator<=>(const QuasiSimpleSet&) const = default;
};

// S tensor R_y: Zero (nullopt) when s lies in y, otherwise S[m] where m-1 is
// the length of the maximal tau_inv-run of y starting at tau_inv(s).
std::optional<RegPoint> tensor_qs(const TubeRegistry& reg, const QuasiSimpleRef& s,
                                  const QuasiSimpleSet& y);

// Registry after inverting the quasi-simples in `at`. Tubes whose clique is
// fully inverted disappear (order_flag marks that the result is a hereditary
// order rather than tame hereditary); other tubes shrink, with survivors
// renumbered along the induced cyclic order.
struct LocalizedRegistry {
    TubeRegistry base;
    QuasiSimpleSet at;
    TubeRegistry result;
    std::map<QuasiSimpleRef, QuasiSimpleRef> survivor_map; // old -> new
    bool order_flag = false;
};

LocalizedRegistry localize_registry(const TubeRegistry& reg, const QuasiSimpleSet& u);

// Indecomposable decomposition of R_u/R. Full cliques contribute Pruefer
// points; each maximal tau_inv-segment contributes the coray modules ending
// at its last quasi-simple, all with alpha multiplicities.
struct QuotientDecomposition {
    std::map<RegPoint, int> parts;
    bool rest_pruefer_all = false; // one Pruefer class per unnamed rest tube
};

QuotientDecomposition quotient_decomposition(const TubeRegistry& reg,
                                             const QuasiSimpleSet& u,
                                             const MultiplicityMap& alpha);

// Classification data of the tilting module R_u + R_u/R: nullopt when u
// contains no complete clique (the module is finite dimensional), otherwise
// the canonical pair.
std::optional<std::pair<BranchModule, LambdaSet>>
localization_tilting(const TubeRegistry& reg, const QuasiSimpleSet& u);

} // namespace tametilt
