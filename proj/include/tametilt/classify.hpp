#pragma once

#include "tametilt/localize.hpp"
#include "tametilt/resolving.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tametilt {

// Torsion-free part label: the large part is a localized Lukas module when
// no rays are present, a projective generator over the localization at
// `locset` otherwise.
struct TorsionFreeLabel {
    enum class Kind { LukasOver, ProjGenOver };
    Kind kind = Kind::LukasOver;
    QuasiSimpleSet locset;

    auto operator<=>(const TorsionFreeLabel&) const = default;
};

// Canonical classification datum of a large tilting module.
struct TiltingDescriptor {
    TubeRegistry reg;
    BranchModule branch;
    LambdaSet lambda;

    std::map<std::string, TubeAddT> torsion; // per named tube, adics empty here
    bool rest_pruefer = false;               // Pruefer at every unnamed rest tube
    TorsionFreeLabel label;
    QuasiSimpleSet u_set, v_set, r_set;
    bool generic_in_add = false;

    bool operator==(const TiltingDescriptor&) const = default;
};

TiltingDescriptor descriptor_from_pair(const TubeRegistry& reg, const BranchModule& y,
                                       const LambdaSet& l);

// Equality of canonical pairs; throws on registry mismatch.
bool equivalent(const TiltingDescriptor& a, const TiltingDescriptor& b);

// Per-tube summand report of the canonical torsion/torsion-free splitting.
struct TubeDecomposition {
    enum class Case { Branch, Ray, Empty }; // (i) / (ii) / (iii)
    Case tag = Case::Empty;
    int finite_count = 0;
    int pruefer_count = 0;
    int adic_count = 0; // adics in the tilting class, case (i) bookkeeping
};

struct DecomposeReport {
    std::map<std::string, TubeDecomposition> tubes;
    TubeDecomposition::Case rest_case = TubeDecomposition::Case::Empty;
    TorsionFreeLabel label;
};

DecomposeReport decompose(const TiltingDescriptor& d);

// Left-module mirror. Finite duals are stored top-indexed: the dual of
// S[m] keeps length m and carries the index of top(S[m]), with the tau
// direction understood as reversed on the left side.
struct CotiltingDescriptor {
    struct TubeSlice {
        std::set<RegPoint> finite; // re-coordinatized duals
        std::set<int> adics;
        std::set<int> pruefer;

        auto operator<=>(const TubeSlice&) const = default;
    };
    std::map<std::string, TubeSlice> tubes;
    bool rest_adic = false;    // unnamed rest tubes contribute one adic each
    bool rest_pruefer = false; // or one Pruefer each
    bool has_generic = true;
};

CotiltingDescriptor cotilting_dual(const TiltingDescriptor& d);

struct DescriptorPredicates {
    bool noetherian_over_endo = false;
    bool sigma_pure_injective = false;
    std::optional<QuasiSimpleSet> localization_form;
};

DescriptorPredicates predicates(const TiltingDescriptor& d);

// Witness pair for "the Pruefer points of delta plus z occur together among
// the summands of one large tilting module", or nullopt when impossible.
std::optional<std::pair<BranchModule, LambdaSet>>
summand_realizability(const TubeRegistry& reg, const std::set<QuasiSimpleRef>& delta,
                      const std::set<RegPoint>& z);

// All (branch module, lambda) pairs over the registry; lambda ranges over
// subsets of the named tubes, plus rest-flag variants when requested.
std::vector<std::pair<BranchModule, LambdaSet>>
enumerate_pairs(const TubeRegistry& reg, bool include_rest_variants);

} // namespace tametilt
