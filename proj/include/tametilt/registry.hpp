#pragma once

#include "tametilt/types.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tametilt {

// Combinatorial configuration of the algebra: finitely many named tubes plus
// one token standing for all remaining homogeneous tubes. Immutable after
// construction; freely shareable.
struct TubeRegistry {
    std::vector<std::pair<std::string, int>> nonhomogeneous; // (id, rank >= 2), at most 3
    std::set<std::string> homogeneous_named;                 // each of rank 1
    bool has_unnamed_homogeneous_rest = false;

    static TubeRegistry preset(const std::string& name);
    static TubeRegistry custom(std::vector<std::pair<std::string, int>> tubes,
                               std::set<std::string> homogeneous = {},
                               bool rest = false);

    void validate() const;

    bool has_tube(const std::string& id) const;
    bool is_homogeneous(const std::string& id) const;
    int rank(const std::string& id) const;

    // Non-homogeneous tubes in declaration order, then named homogeneous
    // tubes in sorted order.
    std::vector<std::string> named_tube_ids() const;
    std::vector<std::string> nonhomogeneous_ids() const;

    bool operator==(const TubeRegistry&) const = default;
};

// alpha multiplicities; defaults to 1 everywhere.
struct MultiplicityMap {
    std::map<QuasiSimpleRef, int> alpha;
    int alpha_generic = 1;

    int at(const QuasiSimpleRef& s) const;
    void validate(const TubeRegistry& reg) const;
};

// A subset of the tube index family, spelled as named tubes plus an optional
// "all remaining homogeneous tubes" flag.
struct LambdaSet {
    std::set<std::string> named;
    bool include_unnamed_rest = false;

    auto operator<=>(const LambdaSet&) const = default;
};

LambdaSet validate_lambda(const TubeRegistry& reg, LambdaSet l);

bool lambda_is_empty(const LambdaSet& l);
bool lambda_is_all(const TubeRegistry& reg, const LambdaSet& l);
bool lambda_contains(const LambdaSet& l, const std::string& tube_id);

} // namespace tametilt
