#pragma once

#include "tametilt/classify.hpp"
#include "tametilt/oracle.hpp"
#include "tametilt/text.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace tametilt {
namespace io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "tametilt/1";

// Config document:
// { "tubes": [{"id": str, "rank": int}], "homogeneous_named": [str],
//   "rest": bool, "alpha": {"tube:index": int}, "alpha_generic": int }
json registry_to_json(const TubeRegistry& reg, const MultiplicityMap& alpha);
std::pair<TubeRegistry, MultiplicityMap> registry_from_json(const json& doc);

json lambda_to_json(const LambdaSet& l);
LambdaSet lambda_from_json(const json& doc);

// Pair document: { "branch": ["a:1[2]", ...], "lambda": {...} }
json pair_to_json(const BranchModule& y, const LambdaSet& l);
std::pair<BranchModule, LambdaSet> pair_from_json(const json& doc);

// Filter document: { "<tube>": {"rays": [1], "region": ["2[1]", ...]}, ... }
// with the reserved key "*" carrying {"rays": "all"} for the unnamed rest.
json filter_to_json(const ResolvingFilter& f);
ResolvingFilter filter_from_json(const json& doc);

// Quasi-simple sets: ["a:1", "clique:b", "clique:*"].
json qsset_to_json(const TubeRegistry& reg, const QuasiSimpleSet& s);
QuasiSimpleSet qsset_from_json(const TubeRegistry& reg, const json& doc);

json descriptor_to_json(const TiltingDescriptor& d);
json cotilting_to_json(const TubeRegistry& reg, const CotiltingDescriptor& c);
json decompose_to_json(const TubeRegistry& reg, const DecomposeReport& rep);
json predicates_to_json(const TubeRegistry& reg, const DescriptorPredicates& p);
json quotient_to_json(const QuotientDecomposition& q, const MultiplicityMap& alpha,
                      const TubeRegistry& reg, const QuasiSimpleSet& u);
json localized_to_json(const LocalizedRegistry& loc);
json branch_list_to_json(const std::vector<BranchModule>& ys);
json oracle_check_to_json(const oracle::OracleCheck& c);

// Parse an input document, demanding a JSON object.
json parse_json(const std::string& text, const std::string& what);

} // namespace io
} // namespace tametilt
