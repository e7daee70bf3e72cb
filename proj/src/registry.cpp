#include "tametilt/registry.hpp"

#include <algorithm>

namespace tametilt {

namespace {

bool valid_tube_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

} // namespace

TubeRegistry TubeRegistry::preset(const std::string& name) {
    if (name == "kronecker") {
        TubeRegistry reg;
        reg.has_unnamed_homogeneous_rest = true;
        reg.validate();
        return reg;
    }
    throw DomainError("registry/unknown-preset", "unknown preset '" + name + "'");
}

TubeRegistry TubeRegistry::custom(std::vector<std::pair<std::string, int>> tubes,
                                  std::set<std::string> homogeneous, bool rest) {
    TubeRegistry reg;
    reg.nonhomogeneous = std::move(tubes);
    reg.homogeneous_named = std::move(homogeneous);
    reg.has_unnamed_homogeneous_rest = rest;
    reg.validate();
    return reg;
}

void TubeRegistry::validate() const {
    if (nonhomogeneous.size() > 3)
        throw DomainError("registry/too-many-tubes",
                          "at most 3 non-homogeneous tubes allowed, got " +
                              std::to_string(nonhomogeneous.size()));
    std::set<std::string> seen;
    for (const auto& [id, rank] : nonhomogeneous) {
        if (!valid_tube_id(id))
            throw DomainError("registry/bad-id", "invalid tube id '" + id + "'");
        if (rank < 2)
            throw DomainError("registry/bad-rank",
                              "non-homogeneous tube '" + id + "' needs rank >= 2");
        if (!seen.insert(id).second)
            throw DomainError("registry/duplicate-id", "duplicate tube id '" + id + "'");
    }
    for (const auto& id : homogeneous_named) {
        if (!valid_tube_id(id))
            throw DomainError("registry/bad-id", "invalid tube id '" + id + "'");
        if (!seen.insert(id).second)
            throw DomainError("registry/duplicate-id", "duplicate tube id '" + id + "'");
    }
}

bool TubeRegistry::has_tube(const std::string& id) const {
    if (homogeneous_named.count(id)) return true;
    return std::any_of(nonhomogeneous.begin(), nonhomogeneous.end(),
                       [&](const auto& t) { return t.first == id; });
}

bool TubeRegistry::is_homogeneous(const std::string& id) const {
    return rank(id) == 1;
}

int TubeRegistry::rank(const std::string& id) const {
    for (const auto& [tid, r] : nonhomogeneous)
        if (tid == id) return r;
    if (homogeneous_named.count(id)) return 1;
    throw DomainError("registry/unknown-tube", "unknown tube '" + id + "'");
}

std::vector<std::string> TubeRegistry::named_tube_ids() const {
    std::vector<std::string> ids;
    for (const auto& [id, r] : nonhomogeneous) ids.push_back(id);
    for (const auto& id : homogeneous_named) ids.push_back(id);
    return ids;
}

std::vector<std::string> TubeRegistry::nonhomogeneous_ids() const {
    std::vector<std::string> ids;
    for (const auto& [id, r] : nonhomogeneous) ids.push_back(id);
    return ids;
}

int MultiplicityMap::at(const QuasiSimpleRef& s) const {
    auto it = alpha.find(s);
    return it == alpha.end() ? 1 : it->second;
}

void MultiplicityMap::validate(const TubeRegistry& reg) const {
    if (alpha_generic < 1)
        throw DomainError("alpha/bad-value", "alpha_generic must be >= 1");
    for (const auto& [s, v] : alpha) {
        if (v < 1)
            throw DomainError("alpha/bad-value", "alpha values must be >= 1");
        const int r = reg.rank(s.tube); // throws on unknown tube
        if (s.index < 1 || s.index > r)
            throw DomainError("alpha/bad-index",
                              "index out of range for tube '" + s.tube + "'");
    }
}

LambdaSet validate_lambda(const TubeRegistry& reg, LambdaSet l) {
    for (const auto& id : l.named)
        if (!reg.has_tube(id))
            throw DomainError("lambda/unknown-tube", "unknown tube '" + id + "'");
    if (l.include_unnamed_rest && !reg.has_unnamed_homogeneous_rest)
        throw DomainError("lambda/rest-mismatch",
                          "registry has no unnamed homogeneous rest");
    return l;
}

bool lambda_is_empty(const LambdaSet& l) {
    return l.named.empty() && !l.include_unnamed_rest;
}

bool lambda_is_all(const TubeRegistry& reg, const LambdaSet& l) {
    if (reg.has_unnamed_homogeneous_rest && !l.include_unnamed_rest) return false;
    for (const auto& id : reg.named_tube_ids())
        if (!l.named.count(id)) return false;
    return true;
}

bool lambda_contains(const LambdaSet& l, const std::string& tube_id) {
    return l.named.count(tube_id) != 0;
}

} // namespace tametilt
