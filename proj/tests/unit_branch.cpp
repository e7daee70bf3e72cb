#include "tametilt/branch.hpp"
#include "tametilt/oracle.hpp"

#include <doctest.h>

using namespace tametilt;

namespace {

RegPoint fin(const char* tube, int i, int l) {
    return RegPoint::finite(QuasiSimpleRef{tube, i}, l);
}

const TubeRegistry r3 = TubeRegistry::custom({{"a", 3}}, {}, true);
const TubeRegistry r2 = TubeRegistry::custom({{"a", 2}}, {}, true);

} // namespace

TEST_CASE("branch recognition") {
    CHECK(is_branch_module(r3, {fin("a", 1, 2), fin("a", 1, 1)}));
    CHECK_FALSE(is_branch_module(r3, {fin("a", 1, 2)}));
    CHECK_FALSE(is_branch_module(r2, {fin("a", 1, 1), fin("a", 2, 1)}));
    CHECK(is_branch_module(r3, {}));

    const BranchCheck diag = check_branch_module(r3, {fin("a", 1, 2)});
    CHECK(diag.failed_clause == "branch/condition-b");
    const BranchCheck diag2 = check_branch_module(r2, {fin("a", 1, 1), fin("a", 2, 1)});
    CHECK(diag2.failed_clause == "branch/not-exceptional");
}

TEST_CASE("summands of homogeneous tubes or overlong summands are rejected") {
    const TubeRegistry reg = TubeRegistry::custom({{"a", 3}}, {"h"}, true);
    CHECK_FALSE(is_branch_module(reg, {fin("h", 1, 1)}));
    CHECK_FALSE(is_branch_module(reg, {fin("a", 1, 3)}));
}

TEST_CASE("enumeration over the kronecker preset is just the empty module") {
    const auto ys = enumerate_branch_modules(TubeRegistry::preset("kronecker"));
    REQUIRE(ys.size() == 1);
    CHECK(ys.front().summands.empty());
}

TEST_CASE("enumeration over one rank-2 tube") {
    const auto ys = enumerate_branch_modules(r2);
    REQUIRE(ys.size() == 3);
    CHECK(ys[0].summands.empty());
    CHECK(ys[1].summands == std::set<RegPoint>{fin("a", 1, 1)});
    CHECK(ys[2].summands == std::set<RegPoint>{fin("a", 2, 1)});
}

TEST_CASE("rank-3 branch modules with vertex a:1[2] come in exactly two shapes") {
    int with_vertex = 0;
    for (const auto& y : enumerate_branch_modules(r3)) {
        if (!y.summands.count(fin("a", 1, 2))) continue;
        const auto vs = vertices(r3, y);
        const auto it = vs.by_tube.find("a");
        if (it != vs.by_tube.end() &&
            it->second == std::vector<RegPoint>{fin("a", 1, 2)})
            ++with_vertex;
    }
    CHECK(with_vertex == 2);
}

TEST_CASE("vertices are the wing-maximal summands") {
    BranchModule y;
    y.summands = {fin("a", 1, 2), fin("a", 1, 1)};
    const auto vs = vertices(r3, y);
    CHECK(vs.by_tube.at("a") == std::vector<RegPoint>{fin("a", 1, 2)});

    const TubeRegistry r4 = TubeRegistry::custom({{"a", 4}});
    BranchModule y2;
    y2.summands = {fin("a", 1, 1), fin("a", 3, 1)};
    const auto vs2 = vertices(r4, y2);
    CHECK(vs2.by_tube.at("a") ==
          std::vector<RegPoint>{fin("a", 1, 1), fin("a", 3, 1)});

    BranchModule empty;
    CHECK(vertices(r3, empty).by_tube.empty());
}

TEST_CASE("branch completion keeps the composition-factor set") {
    const auto done = complete_to_branch(r3, {fin("a", 1, 2)});
    REQUIRE(done.size() == 2);
    CHECK(done[0].summands == std::set<RegPoint>{fin("a", 1, 1), fin("a", 1, 2)});
    CHECK(done[1].summands == std::set<RegPoint>{fin("a", 1, 2), fin("a", 2, 1)});

    // already branch: completion is the module itself
    const auto self = complete_to_branch(r3, {fin("a", 1, 2), fin("a", 1, 1)});
    REQUIRE(self.size() == 1);
    CHECK(self[0].summands == std::set<RegPoint>{fin("a", 1, 1), fin("a", 1, 2)});

    const auto trivial = complete_to_branch(r3, {});
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].summands.empty());

    CHECK_THROWS_AS(complete_to_branch(r2, {fin("a", 1, 1), fin("a", 2, 1)}),
                    DomainError);
}

TEST_CASE("composition factor sets, organically and shifted") {
    BranchModule y;
    y.summands = {fin("a", 1, 2)};
    CHECK(reg_comp_factor_set(r3, y, false) ==
          std::set<QuasiSimpleRef>{{"a", 1}, {"a", 2}});
    CHECK(reg_comp_factor_set(r3, y, true) ==
          std::set<QuasiSimpleRef>{{"a", 2}, {"a", 3}});
    CHECK(reg_comp_factor_set(r3, BranchModule{}, false).empty());
}

TEST_CASE("library enumeration is complete against the full subset scan at rank 5") {
    const TubeRegistry r5 = TubeRegistry::custom({{"a", 5}});
    const auto by_library = enumerate_tube_branch_sets(r5, "a");

    std::vector<RegPoint> points;
    for (int i = 1; i <= 5; ++i)
        for (int l = 1; l <= 4; ++l) points.push_back(fin("a", i, l));
    // fast pairwise conflict table for the 2^20 scan
    const size_t n = points.size();
    std::vector<uint32_t> conflict(n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (ext_dim(r5, points[a], points[b]).dim != 0 ||
                ext_dim(r5, points[b], points[a]).dim != 0)
                conflict[a] |= uint32_t{1} << b;

    long found = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a)
            if ((mask >> a) & 1)
                if (conflict[a] & mask) ok = false;
        if (!ok) continue;
        std::set<RegPoint> cand;
        for (size_t a = 0; a < n; ++a)
            if ((mask >> a) & 1) cand.insert(points[a]);
        if (is_branch_module(r5, cand)) ++found;
    }
    CHECK(found == static_cast<long>(by_library.size()));
}
