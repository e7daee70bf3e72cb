#include "tametilt/oracle.hpp"

#include <doctest.h>

using namespace tametilt;
using oracle::OracleBounds;
using oracle::OracleReport;

namespace {

RegPoint fin(const char* tube, int i, int l) {
    return RegPoint::finite(QuasiSimpleRef{tube, i}, l);
}

const TubeRegistry r3 = TubeRegistry::custom({{"a", 3}}, {}, true);
const TubeRegistry r2 = TubeRegistry::custom({{"a", 2}}, {}, true);

} // namespace

TEST_CASE("brute hom walks the factorization chains") {
    CHECK(oracle::brute_hom(r3, fin("a", 1, 1), fin("a", 1, 4)) == 1);
    CHECK(oracle::brute_hom(r2, fin("a", 1, 3), fin("a", 1, 1)) == 1);
    const TubeRegistry two = TubeRegistry::custom({{"a", 3}, {"b", 2}});
    CHECK(oracle::brute_hom(two, fin("a", 1, 2), fin("b", 1, 2)) == 0);
    CHECK_THROWS_AS(oracle::brute_hom(r2, fin("a", 1, 7), fin("a", 1, 1)), DomainError);
}

TEST_CASE("brute addt on the ray and wing examples") {
    ResolvingFilter ray;
    TubeFilter slice;
    slice.rays = {1};
    ray.tubes.emplace("a", slice);
    const TubeAddT got = oracle::brute_addt(r3, ray, "a");
    CHECK(got.finite == std::set<RegPoint>{fin("a", 1, 1), fin("a", 1, 2)});
    CHECK(got.pruefer == std::set<int>{1});
    CHECK(got.adics.empty());

    ResolvingFilter wing_f;
    TubeFilter wslice;
    wslice.region = {fin("a", 1, 1), fin("a", 1, 2), fin("a", 2, 1)};
    wing_f.tubes.emplace("a", wslice);
    const TubeAddT wgot = oracle::brute_addt(r3, wing_f, "a");
    CHECK(wgot.finite.size() == 2);
    CHECK(wgot.adics.size() == 1);

    ResolvingFilter empty;
    const TubeAddT egot = oracle::brute_addt(r3, empty, "a");
    CHECK(egot.finite.empty());
    CHECK(egot.adics == std::set<int>{1, 2, 3});

    const TubeRegistry big = TubeRegistry::custom({{"a", 7}});
    CHECK_THROWS_AS(oracle::brute_addt(big, empty, "a"), DomainError);
}

TEST_CASE("vertex configuration counts follow the Catalan pattern") {
    // recorded expectation; the generator, not the formula, is authoritative
    const long expected[] = {1, 1, 2, 5, 14};
    for (int m = 1; m <= 4; ++m) {
        const TubeRegistry reg = TubeRegistry::custom({{"a", m + 1}});
        const auto configs =
            oracle::branch_sets_with_vertex(reg, QuasiSimpleRef{"a", 1}, m);
        CHECK(static_cast<long>(configs.size()) == expected[m]);
        for (const auto& cfg : configs) {
            CHECK(is_branch_module(reg, cfg));
            CHECK(cfg.count(fin("a", 1, m)) == 1);
        }
    }
}

TEST_CASE("the suite is green at rank 3 and counts plenty of filter candidates") {
    const TubeRegistry reg = TubeRegistry::custom({{"a", 3}}, {"h"}, true);
    OracleBounds bounds;
    bounds.rank_max = 3;
    const OracleReport rep = oracle::verify_suite(reg, bounds);
    CHECK(rep.failed == 0);
    long filter_instances = 0;
    for (const auto& c : rep.checks)
        if (c.id == "resolving/filter-enumeration") filter_instances += c.instances;
    CHECK(filter_instances >= 500);
}

TEST_CASE("the suite is deterministic") {
    OracleBounds bounds;
    bounds.rank_max = 2;
    const OracleReport a = oracle::verify_suite(r2, bounds);
    const OracleReport b = oracle::verify_suite(r2, bounds);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].id == b.checks[i].id);
        CHECK(a.checks[i].pass == b.checks[i].pass);
        CHECK(a.checks[i].instances == b.checks[i].instances);
    }
}

TEST_CASE("a corrupted hom table produces a failing witness") {
    auto corrupted = [](const TubeRegistry& reg, const RegPoint& x, const RegPoint& y) {
        HomResult h = hom_dim(reg, x, y);
        if (x == RegPoint::finite(QuasiSimpleRef{"a", 1}, 2) &&
            y == RegPoint::finite(QuasiSimpleRef{"a", 2}, 1))
            return HomResult::of_dim(h.dim + 1);
        return h;
    };
    const oracle::OracleCheck bad = oracle::check_hom_oracle(r3, "a", corrupted);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.witness.empty());

    const oracle::OracleCheck good = oracle::check_hom_oracle(r3, "a");
    CHECK(good.pass);
}

TEST_CASE("rank bound on the suite") {
    const TubeRegistry big = TubeRegistry::custom({{"a", 5}});
    OracleBounds bounds;
    bounds.rank_max = 4;
    CHECK_THROWS_AS(oracle::verify_suite(big, bounds), DomainError);
}

TEST_CASE("the suite replays the power-set classification over homogeneous registries") {
    const TubeRegistry reg = TubeRegistry::custom({}, {"h1"}, true);
    OracleBounds bounds;
    bounds.rank_max = 2;
    const OracleReport rep = oracle::verify_suite(reg, bounds);
    CHECK(rep.failed == 0);
    bool seen = false;
    for (const auto& c : rep.checks)
        if (c.id == "classify/kronecker-powerset") {
            seen = true;
            CHECK(c.pass);
        }
    CHECK(seen);
}

TEST_CASE("the fast filter enumerator agrees with tube-by-tube validation") {
    for (int rank = 2; rank <= 4; ++rank) {
        const TubeRegistry reg = TubeRegistry::custom({{"a", rank}});
        for (const auto& slice : oracle::enumerate_tube_filters(reg, "a")) {
            ResolvingFilter f;
            f.tubes.emplace("a", slice);
            CHECK_NOTHROW(validate_filter(reg, f));
        }
    }
}
