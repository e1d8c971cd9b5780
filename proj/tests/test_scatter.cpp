#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bethe/kkr.hpp"
#include "bethe/scatter.hpp"
#include "test_util.hpp"

using namespace bethe;

namespace {

AffineElement ae(int n, const std::string& word, num mode, int floor) {
    return {make_element(n, word, floor), mode};
}

ScatteringData sd3(const std::vector<std::pair<std::string, num>>& spec,
                   int floor = 1) {
    std::vector<AffineElement> fs;
    for (const auto& [w, d] : spec) fs.push_back(ae(3, w, d, floor));
    return make_scattering(std::move(fs));
}

std::set<std::string> texts(const std::vector<ScatteringData>& v) {
    std::set<std::string> out;
    for (const ScatteringData& s : v) out.insert(to_string(s));
    return out;
}

// Path of rank n-shift, floor 0, re-read as letters shift+1.. of rank n.
Path lift_path(const Path& p, int n, int shift) {
    std::vector<CrystalElement> fs;
    for (const CrystalElement& f : p.factors) {
        std::vector<int> occ(static_cast<size_t>(n + 1), 0);
        for (int i = 1; i <= f.n() + 1; ++i)
            occ[static_cast<size_t>(shift + i - 1)] = f.x(i);
        fs.push_back(make_element(n, occ, shift));
    }
    return Path{fs};
}

std::vector<Row> asc_rows(const RiggedConfiguration& rc, int a) {
    std::vector<Row> rows = rc.rows(a);
    std::reverse(rows.begin(), rows.end());
    return rows;
}

// The vertex construction with an explicit normal-ordering choice per level
// (index into map_C_all, taken modulo the set size).
Path vertex_with_choices(const RiggedConfiguration& rc,
                         const std::vector<size_t>& pick) {
    int n = rc.n();
    std::vector<CrystalElement> top;
    for (const Row& r : asc_rows(rc, n)) top.push_back(vacuum(n, r.length, n));
    Path p{top};
    for (int level = n; level >= 1; --level) {
        auto forms = map_C_all(p, rc.rows(level));
        const ScatteringData& sd =
            forms[pick[static_cast<size_t>(level - 1)] % forms.size()];
        std::vector<int> lambda;
        if (level - 1 >= 1)
            for (const Row& r : asc_rows(rc, level - 1))
                lambda.push_back(r.length);
        else
            lambda = rc.quantum();
        p = map_Phi(n, level, sd, lambda);
    }
    return p;
}

}  // namespace

TEST_CASE("top-floor R degenerates to capacity exchange") {
    // At floor n the effective rank is 0: single-letter strings, H = min.
    CrystalElement a = vacuum(3, 2, 3);
    CrystalElement b = vacuum(3, 5, 3);
    RResult rr = combinatorial_R(a, b);
    CHECK(rr.H == 2);
    CHECK(rr.left.element == b);
    CHECK(rr.right.element == a);
    CHECK(rr.Q == std::vector<num>{0});
}

TEST_CASE("modes from riggings") {
    SUBCASE("single highest factor") {
        ScatteringData sd =
            compute_modes(Path{{make_element(3, "22", 1)}}, {5});
        CHECK(sd.modes() == std::vector<num>{5 + 2});
    }
    SUBCASE("top level, single box") {
        ScatteringData sd = compute_modes(Path{{vacuum(3, 1, 3)}}, {0});
        CHECK(to_string(sd) == "4_1");
    }
    SUBCASE("printed non-highest worked example") {
        Path p{{make_element(3, "22", 1), make_element(3, "223", 1),
                make_element(3, "2334", 1)}};
        ScatteringData sd = compute_modes(p, {23, 22, 20});
        CHECK(sd.modes() == std::vector<num>{25, 26, 25});
    }
    SUBCASE("level-2 worked example") {
        Path p{{make_element(3, "3", 2), make_element(3, "334", 2)}};
        ScatteringData sd = compute_modes(p, {0, 1});
        CHECK(to_string(sd) == "3_1 334_4");
    }
    SUBCASE("mode-probe capacity does not matter") {
        Path p{{make_element(3, "23", 1), make_element(3, "234", 1),
                make_element(3, "344", 1)}};
        ScatteringData base = compute_modes(p, {4, -2, 7});
        // Recompute with ever larger probes by padding a throwaway factor:
        // the probe is chosen internally from the max capacity, so compare
        // against a direct recomputation with a widened copy of the path.
        for (int extra = 1; extra <= 4; ++extra) {
            int lmax = 3 + extra;
            CrystalElement probe = vacuum(3, lmax + 1, 1);
            std::vector<num> want;
            for (int j = 0; j < p.size(); ++j) {
                CrystalElement c = p[j];
                num h = 0;
                for (int k = j - 1; k >= 0; --k) {
                    RResult rr = combinatorial_R(p[k], c);
                    h += rr.H;
                    c = rr.left.element;
                }
                h += combinatorial_R(probe, c).H;
                want.push_back(std::vector<num>{4, -2, 7}[static_cast<size_t>(
                                   j)] +
                               h);
            }
            CHECK(base.modes() == want);
        }
    }
}

TEST_CASE("normal ordering") {
    SUBCASE("two-factor printed example") {
        ScatteringData sd = sd3({{"234", 7}, {"223", 2}});
        auto orbit = r_orbit(sd);
        CHECK(texts(orbit) ==
              std::set<std::string>{"234_7 223_2", "234_0 223_9"});
        auto no = normal_order(sd);
        CHECK(texts(no) == std::set<std::string>{"234_0 223_9"});
        CHECK(is_normal_ordered(no.front()));
        CHECK(!is_normal_ordered(sd));
    }
    SUBCASE("single factor is its own normal form") {
        ScatteringData sd = sd3({{"334", -4}});
        CHECK(normal_order(sd) == std::vector<ScatteringData>{sd});
        CHECK(is_normal_ordered(sd));
    }
    SUBCASE("collision-time data has two normal forms") {
        ScatteringData sd = sd3({{"22", 25}, {"223", 26}, {"2334", 25}});
        auto no = normal_order(sd);
        CHECK(texts(no) == std::set<std::string>{"2222_24 233_26 34_26",
                                                 "2222_24 23_26 334_26"});
        // Canonical representative: least label words at equal modes.
        CHECK(to_string(normal_form(sd)) == "2222_24 23_26 334_26");
    }
    SUBCASE("printed equivalent pair") {
        ScatteringData a = sd3({{"2222", 4}, {"23", 6}, {"334", 6}});
        ScatteringData b = sd3({{"2222", 4}, {"233", 6}, {"34", 6}});
        auto no = normal_order(a);
        CHECK(texts(no) == texts(normal_order(b)));
        CHECK(texts(no) ==
              std::set<std::string>{"2222_4 23_6 334_6", "2222_4 233_6 34_6"});
        CHECK(is_normal_ordered(a));
        CHECK(is_normal_ordered(b));
    }
    SUBCASE("members share one weakly increasing mode sequence") {
        std::mt19937 rng(2026);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<AffineElement> fs;
            int m = 2 + static_cast<int>(rng() % 3);
            for (int j = 0; j < m; ++j) {
                int cap = 1 + static_cast<int>(rng() % 4);
                fs.push_back({testutil::random_element(rng, 3, cap, 1),
                              static_cast<num>(rng() % 11)});
            }
            auto no = normal_order(make_scattering(fs));
            auto ref = no.front().modes();
            for (size_t i = 1; i < ref.size(); ++i) CHECK(ref[i - 1] <= ref[i]);
            for (const ScatteringData& s : no) CHECK(s.modes() == ref);
        }
    }
}

TEST_CASE("elementary vertex operator") {
    SUBCASE("printed sweep") {
        Path p = phi_elementary(make_element(3, "2334", 1),
                                parse_b1_path(3, "11111"));
        CHECK(to_string(p) == "43321");
    }
    SUBCASE("carrier must come out empty") {
        // Carrying 44 into a single box leaves a ball in the carrier.
        CHECK_THROWS_AS(phi_elementary(make_element(3, "44", 1),
                                       parse_b1_path(3, "1")),
                        std::domain_error);
    }
    SUBCASE("single-box sweep is the basic time evolution") {
        // Carrying one '1' through a floor-0 path is T_1; on a vacuum path
        // it acts as the identity.
        Path vac = parse_b1_path(3, "111111");
        CHECK(phi_elementary(vacuum(3, 1, 0), vac) == vac);
    }
}

TEST_CASE("composed vertex operator") {
    SUBCASE("level 3 of the reference configuration") {
        ScatteringData sd{{ae(3, "4", 1, 3)}};
        Path p = map_Phi(3, 3, sd, {1, 3});
        CHECK(p == Path{{make_element(3, "3", 2), make_element(3, "334", 2)}});
    }
    SUBCASE("level 2 of the reference configuration") {
        ScatteringData sd{{ae(3, "3", 1, 2), ae(3, "334", 4, 2)}};
        Path p = map_Phi(3, 2, sd, {2, 3, 4});
        CHECK(p == Path{{make_element(3, "22", 1), make_element(3, "223", 1),
                         make_element(3, "2334", 1)}});
    }
    SUBCASE("level 1, both normal-ordered forms, same path") {
        std::vector<int> lambda(14, 1);
        Path a = map_Phi(3, 1, sd3({{"2222", 4}, {"23", 6}, {"334", 6}}),
                         lambda);
        Path b = map_Phi(3, 1, sd3({{"2222", 4}, {"233", 6}, {"34", 6}}),
                         lambda);
        CHECK(to_string(a) == "11112221322433");
        CHECK(a == b);
    }
    SUBCASE("rejects unordered or negative modes") {
        std::vector<int> lambda(6, 1);
        CHECK_THROWS_AS(map_Phi(3, 1, sd3({{"22", 3}, {"22", 1}}), lambda),
                        std::invalid_argument);
        CHECK_THROWS_AS(map_Phi(3, 1, sd3({{"22", -1}}), lambda),
                        std::invalid_argument);
    }
}

TEST_CASE("level maps on the reference configuration") {
    RiggedConfiguration rc = testutil::golden_rc();
    Path p1 = kkr_vertex_level(rc, 1);
    CHECK(p1 == Path{{make_element(3, "22", 1), make_element(3, "223", 1),
                      make_element(3, "2334", 1)}});
    CHECK(kkr_vertex_level(rc, 2) ==
          Path{{make_element(3, "3", 2), make_element(3, "334", 2)}});
    CHECK(kkr_vertex_level(rc, 3) == Path{{make_element(3, "4", 3)}});
    CHECK(to_string(kkr_vertex(rc)) == "11112221322433");

    // Raw level-1 modes before and after normal ordering.
    ScatteringData raw = compute_modes(p1, {3, 2, 0});
    CHECK(raw.modes() == std::vector<num>{5, 6, 5});
    auto no = normal_order(raw);
    CHECK(texts(no) ==
          std::set<std::string>{"2222_4 23_6 334_6", "2222_4 233_6 34_6"});
}

TEST_CASE("vertex construction equals box removal") {
    auto check_family = [](int n, const std::vector<int>& quantum, int cap) {
        for (const RiggedConfiguration& rc :
             testutil::all_restricted(n, quantum, cap))
            CHECK(kkr_vertex(rc) == kkr_to_path(rc));
    };
    check_family(1, {1, 1, 1, 1, 1}, 5);
    check_family(2, {1, 1, 1, 1, 1}, 5);
    check_family(2, {2, 1, 2}, 5);
    check_family(3, {1, 1, 1, 1}, 4);
    check_family(3, {2, 2}, 4);
    check_family(2, {3, 2}, 5);
}

TEST_CASE("intermediates match truncated configurations") {
    RiggedConfiguration rc = testutil::golden_rc();
    for (int a = 1; a <= 2; ++a) {
        Path direct = kkr_vertex_level(rc, a);
        Path via = lift_path(kkr_to_path(truncate(rc, a)), 3, a);
        CHECK(direct == via);
    }
    for (const RiggedConfiguration& small :
         testutil::all_restricted(2, {1, 1, 1, 1}, 4)) {
        Path via = lift_path(kkr_to_path(truncate(small, 1)), 2, 1);
        CHECK(kkr_vertex_level(small, 1) == via);
    }
}

TEST_CASE("output is independent of the normal-ordering choice") {
    RiggedConfiguration rc = testutil::golden_rc();
    Path ref = kkr_vertex(rc);
    for (size_t c1 = 0; c1 < 2; ++c1)
        for (size_t c2 = 0; c2 < 2; ++c2)
            for (size_t c3 = 0; c3 < 2; ++c3)
                CHECK(vertex_with_choices(rc, {c1, c2, c3}) == ref);

    for (const RiggedConfiguration& small :
         testutil::all_restricted(2, {1, 1, 1, 1, 1}, 5)) {
        Path ref2 = kkr_vertex(small);
        for (size_t c1 = 0; c1 < 2; ++c1)
            for (size_t c2 = 0; c2 < 2; ++c2)
                CHECK(vertex_with_choices(small, {c1, c2}) == ref2);
    }
}
