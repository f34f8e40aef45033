#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohint/rep_symmetry.hpp"
#include "test_util.hpp"

using namespace cohint;

TEST_CASE("weyl invariance and symmetry examples") {
    RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
    WeightMultiset adj = WeightMultiset::adjoint(a1);
    CHECK(is_weyl_invariant(a1, adj));
    CHECK(is_symmetric(a1, adj));
    CHECK(!is_weyl_invariant(a1, WeightMultiset::of({{{2}, 1}})));
    RootDatum gl2 = build_root_datum({{{'A', 1, Isogeny::GL}}, 0});
    CHECK(is_weyl_invariant(gl2, WeightMultiset::of({{{1, 0}, 1}, {{0, 1}, 1}})));
    // torus: multiset {1} not symmetric, {1:2, -1:2} symmetric
    RootDatum gm = build_root_datum({{}, 1});
    CHECK(!is_symmetric(gm, WeightMultiset::of({{{1}, 1}})));
    CHECK(is_symmetric(gm, WeightMultiset::of({{{1}, 2}, {{-1}, 2}})));
    CHECK_THROWS_AS((void)is_symmetric(a1, WeightMultiset::of({{{2}, 1}})), repsym_error);
}

TEST_CASE("decomposition examples") {
    RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
    auto dec = decompose_irreducibles(a1, WeightMultiset::of({{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].highest_weight == IVec{2});
    CHECK(dec[0].multiplicity == 1);

    auto dec2 = decompose_irreducibles(a1, WeightMultiset::of({{{1}, 2}, {{-1}, 2}}));
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0].highest_weight == IVec{1});
    CHECK(dec2[0].multiplicity == 2);

    RootDatum gl3 = build_root_datum({{{'A', 2, Isogeny::GL}}, 0});
    auto dec3 = decompose_irreducibles(gl3, WeightMultiset::adjoint(gl3));
    REQUIRE(dec3.size() == 2);
    CHECK(dec3[0].highest_weight == IVec{1, 0, -1});
    CHECK(dec3[0].multiplicity == 1);
    CHECK(dec3[1].highest_weight == IVec{0, 0, 0});
    CHECK(dec3[1].multiplicity == 1);

    // virtual input rejected without the flag
    CHECK_THROWS_AS(decompose_irreducibles(
                        a1, WeightMultiset::of({{{1}, -1}, {{-1}, -1}})),
                    repsym_error);
}

TEST_CASE("decomposition re-expands to the input exactly") {
    testutil::Rng rng(57);
    for (auto spec : {GroupSpec{{{'A', 1, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'A', 2, Isogeny::GL}}, 0},
                      GroupSpec{{{'B', 2, Isogeny::SimplyConnected}}, 0}}) {
        RootDatum rd = build_root_datum(spec);
        auto weyl = weyl_elements(rd);
        for (int it = 0; it < 6; ++it) {
            // a genuine character: a sum of irreducible characters
            WeightMultiset v;
            for (int s = 0; s < 3; ++s) {
                IVec lam(rd.rank);
                for (size_t i = 0; i < rd.rank; ++i) lam[i] = rng.range(0, 2);
                lam = dominant_representative(rd, lam);
                long long m = rng.range(1, 2);
                for (const auto& [w, c] : irrep_weights(rd, lam)) v.add(w, m * c);
            }
            auto dec = decompose_irreducibles(rd, v);
            WeightMultiset back = expand_decomposition(rd, dec);
            CHECK(back.mult == v.mult);
        }
    }
}

TEST_CASE("self-duality indicators") {
    RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
    CHECK(self_dual_indicator(a1, {1}) == SelfDuality::Symplectic);
    CHECK(self_dual_indicator(a1, {2}) == SelfDuality::Orthogonal);
    RootDatum a2 = build_root_datum({{{'A', 2, Isogeny::SimplyConnected}}, 0});
    CHECK(self_dual_indicator(a2, {1, 0}) == SelfDuality::NotSelfDual);
    CHECK(self_dual_indicator(a2, {1, 1}) == SelfDuality::Orthogonal);  // adjoint
}

TEST_CASE("orthogonality examples") {
    RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
    CHECK(is_orthogonal(a1, WeightMultiset::adjoint(a1)));
    CHECK(is_orthogonal(a1, WeightMultiset::of({{{1}, 2}, {{-1}, 2}})));
    CHECK(!is_orthogonal(a1, WeightMultiset::of({{{1}, 1}, {{-1}, 1}})));
    // virtual classes: 2 std - adjoint is symmetric and orthogonal
    WeightMultiset virt = WeightMultiset::of({{{1}, 2}, {{-1}, 2}});
    for (const auto& [w, m] : WeightMultiset::adjoint(a1).mult) virt.add(w, -m);
    CHECK(is_orthogonal_virtual(a1, virt));
    WeightMultiset virt2 = WeightMultiset::of({{{1}, 1}, {{-1}, 1}});
    for (const auto& [w, m] : WeightMultiset::adjoint(a1).mult) virt2.add(w, -m);
    CHECK(!is_orthogonal_virtual(a1, virt2));  // symplectic coefficient 1
}

TEST_CASE("two-out-of-three for symmetry (invariant multisets)") {
    testutil::Rng rng(71);
    for (auto spec : {GroupSpec{{{'A', 1, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'A', 2, Isogeny::GL}}, 0},
                      GroupSpec{{{'B', 2, Isogeny::SimplyConnected}}, 0}}) {
        RootDatum rd = build_root_datum(spec);
        auto weyl = weyl_elements(rd);
        int checked = 0;
        for (int it = 0; it < 60; ++it) {
            WeightMultiset v1 =
                testutil::random_invariant_multiset(rng, rd, weyl, 2, 2, true);
            WeightMultiset v2 = testutil::random_invariant_multiset(rng, rd, weyl, 2, 2,
                                                                    rng.range(0, 1) == 1);
            WeightMultiset sum = v1;
            for (const auto& [w, m] : v2.mult) sum.add(w, m);
            REQUIRE(is_symmetric(v1));
            if (is_symmetric(sum)) {
                CHECK(is_symmetric(v2));
                ++checked;
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("two-out-of-three for orthogonality (genuine characters)") {
    testutil::Rng rng(73);
    for (auto spec : {GroupSpec{{{'A', 1, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'A', 2, Isogeny::GL}}, 0}}) {
        RootDatum rd = build_root_datum(spec);
        int checked = 0;
        for (int it = 0; it < 30; ++it) {
            WeightMultiset v1 = testutil::random_character(rng, rd, 2, true);
            WeightMultiset v2 =
                testutil::random_character(rng, rd, 2, rng.range(0, 1) == 1);
            WeightMultiset sum = v1;
            for (const auto& [w, m] : v2.mult) sum.add(w, m);
            REQUIRE(is_symmetric(v1));
            if (!is_symmetric(sum)) continue;
            CHECK(is_symmetric(v2));
            if (is_orthogonal(rd, v1) && is_orthogonal(rd, sum)) {
                CHECK(is_orthogonal(rd, v2));
                ++checked;
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("types with h = e: every self-dual irreducible is orthogonal") {
    // the paper's list is the oracle for exactly these types
    for (auto spec : {GroupSpec{{{'A', 2, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'A', 4, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'G', 2, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'F', 4, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'E', 6, Isogeny::SimplyConnected}}, 0}}) {
        RootDatum rd = build_root_datum(spec);
        // all dominant weights with small coordinates (SC coordinates:
        // dominant = componentwise nonnegative)
        std::vector<IVec> doms;
        IVec cur(rd.rank, 0);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == rd.rank) {
                doms.push_back(cur);
                return;
            }
            for (int v = 0; v <= 1; ++v) {
                cur[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        for (const auto& lam : doms)
            CHECK(self_dual_indicator(rd, lam) != SelfDuality::Symplectic);
    }
}

TEST_CASE("2 rho^vee pairs evenly with every root (h^2 = e well-defined)") {
    for (auto spec : {GroupSpec{{{'A', 3, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'B', 2, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'C', 3, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'D', 4, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'G', 2, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'F', 4, Isogeny::SimplyConnected}}, 0}}) {
        RootDatum rd = build_root_datum(spec);
        IVec trc = rd.two_rho_check();
        for (const auto& r : rd.roots) CHECK(idot(r, trc) % 2 == 0);
    }
}

TEST_CASE("Freudenthal multiplicities on known small representations") {
    // sl_3 adjoint: zero weight multiplicity 2
    RootDatum a2 = build_root_datum({{{'A', 2, Isogeny::SimplyConnected}}, 0});
    auto wts = irrep_weights(a2, {1, 1});
    CHECK(wts.at(IVec{0, 0}) == 2);
    long long total = 0;
    for (const auto& [w, m] : wts) total += m;
    CHECK(total == 8);
    // sl_2 V_4: weights 4,2,0,-2,-4 each once
    RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
    auto w4 = irrep_weights(a1, {4});
    CHECK(w4.size() == 5);
    for (const auto& [w, m] : w4) CHECK(m == 1);
    // B2 adjoint dimension 10
    RootDatum b2 = build_root_datum({{{'B', 2, Isogeny::SimplyConnected}}, 0});
    // adjoint highest weight = highest root; find it as the dominant root
    IVec hr;
    for (const auto& r : b2.roots)
        if (is_dominant(b2, r)) hr = r;
    auto wb = irrep_weights(b2, hr);
    long long dim = 0;
    for (const auto& [w, m] : wb) dim += m;
    CHECK(dim == 10);
}
