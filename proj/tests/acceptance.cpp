// Acceptance suite: one criterion per test case, each printing a single
// PASS/FAIL line with its runtime.  Tolerances are exact (rational
// arithmetic); time limits are asserted as hard bounds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "cohint/bun_ih.hpp"
#include "cohint/hall_induction.hpp"
#include "cohint/quiver_bps.hpp"
#include "test_util.hpp"

using namespace cohint;
using Clock = std::chrono::steady_clock;

namespace {

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void report(const char* name, bool pass, double secs, double limit) {
    std::printf("%-34s %s   (%.2fs / limit %.0fs)\n", name, pass ? "PASS" : "FAIL", secs,
                limit);
    std::fflush(stdout);
}

Face full_face(const RootDatum& rd, const WeightMultiset& v) {
    QMat full(rd.rank, QVec(rd.rank, Rat(0)));
    for (size_t i = 0; i < rd.rank; ++i) full[i][i] = Rat(1);
    return make_face(arrangement(rd, v), full);
}

}  // namespace

TEST_CASE("criterion 1: BG integrality for A1 <= 40, A2 <= 24, B2 <= 24") {
    bool pass = true;
    double total = 0;
    struct Row {
        GroupSpec spec;
        long long bound;
    };
    std::vector<Row> rows = {{GroupSpec{{{'A', 1, Isogeny::SimplyConnected}}, 0}, 40},
                             {GroupSpec{{{'A', 2, Isogeny::SimplyConnected}}, 0}, 24},
                             {GroupSpec{{{'B', 2, Isogeny::SimplyConnected}}, 0}, 24}};
    for (const auto& row : rows) {
        Timer t;
        RootDatum rd = build_root_datum(row.spec);
        auto weyl = weyl_elements(rd);
        BgReport rep = check_integrality_bg(rd, row.bound, weyl);
        pass = pass && rep.pass;
        double secs = t.seconds();
        total += secs;
        pass = pass && secs < 10.0;
    }
    report("1 BG integrality", pass, total, 30);
    CHECK(pass);
}

TEST_CASE("criterion 2: supercommutativity across all chamber pairs") {
    Timer t;
    bool pass = true;
    testutil::Rng rng(0xC0FFEE);
    for (auto spec : {GroupSpec{{{'A', 1, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'A', 2, Isogeny::SimplyConnected}}, 0},
                      GroupSpec{{{'B', 2, Isogeny::SimplyConnected}}, 0}}) {
        RootDatum rd = build_root_datum(spec);
        auto weyl = weyl_elements(rd);
        for (const auto& v : {WeightMultiset{}, WeightMultiset::adjoint(rd)}) {
            Face f = full_face(rd, v);
            auto chambers = chambers_in_face(f);
            // precompute pair distances
            std::vector<std::vector<int>> dist(chambers.size(),
                                               std::vector<int>(chambers.size(), 0));
            for (size_t i = 0; i < chambers.size(); ++i)
                for (size_t j = 0; j < chambers.size(); ++j)
                    dist[i][j] =
                        cotangent_distance(rd, v, f, chambers[i], chambers[j]).value;
            for (int it = 0; it < 50; ++it) {
                Poly p = testutil::random_poly(rng, rd.rank, 8, 4);
                std::vector<Poly> results;
                for (size_t c = 0; c < chambers.size(); ++c)
                    results.push_back(induction(rd, v, f, chambers, c, p, weyl).value);
                for (size_t i = 0; i < chambers.size() && pass; ++i)
                    for (size_t j = 0; j < chambers.size(); ++j) {
                        Poly expect =
                            dist[i][j] == 0 ? results[j] : Rat(-1) * results[j];
                        if (results[i] != expect) {
                            pass = false;
                            break;
                        }
                    }
                if (!pass) break;
            }
        }
    }
    double secs = t.seconds();
    pass = pass && secs < 60.0;
    report("2 supercommutativity", pass, secs, 60);
    CHECK(pass);
}

TEST_CASE("criterion 3: quiver calibration identities (Euler, Heine)") {
    Timer t;
    bool pass = true;
    QuiverSpec zero = QuiverSpec::from_arrow_list(1, {});
    auto bz = bps_series(zero, 5, 60);
    pass = pass && bz.omega.at({1}).coeff({1}, 0) == Rat(1);
    pass = pass && bz.omega.at({1}).support_min({1}) == 0 &&
           bz.omega.at({1}).support_max({1}) == 0;
    for (int n = 2; n <= 5; ++n)
        pass = pass && bz.omega.at({n}).support_max({n}) < bz.omega.at({n}).support_min({n});
    QuiverSpec jordan = QuiverSpec::from_arrow_list(1, {{0, 0}});
    auto bj = bps_series(jordan, 5, 60);
    pass = pass && bj.omega.at({1}).coeff({1}, -1) == Rat(1);
    pass = pass && bj.omega.at({1}).support_min({1}) == -1 &&
           bj.omega.at({1}).support_max({1}) == -1;
    for (int n = 2; n <= 5; ++n)
        pass = pass && bj.omega.at({n}).support_max({n}) < bj.omega.at({n}).support_min({n});
    // the identities themselves, brute-expanded as the oracle
    {
        GradedSeries f(1, 5, 60);
        for (long long j = 0; 1 + 2 * j <= 60; ++j) f.set({1}, 1 + 2 * j, Rat(1));
        GradedSeries e = pexp(f);
        for (int n = 0; n <= 5 && pass; ++n) {
            GradedSeries rhs = GradedSeries::monomial(1, 5, {n}, (long long)n * n, Rat(1));
            for (int k = 1; k <= n; ++k) rhs *= GradedSeries::geometric(1, 5, {0}, 2 * k, 60);
            for (long long k = 0; k <= 60 && pass; ++k)
                pass = e.coeff({n}, k) == rhs.coeff({n}, k);
        }
        GradedSeries fb(1, 5, 60);
        for (long long j = 0; 2 * j <= 60; ++j) fb.set({1}, 2 * j, Rat(1));
        GradedSeries eb = pexp(fb);
        for (int n = 0; n <= 5 && pass; ++n) {
            GradedSeries rhs = GradedSeries::monomial(1, 5, {n}, 0, Rat(1));
            for (int k = 1; k <= n; ++k) rhs *= GradedSeries::geometric(1, 5, {0}, 2 * k, 60);
            for (long long k = 0; k <= 60 && pass; ++k)
                pass = eb.coeff({n}, k) == rhs.coeff({n}, k);
        }
    }
    double secs = t.seconds();
    pass = pass && secs < 5.0;
    report("3 quiver calibration", pass, secs, 5);
    CHECK(pass);
}

TEST_CASE("criterion 4: symmetric-quiver integrality with negative control") {
    Timer t;
    bool pass = true;
    std::vector<QuiverSpec> battery = {
        QuiverSpec::from_arrow_list(1, {{0, 0}, {0, 0}}),
        QuiverSpec::from_arrow_list(1, {{0, 0}, {0, 0}, {0, 0}}),
        QuiverSpec::from_arrow_list(2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}}),
    };
    for (const auto& q : battery) {
        auto bps = bps_series(q, 3, 40);
        auto rep = integrality_report(q, bps);
        pass = pass && rep.all_pass && bps_round_trip(q, bps);
    }
    QuiverSpec a2 = QuiverSpec::from_arrow_list(2, {{0, 1}});
    auto bad = integrality_report(a2, bps_series(a2, 4, 40));
    pass = pass && !bad.all_pass;
    double secs = t.seconds();
    pass = pass && secs < 60.0;
    report("4 symmetric-quiver integrality", pass, secs, 60);
    CHECK(pass);
}

TEST_CASE("criterion 5: Bun_GL pipeline") {
    Timer t;
    bool pass = true;
    // rank 1 exact
    for (int g : {2, 3})
        for (long long d : {0LL, 1LL}) {
            auto ih = ih_series(1, d, g, 40);
            std::vector<long long> expect{1};
            for (int i = 0; i < 2 * g; ++i)
                expect.push_back(expect.back() * (2 * g - i) / (i + 1));
            pass = pass && ih.betti == expect;
        }
    // coprime matches the gerbe formula
    {
        BunSeriesCache cache(2, 40);
        auto ih = ih_series(2, 1, 2, 40, &cache);
        GradedSeries onemt2(0, 0, GradedSeries::KINF);
        onemt2.set({}, 0, Rat(1));
        onemt2.set({}, 2, Rat(-1));
        GradedSeries gerbe = onemt2 * cache.semistable(2, 1);
        for (long long k = 0; k <= ih.degree; ++k)
            pass = pass && gerbe.coeff({}, k) == Rat(ih.betti[(size_t)k]);
    }
    // (2,0) at g = 2 and 3: integral, nonnegative, palindromic of degree
    // 2(r^2(g-1)+1); golden values from the first verified run
    {
        auto ih2 = ih_series(2, 0, 2, 40);
        pass = pass && ih2.degree == 10;
        pass = pass && ih2.betti == std::vector<long long>{1, 4, 7, 8, 8, 8, 8, 8, 7, 4, 1};
        auto ih3 = ih_series(2, 0, 3, 40);
        pass = pass && ih3.degree == 18;
        pass = pass && ih3.betti == std::vector<long long>{1, 6, 16, 32, 67, 128, 189, 224,
                                                           239, 244, 239, 224, 189, 128, 67,
                                                           32, 16, 6, 1};
        // the gates (palindromy, nonnegativity, integrality) are enforced
        // inside ih_series; reaching here means they held
    }
    double secs = t.seconds();
    pass = pass && secs < 120.0;
    report("5 Bun_GL pipeline", pass, secs, 120);
    CHECK(pass);
}

TEST_CASE("criterion 6: face-lattice oracle equivalence on 20 examples") {
    Timer t;
    bool pass = true;
    testutil::Rng rng(0xFACE);
    // battery of (group, representation) pairs of rank <= 3 with <= 12
    // hyperplanes, all with numerically symmetric weights
    std::vector<std::pair<GroupSpec, WeightMultiset>> battery;
    auto add = [&battery](GroupSpec spec, WeightMultiset v) {
        battery.emplace_back(std::move(spec), std::move(v));
    };
    add({{}, 1}, WeightMultiset::of({{{1}, 1}, {{-1}, 1}}));
    add({{}, 1}, WeightMultiset::of({{{2}, 1}, {{-2}, 1}, {{1}, 2}, {{-1}, 2}}));
    add({{}, 2}, WeightMultiset::of({{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}));
    add({{}, 2}, WeightMultiset::of({{{1, 1}, 1}, {{-1, -1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1},
                                     {{1, 0}, 1}, {{-1, 0}, 1}}));
    add({{}, 3}, WeightMultiset::of({{{1, 0, 0}, 1}, {{-1, 0, 0}, 1}, {{0, 1, 0}, 1},
                                     {{0, -1, 0}, 1}, {{0, 0, 1}, 1}, {{0, 0, -1}, 1}}));
    add({{}, 3}, WeightMultiset::of({{{1, 1, 0}, 1}, {{-1, -1, 0}, 1}, {{0, 1, 1}, 1},
                                     {{0, -1, -1}, 1}, {{1, 0, 1}, 1}, {{-1, 0, -1}, 1}}));
    {
        RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
        add({{{'A', 1, Isogeny::SimplyConnected}}, 0}, {});
        add({{{'A', 1, Isogeny::SimplyConnected}}, 0}, WeightMultiset::adjoint(a1));
        add({{{'A', 1, Isogeny::SimplyConnected}}, 0},
            WeightMultiset::of({{{1}, 1}, {{-1}, 1}}));
        add({{{'A', 1, Isogeny::SimplyConnected}}, 1},
            WeightMultiset::of({{{1, 1}, 1}, {{-1, -1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}}));
    }
    {
        RootDatum gl2 = build_root_datum({{{'A', 1, Isogeny::GL}}, 0});
        add({{{'A', 1, Isogeny::GL}}, 0}, {});
        add({{{'A', 1, Isogeny::GL}}, 0}, WeightMultiset::adjoint(gl2));
        add({{{'A', 1, Isogeny::GL}}, 0},
            WeightMultiset::of({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}}));
    }
    {
        RootDatum gl3 = build_root_datum({{{'A', 2, Isogeny::GL}}, 0});
        add({{{'A', 2, Isogeny::GL}}, 0}, {});
        add({{{'A', 2, Isogeny::GL}}, 0}, WeightMultiset::adjoint(gl3));
        add({{{'A', 2, Isogeny::GL}}, 0},
            WeightMultiset::of({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1},
                                {{-1, 0, 0}, 1}, {{0, -1, 0}, 1}, {{0, 0, -1}, 1}}));
    }
    {
        RootDatum a2 = build_root_datum({{{'A', 2, Isogeny::SimplyConnected}}, 0});
        add({{{'A', 2, Isogeny::SimplyConnected}}, 0}, {});
        add({{{'A', 2, Isogeny::SimplyConnected}}, 0}, WeightMultiset::adjoint(a2));
    }
    {
        RootDatum b2 = build_root_datum({{{'B', 2, Isogeny::SimplyConnected}}, 0});
        add({{{'B', 2, Isogeny::SimplyConnected}}, 0}, {});
        add({{{'B', 2, Isogeny::SimplyConnected}}, 0}, WeightMultiset::adjoint(b2));
    }
    REQUIRE(battery.size() == 20);
    for (auto& [spec, v] : battery) {
        RootDatum rd = build_root_datum(spec);
        auto weyl = weyl_elements(rd);
        Arrangement arr = arrangement(rd, v);
        if (arr.hyperplanes.size() > 12) {
            pass = false;
            break;
        }
        // oracle: all subsets
        std::set<QMat, bool (*)(const QMat&, const QMat&)> subs(subspace_less);
        for (size_t mask = 0; mask < (1u << arr.hyperplanes.size()); ++mask) {
            QMat rows;
            for (size_t i = 0; i < arr.hyperplanes.size(); ++i)
                if (mask & (1u << i)) rows.push_back(to_qvec(arr.hyperplanes[i].normal));
            subs.insert(null_space(rows, rd.rank));
        }
        std::set<QMat, bool (*)(const QMat&, const QMat&)> oracle(subspace_less);
        for (const auto& s : subs) oracle.insert(orbit_minimum(s, weyl));
        auto got = special_faces(rd, v, weyl);
        if (got.size() != oracle.size()) pass = false;
        for (const auto& fc : got)
            if (!oracle.count(orbit_minimum(fc.face.basis, weyl))) pass = false;
        // sign representation: homomorphism + base-chamber independence on
        // every face small enough to enumerate (independence is re-verified
        // from every chamber inside sign_representation)
        for (const auto& fc : got) {
            if (fc.face.dim() > 4 || fc.face.walls.size() > 64) continue;
            auto chambers = chambers_in_face(fc.face);
            if (chambers.empty()) continue;
            auto sgn = sign_representation(rd, v, fc.face, fc.aut, chambers);
            for (size_t i = 0; i < fc.aut.action_on_f.size() && pass; ++i)
                for (size_t j = 0; j < fc.aut.action_on_f.size(); ++j) {
                    QMat prod(fc.face.dim(), QVec(fc.face.dim(), Rat(0)));
                    for (size_t a = 0; a < fc.face.dim(); ++a)
                        for (size_t b = 0; b < fc.face.dim(); ++b)
                            for (size_t c = 0; c < fc.face.dim(); ++c)
                                prod[a][b] +=
                                    fc.aut.action_on_f[i][a][c] * fc.aut.action_on_f[j][c][b];
                    size_t pidx = fc.aut.action_on_f.size();
                    for (size_t k = 0; k < fc.aut.action_on_f.size(); ++k)
                        if (fc.aut.action_on_f[k] == prod) pidx = k;
                    if (pidx == fc.aut.action_on_f.size() ||
                        sgn.values[pidx] != sgn.values[i] * sgn.values[j]) {
                        pass = false;
                        break;
                    }
                }
        }
    }
    double secs = t.seconds();
    pass = pass && secs < 60.0;
    report("6 face-lattice oracle", pass, secs, 60);
    CHECK(pass);
}

TEST_CASE("criterion 7: representation theory indicators and two-out-of-three") {
    Timer t;
    bool pass = true;
    // SL2 standard symplectic
    RootDatum a1 = build_root_datum({{{'A', 1, Isogeny::SimplyConnected}}, 0});
    pass = pass && self_dual_indicator(a1, {1}) == SelfDuality::Symplectic;
    // adjoints of A1..A3, B2, G2 are orthogonal
    {
        auto adjoint_orthogonal = [&pass](GroupSpec spec) {
            RootDatum rd = build_root_datum(spec);
            IVec hr;
            for (const auto& r : rd.roots)
                if (is_dominant(rd, r)) hr = r;
            pass = pass && self_dual_indicator(rd, hr) == SelfDuality::Orthogonal;
            pass = pass && is_orthogonal(rd, WeightMultiset::adjoint(rd));
        };
        adjoint_orthogonal({{{'A', 1, Isogeny::SimplyConnected}}, 0});
        adjoint_orthogonal({{{'A', 2, Isogeny::SimplyConnected}}, 0});
        adjoint_orthogonal({{{'A', 3, Isogeny::SimplyConnected}}, 0});
        adjoint_orthogonal({{{'B', 2, Isogeny::SimplyConnected}}, 0});
        adjoint_orthogonal({{{'G', 2, Isogeny::SimplyConnected}}, 0});
    }
    // SL3 standard not self-dual
    RootDatum a2 = build_root_datum({{{'A', 2, Isogeny::SimplyConnected}}, 0});
    pass = pass && self_dual_indicator(a2, {1, 0}) == SelfDuality::NotSelfDual;
    // two-out-of-three on 100 random symmetric pairs of genuine characters
    testutil::Rng rng(0x20F3);
    int checked = 0;
    RootDatum gl2 = build_root_datum({{{'A', 1, Isogeny::GL}}, 0});
    for (int it = 0; it < 100; ++it) {
        const RootDatum& rd = (it % 2 == 0) ? a1 : gl2;
        WeightMultiset v1 = testutil::random_character(rng, rd, 2, true);
        WeightMultiset v2 = testutil::random_character(rng, rd, 2, rng.range(0, 1) == 1);
        WeightMultiset sum = v1;
        for (const auto& [w, m] : v2.mult) sum.add(w, m);
        if (!is_symmetric(v1)) {
            pass = false;
            break;
        }
        if (is_symmetric(sum)) {
            ++checked;
            if (!is_symmetric(v2)) {
                pass = false;
                break;
            }
            if (is_orthogonal(rd, v1) && is_orthogonal(rd, sum) && !is_orthogonal(rd, v2)) {
                pass = false;
                break;
            }
        }
    }
    pass = pass && checked >= 30;
    double secs = t.seconds();
    pass = pass && secs < 30.0;
    report("7 representation theory", pass, secs, 30);
    CHECK(pass);
}

TEST_CASE("criterion 8: smallness margin on 100 random symmetric multisets") {
    Timer t;
    bool pass = true;
    testutil::Rng rng(0x5A11);
    for (int it = 0; it < 100; ++it) {
        size_t rank = (size_t)rng.range(1, 3);
        WeightMultiset v;
        int pairs = (int)rng.range(0, 5);
        for (int p = 0; p < pairs; ++p) {
            IVec w(rank);
            for (auto& x : w) x = rng.range(-2, 2);
            long long m = rng.range(1, 2);
            v.add(w, m);
            bool zero = true;
            for (auto x : w)
                if (x) zero = false;
            if (!zero) {
                IVec neg(rank);
                for (size_t i = 0; i < rank; ++i) neg[i] = -w[i];
                v.add(neg, m);
            }
        }
        auto rep = smallness_margin(v, rank);
        if (rep.margin < 0) pass = false;
        // equality only when forced: the degenerate empty case
        if (rep.equality && !v.empty()) pass = false;
        if (v.empty() && !(rep.margin == 0 && rep.equality)) pass = false;
    }
    double secs = t.seconds();
    pass = pass && secs < 10.0;
    report("8 smallness margin", pass, secs, 10);
    CHECK(pass);
}

TEST_CASE("criterion 9: admissibility matches slope divisibility; injectivity") {
    Timer t;
    bool pass = true;
    for (int r : {2, 3}) {
        GroupSpec spec;
        spec.factors.push_back({'A', r - 1, Isogeny::GL});
        RootDatum rd = build_root_datum(spec);
        auto weyl = weyl_elements(rd);
        WeightMultiset empty;
        auto classes = special_faces(rd, empty, weyl);
        for (long long d = -6; d <= 6; ++d) {
            IVec degree(rd.rank, 0);
            degree[0] = d;
            for (const auto& fc : classes) {
                LeviDatum levi = levi_of_subspace(rd, fc.face.basis);
                auto parts = gl_block_partition(rd, fc.face.basis);
                // prediction: lift exists iff every block size r_i satisfies
                // r | r_i d, i.e. slopes r_i d / r are integers
                bool predicted = true;
                for (size_t ri : parts)
                    if (((long long)ri * d) % r != 0) predicted = false;
                auto lift = admissible_lift(rd, levi, degree);
                bool got = lift.has_value() && lift->integral;
                if (got != predicted) pass = false;
                if (lift) {
                    // the lift's class modulo the Levi coroot span is unique
                    // and equals the slope vector (d/r, ..., d/r)
                    QVec diff(rd.rank);
                    for (size_t i = 0; i < rd.rank; ++i)
                        diff[i] = lift->rational_lift[i] - Rat(d, r);
                    QMat lspan;
                    for (size_t idx : levi.root_indices)
                        lspan.push_back(to_qvec(rd.coroots[idx]));
                    lspan = row_space_basis(lspan);
                    bool zero = true;
                    for (const auto& x : diff)
                        if (!x.is_zero()) zero = false;
                    if (!zero && !in_row_space(lspan, diff)) pass = false;
                }
            }
            // injectivity of admissible degrees into pi_1(G) = Z: enumerate
            // admissible torus degrees in a box and check distinct images
            {
                QMat full(rd.rank, QVec(rd.rank, Rat(0)));
                for (size_t i = 0; i < rd.rank; ++i) full[i][i] = Rat(1);
                LeviDatum torus = levi_of_subspace(rd, full);
                // A_G(torus) = {(a,..,a)} in Z^r: brute force all |c| <= 2
                std::set<long long> images;
                std::vector<IVec> admissible;
                IVec cur(rd.rank, 0);
                std::function<void(size_t)> rec = [&](size_t i) {
                    if (i == rd.rank) {
                        // admissible iff killed by all characters trivial on
                        // Z(G): differences of coordinates
                        for (size_t a = 0; a + 1 < rd.rank; ++a)
                            if (cur[a] != cur[a + 1]) return;
                        admissible.push_back(cur);
                        return;
                    }
                    for (long long v = -2; v <= 2; ++v) {
                        cur[i] = v;
                        rec(i + 1);
                    }
                };
                rec(0);
                for (const auto& a : admissible) {
                    long long image = 0;
                    for (auto x : a) image += x;
                    if (images.count(image)) pass = false;
                    images.insert(image);
                }
            }
        }
    }
    double secs = t.seconds();
    pass = pass && secs < 10.0;
    report("9 admissibility", pass, secs, 10);
    CHECK(pass);
}
