#include <doctest.h>

#include "qrv/verify.hpp"

using namespace qrv;

namespace {

Algebra one_loop() {
    return parse_algebra_text(R"({
        "vertices": ["x"],
        "arrows": [{"id": "a", "tail": "x", "head": "x"}],
        "radical_square_zero": true
    })");
}

Algebra two_cycle() {
    return parse_algebra_text(R"({
        "vertices": ["x", "y"],
        "arrows": [
            {"id": "a", "tail": "x", "head": "y"},
            {"id": "b", "tail": "y", "head": "x"}
        ],
        "radical_square_zero": true
    })");
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("sampled points land in the stratum") {
        Algebra A = two_cycle();
        DimVec d = {2, 2};
        RankSeq r = {1, 1};
        Fp f(32003);
        for (uint64_t s = 0; s < 5; ++s) {
            auto rep = sample_component_point(f, A, d, r, s);
            CHECK(satisfies_relations(f, A, rep));
            CHECK(x_rank(f, A.q, rep, 0) == 1);
            CHECK(x_rank(f, A.q, rep, 1) == 1);
        }
        // rational sampling works too
        Rat fr;
        auto rrep = sample_component_point(fr, A, d, r, 0);
        CHECK(satisfies_relations(fr, A, rrep));
        CHECK(x_rank(fr, A.q, rrep, 0) == 1);
    }

    TEST_CASE("sampling follows the seed") {
        Algebra A = one_loop();
        Fp f(32003);
        auto a = sample_component_point(f, A, {2}, {1}, 7);
        auto b = sample_component_point(f, A, {2}, {1}, 7);
        auto c = sample_component_point(f, A, {2}, {1}, 8);
        CHECK(mat_equal(f, a.mats[0], b.mats[0]));
        CHECK_FALSE(mat_equal(f, a.mats[0], c.mats[0]));
    }

    TEST_CASE("sampling rejects an empty stratum") {
        Algebra A = one_loop();
        Fp f(32003);
        CHECK_THROWS_WITH_AS(sample_component_point(f, A, {2}, {2}, 0),
                             doctest::Contains("empty stratum"), Error);
    }

    TEST_CASE("membership holds on own generators") {
        Algebra A = one_loop();
        DimVec d = {3};
        RankSeq r = {1};
        GeneratorSet gs = generators_for_component(A, d, r);
        Fp f(32003);
        for (uint64_t s = 0; s < 10; ++s) {
            auto rep = sample_component_point(f, A, d, r, s);
            auto m = membership_test(f, gs, A.q, rep);
            CHECK(m.all_vanish);
        }
    }

    TEST_CASE("containment detects the closure order") {
        Algebra A = one_loop();
        DimVec d = {2};
        SampleConfig cfg;
        cfg.trials = 30;
        // the zero stratum sits inside the nilpotent component closure
        CHECK(containment_test(A, d, {0}, {1}, cfg).contained);
        auto rep = containment_test(A, d, {1}, {0}, cfg);
        CHECK_FALSE(rep.contained);
        CHECK(rep.violation_trial >= 0);
        CHECK(rep.per_eval_error_bound < 0.001);
    }

    TEST_CASE("maximality matches the component prediction") {
        SampleConfig cfg;
        cfg.trials = 25;
        for (auto* A : {new Algebra(one_loop()), new Algebra(two_cycle())}) {
            DimVec d(A->q.num_vertices(), 2);
            auto rep = maximality_by_containment(*A, d, cfg);
            CHECK(rep.agree);
            delete A;
        }
    }

    TEST_CASE("codimension at smooth points") {
        Algebra A = one_loop();
        SampleConfig cfg;
        auto rep = codim_check(A, {2}, {1}, 10, cfg);
        CHECK(rep.ok);
        CHECK(rep.ambient == 4);
        CHECK(rep.expected_dimension == 2);
    }

    TEST_CASE("jacobian codimension of an explicit point") {
        // C_0 of the one-loop at d=2: ideal = all four entries, codim 4 at 0
        Algebra A = one_loop();
        GeneratorSet gs = generators_for_component(A, {2}, {0});
        Fp f(32003);
        Rep<Fp> zero = zero_rep(f, A.q, {2});
        CHECK(jacobian_codim(f, gs, A.q, zero) == 4);
    }

    TEST_CASE("endomorphism dimensions of known representations") {
        Algebra A = two_cycle();
        Fp f(32003);
        // zero maps: End = End(k^2) x End(k^2)
        Rep<Fp> z = zero_rep(f, A.q, {2, 2});
        CHECK(endomorphism_dim(f, A.q, z) == 8);
        // identity maps on d=(1,1): End = k (diagonal pairs)
        Rep<Fp> id;
        id.dim = {1, 1};
        id.mats = {Mat<Fp>::identity(f, 1), Mat<Fp>::identity(f, 1)};
        CHECK(endomorphism_dim(f, A.q, id) == 1);
        CHECK(is_schur(f, A.q, id));
    }

    TEST_CASE("endomorphism additivity across the embedding") {
        Algebra A = parse_algebra_text(R"({
            "vertices": ["x"],
            "arrows": [
                {"id": "l1", "tail": "x", "head": "x"},
                {"id": "l2", "tail": "x", "head": "x"}
            ],
            "radical_square_zero": true
        })");
        SampleConfig cfg;
        auto rep = endo_additivity_check(A, 0, {3}, 1, 10, cfg);
        CHECK(rep.ok);
        auto rep2 = endo_additivity_check(A, 0, {3}, 2, 10, cfg);
        CHECK(rep2.ok);
    }

    TEST_CASE("subspace enumeration counts") {
        Fp f2(2), f3(3);
        CHECK(all_subspaces(f2, 0).size() == 1);
        CHECK(all_subspaces(f2, 1).size() == 2);
        CHECK(all_subspaces(f2, 2).size() == 5);
        CHECK(all_subspaces(f2, 3).size() == 16);
        CHECK(all_subspaces(f2, 4).size() == 67);
        CHECK(all_subspaces(f3, 2).size() == 6);  // 0, three lines, plane x2
    }

    TEST_CASE("brute-force semistability on the A2 quiver") {
        Algebra A = parse_algebra_text(R"({
            "vertices": ["x", "y"],
            "arrows": [{"id": "a", "tail": "x", "head": "y"}],
            "radical_square_zero": true
        })");
        Fp f(2);
        Weight theta = {1, -1};
        Rep<Fp> m;
        m.dim = {1, 1};
        m.mats = {Mat<Fp>::identity(f, 1)};
        CHECK(is_semistable_bruteforce(f, A, m, theta));
        CHECK(is_semistable_bruteforce(f, A, m, theta, true));
        Rep<Fp> z = zero_rep(f, A.q, {1, 1});
        // the submodule supported on x has positive weight
        CHECK_FALSE(is_semistable_bruteforce(f, A, z, theta));
        Weight flat = {0, 0};
        CHECK(is_semistable_bruteforce(f, A, z, flat));
        CHECK_FALSE(is_semistable_bruteforce(f, A, z, flat, true));
        CHECK_THROWS_WITH_AS(is_semistable_bruteforce(f, A, m, {1, 1}),
                             doctest::Contains("pair to zero"), Error);
    }

    TEST_CASE("moduli consistency on a small instance") {
        Algebra A = two_cycle();
        auto rep = moduli_consistency_check(A, {1, 1}, {1, -1}, 2);
        CHECK(rep.ok);
        CHECK(rep.points == 3);  // (a,b) in F_2^2 with ab = 0 = ba
        CHECK(rep.semistable_points > 0);
        auto flat = moduli_consistency_check(A, {1, 1}, {0, 0}, 2);
        CHECK(flat.ok);
    }

    TEST_CASE("random translates span the saturation") {
        Algebra A = parse_algebra_text(R"({
            "vertices": ["y", "x"],
            "arrows": [{"id": "a", "tail": "y", "head": "x"}],
            "radical_square_zero": true
        })");
        DimVec d = {1, 2};
        VarTable vt(A.q, d);
        int x = A.q.vertex_index("x");
        Poly top = Poly::variable(vt.index(0, 0, 0));
        auto sat = saturate_span({top}, A.q, d, vt, x);
        auto rnd = random_translate_span({top}, A.q, d, vt, x, 8, 42);
        REQUIRE(sat.size() == rnd.size());
        LinearSpan a, b;
        for (const auto& p : sat) a.insert(p);
        for (const auto& p : rnd) b.insert(p);
        for (const auto& p : sat) CHECK(b.contains(p));
        for (const auto& p : rnd) CHECK(a.contains(p));
    }
}
