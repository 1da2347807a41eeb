#include <doctest.h>

#include "rs/chebotarev.hpp"

using namespace rs;

TEST_SUITE("groups") {
    TEST_CASE("Q8 and its traces") {
        FiniteGroup q = build_group("Q8");
        CHECK(q.size() == 8);
        for (int a = 0; a < q.size(); ++a) {
            const auto& l = q.labels[a];
            CHECK(q.abs_trace[a] == (l == "1" || l == "-1" ? 2 : 0));
        }
        int i = q.index_of("i"), j = q.index_of("j");
        CHECK(q.labels[q.op(i, j)] == "k");
        CHECK(q.labels[q.op(j, i)] == "-k");
        CHECK(q.labels[q.op(i, i)] == "-1");
    }

    TEST_CASE("binary tetrahedral: 24 elements, 16 of trace 1") {
        FiniteGroup g = build_group("binary_tetrahedral");
        CHECK(g.size() == 24);
        CHECK(std::count(g.abs_trace.begin(), g.abs_trace.end(), 1) == 16);
        int w = g.index_of("(-1+i+j+k)/2");
        REQUIRE(w >= 0);
        CHECK(g.op(g.op(w, w), w) == g.identity);
    }

    TEST_CASE("cyclic groups") {
        FiniteGroup t = build_group("cyclic:1");
        CHECK(t.size() == 1);
        CHECK(build_group("Z4").size() == 4);
        CHECK(build_group("cyclic:7").op(5, 4) == 2);
        CHECK(direct_product(build_group("Z2"), build_group("Z3")).size() == 6);
    }

    TEST_CASE("bad inputs") {
        CHECK_THROWS_AS(build_group("icosahedral"), std::invalid_argument);
        CHECK_THROWS_AS(build_group("cyclic:0"), std::invalid_argument);
        FiniteGroup bad;
        bad.name = "bad";
        bad.labels = {"a", "b"};
        bad.mul = {{0, 0}, {0, 0}};  // no inverse for b
        CHECK_THROWS_AS(finalize_group(bad), std::logic_error);
    }
}

TEST_SUITE("fibered products") {
    TEST_CASE("quotient maps are homomorphisms onto their targets") {
        FiniteGroup bt = build_group("binary_tetrahedral"), q8 = build_group("Q8");
        CHECK(is_homomorphism(bt, build_group("Z3"), tetra_mod_q8(bt)));
        CHECK(is_surjective(tetra_mod_q8(bt)));
        CHECK(is_homomorphism(q8, build_group("Z2"), q8_mod_i(q8)));
    }

    TEST_CASE("sizes") {
        CHECK(run_example("tetrahedral").order == 192);
        CHECK(run_example("dihedral1").order == 32);
        CHECK(run_example("dihedral2").order == 64);
        for (const auto& n : example_names()) CHECK(run_example(n).closed);
    }

    TEST_CASE("a non-homomorphism is rejected") {
        FiniteGroup q8 = build_group("Q8"), z2 = build_group("Z2");
        Hom h = q8_mod_i(q8);
        h.map[q8.index_of("i")] = 1;
        CHECK_FALSE(is_homomorphism(q8, z2, h));
        CHECK_THROWS_AS(fibered_subgroup(q8, h, q8, q8_mod_i(q8), z2), std::invalid_argument);
    }

    TEST_CASE("densities") {
        auto t = run_example("tetrahedral");
        CHECK(t.gt == Rational(1, 16));
        CHECK(t.neq == Rational(1, 8));
        auto d1 = run_example("dihedral1");
        CHECK(d1.gt == Rational(1, 8));
        CHECK(d1.neq == Rational(1, 4));
        auto d2 = run_example("dihedral2");
        CHECK(d2.gt == Rational(3, 16));
        CHECK(d2.neq == Rational(3, 8));
        for (const auto& n : example_names()) {
            auto r = run_example(n);
            CHECK(r.gt + r.gt_reversed + r.eq == 1);
            CHECK(r.gt == r.gt_reversed);
            CHECK(r.ok());
        }
        CHECK_THROWS_AS(run_example("icosahedral"), std::invalid_argument);
    }
}

TEST_SUITE("Z/4 characters") {
    TEST_CASE("all four checks hold") {
        Z4Check z = verify_property_P_Z4();
        REQUIRE(z.checks.size() == 4);
        for (const auto& [what, ok] : z.checks) {
            INFO(what);
            CHECK(ok);
        }
        CHECK(z.table.size() == 4);
        CHECK(z.table[0] == "psi0: 1 1 1 1");
    }
}

TEST_SUITE("model oracle") {
    TEST_CASE("nu of order 2 in Z/4: c20 = 3") {
        ModelInstance m{false, 4, 1, 3, 1};
        CHECK(model_subflag(4, 1) == Sub::P);
        CHECK(model_oracle(m, {2, 0}) == 3);
    }

    TEST_CASE("nu of order 3: c20 = 2") {
        ModelInstance m{false, 3, 1, 5, 1};
        CHECK(model_subflag(3, 1) == Sub::Q);
        CHECK(model_oracle(m, {2, 0}) == 2);
    }

    TEST_CASE("independent sides over different fields: c11 = 0") {
        ModelInstance m{false, 5, 1, 5, 2};
        CHECK(model_oracle(m, {1, 1}) == 0);
        CHECK(model_oracle(m, {0, 0}) == 1);
    }

    TEST_CASE("sub-flags from the order of nu") {
        CHECK(model_subflag(8, 1) == Sub::IP);
        CHECK(model_subflag(5, 1) == Sub::R);
        CHECK(model_subflag(12, 1) == Sub::R);
        CHECK(model_subflag(12, 2) == Sub::Q);
    }

    TEST_CASE("invalid instantiations are rejected") {
        CHECK_THROWS_AS(validate_model({false, 4, 2, 3, 1}), std::invalid_argument);  // nu trivial
        CHECK_THROWS_AS(validate_model({true, 5, 1, 5, 4}), std::invalid_argument);   // nu2 = nu1^-1
        CHECK_THROWS_AS(validate_model({true, 5, 1, 5, 1}), std::invalid_argument);
        CHECK_THROWS_AS(validate_model({true, 5, 1, 7, 1}), std::invalid_argument);
        CHECK_NOTHROW(validate_model({true, 5, 1, 5, 2}));
    }

    TEST_CASE("model case carries the wiring") {
        CaseSpec s = model_case({true, 8, 1, 8, 2});
        CHECK(s.str() == "dihedral:IP,dihedral:P,sameK");
    }
}
