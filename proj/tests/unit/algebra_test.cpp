#include <doctest.h>

#include "rs/poles.hpp"

using namespace rs;

namespace {

CharExpr g(int id, i64 k = 1) { return CharExpr::gen(id, k); }

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_SUITE("case spec") {
    TEST_CASE("round trips through the grammar") {
        CHECK(parse_case("dihedral:Q,octahedral").str() == "dihedral:Q,octahedral");
        CHECK(parse_case("dihedral:P,dihedral:P,diffK").str() == "dihedral:P,dihedral:P,diffK");
        CHECK(parse_case("Dihedral:p,NSP").str() == "dihedral:P,nsp");
        CaseSpec s = parse_case("dihedral:IP,dihedral:R,sameK");
        CHECK(s.same_field);
        CHECK(s.s1 == Sub::IP);
        CHECK(s.s2 == Sub::R);
    }

    TEST_CASE("malformed specs are rejected") {
        CHECK_THROWS_AS(parse_case("tetrahedral:P,nsp"), std::invalid_argument);
        CHECK_THROWS_AS(parse_case("foo,nsp"), std::invalid_argument);
        CHECK_THROWS_AS(parse_case("nsp"), std::invalid_argument);
        CHECK_THROWS_AS(parse_case("nsp,nsp,sameK"), std::invalid_argument);
        CHECK_THROWS_AS(parse_case("dihedral:X,nsp"), std::invalid_argument);
        CHECK_THROWS_AS(parse_case("dihedral,nsp"), std::invalid_argument);
    }

    TEST_CASE("notP expands to the three concrete sub-flags") {
        auto v = expand_case(parse_case("dihedral:notP,dihedral:notP,sameK"));
        CHECK(v.size() == 9);
        for (const auto& c : v) {
            CHECK(c.s1 != Sub::NotP);
            CHECK(c.same_field);
        }
        CHECK(expand_case(parse_case("dihedral:P,nsp")).size() == 1);
    }
}

TEST_SUITE("characters") {
    TEST_CASE("nu*nu reduces to trivial under nu^2 = 1") {
        Context cx(parse_case("dihedral:P,nsp"), nullptr);
        int nu = cx.side(1).nu;
        CHECK(char_reduce(g(nu) + g(nu), cx).trivial_syntax());
        CHECK(char_is_trivial(g(nu, 2), cx) == Tri::Yes);
    }

    TEST_CASE("tau inverts a ratio character") {
        Context cx(parse_case("dihedral:R,nsp"), nullptr);
        int nu = cx.side(1).nu;
        CharExpr t = char_reduce(cx.tau(g(nu)), cx);
        CHECK(t == char_reduce(g(nu, -1), cx));
        CHECK(char_reduce(cx.tau(cx.tau(g(nu))), cx) == char_reduce(g(nu), cx));
    }

    TEST_CASE("nu^3 is trivial under property Q") {
        Context cx(parse_case("dihedral:Q,nsp"), nullptr);
        int nu = cx.side(1).nu;
        CHECK(char_is_trivial(g(nu, 3), cx) == Tri::Yes);
        CHECK(char_is_trivial(g(nu, 2), cx) == Tri::No);
    }

    TEST_CASE("unknown symbol is a scope error") {
        Context cx(parse_case("nsp,nsp"), nullptr);
        CHECK_THROWS_AS(char_reduce(g(static_cast<int>(cx.gens().size()) + 3), cx), std::out_of_range);
    }

    TEST_CASE("reduction is idempotent") {
        Context cx(parse_case("dihedral:Q,dihedral:IP,sameK"), nullptr);
        CharExpr e = g(cx.side(1).nu, 5) + g(cx.side(2).nu, -6) + g(cx.side(1).chi, 3);
        CHECK(char_reduce(char_reduce(e, cx), cx) == char_reduce(e, cx));
    }

    TEST_CASE("quadratic character of K/F is nontrivial") {
        Context cx(parse_case("dihedral:Q,octahedral"), nullptr);
        CHECK(char_is_trivial(g(cx.side(1).chi), cx) == Tri::No);
    }

    TEST_CASE("cross ratio: open without relations, settled in the same field") {
        Context diff(parse_case("dihedral:R,dihedral:R,diffK"), nullptr);
        CharExpr cross = g(diff.side(1).nu) + g(diff.side(2).nu);
        CHECK(char_is_trivial(cross, diff) == Tri::Unknown);
        Context same(parse_case("dihedral:P,dihedral:Q,sameK"), nullptr);
        CHECK(char_is_trivial(g(same.side(1).nu) + g(same.side(2).nu), same) == Tri::No);
    }
}

TEST_SUITE("scenario") {
    TEST_CASE("dihedral P twice over one field") {
        Context cx(parse_case("dihedral:P,dihedral:P,sameK"), nullptr);
        CHECK(cx.side(1).field == cx.side(2).field);
        CHECK(has(cx.equalities(), "nu1^2 = 1"));
        CHECK(has(cx.equalities(), "nu2^2 = 1"));
    }

    TEST_CASE("different fields keep separate quadratic characters") {
        Context cx(parse_case("dihedral:P,dihedral:P,diffK"), nullptr);
        CHECK(cx.side(1).field != cx.side(2).field);
    }

    TEST_CASE("tetrahedral carries a cubic self-twist, octahedral a quadratic one") {
        Context cx(parse_case("tetrahedral,octahedral"), nullptr);
        CHECK(cx.side(1).mu >= 0);
        CHECK(cx.side(2).eta >= 0);
        CHECK(char_is_trivial(g(cx.side(1).mu, 3), cx) == Tri::Yes);
        CHECK(char_is_trivial(g(cx.side(1).mu), cx) == Tri::No);
        CHECK(char_is_trivial(g(cx.side(2).eta, 2), cx) == Tri::Yes);
    }

    TEST_CASE("property Q: nu^2 != 1 and nu^3 = 1") {
        Context cx(parse_case("dihedral:Q,nsp"), nullptr);
        CHECK(has(cx.disequalities(), "nu1^2 != 1"));
        CHECK(has(cx.equalities(), "nu1^3 = 1"));
    }
}

TEST_SUITE("representations") {
    TEST_CASE("duals") {
        Context cx(parse_case("tetrahedral,dihedral:R"), nullptr);
        CHECK(rep_dual(mk_ad(1)) == mk_ad(1));
        Rep mu = mk_char(g(cx.side(1).mu));
        CHECK(rep_equiv(rep_dual(mu), mk_char(g(cx.side(1).mu, 2)), cx));
        Isobaric i = mk_induced(cx, cx.side(2).field, g(cx.side(2).nu));
        REQUIRE(i.size() == 1);
        CHECK(rep_equiv(rep_dual(i[0]), i[0], cx));
    }

    TEST_CASE("adjoints of the two sides are never equivalent") {
        Context cx(parse_case("octahedral,octahedral"), nullptr);
        CHECK(rep_equiv_tri(mk_ad(1), mk_ad(2), cx) == Tri::No);
    }

    TEST_CASE("tetrahedral adjoint absorbs its cubic twist") {
        Context cx(parse_case("tetrahedral,nsp"), nullptr);
        CHECK(rep_equiv_tri(mk_ad(1, g(cx.side(1).mu)), mk_ad(1), cx) == Tri::Yes);
    }

    TEST_CASE("induced from distinct fields differ") {
        Context cx(parse_case("dihedral:Q,dihedral:R,diffK"), nullptr);
        auto a = mk_induced(cx, cx.side(1).field, g(cx.side(1).nu));
        auto b = mk_induced(cx, cx.side(2).field, g(cx.side(2).nu));
        CHECK(rep_equiv_tri(a[0], b[0], cx) == Tri::No);
    }

    TEST_CASE("octahedral sigma against a dihedral induced symbol is a branch question") {
        Context cx(parse_case("octahedral,dihedral:Q"), nullptr);
        auto i = mk_induced(cx, cx.side(2).field, g(cx.side(2).nu));
        CHECK(rep_equiv_tri(mk_sigma(1), i[0], cx) == Tri::Unknown);
        CHECK_THROWS_AS(rep_equiv(mk_sigma(1), i[0], cx), NeedQuery);
    }

    TEST_CASE("equivalence is symmetric") {
        Context cx(parse_case("tetrahedral,dihedral:Q"), nullptr);
        std::vector<Rep> rs{mk_ad(1), mk_ad(1, g(cx.side(1).mu)), mk_char(g(cx.side(1).mu)),
                            mk_char(g(cx.side(2).chi)), mk_induced(cx, cx.side(2).field, g(cx.side(2).nu))[0]};
        for (const auto& a : rs)
            for (const auto& b : rs) CHECK(rep_equiv_tri(a, b, cx) == rep_equiv_tri(b, a, cx));
    }
}
