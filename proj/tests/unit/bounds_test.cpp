#include <doctest.h>

#include "rs/bounds.hpp"

using namespace rs;

namespace {

// keys not listed stay undetermined
CValues table(std::map<std::string, int> v) {
    CValues c;
    for (const auto& k : all_keys()) {
        auto it = v.find(k.str());
        c[k] = it == v.end() ? std::nullopt : std::optional<int>(it->second);
    }
    return c;
}

AlgNum inv_sq(const AlgNum& x) { return (x * x).inverse(); }

const TheoremRow& find_row(const std::vector<TheoremRow>& rows, const std::string& label) {
    for (const auto& r : rows)
        if (r.label == label) return r;
    throw std::runtime_error("no row " + label);
}

}  // namespace

TEST_SUITE("algnum") {
    TEST_CASE("rendering") {
        CHECK(AlgNum(7, 0, -4).str() == "7 - 4*sqrt(3)");
        CHECK(AlgNum(Rational(11, 7), -1).str() == "(11 - 7*sqrt(2))/7");
        CHECK(AlgNum(Rational(1, 16)).str() == "1/16");
        CHECK(AlgNum(14, 0, -8).str() == "14 - 8*sqrt(3)");
        CHECK(AlgNum(0).str() == "0");
        CHECK(AlgNum(0, 0, 0, -1).str() == "-sqrt(6)");
    }

    TEST_CASE("exact comparisons of nearby values") {
        CHECK(AlgNum(Rational(4, 31)) > AlgNum(Rational(1, 8)));
        CHECK(AlgNum(7, 0, -4).sign() > 0);
        CHECK(inv_sq(AlgNum(2, 0, 1)) == AlgNum(7, 0, -4));
        // sqrt2 + sqrt3 = 3.14626436994...
        AlgNum s(0, 1, 1);
        CHECK(s > AlgNum(Rational(314626436994LL, 100000000000LL)));
        CHECK(s < AlgNum(Rational(314626436995LL, 100000000000LL)));
        // 5 + 2 sqrt6 against 10: differs by about 0.1
        CHECK(AlgNum(5, 0, 0, 2) < AlgNum(10));
        CHECK(AlgNum(1, 1, -1, 0).sign() == (1 + std::sqrt(2.0) - std::sqrt(3.0) > 0 ? 1 : -1));
    }

    TEST_CASE("units and inverses") {
        CHECK(AlgNum(7, 0, 4) * AlgNum(7, 0, -4) == AlgNum(1));
        AlgNum x(Rational(3, 5), 2, -1, Rational(1, 7));
        CHECK(x * x.inverse() == AlgNum(1));
        CHECK_THROWS_AS(AlgNum(1) / AlgNum(0), std::domain_error);
    }

    TEST_CASE("square roots of integers") {
        CHECK(*AlgNum::sqrt_int(12) == AlgNum(0, 0, 2));
        CHECK(*AlgNum::sqrt_int(72) == AlgNum(0, 6));
        CHECK(*AlgNum::sqrt_int(54) == AlgNum(0, 0, 0, 3));
        CHECK(*AlgNum::sqrt_int(49) == AlgNum(7));
        CHECK_FALSE(AlgNum::sqrt_int(5));
        Rational r = sqrt_upper(5);
        CHECK(r * r >= 5);
        Rational lo = r - Rational(1, 1000000000000LL);
        CHECK(lo * lo < 5);
    }

    TEST_CASE("rational parsing") {
        CHECK(parse_rational("-3/12") == Rational(-1, 4));
        CHECK(rat_str(Rational(6, 4)) == "3/2");
        CHECK(rat_str(Rational(5)) == "5");
    }
}

TEST_SUITE("strategies") {
    TEST_CASE("S2 nsp vs nsp: 1/(2+sqrt3)^2") {
        auto c = table({{"c20", 1}, {"c11", 0}, {"c10", 0}, {"c01", 0}, {"c40", 3}, {"c21", 0}, {"c02", 1}, {"c22", 2}});
        auto v = strategy_eval(Strategy::S2, c, Cls::NSP, Cls::NSP);
        REQUIRE(v);
        CHECK(v->value == AlgNum(7, 0, -4));
        CHECK_FALSE(v->approximate);
    }

    TEST_CASE("S4 dihedral P pair over different fields: 3/16") {
        auto c = table({{"c20", 3}, {"c11", 0}, {"c10", 0}, {"c01", 0}});
        auto v = strategy_eval(Strategy::S4, c, Cls::Dihedral, Cls::Dihedral);
        REQUIRE(v);
        CHECK(v->value == AlgNum(Rational(3, 16)));
        CHECK_FALSE(strategy_eval(Strategy::S4, c, Cls::Dihedral, Cls::NSP));
    }

    TEST_CASE("S1 dihedral P against notP: 9/44") {
        auto c = table({{"c40", 21}, {"c31", 0}, {"c22", 6}, {"c30", 6}, {"c21", 0}, {"c12", 0}, {"c20", 3},
                        {"c11", 0}, {"c02", 2}, {"c10", 0}, {"c01", 0}});
        auto v = strategy_eval(Strategy::S1, c, Cls::Dihedral, Cls::Dihedral);
        REQUIRE(v);
        CHECK(v->value == AlgNum(Rational(9, 44)));
    }

    TEST_CASE("S3 tetrahedral vs octahedral: 4/17") {
        auto c = table({{"c20", 1}, {"c11", 0}, {"c02", 1}, {"c40", 7}, {"c31", 0}, {"c22", 1}, {"c13", 0}, {"c04", 4}});
        auto v = strategy_eval(Strategy::S3, c, Cls::Tetrahedral, Cls::Octahedral);
        REQUIRE(v);
        CHECK(v->value == AlgNum(Rational(4, 17)));
    }

    TEST_CASE("undetermined inputs disable a strategy") {
        auto c = table({{"c20", 1}, {"c11", 0}, {"c02", 1}, {"c40", 7}, {"c31", 0}, {"c22", 1}, {"c04", 4}});
        CHECK_FALSE(strategy_eval(Strategy::S3, c, Cls::Tetrahedral, Cls::Octahedral));
    }

    TEST_CASE("S2 outside the field gives a marked rational below the true value") {
        auto c = table({{"c20", 1}, {"c11", 0}, {"c10", 0}, {"c01", 0}, {"c40", 5}, {"c21", 0}, {"c02", 0}, {"c22", 0}});
        auto v = strategy_eval(Strategy::S2, c, Cls::NSP, Cls::NSP);
        REQUIRE(v);
        CHECK(v->approximate);
        CHECK(v->value.is_rational());
        double exact = 1.0 / (6.0 + 2.0 * std::sqrt(5.0));
        CHECK(v->value.approx() <= exact);
        CHECK(v->value.approx() > exact - 1e-9);
    }

    TEST_CASE("S6 tetrahedral vs nsp: 1/14 + 1/(2+sqrt2)^2") {
        BoundReport b = case_bound(parse_case("tetrahedral,nsp"), Target::Star, Strategy::S6);
        CHECK(b.uniform == AlgNum(Rational(11, 7), -1));
        CHECK(b.uniform == AlgNum(Rational(1, 14)) + inv_sq(AlgNum(2, 1)));
    }

    TEST_CASE("names and targets") {
        CHECK(parse_strategy("S5") == Strategy::S5);
        CHECK(strategy_name(Strategy::S2) == "S2");
        CHECK(parse_target("gt-swapped") == Target::GtSwapped);
        CHECK(target_name(Target::Star) == "star");
        CHECK_THROWS_AS(parse_strategy("S7"), std::invalid_argument);
        CHECK_THROWS_AS(parse_target("lt"), std::invalid_argument);
        CHECK(strategy_fits(Strategy::S1, Target::GtSwapped));
        CHECK_FALSE(strategy_fits(Strategy::S3, Target::Gt));
        CHECK_THROWS_AS(case_bound(parse_case("nsp,nsp"), Target::Gt, Strategy::S3), std::invalid_argument);
    }
}

TEST_SUITE("case bounds") {
    TEST_CASE("tetrahedral pair, S1: 1/16") {
        CHECK(case_bound(parse_case("tetrahedral,tetrahedral"), Target::Gt, Strategy::S1).uniform ==
              AlgNum(Rational(1, 16)));
    }

    TEST_CASE("dihedral P against nsp, S3: 8/21") {
        CHECK(case_bound(parse_case("dihedral:P,nsp"), Target::Star, Strategy::S3).uniform == AlgNum(Rational(8, 21)));
    }

    TEST_CASE("notP pair over one field, S5: 1/8") {
        AlgNum lo(1);
        for (const auto& c : expand_case(parse_case("dihedral:notP,dihedral:notP,sameK")))
            lo = std::min(lo, case_bound(c, Target::Star, Strategy::S5).uniform);
        CHECK(lo == AlgNum(Rational(1, 8)));
    }

    // Published 1/12 combines c22 = 3 with c13 = 0; on every branch where c22 = 3
    // the engine also finds c13 >= 1, which yields 1/11.
    TEST_CASE("notP against octahedral, swapped S1: 1/12" * doctest::may_fail()) {
        AlgNum lo(1);
        for (const auto& c : expand_case(parse_case("dihedral:notP,octahedral")))
            lo = std::min(lo, case_bound(c, Target::GtSwapped, Strategy::S1).uniform);
        CHECK(lo == AlgNum(Rational(1, 12)));
    }

    TEST_CASE("branch reports cite the keys they used") {
        BoundReport b = case_bound(parse_case("nsp,nsp"), Target::Gt, Strategy::S2);
        CHECK(b.branches.size() == 2);
        CHECK(std::find(b.keys_used.begin(), b.keys_used.end(), MomentKey{4, 0}) != b.keys_used.end());
        for (const auto& br : b.branches) CHECK(br.strategy == Strategy::S2);
    }
}

TEST_SUITE("theorem tables") {
    TEST_CASE("global minimum for the forward set: 1/16") {
        auto t = theorem_table("1.1");
        CHECK(t.front().pinned_value == AlgNum(Rational(1, 16)));
        CHECK(find_row(t, "nsp vs nsp").pinned_value == AlgNum(7, 0, -4));
    }

    TEST_CASE("global minimum for the star set: 1/8") {
        auto t = theorem_table("thm1.2");
        CHECK(t.front().pinned_value == AlgNum(Rational(1, 8)));
        CHECK(find_row(t, "nsp vs nsp").pinned_value == AlgNum(14, 0, -8));
    }

    TEST_CASE("different fields, notP pair, star: 25/71") {
        bool seen = false;
        for (const auto& r : theorem_table("4.4"))
            if (r.pinned_value == AlgNum(Rational(25, 71))) seen = r.pinned_ok();
        CHECK(seen);
    }

    TEST_CASE("nsp pair, star: 14 - 8 sqrt3") {
        CHECK(find_row(theorem_table("3.3"), "nsp vs nsp").pinned_value == AlgNum(14, 0, -8));
    }

    TEST_CASE("pinned entries reproduce exactly") {
        for (const char* id : {"3.2", "3.3", "4.2", "4.4", "5.2"})
            for (const auto& r : theorem_table(id)) {
                INFO(id << " " << r.label << " got " << r.pinned_value.str());
                CHECK(r.pinned_ok());
            }
    }

    TEST_CASE("pinned entries for mixed classes reproduce exactly" * doctest::may_fail()) {
        for (const auto& r : theorem_table("5.1")) {
            INFO(r.label << " got " << r.pinned_value.str() << " expected " << r.expected.str());
            CHECK(r.pinned_ok());
        }
    }

    TEST_CASE("unknown id") { CHECK_THROWS_AS(theorem_table("2.7"), std::invalid_argument); }
}
