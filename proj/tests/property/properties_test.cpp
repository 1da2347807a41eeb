#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rs/verify.hpp"

using namespace rs;

namespace {

Rational small_rational(std::mt19937& rng) {
    long long n = static_cast<long long>(rng() % 41) - 20;
    long long d = 1 + static_cast<long long>(rng() % 9);
    return Rational(n, d);
}

AlgNum random_algnum(std::mt19937& rng) {
    return AlgNum(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
}

std::map<std::string, bool> as_map(const Leaf& l) { return {l.assignment.begin(), l.assignment.end()}; }

// greedy multiset match under rep_equiv
bool same_multiset(Isobaric a, Isobaric b, Context& cx) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const Rep& y) { return rep_equiv(x, y, cx); });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

Isobaric dual_all(const Isobaric& a) {
    Isobaric o;
    for (const auto& r : a) o.push_back(rep_dual(r));
    return o;
}

}  // namespace

TEST_SUITE("algnum properties") {
    TEST_CASE("field axioms on random elements") {
        std::mt19937 rng(7);
        for (int t = 0; t < 200; ++t) {
            AlgNum x = random_algnum(rng), y = random_algnum(rng), z = random_algnum(rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK(x - x == AlgNum(0));
            if (!x.is_zero()) CHECK(x * x.inverse() == AlgNum(1));
        }
    }

    TEST_CASE("order is compatible with approximations and arithmetic") {
        std::mt19937 rng(11);
        for (int t = 0; t < 200; ++t) {
            AlgNum x = random_algnum(rng), y = random_algnum(rng);
            double dx = x.approx(), dy = y.approx();
            if (std::abs(dx - dy) > 1e-9) CHECK((x < y) == (dx < dy));
            CHECK((x < y) == (x + AlgNum(3) < y + AlgNum(3)));
            CHECK((x * x).sign() >= 0);
        }
    }

    TEST_CASE("(7+4 sqrt3)(7-4 sqrt3) = 1") {
        CHECK(AlgNum(7, 0, 4) * AlgNum(7, 0, -4) == AlgNum(1));
        CHECK(AlgNum(7, 0, 4).inverse() == AlgNum(7, 0, -4));
    }
}

TEST_SUITE("character properties") {
    TEST_CASE("reduction is idempotent and tau is an involution") {
        std::mt19937 rng(3);
        for (const char* spec : {"dihedral:Q,dihedral:R,sameK", "dihedral:IP,dihedral:P,diffK", "tetrahedral,octahedral"}) {
            Context cx(parse_case(spec), nullptr);
            int n = static_cast<int>(cx.gens().size());
            for (int t = 0; t < 50; ++t) {
                CharExpr e;
                for (int g = 0; g < n; ++g)
                    if (rng() % 2) e = e + CharExpr::gen(g, static_cast<i64>(rng() % 7) - 3);
                CharExpr r = char_reduce(e, cx);
                CHECK(char_reduce(r, cx) == r);
                CHECK(char_reduce(cx.tau(cx.tau(e)), cx) == r);
            }
        }
    }
}

TEST_SUITE("engine properties") {
    TEST_CASE("library property sweep") {
        for (const auto& c : verify_properties()) {
            INFO(c.label << ": " << c.got);
            CHECK(c.ok);
        }
    }

    TEST_CASE("swap symmetry and low moments in every scenario") {
        for (const auto& s : all_scenarios()) {
            INFO(s.str());
            CHECK(moment({0, 0}, s).outcomes == std::set<int>{1});
            CHECK(moment({1, 0}, s).outcomes == std::set<int>{0});
            CHECK(moment({0, 1}, s).outcomes == std::set<int>{0});
            for (const auto& k : all_keys()) CHECK(moment(k, s).outcomes == moment({k.k, k.j}, s.swapped()).outcomes);
        }
    }

    TEST_CASE("duality commutes with normalizing a product") {
        int checked = 0;
        for (const auto& s : all_scenarios()) {
            for (const auto& leaf : enumerate(s).leaves) {
                auto br = as_map(leaf);
                Context cx(s, &br);
                try {
                    Isobaric a = adjoint_of(1, cx), b = adjoint_of(2, cx);
                    Isobaric lhs = product_normalize({dual_all(a), dual_all(b)}, cx);
                    Isobaric rhs = dual_all(product_normalize({a, b}, cx));
                    bool same = same_multiset(lhs, rhs, cx);
                    CHECK(same);
                    ++checked;
                } catch (const NeedQuery&) {
                } catch (const Unresolved&) {
                }
            }
        }
        CHECK(checked > 50);
    }

    TEST_CASE("square trivial counts by class") {
        for (const auto& s : all_scenarios()) {
            Context cx(s, nullptr);
            Isobaric q = square_decompose(1, cx);
            int t = 0;
            for (const auto& r : q) t += r.kind == Kind::Char && cx.trivial_F(r.ch);
            int want = s.c1 != Cls::Dihedral ? 1 : s.s1 == Sub::P ? 3 : 2;
            CHECK(t == want);
            CHECK(total_dim(q) == 9);
        }
    }
}

TEST_SUITE("bound properties") {
    TEST_CASE("best dominates pinned, S6 dominates forward, values in [0, 1/2]") {
        const AlgNum half(Rational(1, 2));
        for (const auto& s : all_scenarios()) {
            INFO(s.str());
            for (Target t : {Target::Gt, Target::GtSwapped, Target::Star}) {
                AlgNum best = case_bound(s, t).uniform;
                CHECK(best.sign() >= 0);
                CHECK(best <= half);
                for (Strategy id : {Strategy::S1, Strategy::S2, Strategy::S3, Strategy::S4, Strategy::S5, Strategy::S6}) {
                    if (!strategy_fits(id, t)) continue;
                    CHECK(best >= case_bound(s, t, id).uniform);
                }
            }
            CHECK(case_bound(s, Target::Star).uniform >= case_bound(s, Target::Gt).uniform);
        }
    }

    TEST_CASE("raising c22 or c40 never raises S1 or S3") {
        int tried = 0;
        for (const auto& s : all_scenarios())
            for (const auto& leaf : enumerate(s).leaves)
                for (Strategy id : {Strategy::S1, Strategy::S3}) {
                    auto base = strategy_eval(id, leaf.c, s.c1, s.c2);
                    if (!base) continue;
                    for (MomentKey k : {MomentKey{2, 2}, MomentKey{4, 0}})
                        for (int bump = 1; bump <= 3; ++bump) {
                            CValues c = leaf.c;
                            *c[k] += bump;
                            auto v = strategy_eval(id, c, s.c1, s.c2);
                            REQUIRE(v);
                            CHECK(v->value <= base->value);
                            ++tried;
                        }
                }
        CHECK(tried > 100);
    }

    TEST_CASE("swapped target equals forward on the swapped scenario") {
        for (const auto& s : all_scenarios())
            CHECK(case_bound(s, Target::GtSwapped).uniform == case_bound(s.swapped(), Target::Gt).uniform);
    }
}
