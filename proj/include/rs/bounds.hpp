#pragma once
// Exact arithmetic in Q(sqrt2, sqrt3) and the density lower-bound strategies.

#include <boost/multiprecision/cpp_int.hpp>

#include "rs/poles.hpp"

namespace rs {

using Rational = boost::multiprecision::cpp_rational;

std::string rat_str(const Rational& q);
Rational parse_rational(const std::string& s);

// a + b*sqrt2 + c*sqrt3 + d*sqrt6
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(long long v) : a_(v) {}
    AlgNum(Rational a, Rational b = 0, Rational c = 0, Rational d = 0)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    AlgNum operator+(const AlgNum& o) const;
    AlgNum operator-(const AlgNum& o) const;
    AlgNum operator-() const;
    AlgNum operator*(const AlgNum& o) const;
    AlgNum operator/(const AlgNum& o) const;  // throws std::domain_error on zero
    AlgNum inverse() const;

    int sign() const;  // exact
    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    bool operator==(const AlgNum& o) const;
    bool operator!=(const AlgNum& o) const { return !(*this == o); }
    bool operator<(const AlgNum& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const AlgNum& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const AlgNum& o) const { return o < *this; }
    bool operator>=(const AlgNum& o) const { return o <= *this; }

    double approx() const;
    std::string str() const;  // "7 - 4*sqrt(3)", "(11 - 7*sqrt(2))/7", "1/16"

    // k*sqrt(m) for n = k^2 m with m in {1,2,3,6}; nullopt otherwise
    static std::optional<AlgNum> sqrt_int(long long n);

private:
    Rational a_, b_, c_, d_;
};

// Rational r with r >= sqrt(n), within 10^-12.
Rational sqrt_upper(long long n);

enum class Strategy { S1, S2, S3, S4, S5, S6 };
enum class Target { Gt, GtSwapped, Star };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);
std::string target_name(Target t);
Target parse_target(const std::string& s);
bool strategy_fits(Strategy s, Target t);  // S1,S2,S4 -> gt targets; S3,S5,S6 -> star

using CValues = std::map<MomentKey, std::optional<int>>;
CValues transpose(const CValues& c);

struct StrategyValue {
    Strategy id;
    AlgNum value;
    bool approximate = false;  // exact field overflowed; value is a certified lower rational
    std::vector<MomentKey> used;
    std::string detail;
};

// c is oriented so that side 1 is the first argument of the target set.
std::optional<StrategyValue> strategy_eval(Strategy id, const CValues& c, Cls c1, Cls c2);

struct BranchBound {
    std::size_t leaf = 0;
    std::optional<Strategy> strategy;  // winner; nullopt when nothing applied
    AlgNum value;
    bool approximate = false;
    std::vector<StrategyValue> tried;
    std::string diagnostic;
};

struct BoundReport {
    CaseSpec spec;
    Target target = Target::Gt;
    std::optional<Strategy> pinned;  // nullopt = best mode
    std::vector<BranchBound> branches;
    AlgNum uniform;
    bool approximate = false;
    std::vector<MomentKey> keys_used;
};

BoundReport case_bound(const CaseSpec& spec, Target target, std::optional<Strategy> pinned = std::nullopt);

// ---------------------------------------------------------- theorem tables

struct TheoremRow {
    std::string label;
    Target target;
    std::vector<CaseSpec> cases;  // value is the minimum over these
    std::optional<Strategy> pinned;  // nullopt for rows aggregated from other tables
    AlgNum expected;
    AlgNum pinned_value, best_value;
    bool approximate = false;
    bool pinned_ok() const { return !approximate && pinned_value == expected; }
    bool best_ok() const { return best_value >= expected; }
    bool improved() const { return best_value > expected; }
};

const std::vector<std::string>& theorem_ids();  // "1.1" ... "5.2"
std::vector<TheoremRow> theorem_table(const std::string& id);

}  // namespace rs
