#include "rs/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace rs {

namespace mp = boost::multiprecision;

std::string rat_str(const Rational& q) {
    if (mp::denominator(q) == 1) return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mp::cpp_int(s));
        mp::cpp_int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
}

// ------------------------------------------------------------------ AlgNum

AlgNum AlgNum::operator+(const AlgNum& o) const { return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_}; }
AlgNum AlgNum::operator-(const AlgNum& o) const { return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_}; }
AlgNum AlgNum::operator-() const { return {-a_, -b_, -c_, -d_}; }

AlgNum AlgNum::operator*(const AlgNum& o) const {
    const auto &e = o.a_, &f = o.b_, &g = o.c_, &h = o.d_;
    return {a_ * e + 2 * b_ * f + 3 * c_ * g + 6 * d_ * h, a_ * f + b_ * e + 3 * c_ * h + 3 * d_ * g,
            a_ * g + c_ * e + 2 * b_ * h + 2 * d_ * f, a_ * h + d_ * e + b_ * g + c_ * f};
}

namespace {

// sign of x + y*sqrt2
int sign2(const Rational& x, const Rational& y) {
    int sx = x.sign(), sy = y.sign();
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sy;
    return x * x > 2 * y * y ? sx : sy;
}

}  // namespace

int AlgNum::sign() const {
    // split as P + sqrt3*Q with P, Q in Q(sqrt2)
    int sp = sign2(a_, b_), sq = sign2(c_, d_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    int sd = sign2(a_ * a_ + 2 * b_ * b_ - 3 * c_ * c_ - 6 * d_ * d_, 2 * a_ * b_ - 6 * c_ * d_);
    return sd > 0 ? sp : sq;
}

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2,sqrt3)");
    AlgNum conj3{a_, b_, -c_, -d_};
    AlgNum r = *this * conj3;  // lies in Q(sqrt2)
    AlgNum conj2{r.a_, -r.b_, 0, 0};
    Rational n = r.a_ * r.a_ - 2 * r.b_ * r.b_;
    AlgNum num = conj3 * conj2;
    return {num.a_ / n, num.b_ / n, num.c_ / n, num.d_ / n};
}

AlgNum AlgNum::operator/(const AlgNum& o) const { return *this * o.inverse(); }

bool AlgNum::operator==(const AlgNum& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }

double AlgNum::approx() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0) +
           static_cast<double>(c_) * std::sqrt(3.0) + static_cast<double>(d_) * std::sqrt(6.0);
}

std::string AlgNum::str() const {
    if (is_zero()) return "0";
    mp::cpp_int den = 1;
    for (const Rational* q : {&a_, &b_, &c_, &d_}) {
        mp::cpp_int d = mp::denominator(*q);
        den = den / mp::gcd(den, d) * d;
    }
    const char* surd[] = {"", "sqrt(2)", "sqrt(3)", "sqrt(6)"};
    const Rational* co[] = {&a_, &b_, &c_, &d_};
    std::string body;
    int terms = 0;
    for (int i = 0; i < 4; ++i) {
        mp::cpp_int n = mp::numerator(*co[i]) * (den / mp::denominator(*co[i]));
        if (n == 0) continue;
        bool neg = n < 0;
        mp::cpp_int m = neg ? mp::cpp_int(-n) : n;
        std::string t;
        if (i == 0) t = m.str();
        else t = m == 1 ? surd[i] : m.str() + "*" + surd[i];
        if (terms == 0) body = (neg ? "-" : "") + t;
        else body += (neg ? " - " : " + ") + t;
        ++terms;
    }
    if (den == 1) return body;
    if (terms == 1) return body + "/" + den.str();
    return "(" + body + ")/" + den.str();
}

std::optional<AlgNum> AlgNum::sqrt_int(long long n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return AlgNum(0);
    long long k = 1, m = n;
    for (long long p = 2; p * p <= m; ++p)
        while (m % (p * p) == 0) {
            m /= p * p;
            k *= p;
        }
    switch (m) {
        case 1: return AlgNum(Rational(k));
        case 2: return AlgNum(0, Rational(k));
        case 3: return AlgNum(0, 0, Rational(k));
        case 6: return AlgNum(0, 0, 0, Rational(k));
        default: return std::nullopt;
    }
}

Rational sqrt_upper(long long n) {
    mp::cpp_int scale = mp::pow(mp::cpp_int(10), 12);
    mp::cpp_int big = mp::cpp_int(n) * scale * scale;
    mp::cpp_int s = mp::sqrt(big);
    if (s * s < big) s += 1;
    return Rational(s, scale);
}

// ------------------------------------------------------------- strategies

std::string strategy_name(Strategy s) { return "S" + std::to_string(static_cast<int>(s) + 1); }

Strategy parse_strategy(const std::string& s) {
    if (s.size() == 2 && (s[0] == 'S' || s[0] == 's') && s[1] >= '1' && s[1] <= '6')
        return static_cast<Strategy>(s[1] - '1');
    throw std::invalid_argument("unknown strategy '" + s + "' (expected S1..S6)");
}

std::string target_name(Target t) {
    switch (t) {
        case Target::Gt: return "gt";
        case Target::GtSwapped: return "gt-swapped";
        case Target::Star: return "star";
    }
    return "?";
}

Target parse_target(const std::string& s) {
    if (s == "gt") return Target::Gt;
    if (s == "gt-swapped") return Target::GtSwapped;
    if (s == "star") return Target::Star;
    throw std::invalid_argument("unknown target '" + s + "' (expected gt, gt-swapped, star)");
}

bool strategy_fits(Strategy s, Target t) {
    bool gt = s == Strategy::S1 || s == Strategy::S2 || s == Strategy::S4;
    return (t == Target::Star) != gt;
}

CValues transpose(const CValues& c) {
    CValues out;
    for (const auto& [k, v] : c) out[{k.k, k.j}] = v;
    return out;
}

namespace {

struct Reader {
    const CValues& c;
    std::vector<MomentKey> used;
    bool missing = false;
    long long operator()(int j, int k) {
        MomentKey key{j, k};
        used.push_back(key);
        auto it = c.find(key);
        if (it == c.end() || !it->second) {
            missing = true;
            return 0;
        }
        return *it->second;
    }
};

bool ramanujan_class(Cls c) { return c != Cls::NSP; }

}  // namespace

std::optional<StrategyValue> strategy_eval(Strategy id, const CValues& c, Cls c1, Cls c2) {
    Reader r{c, {}, false};
    StrategyValue out{id, {}, false, {}, {}};
    auto N = [&] { return r(2, 0) - r(1, 1) + r(1, 0) - r(0, 1); };
    auto M = [&] { return r(2, 0) - 2 * r(1, 1) + r(0, 2); };
    switch (id) {
        case Strategy::S1: {
            long long n = N();
            long long d = r(4, 0) - 2 * r(3, 1) + r(2, 2) + 2 * r(3, 0) - 4 * r(2, 1) + 2 * r(1, 2) + r(2, 0) -
                          2 * r(1, 1) + r(0, 2);
            if (r.missing || n <= 0 || d <= 0) return std::nullopt;
            out.value = AlgNum(Rational(n * n, d));
            out.detail = std::to_string(n) + "^2/" + std::to_string(d);
            break;
        }
        case Strategy::S2: {
            long long n = N();
            long long x = r(4, 0) - 2 * r(2, 1) + r(0, 2);
            long long y = r(2, 0) - 2 * r(2, 1) + r(2, 2);
            if (r.missing || n <= 0 || x < 0 || y < 0 || x + y == 0) return std::nullopt;
            // (sqrt x + sqrt y)^2 = x + y + 2 sqrt(xy)
            if (auto s = AlgNum::sqrt_int(x * y)) {
                out.value = AlgNum(n * n) / (AlgNum(x + y) + AlgNum(2) * *s);
            } else {
                out.value = AlgNum(Rational(n * n) / (Rational(x + y) + 2 * sqrt_upper(x * y)));
                out.approximate = true;
            }
            out.detail = std::to_string(n) + "^2/(sqrt(" + std::to_string(x) + ")+sqrt(" + std::to_string(y) + "))^2";
            break;
        }
        case Strategy::S3: {
            long long m = M();
            long long d = r(4, 0) - 4 * r(3, 1) + 6 * r(2, 2) - 4 * r(1, 3) + r(0, 4);
            if (r.missing || m <= 0 || d <= 0) return std::nullopt;
            out.value = AlgNum(Rational(m * m, d));
            out.detail = std::to_string(m) + "^2/" + std::to_string(d);
            break;
        }
        case Strategy::S4: {
            if (!ramanujan_class(c1) || !ramanujan_class(c2)) return std::nullopt;
            long long n = N();
            if (r.missing || n <= 0) return std::nullopt;
            out.value = AlgNum(Rational(n, 16));
            // (A-B)(A+1) <= 16 with A, B in [-1, 3]
            out.detail = std::to_string(n) + "/16";
            break;
        }
        case Strategy::S5: {
            if (!ramanujan_class(c1) || !ramanujan_class(c2)) return std::nullopt;
            long long m = M();
            if (r.missing || m <= 0) return std::nullopt;
            out.value = AlgNum(Rational(m, 16));
            // (A-B)^2 <= 16 with A, B in [-1, 3]
            out.detail = std::to_string(m) + "/16";
            break;
        }
        case Strategy::S6: return std::nullopt;  // needs both orientations, see case_bound
    }
    std::sort(r.used.begin(), r.used.end());
    r.used.erase(std::unique(r.used.begin(), r.used.end()), r.used.end());
    out.used = std::move(r.used);
    return out;
}

namespace {

const std::vector<Strategy> kGt{Strategy::S1, Strategy::S2, Strategy::S4};
const std::vector<Strategy> kStar{Strategy::S3, Strategy::S5, Strategy::S6};

std::optional<StrategyValue> best_of(const std::vector<StrategyValue>& xs) {
    std::optional<StrategyValue> b;
    for (const auto& x : xs)
        if (!b || x.value > b->value) b = x;
    return b;
}

std::optional<StrategyValue> best_gt(const CValues& c, Cls c1, Cls c2) {
    std::vector<StrategyValue> xs;
    for (Strategy s : kGt)
        if (auto v = strategy_eval(s, c, c1, c2)) xs.push_back(*v);
    return best_of(xs);
}

std::optional<StrategyValue> superadditive(const CValues& c, Cls c1, Cls c2) {
    auto f = best_gt(c, c1, c2);
    auto g = best_gt(transpose(c), c2, c1);
    if (!f || !g) return std::nullopt;
    StrategyValue out{Strategy::S6, f->value + g->value, f->approximate || g->approximate, f->used, {}};
    for (const auto& k : g->used) out.used.push_back({k.k, k.j});
    std::sort(out.used.begin(), out.used.end());
    out.used.erase(std::unique(out.used.begin(), out.used.end()), out.used.end());
    out.detail = strategy_name(f->id) + " fwd " + f->value.str() + " + " + strategy_name(g->id) + " swapped " +
                 g->value.str();
    return out;
}

}  // namespace

BoundReport case_bound(const CaseSpec& spec, Target target, std::optional<Strategy> pinned) {
    if (pinned && !strategy_fits(*pinned, target))
        throw std::invalid_argument(strategy_name(*pinned) + " does not bound the " + target_name(target) + " set");
    BoundReport rep;
    rep.spec = spec;
    rep.target = target;
    rep.pinned = pinned;
    const auto& res = enumerate(spec);
    Cls c1 = spec.c1, c2 = spec.c2;
    if (target == Target::GtSwapped) std::swap(c1, c2);
    std::vector<Strategy> cand = pinned ? std::vector<Strategy>{*pinned} : (target == Target::Star ? kStar : kGt);
    bool first = true;
    for (std::size_t i = 0; i < res.leaves.size(); ++i) {
        CValues c = res.leaves[i].c;
        if (target == Target::GtSwapped) c = transpose(c);
        BranchBound bb;
        bb.leaf = i;
        for (Strategy s : cand) {
            auto v = s == Strategy::S6 ? superadditive(c, c1, c2) : strategy_eval(s, c, c1, c2);
            if (v) bb.tried.push_back(*v);
        }
        if (auto b = best_of(bb.tried)) {
            bb.strategy = b->id;
            bb.value = b->value;
            bb.approximate = b->approximate;
            for (const auto& k : b->used) rep.keys_used.push_back(k);
        } else {
            bb.diagnostic = "no applicable strategy on this branch";
        }
        if (first || bb.value < rep.uniform) {
            rep.uniform = bb.value;
            rep.approximate = bb.approximate;
        }
        first = false;
        rep.branches.push_back(std::move(bb));
    }
    std::sort(rep.keys_used.begin(), rep.keys_used.end());
    rep.keys_used.erase(std::unique(rep.keys_used.begin(), rep.keys_used.end()), rep.keys_used.end());
    return rep;
}

// ---------------------------------------------------------- theorem tables

namespace {

CaseSpec nd(Cls a, Cls b) { return {a, b, Sub::None, Sub::None, false}; }
CaseSpec di(Sub a, Sub b, bool same) { return {Cls::Dihedral, Cls::Dihedral, a, b, same}; }
CaseSpec mixed(Sub a, Cls b) { return {Cls::Dihedral, b, a, Sub::None, false}; }

const std::vector<Sub> kNotP{Sub::IP, Sub::Q, Sub::R};
constexpr Cls T = Cls::Tetrahedral, O = Cls::Octahedral, N = Cls::NSP;

std::vector<CaseSpec> di_rows(const std::vector<Sub>& a, const std::vector<Sub>& b, bool same) {
    std::vector<CaseSpec> v;
    for (Sub x : a)
        for (Sub y : b) v.push_back(di(x, y, same));
    return v;
}

std::vector<Sub> subs(bool p) { return p ? std::vector<Sub>{Sub::P} : kNotP; }

AlgNum frac(long long p, long long q) { return AlgNum(Rational(p, q)); }
AlgNum inv_sq(const AlgNum& x) { return (x * x).inverse(); }

TheoremRow mk(std::string label, Target t, std::vector<CaseSpec> cs, std::optional<Strategy> s, AlgNum e) {
    TheoremRow r;
    r.label = std::move(label);
    r.target = t;
    r.cases = std::move(cs);
    r.pinned = s;
    r.expected = std::move(e);
    return r;
}

const AlgNum kTwoPlusSqrt2 = AlgNum(2, 1);
const AlgNum kTwoPlusSqrt3 = AlgNum(2, 0, 1);

std::vector<TheoremRow> rows_32() {
    using S = Strategy;
    std::vector<TheoremRow> r;
    const char* nm[] = {"tetrahedral", "octahedral", "nsp"};
    Cls cl[] = {T, O, N};
    AlgNum e[3][3] = {{frac(1, 16), frac(1, 14), frac(1, 14)},
                      {frac(1, 9), frac(1, 10), frac(1, 9)},
                      {inv_sq(kTwoPlusSqrt2), inv_sq(kTwoPlusSqrt2), inv_sq(kTwoPlusSqrt3)}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.push_back(mk(std::string(nm[i]) + " vs " + nm[j], Target::Gt, {nd(cl[i], cl[j])},
                           cl[i] == N ? S::S2 : S::S1, e[i][j]));
    return r;
}

std::vector<TheoremRow> rows_33() {
    using S = Strategy;
    AlgNum tn = frac(1, 14) + inv_sq(kTwoPlusSqrt2);
    AlgNum on = frac(1, 9) + inv_sq(kTwoPlusSqrt2);
    AlgNum nn = AlgNum(2) * inv_sq(kTwoPlusSqrt3);
    return {mk("tetrahedral vs tetrahedral", Target::Star, {nd(T, T)}, S::S3, frac(1, 8)),
            mk("tetrahedral vs octahedral", Target::Star, {nd(T, O)}, S::S3, frac(4, 17)),
            mk("tetrahedral vs nsp", Target::Star, {nd(T, N)}, S::S6, tn),
            mk("octahedral vs octahedral", Target::Star, {nd(O, O)}, S::S3, frac(1, 5)),
            mk("octahedral vs nsp", Target::Star, {nd(O, N)}, S::S6, on),
            mk("nsp vs nsp", Target::Star, {nd(N, N)}, S::S6, nn)};
}

std::vector<TheoremRow> rows_42() {
    using S = Strategy;
    struct X {
        const char* label;
        bool p1, p2;
        S same;
        AlgNum es;
        S diff;
        AlgNum ed;
    };
    std::vector<X> xs{{"(i) P, P", true, true, S::S4, frac(1, 8), S::S4, frac(3, 16)},
                      {"(ii) P, notP", true, false, S::S4, frac(1, 8), S::S1, frac(9, 44)},
                      {"(iii) notP, P", false, true, S::S4, frac(1, 16), S::S4, frac(1, 8)},
                      {"(iv) notP, notP", false, false, S::S4, frac(1, 16), S::S1, frac(2, 15)}};
    std::vector<TheoremRow> r;
    for (const auto& x : xs) {
        r.push_back(mk(std::string(x.label) + ", same K", Target::Gt, di_rows(subs(x.p1), subs(x.p2), true), x.same,
                       x.es));
        r.push_back(mk(std::string(x.label) + ", different K", Target::Gt, di_rows(subs(x.p1), subs(x.p2), false),
                       x.diff, x.ed));
    }
    return r;
}

std::vector<TheoremRow> rows_44() {
    using S = Strategy;
    return {mk("(i) P, P, same K", Target::Star, di_rows(subs(true), subs(true), true), S::S5, frac(1, 4)),
            mk("(i) P, P, different K", Target::Star, di_rows(subs(true), subs(true), false), S::S5, frac(3, 8)),
            mk("(ii) P, notP, same K", Target::Star, di_rows(subs(true), subs(false), true), S::S3, frac(1, 4)),
            mk("(ii) P, notP, different K", Target::Star, di_rows(subs(true), subs(false), false), S::S3,
               frac(25, 71)),
            mk("(iii) notP, notP, same K", Target::Star, di_rows(subs(false), subs(false), true), S::S5, frac(1, 8)),
            mk("(iii) notP, notP, different K", Target::Star, di_rows(subs(false), subs(false), false), S::S3,
               frac(4, 13))};
}

std::vector<CaseSpec> mixed_rows(bool p, Cls c) {
    std::vector<CaseSpec> v;
    for (Sub s : subs(p)) v.push_back(mixed(s, c));
    return v;
}

std::vector<TheoremRow> rows_51() {
    using S = Strategy;
    std::vector<TheoremRow> r;
    std::vector<CaseSpec> all;
    for (Cls c : {T, O, N})
        for (auto& x : mixed_rows(true, c)) all.push_back(x);
    r.push_back(mk("(i) P, any non-dihedral", Target::Gt, all, S::S1, frac(9, 40)));
    r.push_back(mk("(ii) P, tetrahedral", Target::GtSwapped, mixed_rows(true, T), S::S4, frac(1, 16)));
    r.push_back(mk("(ii) P, octahedral", Target::GtSwapped, mixed_rows(true, O), S::S1, frac(1, 13)));
    r.push_back(mk("(ii) P, nsp", Target::GtSwapped, mixed_rows(true, N), S::S1, frac(1, 12)));
    r.push_back(mk("(iii) notP, tetrahedral", Target::Gt, mixed_rows(false, T), S::S1, frac(4, 27)));
    r.push_back(mk("(iii) notP, octahedral", Target::Gt, mixed_rows(false, O), S::S4, frac(1, 8)));
    r.push_back(mk("(iii) notP, nsp", Target::Gt, mixed_rows(false, N), S::S1, frac(4, 27)));
    r.push_back(mk("(iv) notP, tetrahedral", Target::GtSwapped, mixed_rows(false, T), S::S4, frac(1, 16)));
    r.push_back(mk("(iv) notP, octahedral", Target::GtSwapped, mixed_rows(false, O), S::S1, frac(1, 12)));
    r.push_back(mk("(iv) notP, nsp", Target::GtSwapped, mixed_rows(false, N), S::S1, frac(1, 10)));
    return r;
}

std::vector<TheoremRow> rows_52() {
    using S = Strategy;
    return {mk("(i) P, tetrahedral", Target::Star, mixed_rows(true, T), S::S3, frac(8, 23)),
            mk("(i) P, octahedral", Target::Star, mixed_rows(true, O), S::S3, frac(16, 43)),
            mk("(i) P, nsp", Target::Star, mixed_rows(true, N), S::S3, frac(8, 21)),
            mk("(ii) notP, tetrahedral", Target::Star, mixed_rows(false, T), S::S3, frac(3, 11)),
            mk("(ii) notP, octahedral", Target::Star, mixed_rows(false, O), S::S3, frac(1, 4)),
            mk("(ii) notP, nsp", Target::Star, mixed_rows(false, N), S::S3, frac(9, 29))};
}

AlgNum min_over(const std::vector<CaseSpec>& cs, Target t, std::optional<Strategy> s, bool* approx) {
    std::optional<AlgNum> m;
    for (const auto& c : cs) {
        BoundReport b = case_bound(c, t, s);
        if (!m || b.uniform < *m) {
            m = b.uniform;
            *approx = b.approximate;
        }
    }
    return m.value_or(AlgNum(0));
}

void evaluate(std::vector<TheoremRow>& rows) {
    for (auto& r : rows) {
        bool a1 = false, a2 = false;
        r.pinned_value = min_over(r.cases, r.target, r.pinned, &a1);
        r.best_value = min_over(r.cases, r.target, std::nullopt, &a2);
        r.approximate = a1;
    }
}

TheoremRow aggregate(std::string label, const std::vector<std::string>& ids, AlgNum expected) {
    TheoremRow out;
    out.label = std::move(label);
    out.pinned = std::nullopt;
    out.expected = std::move(expected);
    bool first = true;
    for (const auto& id : ids)
        for (auto& r : theorem_table(id)) {
            for (auto& c : r.cases) out.cases.push_back(c);
            out.target = r.target;
            if (first || r.pinned_value < out.pinned_value) {
                out.pinned_value = r.pinned_value;
                out.approximate = r.approximate;
            }
            if (first || r.best_value < out.best_value) out.best_value = r.best_value;
            first = false;
        }
    return out;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"1.1", "1.2", "3.2", "3.3", "4.2", "4.4", "5.1", "5.2"};
    return ids;
}

std::vector<TheoremRow> theorem_table(const std::string& raw) {
    std::string id = raw.rfind("thm", 0) == 0 ? raw.substr(3) : raw;
    std::vector<TheoremRow> rows;
    if (id == "1.1") {
        rows.push_back(mk("nsp vs nsp", Target::Gt, {nd(N, N)}, Strategy::S2, inv_sq(kTwoPlusSqrt3)));
        evaluate(rows);
        rows.insert(rows.begin(), aggregate("all cases", {"3.2", "4.2", "5.1"}, frac(1, 16)));
        return rows;
    }
    if (id == "1.2") {
        rows.push_back(mk("nsp vs tetrahedral", Target::Star, {nd(N, T)}, Strategy::S6,
                          frac(1, 14) + inv_sq(kTwoPlusSqrt2)));
        rows.push_back(mk("nsp vs octahedral", Target::Star, {nd(N, O)}, Strategy::S6,
                          frac(1, 9) + inv_sq(kTwoPlusSqrt2)));
        rows.push_back(mk("nsp vs nsp", Target::Star, {nd(N, N)}, Strategy::S6, AlgNum(2) * inv_sq(kTwoPlusSqrt3)));
        evaluate(rows);
        rows.insert(rows.begin(), aggregate("all cases", {"3.3", "4.4", "5.2"}, frac(1, 8)));
        return rows;
    }
    if (id == "3.2") rows = rows_32();
    else if (id == "3.3") rows = rows_33();
    else if (id == "4.2") rows = rows_42();
    else if (id == "4.4") rows = rows_44();
    else if (id == "5.1") rows = rows_51();
    else if (id == "5.2") rows = rows_52();
    else throw std::invalid_argument("unknown theorem id '" + raw + "'");
    evaluate(rows);
    return rows;
}

}  // namespace rs
