#include "rs/poles.hpp"

#include <mutex>

namespace rs {

const std::vector<MomentKey>& all_keys() {
    static const std::vector<MomentKey> keys = [] {
        std::vector<MomentKey> v;
        for (int n = 0; n <= 4; ++n)
            for (int j = n; j >= 0; --j) v.push_back({j, n - j});
        return v;
    }();
    return keys;
}

namespace {

void flatten(const Rep& r, std::vector<Rep>& out) {
    if (r.kind == Kind::Product)
        for (const auto& f : r.factors) flatten(f, out);
    else
        out.push_back(r);
}

using Split = std::pair<std::pair<int, int>, std::pair<int, int>>;

std::vector<Split> bipartitions(int j, int k) {
    int n = j + k;
    std::vector<Split> out;
    for (int L = (n + 1) / 2; L < n; ++L)
        for (int a = std::min(j, L); a >= std::max(0, L - k); --a) {
            int b = L - a;
            Split s{{a, b}, {j - a, k - b}};
            bool dup = false;
            for (const auto& t : out)
                if (t.first == s.second && t.second == s.first) dup = true;
            if (!dup) out.push_back(s);
        }
    return out;
}

}  // namespace

int count_trivial(std::vector<Rep> in, Context& cx) {
    std::vector<Rep> L;
    for (const auto& r : in) flatten(r, L);
    if (L.empty()) return 1;
    if (L.size() == 1) return L[0].kind == Kind::Char && cx.trivial_F(L[0].ch) ? 1 : 0;
    if (L.size() == 2) return rep_equiv(L[0], rep_dual(L[1]), cx) ? 1 : 0;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            std::optional<Isobaric> d;
            try {
                d = pair_decompose(L[i], L[j], cx);
            } catch (const Unresolved&) {
                continue;
            }
            if (!d) continue;
            std::vector<Rep> rest;
            for (std::size_t m = 0; m < L.size(); ++m)
                if (m != i && m != j) rest.push_back(L[m]);
            try {
                int total = 0;
                for (const auto& c : *d) {
                    auto nl = rest;
                    nl.push_back(c);
                    total += count_trivial(nl, cx);
                }
                return total;
            } catch (const Unresolved&) {
                continue;
            }
        }
    // a cuspidal GL(6) pair against one irreducible of another dimension has no pole
    if (L.size() == 3)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                const Rep& rest = L[3 - i - j];
                if (rest.dim() != 6 && adjoint_product_cuspidal(L[i], L[j], cx)) return 0;
            }
    throw Unresolved{"no decomposable pair"};
}

int pairing_order(const Isobaric& left, const Isobaric& right, Context& cx) {
    int total = 0;
    for (const auto& a : left)
        for (const auto& b : right) total += count_trivial({a, b}, cx);
    return total;
}

std::optional<int> moment_in(const MomentKey& key, Context& cx) {
    int n = key.j + key.k;
    if (n == 0) return 1;
    Isobaric A1 = adjoint_of(1, cx), A2 = adjoint_of(2, cx);
    auto side = [&](int a, int b) {
        std::vector<Isobaric> f;
        for (int i = 0; i < a; ++i) f.push_back(A1);
        for (int i = 0; i < b; ++i) f.push_back(A2);
        return product_normalize(f, cx);
    };
    if (n == 1) {
        int t = 0;
        for (const auto& r : key.j ? A1 : A2) t += count_trivial({r}, cx);
        return t;
    }
    for (const auto& s : bipartitions(key.j, key.k)) {
        try {
            Isobaric left = side(s.first.first, s.first.second);
            Isobaric right = side(s.second.first, s.second.second);
            return pairing_order(left, right, cx);
        } catch (const Unresolved&) {
            continue;
        }
    }
    return std::nullopt;
}

namespace {

Leaf evaluate_leaf(Context& cx, int bound) {
    Leaf lf;
    for (const auto& k : all_keys()) lf.c[k] = moment_in(k, cx);
    lf.assignment = cx.trail();
    lf.equalities = cx.equalities();
    lf.disequalities = cx.disequalities();
    bool exhausted = false;
    auto m = cx.cyclic_model(bound, &exhausted);
    if (m) lf.model = *m;
    lf.model_warning = exhausted;
    return lf;
}

}  // namespace

const ScenarioResult& enumerate(const CaseSpec& spec, const EnumOptions& opt) {
    static std::mutex mu;
    static std::map<std::string, ScenarioResult> cache;
    std::string id = spec.str() + "#" + std::to_string(opt.model_bound);
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(id);
        if (it != cache.end()) return it->second;
    }
    ScenarioResult res;
    res.spec = spec;
    std::vector<std::map<std::string, bool>> stack{{}};
    while (!stack.empty()) {
        auto as = std::move(stack.back());
        stack.pop_back();
        try {
            Context cx(spec, &as);
            res.leaves.push_back(evaluate_leaf(cx, opt.model_bound));
        } catch (const NeedQuery& q) {
            auto no = as, yes = as;
            no[q.key] = false;
            yes[q.key] = true;
            stack.push_back(no);
            stack.push_back(yes);
        } catch (const Inconsistent&) {
            ++res.pruned;
        }
    }
    std::lock_guard<std::mutex> g(mu);
    return cache.emplace(id, std::move(res)).first->second;
}

PoleOutcome moment(const MomentKey& key, const CaseSpec& spec) {
    PoleOutcome out;
    const auto& r = enumerate(spec);
    for (std::size_t i = 0; i < r.leaves.size(); ++i) {
        const auto& v = r.leaves[i].c.at(key);
        if (!v) {
            out.undetermined = true;
            continue;
        }
        if (out.outcomes.insert(*v).second) out.witness[*v] = i;
    }
    return out;
}

bool branch_consistent(const CaseSpec& spec, const std::map<std::string, bool>& br, int bound, bool* warning) {
    // replay the assignment as relations on a fresh scenario
    Context cx(spec, &br);
    cx.strict = true;
    if (warning) *warning = false;
    try {
        for (const auto& k : all_keys()) (void)moment_in(k, cx);
    } catch (const NeedQuery&) {
        // partial assignments are fine
    } catch (const Inconsistent&) {
        return false;
    }
    if (!cx.consistent()) return false;
    bool ex = false;
    auto m = cx.cyclic_model(bound, &ex);
    if (warning) *warning = ex;
    return m.has_value() || ex;
}

// ------------------------------------------------------------------ lemmas

namespace {

CaseSpec di(Sub a, Sub b, bool same) { return {Cls::Dihedral, Cls::Dihedral, a, b, same}; }

const std::vector<Sub> kNotP{Sub::IP, Sub::Q, Sub::R};
const std::vector<Sub> kAll{Sub::P, Sub::IP, Sub::Q, Sub::R};

std::vector<CaseSpec> di_cases(const std::vector<Sub>& a, const std::vector<Sub>& b, bool same) {
    std::vector<CaseSpec> v;
    for (Sub x : a)
        for (Sub y : b) v.push_back(di(x, y, same));
    return v;
}

LemmaRow row(std::string label, MomentKey k, std::vector<CaseSpec> cs, std::set<int> exp) {
    LemmaRow r;
    r.label = std::move(label);
    r.key = k;
    r.cases = std::move(cs);
    r.expected = std::move(exp);
    return r;
}

std::vector<LemmaRow> rows_31() {
    const std::vector<Cls> nd{Cls::Tetrahedral, Cls::Octahedral, Cls::NSP};
    auto with1 = [&](Cls c1) {
        std::vector<CaseSpec> v;
        for (Cls c2 : nd) v.push_back({c1, c2, Sub::None, Sub::None, false});
        return v;
    };
    auto pair = [&](Cls a, Cls b) { return std::vector<CaseSpec>{{a, b, Sub::None, Sub::None, false}}; };
    std::vector<LemmaRow> r;
    r.push_back(row("(i) tetrahedral", {3, 0}, with1(Cls::Tetrahedral), {2}));
    r.push_back(row("(i) octahedral", {3, 0}, with1(Cls::Octahedral), {1}));
    r.push_back(row("(i) nsp", {3, 0}, with1(Cls::NSP), {1}));
    std::vector<CaseSpec> everything;
    for (Cls a : nd)
        for (Cls b : nd) everything.push_back({a, b, Sub::None, Sub::None, false});
    r.push_back(row("(ii) any", {2, 1}, everything, {0}));
    r.push_back(row("(iii) tetrahedral", {4, 0}, with1(Cls::Tetrahedral), {7}));
    r.push_back(row("(iii) octahedral", {4, 0}, with1(Cls::Octahedral), {4}));
    r.push_back(row("(iii) nsp", {4, 0}, with1(Cls::NSP), {3}));
    r.push_back(row("(iv) tetrahedral", {3, 1}, with1(Cls::Tetrahedral), {0}));
    r.push_back(row("(iv) octahedral", {3, 1}, with1(Cls::Octahedral), {0}));
    r.push_back(row("(v) tetra-tetra", {2, 2}, pair(Cls::Tetrahedral, Cls::Tetrahedral), {1, 3}));
    r.push_back(row("(v) tetra-octa", {2, 2}, pair(Cls::Tetrahedral, Cls::Octahedral), {1}));
    r.push_back(row("(v) tetra-nsp", {2, 2}, pair(Cls::Tetrahedral, Cls::NSP), {1}));
    r.push_back(row("(v) octa-octa", {2, 2}, pair(Cls::Octahedral, Cls::Octahedral), {1, 2}));
    r.push_back(row("(v) octa-nsp", {2, 2}, pair(Cls::Octahedral, Cls::NSP), {1}));
    r.push_back(row("(v) nsp-nsp", {2, 2}, pair(Cls::NSP, Cls::NSP), {1, 2}));
    return r;
}

std::vector<LemmaRow> rows_41() {
    const bool F = false;
    std::vector<LemmaRow> r;
    auto one = [&](Sub a) { return std::vector<Sub>{a}; };
    r.push_back(row("(i) P", {2, 0}, di_cases(one(Sub::P), kNotP, F), {3}));
    r.push_back(row("(i) notP", {2, 0}, di_cases(kNotP, kNotP, F), {2}));
    r.push_back(row("(ii)", {1, 1}, di_cases(kAll, kNotP, F), {0}));
    r.push_back(row("(iii) P", {3, 0}, di_cases(one(Sub::P), kNotP, F), {6}));
    r.push_back(row("(iii) IP", {3, 0}, di_cases(one(Sub::IP), kNotP, F), {3}));
    r.push_back(row("(iii) Q", {3, 0}, di_cases(one(Sub::Q), kNotP, F), {4}));
    r.push_back(row("(iii) R", {3, 0}, di_cases(one(Sub::R), kNotP, F), {3}));
    r.push_back(row("(iv)", {2, 1}, di_cases(kAll, kNotP, F), {0}));
    r.push_back(row("(v)", {1, 2}, di_cases(kAll, kNotP, F), {0}));
    r.push_back(row("(vi) P", {4, 0}, di_cases(one(Sub::P), kNotP, F), {21}));
    r.push_back(row("(vi) IP", {4, 0}, di_cases(one(Sub::IP), kNotP, F), {11}));
    r.push_back(row("(vi) Q", {4, 0}, di_cases(one(Sub::Q), kNotP, F), {14}));
    r.push_back(row("(vi) R", {4, 0}, di_cases(one(Sub::R), kNotP, F), {10}));
    r.push_back(row("(vii) P", {3, 1}, di_cases(one(Sub::P), kNotP, F), {0}));
    r.push_back(row("(vii) IP", {3, 1}, di_cases(one(Sub::IP), kNotP, F), {0}));
    r.push_back(row("(vii) Q", {3, 1}, di_cases(one(Sub::Q), kNotP, F), {0}));
    r.push_back(row("(vii) R", {3, 1}, di_cases(one(Sub::R), kNotP, F), {0, 1}));
    r.push_back(row("(viii) P", {2, 2}, di_cases(one(Sub::P), kNotP, F), {6}));
    r.push_back(row("(viii) notP", {2, 2}, di_cases(kNotP, kNotP, F), {4}));
    r.push_back(row("(ix) P, IP", {1, 3}, di_cases(one(Sub::P), one(Sub::IP), F), {0}));
    r.push_back(row("(ix) P, Q", {1, 3}, di_cases(one(Sub::P), one(Sub::Q), F), {0}));
    r.push_back(row("(ix) P, R", {1, 3}, di_cases(one(Sub::P), one(Sub::R), F), {0, 1}));
    r.push_back(row("(ix) notP, IP", {1, 3}, di_cases(kNotP, one(Sub::IP), F), {0}));
    r.push_back(row("(ix) notP, Q", {1, 3}, di_cases(kNotP, one(Sub::Q), F), {0}));
    r.push_back(row("(ix) notP, R", {1, 3}, di_cases(kNotP, one(Sub::R), F), {0, 1}));
    return r;
}

std::vector<LemmaRow> rows_43() {
    const bool T = true;
    std::vector<LemmaRow> r;
    auto one = [&](Sub a) { return std::vector<Sub>{a}; };
    r.push_back(row("(i) P", {2, 0}, di_cases(one(Sub::P), kNotP, T), {3}));
    r.push_back(row("(i) notP", {2, 0}, di_cases(kNotP, kNotP, T), {2}));
    r.push_back(row("(ii)", {1, 1}, di_cases(kAll, kNotP, T), {1}));
    r.push_back(row("(iii) P", {3, 1}, di_cases(one(Sub::P), kNotP, T), {7}));
    r.push_back(row("(iii) IP", {3, 1}, di_cases(one(Sub::IP), kNotP, T), {4}));
    r.push_back(row("(iii) Q", {3, 1}, di_cases(one(Sub::Q), kNotP, T), {5}));
    r.push_back(row("(iii) R", {3, 1}, di_cases(one(Sub::R), kNotP, T), {4, 5, 7, 8}));
    r.push_back(row("(iv) P, I(nu2) P", {2, 2}, di_cases(one(Sub::P), one(Sub::IP), T), {8, 12}));
    r.push_back(row("(iv) P, I(nu2) not P", {2, 2}, di_cases(one(Sub::P), {Sub::Q, Sub::R}, T), {8}));
    r.push_back(row("(iv) notP, both I(nu) P", {2, 2}, di_cases(one(Sub::IP), one(Sub::IP), T), {5, 7}));
    std::vector<CaseSpec> exactly_one = di_cases(one(Sub::IP), {Sub::Q, Sub::R}, T);
    for (auto& c : di_cases({Sub::Q, Sub::R}, one(Sub::IP), T)) exactly_one.push_back(c);
    r.push_back(row("(iv) notP, exactly one I(nu) P", {2, 2}, exactly_one, {5, 7}));
    r.push_back(row("(iv) notP, neither I(nu) P", {2, 2}, di_cases({Sub::Q, Sub::R}, {Sub::Q, Sub::R}, T),
                    {5, 6, 7, 8, 9, 10}));
    r.push_back(row("(v) P, I(nu2) P", {1, 3}, di_cases(one(Sub::P), one(Sub::IP), T), {4, 10}));
    r.push_back(row("(v) P, Q", {1, 3}, di_cases(one(Sub::P), one(Sub::Q), T), {4, 5, 6}));
    r.push_back(row("(v) P, R", {1, 3}, di_cases(one(Sub::P), one(Sub::R), T), {4, 6}));
    r.push_back(row("(v) notP, I(nu2) P", {1, 3}, di_cases(kNotP, one(Sub::IP), T), {4}));
    r.push_back(row("(v) notP, Q", {1, 3}, di_cases(kNotP, one(Sub::Q), T), {5}));
    r.push_back(row("(v) notP, R", {1, 3}, di_cases(kNotP, one(Sub::R), T), {4, 5, 7, 8}));
    return r;
}

}  // namespace

std::vector<LemmaRow> lemma_table(const std::string& id) {
    std::vector<LemmaRow> rows;
    if (id == "3.1" || id == "lemma3.1") rows = rows_31();
    else if (id == "4.1" || id == "lemma4.1") rows = rows_41();
    else if (id == "4.3" || id == "lemma4.3") rows = rows_43();
    else throw std::invalid_argument("unknown lemma id '" + id + "'");
    for (auto& r : rows)
        for (const auto& c : r.cases) {
            PoleOutcome o = moment(r.key, c);
            r.got.insert(o.outcomes.begin(), o.outcomes.end());
            r.undetermined = r.undetermined || o.undetermined;
        }
    return rows;
}

}  // namespace rs
