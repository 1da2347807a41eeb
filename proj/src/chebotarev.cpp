#include "rs/chebotarev.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace rs {

int FiniteGroup::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

void finalize_group(FiniteGroup& g) {
    int n = g.size();
    if (static_cast<int>(g.mul.size()) != n) throw std::logic_error(g.name + ": table size");
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != n) throw std::logic_error(g.name + ": table size");
        for (int x : row)
            if (x < 0 || x >= n) throw std::logic_error(g.name + ": not closed");
    }
    g.identity = -1;
    for (int e = 0; e < n && g.identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mul[e][a] == a && g.mul[a][e] == a;
        if (ok) g.identity = e;
    }
    if (g.identity < 0) throw std::logic_error(g.name + ": no identity");
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) g.inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inv[a] < 0) throw std::logic_error(g.name + ": missing inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) throw std::logic_error(g.name + ": not associative");
}

namespace {

// (w + x i + y j + z k) / 2
using Quat = std::array<int, 4>;

Quat qmul(const Quat& p, const Quat& q) {
    Quat r{p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3], p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
           p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1], p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
    for (int& v : r) {
        if (v % 2) throw std::logic_error("quaternion product left the Hurwitz order");
        v /= 2;
    }
    return r;
}

std::string qlabel(const Quat& q) {
    static const char* u[] = {"", "i", "j", "k"};
    int nz = 0, at = 0;
    for (int t = 0; t < 4; ++t)
        if (q[t]) {
            ++nz;
            at = t;
        }
    if (nz == 1) return std::string(q[at] < 0 ? "-" : "") + (at == 0 ? "1" : u[at]);
    std::string s = "(";
    for (int t = 0; t < 4; ++t) {
        if (t) s += q[t] < 0 ? "-" : "+";
        else if (q[t] < 0) s += "-";
        s += t == 0 ? "1" : u[t];
    }
    return s + ")/2";
}

FiniteGroup from_quats(const std::string& name, const std::vector<Quat>& el) {
    FiniteGroup g;
    g.name = name;
    std::map<Quat, int> idx;
    for (std::size_t i = 0; i < el.size(); ++i) {
        idx[el[i]] = static_cast<int>(i);
        g.labels.push_back(qlabel(el[i]));
        g.abs_trace.push_back(std::abs(el[i][0]));  // tr = 2 Re
    }
    g.mul.assign(el.size(), std::vector<int>(el.size()));
    for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b) {
            auto it = idx.find(qmul(el[a], el[b]));
            if (it == idx.end()) throw std::logic_error(name + ": not closed");
            g.mul[a][b] = it->second;
        }
    finalize_group(g);
    return g;
}

std::vector<Quat> q8_elements() {
    std::vector<Quat> v;
    for (int t = 0; t < 4; ++t)
        for (int s : {2, -2}) {
            Quat q{0, 0, 0, 0};
            q[t] = s;
            v.push_back(q);
        }
    return v;
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic order must be positive");
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    finalize_group(g);
    return g;
}

}  // namespace

FiniteGroup build_group(const std::string& kind) {
    if (kind == "Q8") return from_quats("Q8", q8_elements());
    if (kind == "binary_tetrahedral") {
        auto v = q8_elements();
        for (int m = 0; m < 16; ++m) v.push_back({m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1, m & 8 ? -1 : 1});
        return from_quats("binary_tetrahedral", v);
    }
    std::string n;
    if (kind.rfind("cyclic:", 0) == 0) n = kind.substr(7);
    else if (kind.size() > 1 && kind[0] == 'Z') n = kind.substr(1);
    if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos && n.size() < 6)
        return cyclic(std::stoi(n));
    throw std::invalid_argument("unsupported group kind '" + kind + "'");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    int na = a.size(), nb = b.size();
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) g.labels.push_back("(" + a.labels[x] + "," + b.labels[y] + ")");
    g.mul.assign(na * nb, std::vector<int>(na * nb));
    for (int p = 0; p < na * nb; ++p)
        for (int q = 0; q < na * nb; ++q) g.mul[p][q] = a.mul[p / nb][q / nb] * nb + b.mul[p % nb][q % nb];
    finalize_group(g);
    return g;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const Hom& h) {
    if (static_cast<int>(h.map.size()) != src.size() || h.target_size != dst.size()) return false;
    for (int a = 0; a < src.size(); ++a)
        for (int b = 0; b < src.size(); ++b)
            if (h.map[src.op(a, b)] != dst.op(h.map[a], h.map[b])) return false;
    return true;
}

bool is_surjective(const Hom& h) {
    std::vector<bool> hit(h.target_size, false);
    for (int x : h.map)
        if (x >= 0 && x < h.target_size) hit[x] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Hom trivial_quotient(const FiniteGroup& g) { return {std::vector<int>(g.size(), 0), 1}; }

Hom q8_mod_i(const FiniteGroup& q8) {
    Hom h{std::vector<int>(q8.size()), 2};
    for (int a = 0; a < q8.size(); ++a) {
        const auto& l = q8.labels[a];
        h.map[a] = (l == "1" || l == "-1" || l == "i" || l == "-i") ? 0 : 1;
    }
    return h;
}

Hom tetra_mod_q8(const FiniteGroup& bt) {
    int w = bt.index_of("(-1+i+j+k)/2");  // order 3
    if (w < 0) throw std::invalid_argument("not the binary tetrahedral group");
    auto in_q8 = [&](int g) { return bt.abs_trace[g] != 1; };  // Q8 is exactly where |tr| is 0 or 2
    Hom h{std::vector<int>(bt.size(), -1), 3};
    int winv = bt.inv[w];
    for (int g = 0; g < bt.size(); ++g) {
        int x = g;
        for (int k = 0; k < 3; ++k, x = bt.op(x, winv))
            if (in_q8(x)) {
                h.map[g] = k;
                break;
            }
    }
    return h;
}

FiberedSubgroup fibered_subgroup(const FiniteGroup& g1, const Hom& q1, const FiniteGroup& g2, const Hom& q2,
                                 const FiniteGroup& quotient) {
    if (!is_homomorphism(g1, quotient, q1) || !is_homomorphism(g2, quotient, q2))
        throw std::invalid_argument("quotient map is not a homomorphism");
    if (!is_surjective(q1) || !is_surjective(q2)) throw std::invalid_argument("quotient map is not surjective");
    FiberedSubgroup h;
    h.g1 = &g1;
    h.g2 = &g2;
    h.quotient_size = quotient.size();
    for (int a = 0; a < g1.size(); ++a)
        for (int b = 0; b < g2.size(); ++b)
            if (q1.map[a] == q2.map[b]) h.elements.push_back({a, b});
    return h;
}

bool is_closed(const FiberedSubgroup& h) {
    std::set<std::pair<int, int>> s(h.elements.begin(), h.elements.end());
    for (const auto& [a, b] : h.elements)
        for (const auto& [c, d] : h.elements)
            if (!s.count({h.g1->op(a, c), h.g2->op(b, d)})) return false;
    return true;
}

Rational density(const FiberedSubgroup& h, Compare cmp) {
    if (h.elements.empty()) return 0;
    long long n = 0;
    for (const auto& [a, b] : h.elements) {
        int t1 = h.g1->abs_trace.at(a), t2 = h.g2->abs_trace.at(b);
        switch (cmp) {
            case Compare::Gt: n += t1 > t2; break;
            case Compare::GtReversed: n += t2 > t1; break;
            case Compare::Neq: n += t1 != t2; break;
            case Compare::Eq: n += t1 == t2; break;
        }
    }
    return Rational(n, static_cast<long long>(h.elements.size()));
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> v{"tetrahedral", "dihedral1", "dihedral2"};
    return v;
}

ExampleReport run_example(const std::string& name) {
    ExampleReport r;
    r.name = name;
    FiniteGroup g, q;
    Hom h;
    if (name == "tetrahedral") {
        g = build_group("binary_tetrahedral");
        q = build_group("cyclic:3");
        h = tetra_mod_q8(g);
        r.expected_order = 192;
        r.expected_gt = Rational(1, 16);
        r.expected_neq = Rational(1, 8);
    } else if (name == "dihedral1") {
        g = build_group("Q8");
        q = build_group("cyclic:2");
        h = q8_mod_i(g);
        r.expected_order = 32;
        r.expected_gt = Rational(1, 8);
        r.expected_neq = Rational(1, 4);
    } else if (name == "dihedral2") {
        g = build_group("Q8");
        q = build_group("cyclic:1");
        h = trivial_quotient(g);
        r.expected_order = 64;
        r.expected_gt = Rational(3, 16);
        r.expected_neq = Rational(3, 8);
    } else {
        throw std::invalid_argument("unknown example '" + name + "'");
    }
    FiberedSubgroup H = fibered_subgroup(g, h, g, h, q);
    r.order = H.size();
    r.closed = is_closed(H) && H.size() * q.size() == static_cast<std::size_t>(g.size() * g.size());
    r.gt = density(H, Compare::Gt);
    r.gt_reversed = density(H, Compare::GtReversed);
    r.neq = density(H, Compare::Neq);
    r.eq = density(H, Compare::Eq);
    return r;
}

// ------------------------------------------------------------------ Z/4

bool Z4Check::ok() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

Z4Check verify_property_P_Z4() {
    FiniteGroup q8 = build_group("Q8");
    int one = q8.index_of("1"), j = q8.index_of("j"), i = q8.index_of("i");
    // the cyclic subgroup <j> in the order [1], [-1], [j], [-j]
    std::vector<int> cls{one, q8.op(j, j), j, q8.op(q8.op(j, j), j)};
    std::vector<int> expo{0, 2, 1, 3};  // element = j^expo
    // psi_k(j) = sqrt(-1)^e_k
    const int e[4] = {0, 2, 3, 1};
    using Vals = std::array<int, 4>;  // powers of sqrt(-1) on the four elements
    auto vals = [&](int k) {
        Vals v;
        for (int t = 0; t < 4; ++t) v[t] = (e[k] * expo[t]) % 4;
        return v;
    };
    // tau = conjugation by i, the nontrivial class of Q8 / <j>
    auto tau_vals = [&](const Vals& v) {
        Vals out;
        for (int t = 0; t < 4; ++t) {
            int g = q8.op(q8.op(i, cls[t]), q8.inv[i]);
            int pos = static_cast<int>(std::find(cls.begin(), cls.end(), g) - cls.begin());
            out[t] = v[pos];
        }
        return out;
    };
    auto div = [](const Vals& a, const Vals& b) {
        Vals o;
        for (int t = 0; t < 4; ++t) o[t] = ((a[t] - b[t]) % 4 + 4) % 4;
        return o;
    };
    auto sq = [](const Vals& a) {
        Vals o;
        for (int t = 0; t < 4; ++t) o[t] = (2 * a[t]) % 4;
        return o;
    };
    Vals psi[4];
    for (int k = 0; k < 4; ++k) psi[k] = vals(k);
    Z4Check r;
    static const char* unit[] = {"1", "sqrt(-1)", "-1", "-sqrt(-1)"};
    for (int k = 0; k < 4; ++k) {
        std::string row = "psi" + std::to_string(k) + ":";
        for (int t = 0; t < 4; ++t) row += std::string(" ") + unit[psi[k][t]];
        r.table.push_back(row);
    }
    r.checks.push_back({"psi3^tau = psi2", tau_vals(psi[3]) == psi[2]});
    r.checks.push_back({"psi3/psi3^tau = psi1", div(psi[3], tau_vals(psi[3])) == psi[1]});
    r.checks.push_back({"psi1^2 = psi0", sq(psi[1]) == psi[0]});
    r.checks.push_back({"psi2^tau = psi3", tau_vals(psi[2]) == psi[3]});
    return r;
}

// ---------------------------------------------------------- model oracle

std::string ModelInstance::str() const {
    std::string s = same_field ? "same field, Z/" + std::to_string(n1) : "different fields";
    s += ": psi1=" + std::to_string(b1) + (same_field ? "" : " mod " + std::to_string(n1));
    s += ", psi2=" + std::to_string(b2) + (same_field ? "" : " mod " + std::to_string(n2));
    return s;
}

namespace {

int nu_order(int n, int b) {
    int a = ((2 * b) % n + n) % n;
    return n / std::gcd(n, a);  // gcd(n, 0) = n
}

// trinomial counts: ways to write m as a sum of j terms in {-1, 0, 1}, indexed m + j
std::vector<long long> spread(int j) {
    std::vector<long long> v{1};
    for (int t = 0; t < j; ++t) {
        std::vector<long long> w(v.size() + 2, 0);
        for (std::size_t m = 0; m < v.size(); ++m)
            for (int d = 0; d < 3; ++d) w[m + d] += v[m];
        v = std::move(w);
    }
    return v;
}

long long mod(long long x, long long n) { return ((x % n) + n) % n; }

// average of A^j over Z/n ⋊ Z/2, where A = 1 + zeta^(ax) + zeta^(-ax) on rotations, -1 on reflections
long long one_side(int n, int a, int j) {
    auto s = spread(j);
    long long count = 0;
    for (int m = -j; m <= j; ++m)
        if (mod(static_cast<long long>(a) * m, n) == 0) count += s[m + j];
    long long total = count + (j % 2 ? -1 : 1);
    return total / 2;
}

}  // namespace

Sub model_subflag(int n, int b) {
    switch (nu_order(n, b)) {
        case 1: throw std::invalid_argument("nu is trivial: the induced representation is reducible");
        case 2: return Sub::P;
        case 3: return Sub::Q;
        case 4: return Sub::IP;
        default: return Sub::R;
    }
}

void validate_model(const ModelInstance& m) {
    if (m.n1 < 1 || m.n2 < 1) throw std::invalid_argument("group orders must be positive");
    (void)model_subflag(m.n1, m.b1);
    (void)model_subflag(m.n2, m.b2);
    if (m.same_field) {
        if (m.n1 != m.n2) throw std::invalid_argument("same-field model needs one group");
        long long a1 = mod(2 * m.b1, m.n1), a2 = mod(2 * m.b2, m.n1);
        if (a1 == a2 || a1 == mod(-a2, m.n1))
            throw std::invalid_argument("nu1 = nu2^(+-1): the two sides are twist-equivalent");
    }
}

CaseSpec model_case(const ModelInstance& m) {
    validate_model(m);
    return {Cls::Dihedral, Cls::Dihedral, model_subflag(m.n1, m.b1), model_subflag(m.n2, m.b2), m.same_field};
}

int model_oracle(const ModelInstance& m, const MomentKey& key) {
    validate_model(m);
    if (!m.same_field)
        return static_cast<int>(one_side(m.n1, 2 * m.b1, key.j) * one_side(m.n2, 2 * m.b2, key.k));
    // shared group: rotations contribute when a1*m1 + a2*m2 = 0 mod n
    int n = m.n1;
    auto s1 = spread(key.j), s2 = spread(key.k);
    long long count = 0;
    for (int x = -key.j; x <= key.j; ++x)
        for (int y = -key.k; y <= key.k; ++y)
            if (mod(2LL * m.b1 * x + 2LL * m.b2 * y, n) == 0) count += s1[x + key.j] * s2[y + key.k];
    long long total = count + ((key.j + key.k) % 2 ? -1 : 1);
    return static_cast<int>(total / 2);
}

}  // namespace rs
