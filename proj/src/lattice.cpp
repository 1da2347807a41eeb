#include <algorithm>
#include <numeric>

#include "rs/algebra.hpp"

namespace rs {

namespace {

i64 checked(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("lattice entry overflow");
    return static_cast<i64>(x);
}

i64 floordiv(i64 a, i64 b) {  // b > 0
    i64 q = a / b;
    if ((a % b) != 0 && (a < 0)) --q;
    return q;
}

int lead(const std::vector<i64>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) return static_cast<int>(i);
    return -1;
}

void pad(std::vector<i64>& v, std::size_t n) {
    if (v.size() < n) v.resize(n, 0);
}

// a := a - q*b
void axpy(std::vector<i64>& a, i64 q, const std::vector<i64>& b) {
    if (!q) return;
    pad(a, b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = checked((__int128)a[i] - (__int128)q * b[i]);
}

// extended gcd: g = x*a + y*b, g >= 0
i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b) {
        i64 q = a / b, t;
        t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return a;
}

}  // namespace

CharExpr CharExpr::operator+(const CharExpr& o) const {
    CharExpr r = *this;
    for (auto [g, k] : o.e) {
        i64 v = (r.e[g] += k);
        if (!v) r.e.erase(g);
    }
    return r;
}
CharExpr CharExpr::operator-() const {
    CharExpr r;
    for (auto [g, k] : e) r.e[g] = -k;
    return r;
}
CharExpr CharExpr::operator-(const CharExpr& o) const { return *this + (-o); }
CharExpr CharExpr::operator*(i64 k) const {
    CharExpr r;
    if (!k) return r;
    for (auto [g, v] : e) r.e[g] = v * k;
    return r;
}

void Lattice::add(std::vector<i64> v) {
    std::size_t n = v.size();
    for (auto& r : rows_) n = std::max(n, r.size());
    pad(v, n);
    for (auto& r : rows_) pad(r, n);
    while (true) {
        int c = lead(v);
        if (c < 0) break;
        auto it = std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return lead(r) == c; });
        if (it == rows_.end()) {
            if (v[c] < 0)
                for (auto& x : v) x = -x;
            auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return lead(r) > c; });
            rows_.insert(pos, v);
            break;
        }
        auto& r = *it;
        i64 a = r[c], b = v[c];
        if (b % a == 0) {
            axpy(v, b / a, r);
            continue;
        }
        i64 x, y;
        i64 g = egcd(a, b, x, y);
        std::vector<i64> nr(n), nv(n);
        for (std::size_t i = 0; i < n; ++i) {
            nr[i] = checked((__int128)x * r[i] + (__int128)y * v[i]);
            nv[i] = checked((__int128)(a / g) * v[i] - (__int128)(b / g) * r[i]);
        }
        r = nr;
        v = nv;
    }
    // Hermite reduction above pivots
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        int p = lead(rows_[j]);
        i64 piv = rows_[j][p];
        for (std::size_t i = 0; i < j; ++i) axpy(rows_[i], floordiv(rows_[i][p], piv), rows_[j]);
    }
}

bool Lattice::contains(std::vector<i64> v) const {
    for (const auto& r : rows_) {
        pad(v, r.size());
        int p = lead(r);
        int c = lead(v);
        if (c < 0) return true;
        if (c < p) return false;
        if (c > p) continue;
        if (v[c] % r[p]) return false;
        axpy(v, v[c] / r[p], r);
    }
    return lead(v) < 0;
}

// Smith form with column transform: returns diagonal and V such that M*V is
// row-equivalent to diag.  Coordinates of x in the quotient are x*V.
struct Smith {
    std::vector<i64> diag;               // one entry per column, 0 = free
    std::vector<std::vector<i64>> V;     // n x n
};

static Smith smith(std::vector<std::vector<i64>> M, std::size_t n) {
    for (auto& r : M) pad(r, n);
    std::size_t m = M.size();
    std::vector<std::vector<i64>> V(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;
    auto colop = [&](std::size_t dst, std::size_t src, i64 q) {  // col dst -= q * col src
        for (std::size_t i = 0; i < m; ++i) M[i][dst] = checked((__int128)M[i][dst] - (__int128)q * M[i][src]);
        for (std::size_t i = 0; i < n; ++i) V[i][dst] = checked((__int128)V[i][dst] - (__int128)q * V[i][src]);
    };
    auto colswap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < m; ++i) std::swap(M[i][a], M[i][b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
    };
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // find nonzero pivot with smallest |value| in the remaining block
        while (true) {
            std::size_t bi = m, bj = n;
            i64 best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (M[i][j] && (!best || std::llabs(M[i][j]) < best)) { best = std::llabs(M[i][j]); bi = i; bj = j; }
            if (!best) goto done;
            std::swap(M[t], M[bi]);
            if (bj != t) colswap(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                i64 q = M[i][t] / M[t][t];
                if (q) axpy(M[i], q, M[t]);
                if (M[i][t]) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                i64 q = M[t][j] / M[t][t];
                if (q) colop(j, t, q);
                if (M[t][j]) clean = false;
            }
            if (!clean) continue;
            // divisibility condition
            bool div = true;
            for (std::size_t i = t + 1; i < m && div; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (M[i][j] % M[t][t]) {
                        axpy(M[t], -1, M[i]);
                        div = false;
                        break;
                    }
            if (div) break;
        }
    }
done:
    Smith s;
    s.diag.assign(n, 0);
    for (std::size_t i = 0; i < std::min(m, n); ++i) s.diag[i] = std::llabs(M[i][i]);
    s.V = V;
    return s;
}

GroupShape Context::shape() const {
    Smith s = smith(lat_.rows(), gens_.size());
    GroupShape g;
    for (i64 d : s.diag) {
        if (d == 1) continue;
        if (d == 0) ++g.free_rank;
        else g.torsion.push_back(d);
    }
    return g;
}

std::optional<std::vector<i64>> Context::cyclic_model(int bound, bool* exhausted) const {
    std::size_t n = gens_.size();
    Smith s = smith(lat_.rows(), n);
    if (exhausted) *exhausted = false;
    auto coords = [&](const CharExpr& c) {
        std::vector<i64> x = dense(c), y(n, 0);
        pad(x, n);
        for (std::size_t j = 0; j < n; ++j) {
            __int128 acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += (__int128)x[i] * s.V[i][j];
            y[j] = checked(acc);
        }
        return y;
    };
    std::vector<std::vector<i64>> dis;
    for (const auto& d : ne_) dis.push_back(coords(d));
    bool big = false;
    for (i64 d : s.diag)
        if (d > bound) big = true;
    bool has_free = std::any_of(s.diag.begin(), s.diag.end(), [](i64 d) { return d == 0; });
    for (int m = has_free ? 2 : 1; m <= (has_free ? bound : 1); ++m) {
        bool ok = true;
        for (const auto& y : dis) {
            bool nonzero = false;
            for (std::size_t j = 0; j < n && !nonzero; ++j) {
                i64 d = s.diag[j] ? s.diag[j] : m;
                if (d > 1 && ((y[j] % d) + d) % d) nonzero = true;
            }
            if (!nonzero) { ok = false; break; }
        }
        if (ok) {
            std::vector<i64> orders;
            for (i64 d : s.diag) {
                i64 e = d ? d : m;
                if (e > 1) orders.push_back(e);
            }
            if (big && exhausted) *exhausted = true;
            return orders;
        }
    }
    if (exhausted) *exhausted = true;
    return std::nullopt;
}

}  // namespace rs
