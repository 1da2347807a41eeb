#include <algorithm>

#include "rs/algebra.hpp"

namespace rs {

int Rep::dim() const {
    switch (kind) {
        case Kind::Char: return 1;
        case Kind::Induced:
        case Kind::Sigma: return 2;
        case Kind::AdTwist: return 3;
        case Kind::Sym4: return 5;
        case Kind::Product: {
            int d = 1;
            for (const auto& f : factors) d *= f.dim();
            return d;
        }
    }
    return 0;
}

static auto key(const Rep& r) { return std::tie(r.kind, r.side, r.field, r.ch, r.twist, r.factors); }
bool Rep::operator==(const Rep& o) const { return key(*this) == key(o); }
bool Rep::operator<(const Rep& o) const { return key(*this) < key(o); }

Rep mk_char(const CharExpr& c) {
    Rep r;
    r.kind = Kind::Char;
    r.ch = c;
    return r;
}
Rep mk_ad(int side, const CharExpr& t) {
    Rep r;
    r.kind = Kind::AdTwist;
    r.side = side;
    r.twist = t;
    return r;
}
Rep mk_sym4(int side, const CharExpr& t) {
    Rep r;
    r.kind = Kind::Sym4;
    r.side = side;
    r.twist = t;
    return r;
}
Rep mk_sigma(int side, const CharExpr& t) {
    Rep r;
    r.kind = Kind::Sigma;
    r.side = side;
    r.twist = t;
    return r;
}
Rep mk_product(std::vector<Rep> f) {
    Rep r;
    r.kind = Kind::Product;
    std::vector<Rep> flat;
    for (auto& x : f) {
        if (x.kind == Kind::Product) flat.insert(flat.end(), x.factors.begin(), x.factors.end());
        else flat.push_back(x);
    }
    std::sort(flat.begin(), flat.end());
    r.factors = flat;
    return r;
}

Isobaric mk_induced(Context& cx, int field, const CharExpr& alpha, const CharExpr& twist) {
    CharExpr a = alpha, t = twist;
    if (!t.e.empty()) {
        if (auto r = cx.restrict_to(t, field)) {
            a = a + *r;
            t = {};
        }
    }
    CharExpr chi = CharExpr::gen(cx.fields()[field].chi);
    if (cx.trivial_K(a * 2)) {
        if (cx.trivial_K(a)) return {mk_char(t), mk_char(chi + t)};
        int d = cx.descend(field, a);
        CharExpr dc = CharExpr::gen(d);
        return {mk_char(dc + t), mk_char(dc + chi + t)};
    }
    Rep r;
    r.kind = Kind::Induced;
    r.field = field;
    r.ch = a;
    r.twist = t;
    return {r};
}

Isobaric twist_rep(Context& cx, const Rep& a, const CharExpr& t) {
    switch (a.kind) {
        case Kind::Char: return {mk_char(a.ch + t)};
        case Kind::Induced: return mk_induced(cx, a.field, a.ch, a.twist + t);
        case Kind::Sigma: {
            Rep r = a;
            r.twist = a.twist + t;
            return {r};
        }
        case Kind::AdTwist:
        case Kind::Sym4: {
            Rep r = a;
            r.twist = a.twist + t;
            return {r};
        }
        case Kind::Product: {
            std::vector<Rep> rest(a.factors.begin() + 1, a.factors.end());
            Isobaric out;
            for (const auto& f : twist_rep(cx, a.factors.front(), t)) {
                std::vector<Rep> fs = rest;
                fs.push_back(f);
                out.push_back(mk_product(fs));
            }
            return out;
        }
    }
    return {};
}

Rep rep_dual(const Rep& a) {
    Rep r = a;
    r.twist = -a.twist;
    if (a.kind == Kind::Char || a.kind == Kind::Induced) r.ch = -a.ch;
    if (a.kind == Kind::Product) {
        r.factors.clear();
        for (const auto& f : a.factors) r.factors.push_back(rep_dual(f));
        std::sort(r.factors.begin(), r.factors.end());
    }
    return r;
}

namespace {

struct IView {
    int field;
    CharExpr alpha, twist;
};

IView view(const Rep& a, const Context& cx) {
    if (a.kind == Kind::Sigma) {
        const auto& S = cx.side(a.side);
        return {S.sfield, CharExpr::gen(S.phi), a.twist};
    }
    return {a.field, a.ch, a.twist};
}

}  // namespace

bool rep_equiv(const Rep& a, const Rep& b, Context& cx) {
    if (a.dim() != b.dim()) return false;
    if (a.kind == Kind::Product || b.kind == Kind::Product) throw Unresolved{"comparison with an unevaluated product"};
    bool ia = a.kind == Kind::Induced || a.kind == Kind::Sigma;
    bool ib = b.kind == Kind::Induced || b.kind == Kind::Sigma;
    if (ia && ib) {
        IView x = view(a, cx), y = view(b, cx);
        if (!cx.same_field(x.field, y.field)) return false;
        CharExpr r = x.twist - y.twist;
        CharExpr rr;
        if (!r.e.empty()) {
            auto res = cx.restrict_to(r, x.field);
            if (res) rr = *res;
            else if (cx.raw(r) != Tri::Yes) throw Unresolved{"twist ratio with unknown restriction"};
        }
        CharExpr s = x.alpha + rr;
        if (cx.trivial_K(s - y.alpha)) return true;
        return cx.trivial_K(s + y.alpha);
    }
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Char: return cx.trivial_F(a.ch - b.ch);
        case Kind::AdTwist: {
            if (a.side != b.side) return false;
            CharExpr r = a.twist - b.twist;
            if (cx.cls(a.side) == Cls::Tetrahedral) {
                CharExpr mu = CharExpr::gen(cx.side(a.side).mu);
                for (int k = 0; k < 3; ++k)
                    if (cx.trivial_F(r + mu * k)) return true;
                return false;
            }
            return cx.trivial_F(r);
        }
        case Kind::Sym4: {
            CharExpr r = a.twist - b.twist;
            if (a.side == b.side) return cx.trivial_F(r);
            if (cx.raw(r) != Tri::Yes) throw Unresolved{"twisted Sym4 comparison across sides"};
            return cx.ask_bool("S|sym4(1)~sym4(2)");
        }
        default: return false;
    }
}

Tri rep_equiv_tri(const Rep& a, const Rep& b, Context& cx) {
    try {
        return rep_equiv(a, b, cx) ? Tri::Yes : Tri::No;
    } catch (const NeedQuery&) {
        return Tri::Unknown;
    } catch (const Unresolved&) {
        return Tri::Unknown;
    }
}

std::string rep_str(const Rep& a, const Context& cx) {
    auto tw = [&](const CharExpr& t) { return t.e.empty() ? std::string() : "(x)" + cx.str(t); };
    switch (a.kind) {
        case Kind::Char: return cx.str(a.ch);
        case Kind::Induced: return "I_" + cx.fields()[a.field].name + "(" + cx.str(a.ch) + ")" + tw(a.twist);
        case Kind::Sigma: return "sigma" + std::to_string(a.side) + tw(a.twist);
        case Kind::AdTwist: return "Ad" + std::to_string(a.side) + tw(a.twist);
        case Kind::Sym4: return "Sym4c" + std::to_string(a.side) + tw(a.twist);
        case Kind::Product: {
            std::string s = "[";
            for (std::size_t i = 0; i < a.factors.size(); ++i) s += (i ? " x " : "") + rep_str(a.factors[i], cx);
            return s + "]";
        }
    }
    return "?";
}

std::string iso_str(const Isobaric& a, const Context& cx) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " + " : "") + rep_str(a[i], cx);
    return s.empty() ? "0" : s;
}

}  // namespace rs
