#include "rs/decompose.hpp"

namespace rs {

namespace {

void note(Context& cx, const std::string& rule, const std::string& in, const Isobaric& out) {
    if (cx.trace) cx.trace->push_back({rule, in, iso_str(out, cx)});
}

Isobaric twisted(Context& cx, const Isobaric& xs, const CharExpr& t) {
    Isobaric out;
    for (const auto& x : xs)
        for (auto& y : twist_rep(cx, x, t)) out.push_back(y);
    return out;
}

bool inducedish(const Rep& r) { return r.kind == Kind::Induced || r.kind == Kind::Sigma; }

Isobaric reduce_list(std::vector<Rep> L, Context& cx) {
    if (L.size() == 1) return L;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            std::optional<Isobaric> d;
            try {
                d = pair_decompose(L[i], L[j], cx);
            } catch (const Unresolved&) {
                d.reset();
            }
            if (!d) continue;
            std::vector<Rep> rest;
            for (std::size_t k = 0; k < L.size(); ++k)
                if (k != i && k != j) rest.push_back(L[k]);
            Isobaric out;
            for (const auto& c : *d) {
                std::vector<Rep> nl = rest;
                nl.push_back(c);
                for (auto& x : reduce_list(nl, cx)) out.push_back(x);
            }
            return out;
        }
    return {mk_product(L)};
}

}  // namespace

int total_dim(const Isobaric& a) {
    int d = 0;
    for (const auto& r : a) d += r.dim();
    return d;
}

Isobaric adjoint_of(int side, Context& cx) {
    const auto& S = cx.side(side);
    Isobaric out;
    if (cx.cls(side) == Cls::Dihedral) {
        CharExpr chi = CharExpr::gen(S.chi);
        if (cx.sub(side) == Sub::P) {
            CharExpr b = CharExpr::gen(S.beta);
            out = {mk_char(chi), mk_char(b), mk_char(b + chi)};
        } else {
            out = {mk_char(chi)};
            for (auto& r : mk_induced(cx, S.field, CharExpr::gen(S.nu))) out.push_back(r);
        }
    } else {
        out = {mk_ad(side)};
    }
    note(cx, "adjoint", "Ad(pi" + std::to_string(side) + ")", out);
    return out;
}

Isobaric square_decompose(int side, Context& cx) {
    const auto& S = cx.side(side);
    Isobaric out;
    switch (cx.cls(side)) {
        case Cls::Dihedral: {
            Isobaric a = adjoint_of(side, cx);
            out = product_normalize({a, a}, cx);
            break;
        }
        case Cls::Tetrahedral: {
            CharExpr mu = CharExpr::gen(S.mu);
            out = {mk_char({}), mk_char(mu), mk_char(mu * 2), mk_ad(side), mk_ad(side)};
            break;
        }
        case Cls::Octahedral:
            out = {mk_char({}), mk_ad(side), mk_sigma(side), mk_ad(side, CharExpr::gen(S.eta))};
            break;
        case Cls::NSP:
            out = {mk_char({}), mk_ad(side), mk_sym4(side)};
            break;
    }
    note(cx, "square", "Ad(pi" + std::to_string(side) + ")^2", out);
    return out;
}

std::optional<Isobaric> pair_decompose(const Rep& a, const Rep& b, Context& cx) {
    if (a.kind == Kind::Product || b.kind == Kind::Product) return std::nullopt;
    std::string in = rep_str(a, cx) + " x " + rep_str(b, cx);
    if (a.kind == Kind::Char || b.kind == Kind::Char) {
        const Rep& c = a.kind == Kind::Char ? a : b;
        const Rep& o = a.kind == Kind::Char ? b : a;
        Isobaric out = twist_rep(cx, o, c.ch);
        note(cx, "twist", in, out);
        return out;
    }
    if (inducedish(a) && inducedish(b)) {
        int fa = a.kind == Kind::Sigma ? cx.side(a.side).sfield : a.field;
        int fb = b.kind == Kind::Sigma ? cx.side(b.side).sfield : b.field;
        if (!cx.same_field(fa, fb)) return std::nullopt;
        CharExpr al = a.kind == Kind::Sigma ? CharExpr::gen(cx.side(a.side).phi) : a.ch;
        CharExpr be = b.kind == Kind::Sigma ? CharExpr::gen(cx.side(b.side).phi) : b.ch;
        CharExpr t = a.twist + b.twist;
        Isobaric out = mk_induced(cx, fa, al + be, t);
        for (auto& r : mk_induced(cx, fa, al - be, t)) out.push_back(r);
        note(cx, "induced-product", in, out);
        return out;
    }
    if (a.kind == Kind::AdTwist && b.kind == Kind::AdTwist) {
        if (a.side != b.side) return std::nullopt;
        Isobaric out = twisted(cx, square_decompose(a.side, cx), a.twist + b.twist);
        note(cx, "adjoint-square", in, out);
        return out;
    }
    if ((a.kind == Kind::AdTwist && inducedish(b)) || (b.kind == Kind::AdTwist && inducedish(a))) {
        const Rep& ad = a.kind == Kind::AdTwist ? a : b;
        const Rep& x = a.kind == Kind::AdTwist ? b : a;
        int i = ad.side;
        if (cx.cls(i) != Cls::Octahedral) return std::nullopt;
        bool is_sigma = x.kind == Kind::Sigma && x.side == i;
        if (!is_sigma) {
            Rep probe = x;
            probe.twist = {};
            if (!rep_equiv(probe, mk_sigma(i), cx)) return std::nullopt;
        }
        const auto& S = cx.side(i);
        CharExpr t = ad.twist + x.twist + CharExpr::gen(S.nup);
        Isobaric out = {mk_ad(i, t), mk_ad(i, t + CharExpr::gen(S.xi))};
        note(cx, "gl3xgl2", in, out);
        return out;
    }
    return std::nullopt;
}

bool adjoint_product_cuspidal(const Rep& a, const Rep& b, Context& cx) {
    const Rep* ad = a.kind == Kind::AdTwist ? &a : b.kind == Kind::AdTwist ? &b : nullptr;
    if (!ad) return false;
    const Rep& x = ad == &a ? b : a;
    if (!inducedish(x)) return false;
    if (cx.cls(ad->side) != Cls::Octahedral) return true;
    Rep probe = x;
    probe.twist = {};
    return !rep_equiv(probe, mk_sigma(ad->side), cx);
}

Isobaric product_normalize(const std::vector<Isobaric>& factors, Context& cx) {
    if (factors.empty()) return {mk_char({})};
    std::vector<std::vector<Rep>> lists{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<Rep>> next;
        for (const auto& l : lists)
            for (const auto& r : f) {
                auto nl = l;
                nl.push_back(r);
                next.push_back(nl);
            }
        lists = std::move(next);
    }
    Isobaric out;
    for (const auto& l : lists)
        for (auto& r : reduce_list(l, cx)) out.push_back(r);
    return out;
}

}  // namespace rs
