#include "rs/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace rs {

// ------------------------------------------------------------- case specs

std::string cls_name(Cls c) {
    switch (c) {
        case Cls::Dihedral: return "dihedral";
        case Cls::Tetrahedral: return "tetrahedral";
        case Cls::Octahedral: return "octahedral";
        case Cls::NSP: return "nsp";
    }
    return "?";
}

std::string sub_name(Sub s) {
    switch (s) {
        case Sub::None: return "";
        case Sub::P: return "P";
        case Sub::IP: return "IP";
        case Sub::Q: return "Q";
        case Sub::R: return "R";
        case Sub::NotP: return "notP";
    }
    return "?";
}

std::string CaseSpec::str() const {
    std::string s = cls_name(c1);
    if (s1 != Sub::None) s += ":" + sub_name(s1);
    s += "," + cls_name(c2);
    if (s2 != Sub::None) s += ":" + sub_name(s2);
    if (c1 == Cls::Dihedral && c2 == Cls::Dihedral) s += same_field ? ",sameK" : ",diffK";
    return s;
}

static std::string lower(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

static void parse_side(const std::string& tok, Cls& c, Sub& s) {
    auto colon = tok.find(':');
    std::string cl = lower(tok.substr(0, colon));
    std::string sf = colon == std::string::npos ? "" : tok.substr(colon + 1);
    if (cl == "dihedral" || cl == "di") c = Cls::Dihedral;
    else if (cl == "tetrahedral" || cl == "tetra") c = Cls::Tetrahedral;
    else if (cl == "octahedral" || cl == "octa") c = Cls::Octahedral;
    else if (cl == "nsp" || cl == "non-solvable-polyhedral" || cl == "icosahedral") c = Cls::NSP;
    else throw std::invalid_argument("unknown class '" + cl + "'");
    if (c != Cls::Dihedral) {
        if (!sf.empty()) throw std::invalid_argument("sub-flag given for non-dihedral side '" + tok + "'");
        s = Sub::None;
        return;
    }
    std::string f = lower(sf);
    if (f == "p") s = Sub::P;
    else if (f == "ip" || f == "notp-ip" || f == "notp-with-i(nu)-p") s = Sub::IP;
    else if (f == "q") s = Sub::Q;
    else if (f == "r") s = Sub::R;
    else if (f == "notp") s = Sub::NotP;
    else throw std::invalid_argument("dihedral side needs a sub-flag P, IP, Q, R or notP: '" + tok + "'");
}

CaseSpec parse_case(const std::string& str) {
    std::vector<std::string> parts;
    std::stringstream ss(str);
    std::string t;
    while (std::getline(ss, t, ',')) parts.push_back(t);
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("case spec needs 2 or 3 comma-separated fields");
    CaseSpec c;
    parse_side(parts[0], c.c1, c.s1);
    parse_side(parts[1], c.c2, c.s2);
    bool both = c.c1 == Cls::Dihedral && c.c2 == Cls::Dihedral;
    if (parts.size() == 3) {
        std::string f = lower(parts[2]);
        if (!both) throw std::invalid_argument("sameK/diffK only applies to two dihedral sides");
        if (f == "samek") c.same_field = true;
        else if (f == "diffk") c.same_field = false;
        else throw std::invalid_argument("third field must be sameK or diffK");
    }
    return c;
}

std::vector<CaseSpec> expand_case(const CaseSpec& s) {
    std::vector<Sub> a = s.s1 == Sub::NotP ? std::vector<Sub>{Sub::IP, Sub::Q, Sub::R} : std::vector<Sub>{s.s1};
    std::vector<Sub> b = s.s2 == Sub::NotP ? std::vector<Sub>{Sub::IP, Sub::Q, Sub::R} : std::vector<Sub>{s.s2};
    std::vector<CaseSpec> out;
    for (Sub x : a)
        for (Sub y : b) {
            CaseSpec c = s;
            c.s1 = x;
            c.s2 = y;
            out.push_back(c);
        }
    return out;
}

// ------------------------------------------------------------------ context

int Context::add_gen(Generator g) {
    gens_.push_back(std::move(g));
    return static_cast<int>(gens_.size()) - 1;
}

std::vector<i64> Context::dense(const CharExpr& c) const {
    std::vector<i64> v(gens_.size(), 0);
    for (auto [g, k] : c.e) v.at(static_cast<std::size_t>(g)) = k;
    return v;
}

std::string Context::str(const CharExpr& c) const {
    if (c.e.empty()) return "1";
    std::string s;
    for (auto [g, k] : c.e) {
        if (!s.empty()) s += "*";
        s += gens_[g].name;
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
}

void Context::relate(const CharExpr& c) {
    eq_.push_back(c);
    eq_desc_.push_back(str(c) + " = 1");
    lat_.add(dense(c));
}

void Context::forbid(const CharExpr& c) {
    ne_.push_back(c);
    ne_desc_.push_back(str(c) + " != 1");
}

bool Context::consistent() const {
    for (const auto& d : ne_)
        if (lat_.contains(dense(d))) return false;
    return true;
}

bool Context::consistent_with(const CharExpr& c) const {
    Lattice l = lat_;
    l.add(dense(c));
    for (const auto& d : ne_)
        if (l.contains(dense(d))) return false;
    return true;
}

Tri Context::raw(const CharExpr& c) const {
    if (lat_.contains(dense(c))) return Tri::Yes;
    if (!consistent_with(c)) return Tri::No;
    return Tri::Unknown;
}

CharExpr Context::reduce(const CharExpr& c) const {
    std::vector<i64> v = dense(c);
    for (const auto& r : lat_.rows()) {
        std::size_t p = 0;
        while (p < r.size() && !r[p]) ++p;
        if (p >= v.size()) continue;
        i64 piv = r[p];
        i64 q = v[p] / piv;
        if ((v[p] % piv) && v[p] < 0) --q;
        if (q)
            for (std::size_t i = 0; i < r.size() && i < v.size(); ++i) v[i] -= q * r[i];
    }
    CharExpr out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) out.e[static_cast<int>(i)] = v[i];
    return out;
}

bool Context::has_fresh(const CharExpr& c) const {
    for (auto [g, k] : c.e)
        if (gens_[g].fresh) return true;
    return false;
}

CharExpr Context::tau(const CharExpr& c) const {
    CharExpr r;
    for (auto [g, k] : c.e) r.e[g] = gens_[g].level == Level::K ? -k : k;
    return r;
}

bool Context::answer(const std::string& key) {
    if (!assignment_) throw NeedQuery{key};
    auto it = assignment_->find(key);
    if (it == assignment_->end()) throw NeedQuery{key};
    trail_.emplace_back(key, it->second);
    return it->second;
}

bool Context::ask_bool(const std::string& key) {
    for (auto& [k, v] : trail_)
        if (k == key) return v;
    return answer(key);
}

bool Context::known_same_field(int f, int g) const {
    if (f == g) return true;
    return lat_.contains(dense(CharExpr::gen(fields_[f].chi) - CharExpr::gen(fields_[g].chi)));
}

bool Context::same_field(int f, int g) {
    if (f == g) return true;
    return trivial_F(CharExpr::gen(fields_[f].chi) - CharExpr::gen(fields_[g].chi));
}

std::optional<CharExpr> Context::restrict_to(const CharExpr& c, int field) const {
    CharExpr r;
    for (auto [g, k] : c.e) {
        const Generator& G = gens_[g];
        if (G.level != Level::F || G.field < 0 || !known_same_field(G.field, field)) return std::nullopt;
        r = r + G.res * k;
    }
    return r;
}

bool Context::trivial(const CharExpr& c) {
    Level lv = Level::F;
    for (auto [g, k] : c.e) lv = gens_[g].level;
    return lv == Level::K ? trivial_K(c) : trivial_F(c);
}

void Context::check_forced(const std::string& key, bool v) const {
    if (!strict || !assignment_) return;
    auto it = assignment_->find(key);
    if (it != assignment_->end() && it->second != v) throw Inconsistent{"assignment contradicts forced " + key};
}

bool Context::trivial_K(const CharExpr& c) {
    Tri t = raw(c);
    if (t != Tri::Unknown) {
        check_forced("K|" + str(c), t == Tri::Yes);
        return t == Tri::Yes;
    }
    if (has_fresh(c)) throw Unresolved{"fresh character " + str(c)};
    bool v = answer("K|" + str(c));
    if (v) relate(c);
    else forbid(c);
    if (!consistent()) throw Inconsistent{"after K|" + str(c)};
    return v;
}

bool Context::trivial_F(const CharExpr& c) {
    Tri t = raw(c);
    if (t != Tri::Unknown) {
        check_forced("F|" + str(c), t == Tri::Yes);
        return t == Tri::Yes;
    }
    // restriction to a field where every generator has a known restriction
    int field = -1;
    for (std::size_t f = 0; f < fields_.size() && field < 0; ++f)
        if (restrict_to(c, static_cast<int>(f))) field = static_cast<int>(f);
    if (field >= 0) {
        CharExpr r = *restrict_to(c, field);
        if (!trivial_K(r)) return false;
        // kernel of restriction is {1, chi}
        CharExpr alt = c + CharExpr::gen(fields_[field].chi);
        bool a = consistent_with(c), b = consistent_with(alt);
        bool v;
        if (a && b) v = answer("P|" + str(c) + "|" + fields_[field].name);
        else if (a) check_forced("P|" + str(c) + "|" + fields_[field].name, v = true);
        else if (b) check_forced("P|" + str(c) + "|" + fields_[field].name, v = false);
        else throw Inconsistent{"parity of " + str(c)};
        relate(v ? c : alt);
        if (!consistent()) throw Inconsistent{"after parity " + str(c)};
        return v;
    }
    if (has_fresh(c)) throw Unresolved{"fresh character " + str(c)};
    bool v = answer("F|" + str(c));
    if (v) relate(c);
    else forbid(c);
    if (!consistent()) throw Inconsistent{"after F|" + str(c)};
    return v;
}

int Context::descend(int field, const CharExpr& alpha) {
    for (const auto& d : descents_)
        if (known_same_field(d.field, field) && trivial_K(alpha - d.alpha)) return d.gen;
    Generator g;
    g.name = "d" + std::to_string(descents_.size() + 1) + "[" + str(alpha) + "]";
    g.level = Level::F;
    g.field = field;
    g.res = alpha;
    int id = add_gen(g);
    CharExpr d = CharExpr::gen(id);
    relate(d * 2);
    forbid(d);
    forbid(d + CharExpr::gen(fields_[field].chi));
    descents_.push_back({field, alpha, id});
    if (!consistent()) throw Inconsistent{"descent"};
    return id;
}

Context::Context(const CaseSpec& spec, const std::map<std::string, bool>* assignment)
    : spec_(spec), assignment_(assignment) {
    auto mkfield = [&](const std::string& fname, const std::string& cname) {
        Field f;
        f.name = fname;
        fields_.push_back(f);
        int fid = static_cast<int>(fields_.size()) - 1;
        Generator g;
        g.name = cname;
        g.level = Level::F;
        g.field = fid;
        int id = add_gen(g);
        fields_[fid].chi = id;
        relate(CharExpr::gen(id, 2));
        forbid(CharExpr::gen(id));
        return fid;
    };
    bool both_di = spec.c1 == Cls::Dihedral && spec.c2 == Cls::Dihedral;
    if (spec.same_field && !both_di) throw std::invalid_argument("same field needs two dihedral sides");
    for (int i = 1; i <= 2; ++i) {
        SideGens& S = i == 1 ? s1_ : s2_;
        std::string ix = std::to_string(i);
        Cls c = i == 1 ? spec.c1 : spec.c2;
        Sub s = i == 1 ? spec.s1 : spec.s2;
        if (c == Cls::Dihedral) {
            if (s == Sub::None || s == Sub::NotP) throw std::invalid_argument("dihedral side needs a concrete sub-flag");
            if (spec.same_field && i == 2) {
                S.field = s1_.field;
                S.chi = s1_.chi;
            } else {
                S.field = spec.same_field ? mkfield("K", "chi") : mkfield("K" + ix, "chi" + ix);
                S.chi = fields_[S.field].chi;
            }
            S.nu = add_gen({"nu" + ix, Level::K, S.field, {}, false});
            CharExpr nu = CharExpr::gen(S.nu);
            CharExpr chi = CharExpr::gen(S.chi);
            switch (s) {
                case Sub::P: {
                    relate(nu * 2);
                    forbid(nu);
                    S.beta = add_gen({"beta" + ix, Level::F, S.field, nu, false});
                    CharExpr b = CharExpr::gen(S.beta);
                    relate(b * 2);
                    forbid(b);
                    forbid(b + chi);
                    descents_.push_back({S.field, nu, S.beta});
                    break;
                }
                case Sub::IP: {
                    relate(nu * 4);
                    forbid(nu * 2);
                    S.delta = add_gen({"delta" + ix, Level::F, S.field, nu * 2, false});
                    CharExpr d = CharExpr::gen(S.delta);
                    relate(d * 2);
                    forbid(d);
                    forbid(d + chi);
                    descents_.push_back({S.field, nu * 2, S.delta});
                    break;
                }
                case Sub::Q:
                    relate(nu * 3);
                    forbid(nu * 2);
                    break;
                case Sub::R:
                    forbid(nu * 2);
                    forbid(nu * 3);
                    forbid(nu * 4);
                    break;
                default: break;
            }
        } else {
            if (s != Sub::None) throw std::invalid_argument("sub-flag given for a non-dihedral side");
            if (c == Cls::Tetrahedral) {
                S.mu = add_gen({"mu" + ix, Level::F, -1, {}, false});
                relate(CharExpr::gen(S.mu, 3));
                forbid(CharExpr::gen(S.mu));
            } else if (c == Cls::Octahedral) {
                S.sfield = mkfield("Keta" + ix, "eta" + ix);
                S.eta = fields_[S.sfield].chi;
                S.phi = add_gen({"phi" + ix, Level::K, S.sfield, {}, false});
                forbid(CharExpr::gen(S.phi, 2));
                S.nup = add_gen({"nu'" + ix, Level::F, -1, {}, true});
                S.xi = add_gen({"xi" + ix, Level::F, -1, {}, true});
                relate(CharExpr::gen(S.xi, 2));
                forbid(CharExpr::gen(S.xi));
            }
        }
    }
    if (both_di) {
        CharExpr n1 = CharExpr::gen(s1_.nu), n2 = CharExpr::gen(s2_.nu);
        if (spec.same_field) {
            // twist-inequivalence: I(nu1) and I(nu2) differ, adjoints differ
            forbid(n1 - n2);
            forbid(n1 + n2);
        } else {
            // characters that exist by hypothesis on each side are independent
            auto basis = [&](const SideGens& S) {
                std::vector<int> b{S.chi};
                if (S.beta >= 0) b.push_back(S.beta);
                if (S.delta >= 0) b.push_back(S.delta);
                return b;
            };
            std::vector<int> all = basis(s1_);
            for (int g : basis(s2_)) all.push_back(g);
            for (unsigned m = 1; m < (1u << all.size()); ++m) {
                CharExpr c;
                for (std::size_t k = 0; k < all.size(); ++k)
                    if (m & (1u << k)) c = c + CharExpr::gen(all[k]);
                bool two_sided = false, has1 = false, has2 = false;
                for (auto [g, e] : c.e) {
                    (gens_[g].field == s1_.field ? has1 : has2) = true;
                }
                two_sided = has1 && has2;
                if (two_sided) forbid(c);
            }
        }
    }
    if (!consistent()) throw std::logic_error("scenario hypotheses are inconsistent");
}

// ---------------------------------------------------------------- operations

CharExpr char_reduce(const CharExpr& e, const Context& cx) {
    for (auto [g, k] : e.e)
        if (g < 0 || static_cast<std::size_t>(g) >= cx.gens().size()) throw std::out_of_range("unknown character symbol");
    return cx.reduce(e);
}

Tri char_is_trivial(const CharExpr& e, Context& cx) {
    try {
        return cx.trivial(e) ? Tri::Yes : Tri::No;
    } catch (const NeedQuery&) {
        return Tri::Unknown;
    } catch (const Unresolved&) {
        return Tri::Unknown;
    }
}

}  // namespace rs
