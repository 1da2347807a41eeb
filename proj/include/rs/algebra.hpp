#pragma once
// Formal character groups, representation symbols and the branch-driven
// equivalence oracle.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs {

using i64 = std::int64_t;

// ---------------------------------------------------------------- characters

// Finitely supported exponent map over generator ids.
struct CharExpr {
    std::map<int, i64> e;

    CharExpr() = default;
    static CharExpr gen(int g, i64 k = 1) {
        CharExpr c;
        if (k) c.e[g] = k;
        return c;
    }
    bool trivial_syntax() const { return e.empty(); }
    CharExpr operator+(const CharExpr& o) const;
    CharExpr operator-(const CharExpr& o) const;
    CharExpr operator-() const;
    CharExpr operator*(i64 k) const;
    bool operator==(const CharExpr& o) const { return e == o.e; }
    bool operator<(const CharExpr& o) const { return e < o.e; }
};

// Integer lattice kept in row echelon form; membership is exact.
class Lattice {
public:
    void add(std::vector<i64> v);
    bool contains(std::vector<i64> v) const;
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<i64>>& rows() const { return rows_; }

private:
    std::vector<std::vector<i64>> rows_;  // sorted by pivot column
};

// Smith invariant factors of the quotient Z^n / L, as (torsion orders, free rank).
struct GroupShape {
    std::vector<i64> torsion;
    int free_rank = 0;
};

enum class Level { F, K };

struct Generator {
    std::string name;
    Level level = Level::F;
    int field = -1;        // K-level: owning field. F-level: field whose restriction is known
    CharExpr res;          // F-level with field >= 0: restriction to that field
    bool fresh = false;    // characters about which nothing is known
};

struct Field {
    std::string name;
    int chi = -1;          // generator id of its quadratic character
};

struct Descent {
    int field;
    CharExpr alpha;        // K-level character
    int gen;               // F-level generator restricting to alpha
};

// ------------------------------------------------------------------- scenario

enum class Cls { Dihedral, Tetrahedral, Octahedral, NSP };
// IP: not P, but I(nu) has P.  NotP is a family marker, expanded to IP, Q, R.
enum class Sub { None, P, IP, Q, R, NotP };

struct CaseSpec {
    Cls c1 = Cls::Dihedral, c2 = Cls::Dihedral;
    Sub s1 = Sub::None, s2 = Sub::None;
    bool same_field = false;

    CaseSpec swapped() const { return {c2, c1, s2, s1, same_field}; }
    std::string str() const;
    bool operator<(const CaseSpec& o) const { return str() < o.str(); }
    bool operator==(const CaseSpec& o) const { return str() == o.str(); }
};

CaseSpec parse_case(const std::string& s);  // throws std::invalid_argument
std::vector<CaseSpec> expand_case(const CaseSpec& s);  // NotP -> IP, Q, R
std::string cls_name(Cls c);
std::string sub_name(Sub s);

// ----------------------------------------------------------- branch control

struct NeedQuery { std::string key; };
struct Inconsistent { std::string why; };
struct Unresolved { std::string why; };

enum class Tri { Yes, No, Unknown };

// ------------------------------------------------------------ rep symbols

enum class Kind { Char, Induced, Sigma, AdTwist, Sym4, Product };

struct Rep {
    Kind kind = Kind::Char;
    int side = 0;          // 1 or 2 for Ad/Sym4/Sigma
    int field = -1;        // Induced
    CharExpr ch;           // Char: F-character. Induced: K-character
    CharExpr twist;        // F twist for Induced, Sigma, AdTwist, Sym4
    std::vector<Rep> factors;  // Product: unevaluated tensor product

    int dim() const;
    bool operator==(const Rep& o) const;
    bool operator<(const Rep& o) const;
};

using Isobaric = std::vector<Rep>;

// ------------------------------------------------------------------ context

struct Constraint { std::string desc; };

// One evaluation pass: scenario facts plus a partial branch assignment.
class Context {
public:
    Context(const CaseSpec& spec, const std::map<std::string, bool>* assignment);

    const CaseSpec& spec() const { return spec_; }
    Cls cls(int side) const { return side == 1 ? spec_.c1 : spec_.c2; }
    Sub sub(int side) const { return side == 1 ? spec_.s1 : spec_.s2; }

    // generator ids per side (-1 when absent)
    struct SideGens {
        int field = -1, chi = -1, nu = -1, beta = -1, delta = -1;
        int mu = -1, eta = -1, sfield = -1, phi = -1, nup = -1, xi = -1;
    };
    const SideGens& side(int i) const { return i == 1 ? s1_ : s2_; }

    int add_gen(Generator g);
    const std::vector<Generator>& gens() const { return gens_; }
    const std::vector<Field>& fields() const { return fields_; }
    std::string str(const CharExpr& c) const;

    // relation store
    void relate(const CharExpr& c);      // c = 1
    void forbid(const CharExpr& c);      // c != 1
    bool consistent() const;
    Tri raw(const CharExpr& c) const;    // lattice-only decision
    CharExpr reduce(const CharExpr& c) const;
    bool consistent_with(const CharExpr& c) const;
    GroupShape shape() const;            // invariant factors of the scenario group
    std::optional<std::vector<i64>> cyclic_model(int bound, bool* exhausted) const;

    // decisions (may throw NeedQuery / Inconsistent / Unresolved)
    bool trivial(const CharExpr& c);     // dispatches on level
    bool trivial_F(const CharExpr& c);
    bool trivial_K(const CharExpr& c);
    bool same_field(int f, int g);       // may query
    bool known_same_field(int f, int g) const;
    std::optional<CharExpr> restrict_to(const CharExpr& c, int field) const;
    bool ask_bool(const std::string& key);  // opaque boolean atom

    int descend(int field, const CharExpr& alpha);
    CharExpr tau(const CharExpr& c) const;

    const std::vector<std::pair<std::string, bool>>& trail() const { return trail_; }
    const std::vector<std::string>& equalities() const { return eq_desc_; }
    const std::vector<std::string>& disequalities() const { return ne_desc_; }

    // reject assignments that disagree with a forced answer instead of ignoring them
    bool strict = false;

    // rule trace for reports
    struct Step { std::string rule; std::string in; std::string out; };
    std::vector<Step>* trace = nullptr;

private:
    std::vector<i64> dense(const CharExpr& c) const;
    bool answer(const std::string& key);
    void check_forced(const std::string& key, bool v) const;
    bool has_fresh(const CharExpr& c) const;

    CaseSpec spec_;
    const std::map<std::string, bool>* assignment_;
    std::vector<Generator> gens_;
    std::vector<Field> fields_;
    std::vector<Descent> descents_;
    Lattice lat_;
    std::vector<CharExpr> eq_, ne_;
    std::vector<std::string> eq_desc_, ne_desc_;
    std::vector<std::pair<std::string, bool>> trail_;
    SideGens s1_, s2_;
};

// -------------------------------------------------------------- operations

CharExpr char_reduce(const CharExpr& e, const Context& cx);
Tri char_is_trivial(const CharExpr& e, Context& cx);  // never branches: Unknown instead

Rep mk_char(const CharExpr& c);
Rep mk_ad(int side, const CharExpr& t = {});
Rep mk_sym4(int side, const CharExpr& t = {});
Rep mk_sigma(int side, const CharExpr& t = {});
Rep mk_product(std::vector<Rep> f);
// Induced symbol, normalised: twist absorbed when possible, split when reducible.
Isobaric mk_induced(Context& cx, int field, const CharExpr& alpha, const CharExpr& twist = {});
Isobaric twist_rep(Context& cx, const Rep& a, const CharExpr& t);

Rep rep_dual(const Rep& a);
bool rep_equiv(const Rep& a, const Rep& b, Context& cx);  // may throw
Tri rep_equiv_tri(const Rep& a, const Rep& b, Context& cx);
std::string rep_str(const Rep& a, const Context& cx);
std::string iso_str(const Isobaric& a, const Context& cx);

}  // namespace rs
