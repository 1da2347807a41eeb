#pragma once
// Finite Galois-group models: fibered products, trace densities, and a
// finite-model oracle for the pole-order engine.

#include "rs/bounds.hpp"

namespace rs {

struct FiniteGroup {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mul;  // mul[a][b] = index of a*b
    int identity = 0;
    std::vector<int> inv;
    std::vector<int> abs_trace;  // |tr rho| of the 2-dim representation; empty when none is attached

    int size() const { return static_cast<int>(labels.size()); }
    int op(int a, int b) const { return mul[a][b]; }
    int index_of(const std::string& label) const;  // -1 if absent
};

// Fills identity and inverses, then checks closure, identity, inverses and associativity.
// Throws std::logic_error when an axiom fails.
void finalize_group(FiniteGroup& g);

// "Q8", "binary_tetrahedral", "Z4", "cyclic:<n>" (also "Z<n>").
FiniteGroup build_group(const std::string& kind);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct Hom {
    std::vector<int> map;  // source index -> target index
    int target_size = 1;
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const Hom& h);
bool is_surjective(const Hom& h);

Hom trivial_quotient(const FiniteGroup& g);
Hom q8_mod_i(const FiniteGroup& q8);          // Q8 / {+-1, +-i} = Z/2
Hom tetra_mod_q8(const FiniteGroup& bt);      // binary tetrahedral / Q8 = Z/3

struct FiberedSubgroup {
    const FiniteGroup* g1 = nullptr;
    const FiniteGroup* g2 = nullptr;
    int quotient_size = 1;
    std::vector<std::pair<int, int>> elements;
    std::size_t size() const { return elements.size(); }
};

// Throws std::invalid_argument unless q1, q2 are surjective homomorphisms onto groups of one size.
FiberedSubgroup fibered_subgroup(const FiniteGroup& g1, const Hom& q1, const FiniteGroup& g2, const Hom& q2,
                                 const FiniteGroup& quotient);
bool is_closed(const FiberedSubgroup& h);

enum class Compare { Gt, GtReversed, Neq, Eq };
Rational density(const FiberedSubgroup& h, Compare cmp);

struct ExampleReport {
    std::string name;
    std::size_t order = 0, expected_order = 0;
    Rational gt, gt_reversed, neq, eq;
    Rational expected_gt, expected_neq;
    bool closed = false;
    bool ok() const { return closed && order == expected_order && gt == expected_gt && neq == expected_neq; }
};

const std::vector<std::string>& example_names();  // tetrahedral, dihedral1, dihedral2
ExampleReport run_example(const std::string& name);

struct Z4Check {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> table;  // rendered character table rows
    bool ok() const;
};
Z4Check verify_property_P_Z4();

// Dihedral model: pi_i = I(psi_i) on Z/n_i ⋊ Z/2 with psi_i(x) = zeta^(b_i x), so nu_i = 2 b_i.
// Same field: both sides share one group (n1 == n2); otherwise the group is the direct product.
struct ModelInstance {
    bool same_field = false;
    int n1 = 3, b1 = 1;
    int n2 = 3, b2 = 1;
    std::string str() const;
};

Sub model_subflag(int n, int b);  // from the order of nu = 2b in Z/n
CaseSpec model_case(const ModelInstance& m);
void validate_model(const ModelInstance& m);  // throws std::invalid_argument
int model_oracle(const ModelInstance& m, const MomentKey& key);

}  // namespace rs
