#pragma once
// Comparisons against the embedded expected tables, grouped by acceptance criterion.

#include "rs/chebotarev.hpp"

namespace rs {

struct Check {
    int criterion = 0;
    std::string section;  // table id or suite name
    std::string label;
    std::string expected, got;
    bool ok = false;
    std::string note;  // "improved" when best mode beats the published value
};

const std::vector<std::string>& criterion_titles();  // index 0 is criterion 1

std::vector<Check> verify_lemmas();      // 1-3
std::vector<Check> verify_theorems();    // 4-8
std::vector<Check> verify_examples();    // 9
std::vector<Check> verify_oracle(unsigned seed = 20240607, int count = 24);  // 10
std::vector<Check> verify_properties();  // 11
std::vector<Check> verify_all();

// Deterministic sample of valid dihedral models, cycling the side-1 sub-flag through P, IP, Q, R.
std::vector<ModelInstance> random_models(unsigned seed, int count);

// Every concrete scenario: three non-dihedral classes and four dihedral sub-flags, both field wirings.
std::vector<CaseSpec> all_scenarios();

std::string set_str(const std::set<int>& s);

}  // namespace rs
