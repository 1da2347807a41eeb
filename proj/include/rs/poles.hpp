#pragma once
// Pole orders c_{j,k} at s=1 by branch enumeration.

#include <array>
#include <set>

#include "rs/decompose.hpp"

namespace rs {

struct MomentKey {
    int j = 0, k = 0;
    bool operator<(const MomentKey& o) const { return std::tie(j, k) < std::tie(o.j, o.k); }
    bool operator==(const MomentKey& o) const { return j == o.j && k == o.k; }
    std::string str() const { return "c" + std::to_string(j) + std::to_string(k); }
};

const std::vector<MomentKey>& all_keys();  // j+k <= 4, fixed order

// Number of trivial constituents of the tensor product of the listed symbols.
int count_trivial(std::vector<Rep> L, Context& cx);
int pairing_order(const Isobaric& left, const Isobaric& right, Context& cx);

// c_{j,k} on the current branch; nullopt when no bipartition resolves.
std::optional<int> moment_in(const MomentKey& key, Context& cx);

struct Leaf {
    std::vector<std::pair<std::string, bool>> assignment;
    std::map<MomentKey, std::optional<int>> c;
    std::vector<std::string> equalities, disequalities;
    std::vector<i64> model;      // cyclic orders of a witness model
    bool model_warning = false;  // search bound exhausted
};

struct ScenarioResult {
    CaseSpec spec;
    std::vector<Leaf> leaves;
    int pruned = 0;  // inconsistent assignments discarded
};

struct PoleOutcome {
    std::set<int> outcomes;
    std::map<int, std::size_t> witness;  // outcome -> leaf index
    bool undetermined = false;
};

struct EnumOptions {
    int model_bound = 24;
};

// Memoised per case string.
const ScenarioResult& enumerate(const CaseSpec& spec, const EnumOptions& opt = {});
PoleOutcome moment(const MomentKey& key, const CaseSpec& spec);
bool branch_consistent(const CaseSpec& spec, const std::map<std::string, bool>& br, int bound = 24,
                       bool* warning = nullptr);

// ------------------------------------------------------------ lemma tables

struct LemmaRow {
    std::string label;
    MomentKey key;
    std::vector<CaseSpec> cases;   // outcome is the union over these
    std::set<int> expected;
    std::set<int> got;
    bool undetermined = false;
    bool ok() const { return !undetermined && got == expected; }
};

std::vector<LemmaRow> lemma_table(const std::string& id);  // "3.1", "4.1", "4.3"

}  // namespace rs
