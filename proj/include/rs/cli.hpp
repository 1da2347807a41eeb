#pragma once
// Command-line front end. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 all comparisons match, 1 verification mismatch, 2 usage error.

#include <iosfwd>

#include <json.hpp>

#include "rs/verify.hpp"

namespace rs {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json algnum_json(const AlgNum& x, bool approximate = false);
nlohmann::json scenario_json(const CaseSpec& spec);  // poles only
nlohmann::json bound_json(const BoundReport& rep);
nlohmann::json lemma_json(const std::string& id);
nlohmann::json theorem_json(const std::string& id);

}  // namespace rs
