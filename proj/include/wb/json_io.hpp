#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "wb/dnr.hpp"
#include "wb/hierarchy.hpp"
#include "wb/jump.hpp"
#include "wb/notation.hpp"
#include "wb/tree.hpp"
#include "wb/urm.hpp"
#include "wb/wf.hpp"

namespace wb {

using Json = nlohmann::ordered_json;

// Naturals serialize as decimal strings so indices of any size survive.
Json nat_to_json(const Nat& n);
Nat nat_from_json(const Json& j);

Json program_to_json(const Program& p);
Program program_from_json(const Json& j);

Json kstring_to_json(const KString& s);
KString kstring_from_json(const Json& j);

Json separation_to_json(const SeparationReport& r);
Json consistency_to_json(const ConsistencyReport& r);
Json diag_major_to_json(const DiagMajorReport& r);
Json level_set_to_json(const LevelSet& ls);
Json ordinal_to_json(const CnfOrdinal& a);       // literal string
Json notation_to_json(const NotationPtr& n);     // structural tree
NotationPtr notation_from_json(const Json& j);
Json wf_report_to_json(const WfReport& r);
Json oracle_approx_to_json(const OracleApprox& a);
Json containment_to_json(const ContainmentReport& r);

// Everything a run needs to be replayed: subcommand, parameters (budgets
// included), tool version, and digests of the input files.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> input_digests;
    std::string version = "0.1.0";
};

Json manifest_to_json(const RunManifest& m);

// {"manifest": ..., "result": ...}; byte-identical for identical manifests.
Json envelope(const RunManifest& m, Json result);

// FNV-1a 64-bit, hex
std::string digest_hex(const std::string& bytes);

}  // namespace wb
