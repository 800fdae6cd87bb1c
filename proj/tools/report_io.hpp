#pragma once

#include <string>
#include <vector>

#include "pprimary/verify.hpp"

namespace pprimary {

// JSON rendering of a report list: one top-level object
// {"config": {...}, "reports": [...], "version": "1"} with keys emitted in
// sorted order. Every integer is a decimal string so that values beyond
// double precision survive round trips; elapsed_ms is the only field
// excluded from the byte-stability guarantee.
inline constexpr const char* kReportSchemaVersion = "1";

struct EmitConfig {
    std::string command;
    std::vector<std::pair<std::string, std::string>> entries; // key-sorted
};

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const EmitConfig& config);

// Aligned table, one row per report, then a summary line.
std::string reports_to_text(const std::vector<VerificationReport>& reports);

// Parse + re-emit; byte-identical for well-formed inputs.
std::string reemit_json(const std::string& json_text);

// 0 if nothing failed, 1 otherwise; --strict escalates INCONCLUSIVE.
int exit_status(const std::vector<VerificationReport>& reports, bool strict);

} // namespace pprimary
