#include "report_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace pprimary {

namespace {

using nlohmann::json;

json report_to_json(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = v;
    json obs = json::array();
    for (const auto& o : r.observations)
        obs.push_back(json{{"expected", o.expected},
                           {"input", o.input},
                           {"observed", o.observed}});
    return json{{"claim_id", r.claim_id},
                {"elapsed_ms", r.elapsed_ms},
                {"observations", obs},
                {"outcome", to_string(r.outcome)},
                {"parameters", params}};
}

} // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const EmitConfig& config) {
    json cfg = json::object();
    cfg["command"] = config.command;
    for (const auto& [k, v] : config.entries)
        cfg[k] = v;
    json out = json::object();
    out["config"] = cfg;
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back(report_to_json(r));
    out["reports"] = arr;
    out["version"] = kReportSchemaVersion;
    return out.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::size_t claim_w = 5, param_w = 6;
    auto param_str = [](const VerificationReport& r) {
        std::string s;
        for (const auto& [k, v] : r.parameters) {
            if (!s.empty())
                s += " ";
            s += k + "=" + v;
        }
        return s;
    };
    for (const auto& r : reports) {
        claim_w = std::max(claim_w, r.claim_id.size());
        param_w = std::max(param_w, param_str(r).size());
    }
    std::ostringstream os;
    for (const auto& r : reports) {
        std::string params = param_str(r);
        os << r.claim_id << std::string(claim_w - r.claim_id.size() + 2, ' ')
           << params << std::string(param_w - params.size() + 2, ' ')
           << to_string(r.outcome) << "\n";
        for (const auto& o : r.observations)
            os << "    " << o.input << ": " << o.observed << " (expected " << o.expected
               << ")\n";
    }
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : reports) {
        if (r.outcome == Outcome::Pass)
            ++pass;
        else if (r.outcome == Outcome::Fail)
            ++fail;
        else
            ++inconclusive;
    }
    os << reports.size() << " checks: " << pass << " passed, " << fail << " failed, "
       << inconclusive << " inconclusive\n";
    return os.str();
}

std::string reemit_json(const std::string& json_text) {
    return nlohmann::json::parse(json_text).dump(2) + "\n";
}

int exit_status(const std::vector<VerificationReport>& reports, bool strict) {
    if (!all_pass(reports))
        return 1;
    if (strict && any_inconclusive(reports))
        return 1;
    return 0;
}

} // namespace pprimary
