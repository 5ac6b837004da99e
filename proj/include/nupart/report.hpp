#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace nupart {

enum class ClaimStatus {
    pass,    // expected-pass claim held everywhere in range
    fail,    // at least one violation; details carry the witnesses
    listed,  // informational list (expected-nonempty witness sets)
};

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::listed: return "listed";
    }
    return "?";
}

struct ReportEntry {
    std::int64_t n = 0;
    std::string observed;
};

// Machine-readable outcome of one claim over one n-range. A fail always
// carries at least one witness entry; pass/listed entries are samples.
struct VerificationReport {
    std::string claim_id;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    ClaimStatus status = ClaimStatus::pass;
    std::vector<ReportEntry> details;

    bool ok() const { return status != ClaimStatus::fail; }

    void add_violation(std::int64_t n, std::string observed) {
        status = ClaimStatus::fail;
        details.push_back({n, std::move(observed)});
    }

    void add_sample(std::int64_t n, std::string observed) {
        details.push_back({n, std::move(observed)});
    }
};

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["claim"] = r.claim_id;
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["status"] = to_string(r.status);
    auto rows = nlohmann::json::array();
    for (const auto& d : r.details) {
        rows.push_back({{"n", d.n}, {"observed", d.observed}});
    }
    j["details"] = rows;
    return j;
}

// One row per (claim, n) entry. Observed values are quoted since they may
// contain commas.
inline std::string to_csv(const VerificationReport& r) {
    std::string out = "claim,n,observed\n";
    for (const auto& d : r.details) {
        out += r.claim_id;
        out += ',';
        out += std::to_string(d.n);
        out += ",\"";
        out += d.observed;
        out += "\"\n";
    }
    return out;
}

}  // namespace nupart
