#pragma once

#include <string>
#include <vector>

namespace siegel5 {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::fail;
    std::string witness; // populated on failure: offending triple, index, ...
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> checksums; // (file, fnv1a64)

    bool passed() const;
    void add(const std::string& id, bool ok, const std::string& witness_on_fail = "");
    void skip(const std::string& id, const std::string& reason);
    void merge(const VerificationReport& other);
};

/// Plain aligned text; deterministic, no timestamps.
std::string render_text(const VerificationReport& report);

/// Line-delimited JSON objects, one check per line; the stable machine
/// interface.
std::string render_jsonl(const VerificationReport& report);

} // namespace siegel5
