#include "siegel5/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace siegel5 {

namespace {
const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}
} // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status != CheckStatus::fail; });
}

void VerificationReport::add(const std::string& id, bool ok, const std::string& witness_on_fail) {
    CheckResult c;
    c.id = id;
    c.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) c.witness = witness_on_fail.empty() ? "unspecified failure" : witness_on_fail;
    checks.push_back(std::move(c));
}

void VerificationReport::skip(const std::string& id, const std::string& reason) {
    checks.push_back(CheckResult{id, CheckStatus::skip, reason});
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& c : other.checks) {
        CheckResult copy = c;
        copy.id = other.suite + "." + c.id;
        checks.push_back(std::move(copy));
    }
    for (const auto& cs : other.checksums)
        if (std::find(checksums.begin(), checksums.end(), cs) == checksums.end())
            checksums.push_back(cs);
}

std::string render_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "suite: " << report.suite << "  (toolkit " << kToolkitVersion << ")\n";
    for (const auto& [file, sum] : report.checksums)
        os << "data: " << file << "  fnv1a64=" << sum << "\n";
    size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.id.size());
    for (const auto& c : report.checks) {
        os << "  " << c.id << std::string(width - c.id.size() + 2, ' ') << status_name(c.status);
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    os << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
    return os.str();
}

std::string render_jsonl(const VerificationReport& report) {
    std::ostringstream os;
    {
        nlohmann::json head;
        head["suite"] = report.suite;
        head["version"] = kToolkitVersion;
        nlohmann::json sums = nlohmann::json::object();
        for (const auto& [file, sum] : report.checksums) sums[file] = sum;
        head["checksums"] = sums;
        os << head.dump() << "\n";
    }
    for (const auto& c : report.checks) {
        nlohmann::json line;
        line["id"] = c.id;
        line["status"] = status_name(c.status);
        if (!c.witness.empty()) line["witness"] = c.witness;
        os << line.dump() << "\n";
    }
    {
        nlohmann::json tail;
        tail["result"] = report.passed() ? "pass" : "fail";
        os << tail.dump() << "\n";
    }
    return os.str();
}

} // namespace siegel5
