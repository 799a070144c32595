#pragma once

#include "siegel5/gendata.hpp"
#include "siegel5/polyring.hpp"
#include "siegel5/report.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace siegel5 {

/// Loaded toolkit state shared by the CLI and the verification suites.
struct ToolkitContext {
    std::filesystem::path data_dir;
    GeneratorSet gens;      // with the Jacobian attached
    GradedPoly jsquare;     // the embedded weight-18 polynomial
    std::string table_checksum;
    std::string jsquare_checksum;

    static ToolkitContext load(const std::string& data_dir_override = "");
};

const std::vector<std::string>& suite_names(); // without "all"

VerificationReport run_suite(const ToolkitContext& ctx, const std::string& name);

/// All suites in canonical order; with parallel = true the suites run
/// concurrently and are merged in order.
VerificationReport run_all(const ToolkitContext& ctx, bool parallel = false);

} // namespace siegel5
