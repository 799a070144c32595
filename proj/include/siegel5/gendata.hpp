#pragma once

#include "siegel5/fourier.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace siegel5 {

/// Expansion order of the embedded coefficient table.
inline constexpr int kTableTrunc = 7;

/// Fingerprints of the embedded data files (FNV-1a 64 of the raw bytes).
inline constexpr const char* kGeneratorTableChecksum = "19ebd80ed915e085";
inline constexpr const char* kJSquareTableChecksum = "9ba8670c143a01e3";

/// The basic forms f1, f2, g1, g2 (weights 1, 1, 2, 2) together with every
/// form derived from them.  The Jacobian J is attached by the jacobian
/// module; all other members are computed, never stored.
struct GeneratorSet {
    FourierSeries f1, f2, g1, g2;
    FourierSeries h1, h2;              // h1 = g1 - f1 f2, h2 = g2 + f1 f2
    FourierSeries e2;                  // f1^2 + f2^2 - 4 g1 - 4 g2
    FourierSeries phi1, phi2, phi3, phi4;
    std::optional<FourierSeries> J;    // weight 9, filled by attach_jacobian

    const FourierSeries& jacobian_form() const {
        if (!J) throw error("Jacobian has not been attached to this generator set");
        return *J;
    }
};

/// One parsed row of the coefficient table.
struct GeneratorRow {
    int a, b, c;
    long f1, f2, g1, g2;
};

/// Populate f1, f2, g1, g2 from table rows.  Missing triples are exact
/// zeros; a row listed with only one sign of b is mirrored to -b; rows
/// present with both signs must agree.
///
/// Errors: conflicting duplicates (data_error), b^2 > 4ac
/// (support_cone_error), a + c > 7 (precision_error).
GeneratorSet load_generators(const std::vector<GeneratorRow>& rows);

/// Load the table from its TSV file (columns a b c f1 f2 g1 g2).
GeneratorSet load_generators(const std::filesystem::path& file);

/// Checksum of the table file as stored on disk.
std::string generator_table_checksum(const std::filesystem::path& file);

/// Compute h1, h2, e2 and the four weight-4 Maass forms from the basic
/// generators:
///   h1 = g1 - f1 f2            h2 = g2 + f1 f2
///   e2 = f1^2 + f2^2 - 4(g1 + g2)
///   phi1 = e2^2 + f1^2 f2^2
///   phi2 = f1^2 g1 + f2^2 g2 - 2 g1 g2
///   phi3 = f1 f2 (f1^2 - 2 f1 f2 - f2^2 + 2 g1 - 2 g2)
///   phi4 = 2 g1 g2 + f1 f2 (g1 - g2)
void derived_forms(GeneratorSet& gens);

} // namespace siegel5
