#pragma once

#include "siegel5/fourier.hpp"
#include "siegel5/gendata.hpp"
#include "siegel5/linalg.hpp"
#include "siegel5/polyring.hpp"

#include <vector>

namespace siegel5 {

/// All exponent vectors over the given generator weights of total weight k.
std::vector<std::vector<int>> monomials_of_weight(const std::vector<int>& generator_weights, int k);

/// Exact rank of the coefficient matrix of the forms over their common
/// valid region (columns are exponent triples with a + c <= min trunc,
/// deterministic order), by fraction-free elimination.
int span_rank(const std::vector<FourierSeries>& forms);

struct CertifiedRank {
    int common_order = 0;   // the shared valid region used for the base rank
    int base_rank = 0;      // rank over the common region
    int refutations = 0;    // kernel directions excluded at higher orders
    int rank = 0;           // base_rank + refutations, a proven lower bound
    std::string note;
};

/// Rank with truncation-artifact repair: kernel vectors of the common-region
/// matrix whose support rows all stay valid beyond the common order are
/// evaluated there; a nonzero higher-order coefficient proves the vector is
/// not a relation among the actual forms, raising the certified rank.
CertifiedRank certified_span_rank(const std::vector<FourierSeries>& forms);

/// Evaluate all weight-k monomials in the eighteen ring generators.
std::vector<FourierSeries> weight_monomial_forms(const GeneratorSet& gens, int k);

struct RankDiagnostics {
    int weight = 0;
    int certified = 0;
    std::vector<std::pair<int, int>> rank_by_trunc; // (truncation, base rank), descending
};

/// Certified rank plus the rank at reduced truncations (7, 6, 5), used to
/// distinguish truncation artifacts from identity failures when a rank
/// falls short.
RankDiagnostics rank_diagnostics(const GeneratorSet& gens, int k);

} // namespace siegel5
