#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semispec/riesz.hpp"

namespace semispec {

// Log-domain record of ||C^n_{a,b} 1|| for n = 0..n_max. Entries after an
// exact zero are -inf (all later powers vanish identically).
struct CommutatorSequence {
    int n_max = 0;
    std::vector<double> log_norms;
    std::vector<double> rescale_trace;
    NormKind norm_kind = NormKind::Frobenius;
    bool hit_zero = false;
    int zero_index = -1;   // first n with C^n 1 == 0, when hit_zero
};

CommutatorSequence commutator_sequence(const Mat& a, const Mat& b, int n_max,
                                       NormKind kind = NormKind::Frobenius);

struct DefinitionEstimate {
    double estimate = 0.0;
    double uncertainty = 0.0;
    double tail_fit_slope = 0.0;
    double max_based = 0.0;
    int window_begin = 0;
    int window_end = 0;
};

// limsup ||C^n 1||^(1/n) from the tail of the sequence: least-squares slope
// over [n_max/2, n_max], cross-checked against the windowed max of
// log_norms[n]/n; the gap between the two routes feeds the uncertainty.
DefinitionEstimate varrho_definition(const CommutatorSequence& seq);

struct PairEntry {
    Cx lambda;
    Cx beta;
    double distance = 0.0;
    double product_norm = 0.0;
};

struct ModulusEntry {
    Cx value;
    double modulus = 0.0;
    double product_norm = 0.0;
};

enum class SupBranch { PairSet, LambdaModulus, BetaModulus, Empty };

struct GeometricBreakdown {
    std::vector<PairEntry> active_pairs;          // the set W, with product norms
    std::vector<ModulusEntry> w_lambda;           // U2: |lambda_i| with p_i q0 != 0
    std::vector<ModulusEntry> w_beta;             // U3: |beta_j| with p0 q_j != 0
    std::vector<double> w_lambda_filtered;        // elements exceeding sup W
    std::vector<double> w_beta_filtered;
    bool zero_pair_active = false;                // p0 q0 != 0
    double product_threshold = 0.0;               // last per-pair threshold basis
    bool fragile = false;                         // some product within 10x of threshold
    bool w_empty_branch = false;                  // U1 empty
    double radius_sup = 0.0;                      // sup{r(a), r(b)} (W-empty branch value)
    SupBranch sup_branch = SupBranch::Empty;
};

struct GeomOptions {
    double cluster_tol = -1.0;          // < 0: 1e-8 * (1 + ||.||) per matrix
    double product_threshold = -1.0;    // < 0: 1e-8*(1+||p||)(1+||q||) per pair; else absolute
    ContourOptions contour;
};

struct GeomResult {
    double value = 0.0;
    GeometricBreakdown breakdown;
    SpectrumDescription spec_a, spec_b;
    std::vector<ProjectionDiagnostics> diag_a, diag_b;
};

// Theorem-char route: finite spectra, 0 treated as an ordinary point.
GeomResult varrho_geometric(const Mat& a, const Mat& b, const GeomOptions& opts = {});

// Global spectral formula with a zero cluster of the given radius;
// realizes the U1/U2/U3 sets of the truncation argument.
GeomResult varrho_charf(const Mat& a, const Mat& b, double zero_radius,
                        const GeomOptions& opts = {});

struct QeMatchEntry {
    Cx value_a, value_b;
    double point_distance = 0.0;
    double projection_defect = 0.0;
};

struct QeResult {
    bool verdict = false;
    std::vector<QeMatchEntry> matches;
    std::string failure_reason;          // empty when verdict is true
    double witness_distance = 0.0;       // varrho lower bound when false
    double semisimple_defect = 0.0;      // ||abar - bbar|| cross-check when true
};

QeResult quasinilpotent_equivalent(const Mat& a, const Mat& b, double tol,
                                   double zero_radius = 0.0, const GeomOptions& opts = {});

} // namespace semispec
