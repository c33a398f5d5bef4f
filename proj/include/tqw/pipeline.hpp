#ifndef TQW_PIPELINE_HPP
#define TQW_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tqw/chain.hpp"
#include "tqw/spectrum.hpp"
#include "tqw/tq.hpp"
#include "tqw/wronskian.hpp"

namespace tqw {

enum class OutputFormat { json, csv };

struct RunConfig {
    ModelParams params;
    double tol = 1e-7;
    std::optional<std::vector<double>> sweep_xi;
    OutputFormat format = OutputFormat::json;
    std::string output_path;  ///< empty: stdout

    /// Throws std::invalid_argument on invalid parameters (N cap, zero
    /// alpha/beta, non-finite sweep values, empty sweep, tol <= 0).
    void validate() const;
};

/// One eigenvalue's worth of results; error holds a message when the solve
/// for this eigenvalue failed (the batch continues).
struct EigenvalueRecord {
    double h_eigenvalue = 0.0;
    double recon_residual = 0.0;
    TQSolution solution;
    WronskianReport wronskian;
    bool pass = false;
    std::string error;
};

/// Model-level identity checks, evaluated at fixed probe points.
struct GlobalChecks {
    double commutativity_defect = 0.0;
    double parity_defect = 0.0;
    double hamiltonian_link_defect = 0.0;
    double duality_defect = 0.0;
    bool pass = false;
};

struct VerificationReport {
    RunConfig config;
    GlobalChecks global;
    std::vector<EigenvalueRecord> eigenvalues;
    bool summary_pass = false;
    double wall_seconds = 0.0;  ///< excluded from the determinism guarantee
};

/// chain -> spectrum -> tq -> wronskian for every eigenvalue, plus the
/// global checks. Deterministic for identical config (fixed probe points and
/// nodes, ordered assembly); per-eigenvalue failures are recorded, never
/// thrown.
VerificationReport run_pipeline(const RunConfig& config);

/// One report per sweep value (params.xi replaced); cases run independently.
std::vector<VerificationReport> run_sweep(const RunConfig& config);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

/// Max-defect-per-case summary table for a sweep, one row per xi value.
std::string sweep_summary_csv(const std::vector<VerificationReport>& reports);

}  // namespace tqw

#endif
