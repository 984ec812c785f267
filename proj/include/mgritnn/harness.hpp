#ifndef MGRITNN_HARNESS_HPP
#define MGRITNN_HARNESS_HPP

#include "mgritnn/mgrit.hpp"
#include "mgritnn/perf_model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mgritnn {

/** Fully resolved experiment settings; string fields use the CLI
 * vocabulary (preset names, "xor"/"binadd", "two-level"/"v"/"f",
 * "f"/"fcf"). */
struct ExperimentConfig {
    std::string preset = "solver1";
    std::string problem = "xor";
    std::vector<std::size_t> n0_list = {100};
    std::string cycle = "two-level";
    std::string relaxation = "fcf";
    double alpha_b = -1.0;   // < 0: preset default
    double alpha_max = -1.0; // < 0: preset default
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::size_t max_coarse = 10;
    double tol_coefficient = 1e-9;
    std::size_t max_iters = 50;
    std::size_t instances = 500; // binadd dataset size
    std::size_t bits = 12;       // binadd operand width
    bool log_residuals = false;
};

struct SweepRow {
    std::size_t n0 = 0;
    std::size_t levels = 0;
    std::size_t iters = 0;
    std::optional<double> rho;
    bool converged = false;
    double wall_ms = 0.0;
    std::vector<double> residual_norms;
};

struct SpeedupRow {
    std::size_t n0 = 0;
    std::size_t levels = 0;
    std::size_t niter = 0;
    std::string cycle;
    std::size_t sigma = 0;
    double speedup = 0.0;
};

/// Dataset for the config's problem (xor, or seeded binary addition).
Dataset make_dataset(const ExperimentConfig& cfg);
/// [3,4,1] for xor; [2*bits,128,64,bits] for binadd.
NetworkTopology make_topology(const ExperimentConfig& cfg);
/// Resolve preset + overrides into a buildable hierarchy config.
HierarchyConfig make_hierarchy_config(const ExperimentConfig& cfg,
                                      std::size_t n0);
/// Level count the hierarchy builder will produce for n0.
std::size_t level_count_for(const ExperimentConfig& cfg, std::size_t n0);

/// One solve per N0 in the config.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

/** Speedup-model rows; iteration counts either given per N0 (one entry,
 * or one per n0) or taken from a sweep by the caller. */
std::vector<SpeedupRow> run_speedup(const ExperimentConfig& cfg,
                                    const std::vector<std::size_t>& niters);

/// Resolved config + seed as '#'-prefixed reproducibility header lines.
void write_config_header(std::ostream& os, const ExperimentConfig& cfg);

/// CSV: N0,levels,cycle,relaxation,preset,alpha_b,alpha_max,iters,rho,converged,wall_ms
/// with non-converged rows rendered as "<max_iters>+" and "*".
void write_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                     const std::vector<SweepRow>& rows);
/// One sweep data row without the header (used for determinism checks).
std::string format_sweep_row(const ExperimentConfig& cfg, const SweepRow& row);

/// CSV: N0,levels,niter,cycle,sigma,speedup
void write_speedup_csv(std::ostream& os, const ExperimentConfig& cfg,
                       const std::vector<SpeedupRow>& rows);

/// Verification suite (gradient, exactness, equivalence, determinism);
/// one report line per check.  Returns 0 when everything passes.
int run_verify(std::ostream& report, std::uint64_t seed = 1);

} // namespace mgritnn

#endif
