#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimer_dg/diagnostics.hpp"
#include "dimer_dg/dg_state.hpp"
#include "dimer_dg/flux.hpp"
#include "dimer_dg/model.hpp"
#include "dimer_dg/time_integration.hpp"
#include "dimer_dg/traveling_wave.hpp"

namespace dimer_dg {

/// Box [a0 + speed t, b0 + speed t] used for the windowed energy.
struct BoxSpec {
    double a0 = 0.0;
    double b0 = 1.0;
    double speed = 0.0;
};

struct RunConfig {
    std::string problem = "example1";
    std::vector<std::string> fluxes = {"upwind"};
    bool allow_unstable = false;
    std::vector<std::size_t> degrees = {3};
    std::vector<std::size_t> cells = {40};
    double final_time = 1.0;
    std::optional<double> cfl;
    std::optional<double> dt;
    /// "periodic" or "dirichlet"; empty keeps the problem's own boundary.
    std::string boundary;
    std::optional<std::array<double, 2>> domain;
    std::string out_dir = "out";
    std::size_t energy_every = 100;
    /// Snapshot cadence in steps; 0 writes only the initial and final state.
    std::size_t snapshot_every = 0;
    std::optional<double> snapshot_interval;
    std::size_t samples_per_element = 8;
    std::optional<BoxSpec> box;

    // Kink runs.
    double kink_speed = 0.4;
    /// "reference" or "w1,w2".
    std::string seed_profile = "reference";
    std::optional<double> center = 60.0;

    /// Full-size kink setup: (-40, 200), h = 0.4, q = 3, dt = 4e-5, T = 100, box [60, 140].
    static RunConfig kink_defaults();
};

/// Builds the problem named in the config with the boundary/domain overrides applied.
ProblemSpec configured_problem(const RunConfig& config);

TimeStepPlan configured_plan(const RunConfig& config, const Mesh1D& mesh);

/// Initial data P_h^+ w1(., 0), P_h^- w2(., 0) from the exact solution.
DGState radau_initial_state(const ProblemSpec& problem, std::shared_ptr<const Mesh1D> mesh, std::size_t q);

/// One (q, N) convergence case run to final_time; returns L2 errors there.
L2Errors run_convergence_case(const ProblemSpec& problem, const FluxParams& flux, std::size_t q, std::size_t n_elements,
                              double final_time, std::optional<double> cfl = std::nullopt);

/// Every (q, N) pair for one flux, rows ordered by q then N, orders filled in.
ConvergenceTable convergence_sweep(const ProblemSpec& problem, const FluxParams& flux,
                                   const std::vector<std::size_t>& degrees, const std::vector<std::size_t>& cells,
                                   double final_time, std::optional<double> cfl = std::nullopt);

struct EnergyRecord {
    std::size_t step = 0;
    double t = 0.0;
    double energy = 0.0;
    double box_energy = 0.0;
};

struct SimulationResult {
    DGState initial;
    DGState final_state;
    std::vector<EnergyRecord> energy;
    std::vector<std::string> files;
};

struct KinkRunResult {
    KinkProfile profile;
    SimulationResult run;
    std::optional<double> midpoint_initial;
    std::optional<double> midpoint_final;
};

/// Writes <out>/<flux>/errors.csv for every flux in the config.
std::vector<ConvergenceTable> cmd_converge(const RunConfig& config);

/// Writes snapshots.csv, energy.csv and manifest.txt under the output directory.
SimulationResult cmd_simulate(const RunConfig& config);

/// Generates the kink profile, projects it, runs it, and writes
/// profile.csv, snapshots.csv, energy.csv and manifest.txt.
KinkRunResult cmd_kink(const RunConfig& config);

/// Kink profile sampled at the volume quadrature points of `mesh`.
KinkProfile kink_profile_on_mesh(const RunConfig& config, const Mesh1D& mesh);

/// Time integration shared by simulate and kink; writes nothing when out_dir is empty.
SimulationResult run_simulation(const RunConfig& config, const ProblemSpec& problem, DGState initial,
                                const std::string& out_dir);

struct EnergyAuditRow {
    std::string flux;
    std::string boundary;
    std::size_t n_states = 0;
    double max_relative_error = 0.0;
};

/// Compares 2 <state, rhs(state)> with 2 x the closed-form energy rate on
/// random states for every preset, periodic and zero-inflow boundaries.
std::vector<EnergyAuditRow> cmd_energy_audit(std::size_t n_states, std::size_t q, std::size_t n_elements,
                                             std::uint64_t seed);

/// Random state with coefficients uniform in (-1, 1).
DGState random_state(std::shared_ptr<const Mesh1D> mesh, std::size_t q, std::uint64_t seed);

/// |pairing - formula| / max(|formula|, 2 E^h).
double energy_identity_error(const DGState& state, const ProblemSpec& problem, const FluxParams& flux);

}  // namespace dimer_dg
