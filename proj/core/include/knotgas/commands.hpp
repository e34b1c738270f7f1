#pragma once

#include "knotgas/run_config.hpp"

namespace knotgas {

/// Process exit codes shared by the command layer and the CLI front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitNumericError = 2,
    kExitPartialFailure = 3,
};

/// Single-particle levels n, E_n for every configured winding number.
/// Writes <out>/spectrum.csv with header "n,alpha,energy_eV".
int cmd_spectrum(const RunConfig& config);

/// Temperature sweeps per winding number and channel. Writes
/// <out>/sweep_<stats>_alpha<A>.csv (header "T,Phi,U,S,C,N,varN,channel")
/// plus <out>/sweep_summary_<stats>.csv listing detected crossings between
/// alpha curves and the interior particle-number minimum (direct channel).
/// Per-point failures are logged to stderr and flagged via the exit code.
int cmd_sweep(const RunConfig& config);

/// Paired ideal/interacting sweeps on one grid plus deltas, one file per
/// winding number: <out>/compare_<stats>_alpha<A>.csv. An empty interaction
/// block falls back to the documented default quadratic repulsion.
int cmd_compare(const RunConfig& config);

/// Chemical potential that reaches N_target, swept over temperature:
/// <out>/fermi_<stats>.csv with header "T,alpha,mu0_ideal,mu0_interacting".
int cmd_fermi(const RunConfig& config);

} // namespace knotgas
