#pragma once

#include <limits>
#include <vector>

#include "cavityms/hamiltonians.hpp"
#include "cavityms/params.hpp"
#include "cavityms/qops.hpp"

namespace cavityms {

// drho/dt = -i[H, rho] + sum_k (2 C_k rho C_k^dag - C_k^dag C_k rho - rho C_k^dag C_k)
struct LindbladModel {
    TimeDependentHamiltonian hamiltonian;
    std::vector<ComplexOperator> collapse_ops;
};

struct IntegratorConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    std::vector<double> output_times;  // nondecreasing, starting at or after 0
};

struct TrajectoryStats {
    long steps = 0;
    long rhs_evals = 0;
    double norm_drift = 0.0;       // max deviation of the norm (ket) or trace (rho)
    double top_fock_pop = 0.0;     // largest population seen in the top Fock level
    double top2_fock_pop = 0.0;    // same for the top two levels combined
    bool truncation_flagged = false;  // top_fock_pop exceeded 1e-6
    double min_eigenvalue = 0.0;   // density-operator runs only
};

struct KetTrajectory {
    std::vector<double> times;
    std::vector<Vector> states;
    TrajectoryStats stats;
};

struct RhoTrajectory {
    std::vector<double> times;
    std::vector<Matrix> states;
    TrajectoryStats stats;
};

KetTrajectory evolve_ket(const TimeDependentHamiltonian& h, const Ket& psi0,
                         const IntegratorConfig& cfg);

RhoTrajectory evolve_rho(const LindbladModel& model, const DensityOperator& rho0,
                         const IntegratorConfig& cfg);

// Same equation of motion for a general Hermitian operator (channel tomography
// inputs are traceless Pauli words, not states): skips the trace and
// positivity bookkeeping of evolve_rho.
RhoTrajectory evolve_hermitian(const LindbladModel& model, const HilbertLayout& layout,
                               const Matrix& sigma0, const IntegratorConfig& cfg);

// Several Hermitian initial operators under one model, sharing the adaptive
// step sequence; the sparse-times-dense products then run on wide blocks,
// which is what makes the sixteen-input channel tomography affordable.
std::vector<RhoTrajectory> evolve_hermitian_batch(const LindbladModel& model,
                                                  const HilbertLayout& layout,
                                                  const std::vector<Matrix>& sigmas,
                                                  const IntegratorConfig& cfg);

std::vector<ComplexOperator> cavity_decay_ops(double kappa, const HilbertLayout& layout);

// Drive-induced decay channels of the two-level reduction, four per atom: each
// mixes a photon-annihilating branch with a drive branch at fixed amplitudes
std::vector<ComplexOperator> effective_atomic_ops(const RamanConfig& cfg,
                                                  const HilbertLayout& layout);

// Entry of the per-atom decay table for the Rb-87 model: sqrt(rate) times
// (photon_amp * a |photon_to><photon_from| + drive_amp |drive_to><drive_from|)
struct DecayChannelSpec {
    double rate;
    double photon_amp;
    int photon_to, photon_from;
    double drive_amp;
    int drive_to, drive_from;
};

// Nine channels per atom on levels (g=0, e=1, u=2); |u> is absorbing
std::vector<DecayChannelSpec> rb87_decay_table(const Rb87Config& cfg);
std::vector<ComplexOperator> rb87_ops(const Rb87Config& cfg, const HilbertLayout& layout);

}  // namespace cavityms
