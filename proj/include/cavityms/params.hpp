#pragma once

namespace cavityms {

// Raw four-level Raman-scheme inputs. All frequencies are angular; rates are
// amplitude decay rates. Delta1/Delta2 are the one-photon detunings of the two
// Raman arms, delta1/delta2 the bare two-photon detunings before Stark
// corrections.
struct RamanConfig {
    double g = 0.0;
    double omega1 = 0.0, omega2 = 0.0;
    double Delta1 = 0.0, Delta2 = 0.0;
    double delta1 = 0.0, delta2 = 0.0;
    double kappa = 0.0;
    double gamma_1g = 0.0, gamma_1e = 0.0, gamma_2g = 0.0, gamma_2e = 0.0;
    int n_atoms = 2;

    // cavity and laser detunings of arm i, reconstructed from
    // delta_i = cavity - laser and Delta_i = (cavity + laser)/2
    double cavity_detuning(int arm) const;
    double laser_detuning(int arm) const;
};

struct EffectiveParams {
    double chi = 0.0;     // dispersive photon-number shift on S_z
    double g_eff = 0.0;   // sideband coupling g*omega1/Delta1
    double delta = 0.0;   // common Stark-corrected two-photon detuning
    double stark_c = 0.0, stark_g = 0.0, stark_e = 0.0;
    double delta1_prime = 0.0, delta2_prime = 0.0;
    double gamma_eff = 0.0;  // drive-induced spontaneous rate, arm 1
};

struct MsConditionReport {
    bool detuning_ok = false;   // delta1' == delta2'
    bool ratio_ok = false;      // omega1/omega2 == Delta1/Delta2
    bool adiabatic_ok = false;  // couplings and two-photon detunings << |Delta|
    double detuning_mismatch = 0.0;   // |d1' - d2'| / max(|d1'|,|d2'|,1e-300)
    double ratio_mismatch = 0.0;      // |omega1*Delta2 - omega2*Delta1| rel
    double adiabaticity_ratio = 0.0;  // max(|g|,|omega|,|delta_i|) / min|Delta_i|
    double equality_tol = 0.0;
    double adiabatic_tol = 0.0;
};

EffectiveParams derive_effective(const RamanConfig& cfg);
MsConditionReport check_ms_conditions(const RamanConfig& cfg);

// |delta| = 2 sqrt(m) g_eff closes the phase-space loop m times per gate
double delta_for_loops(int m, double g_eff);
// t_gate = pi |delta| / (2 g_eff^2) = m * 2pi/|delta|
double gate_time(double delta, double g_eff);

struct DecayDiagnostics {
    double gamma_eff = 0.0;          // gamma * omega^2 / (4 Delta^2)
    double p_spont = 0.0;            // pi gamma delta / (8 g^2)
    double photon_loss_scale = 0.0;  // pi kappa / |delta|
};

DecayDiagnostics diagnostics(const RamanConfig& cfg, const EffectiveParams& eff);

// Rb-87 D2-line parameter set (two ground hyperfine qubit states, two usable
// excited manifolds split by omega12). Frequencies angular, detunings signed.
struct Rb87Config {
    double g = 0.0;
    double kappa = 0.0;
    double Delta1 = 0.0, Delta2 = 0.0;
    double omega1 = 0.0, omega2 = 0.0;
    double delta = 0.0;
    double omega12 = 0.0;  // excited-state hyperfine splitting
    double gamma = 0.0;    // half the atomic linewidth

    static Rb87Config set1();
    static Rb87Config set2();
};

struct Rb87Derived {
    EffectiveParams eff;  // g_eff = arm-1 value, chi from the three-term formula
    double g_eff_1 = 0.0;
    double g_eff_2 = 0.0;
    bool balanced = false;  // |g_eff_1 - g_eff_2| small in relative terms
    double mismatch = 0.0;
};

Rb87Derived derive_rb87(const Rb87Config& cfg);

// omega2 that makes the two sideband couplings equal
double balance_omega2(const Rb87Config& cfg);

}  // namespace cavityms
