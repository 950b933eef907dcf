#include "cavityms/params.hpp"

#include <cmath>
#include <stdexcept>

#include "cavityms/qops.hpp"

namespace cavityms {

namespace {
constexpr double kEqualityTol = 1e-9;
constexpr double kAdiabaticTol = 1e-3;

void require_detunings(double d1, double d2) {
    if (d1 == 0.0 || d2 == 0.0)
        throw std::invalid_argument("one-photon detunings must be nonzero");
}
}  // namespace

double RamanConfig::cavity_detuning(int arm) const {
    double Delta = arm == 1 ? Delta1 : Delta2;
    double delta = arm == 1 ? delta1 : delta2;
    return Delta + 0.5 * delta;
}

double RamanConfig::laser_detuning(int arm) const {
    double Delta = arm == 1 ? Delta1 : Delta2;
    double delta = arm == 1 ? delta1 : delta2;
    return Delta - 0.5 * delta;
}

EffectiveParams derive_effective(const RamanConfig& cfg) {
    require_detunings(cfg.Delta1, cfg.Delta2);
    EffectiveParams eff;
    eff.stark_c = 0.5 * cfg.g * cfg.g * (1.0 / cfg.Delta1 + 1.0 / cfg.Delta2);
    eff.stark_g = cfg.omega2 * cfg.omega2 / (4.0 * cfg.Delta2);
    eff.stark_e = cfg.omega1 * cfg.omega1 / (4.0 * cfg.Delta1);
    eff.delta1_prime = cfg.delta1 + eff.stark_c + eff.stark_g - eff.stark_e;
    eff.delta2_prime = cfg.delta2 + eff.stark_c + eff.stark_e - eff.stark_g;
    eff.chi = cfg.g * cfg.g * (1.0 / cfg.Delta1 - 1.0 / cfg.Delta2);
    eff.g_eff = cfg.g * cfg.omega1 / cfg.Delta1;
    eff.delta = eff.delta1_prime;
    eff.gamma_eff = (cfg.gamma_1g + cfg.gamma_1e) * cfg.omega1 * cfg.omega1 /
                    (4.0 * cfg.Delta1 * cfg.Delta1);
    return eff;
}

MsConditionReport check_ms_conditions(const RamanConfig& cfg) {
    EffectiveParams eff = derive_effective(cfg);
    MsConditionReport rep;
    rep.equality_tol = kEqualityTol;
    rep.adiabatic_tol = kAdiabaticTol;

    double dscale = std::max({std::abs(eff.delta1_prime), std::abs(eff.delta2_prime), 1e-300});
    rep.detuning_mismatch = std::abs(eff.delta1_prime - eff.delta2_prime) / dscale;
    rep.detuning_ok = rep.detuning_mismatch <= kEqualityTol;

    double lhs = cfg.omega1 * cfg.Delta2, rhs = cfg.omega2 * cfg.Delta1;
    double rscale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    rep.ratio_mismatch = std::abs(lhs - rhs) / rscale;
    rep.ratio_ok = rep.ratio_mismatch <= kEqualityTol;

    double num = std::max({std::abs(cfg.g), std::abs(cfg.omega1), std::abs(cfg.omega2),
                           std::abs(cfg.delta1), std::abs(cfg.delta2)});
    double den = std::min(std::abs(cfg.Delta1), std::abs(cfg.Delta2));
    rep.adiabaticity_ratio = num / den;
    rep.adiabatic_ok = rep.adiabaticity_ratio <= kAdiabaticTol;
    return rep;
}

double delta_for_loops(int m, double g_eff) {
    if (m < 1) throw std::invalid_argument("delta_for_loops: m must be >= 1");
    if (g_eff == 0.0) throw std::invalid_argument("delta_for_loops: g_eff must be nonzero");
    return 2.0 * std::sqrt(double(m)) * std::abs(g_eff);
}

double gate_time(double delta, double g_eff) {
    if (g_eff == 0.0) throw std::invalid_argument("gate_time: g_eff must be nonzero");
    return pi * std::abs(delta) / (2.0 * g_eff * g_eff);
}

DecayDiagnostics diagnostics(const RamanConfig& cfg, const EffectiveParams& eff) {
    // symmetric-rate reading: gamma is the total decay out of the arm-1 excited
    // state; the asymmetric generalization lives in the collapse-operator builder
    double gamma = cfg.gamma_1g + cfg.gamma_1e;
    DecayDiagnostics d;
    d.gamma_eff = gamma * cfg.omega1 * cfg.omega1 / (4.0 * cfg.Delta1 * cfg.Delta1);
    d.p_spont = eff.g_eff != 0.0 ? d.gamma_eff * gate_time(eff.delta, eff.g_eff) : 0.0;
    d.photon_loss_scale = eff.delta != 0.0 ? pi * cfg.kappa / std::abs(eff.delta) : 0.0;
    return d;
}

namespace {
// values quoted in units of 2pi MHz; internal unit is rad/us
double mhz(double v) { return 2.0 * pi * v; }
}  // namespace

Rb87Config Rb87Config::set1() {
    Rb87Config c;
    c.g = mhz(60.0);
    c.kappa = mhz(1.5);
    // red detunings: the sideband couplings and the negative dispersive shift
    // both require Delta_i < 0 with the drive signs below
    c.Delta1 = mhz(-10000.0);
    c.Delta2 = mhz(-3980.0);
    c.omega1 = mhz(-50.0);
    c.omega2 = mhz(-17.6);
    c.delta = mhz(19.6);
    c.omega12 = mhz(812.0);
    c.gamma = mhz(5.75 / 2.0);
    return c;
}

Rb87Config Rb87Config::set2() {
    Rb87Config c;
    c.g = mhz(200.0);
    c.kappa = mhz(0.1);
    c.Delta1 = mhz(-20000.0);
    c.Delta2 = mhz(-13977.0);
    c.omega1 = mhz(-50.0);
    c.omega2 = mhz(-33.9);
    c.delta = mhz(16.3);
    c.omega12 = mhz(812.0);
    c.gamma = mhz(5.75 / 2.0);
    return c;
}

Rb87Derived derive_rb87(const Rb87Config& cfg) {
    if (cfg.Delta1 == 0.0 || cfg.Delta2 == 0.0 || cfg.Delta2 + cfg.omega12 == 0.0)
        throw std::invalid_argument("derive_rb87: singular detuning denominator");
    const double s6 = std::sqrt(6.0);
    Rb87Derived out;
    out.g_eff_1 = cfg.g * cfg.omega1 / (s6 * cfg.Delta1);
    out.g_eff_2 = (cfg.g * cfg.omega2 / (2.0 * s6)) *
                  (1.0 / cfg.Delta2 + 1.0 / (cfg.Delta2 + cfg.omega12));
    out.eff.chi = cfg.g * cfg.g * (1.0 / (4.0 * (cfg.Delta2 + cfg.omega12)) +
                                   1.0 / (12.0 * cfg.Delta2) - 1.0 / (3.0 * cfg.Delta1));
    out.eff.g_eff = out.g_eff_1;
    out.eff.delta = cfg.delta;
    double scale = std::max({std::abs(out.g_eff_1), std::abs(out.g_eff_2), 1e-300});
    out.mismatch = std::abs(out.g_eff_1 - out.g_eff_2) / scale;
    out.balanced = out.mismatch <= 1e-3;
    return out;
}

double balance_omega2(const Rb87Config& cfg) {
    if (cfg.Delta1 == 0.0 || cfg.Delta2 == 0.0 || cfg.Delta2 + cfg.omega12 == 0.0)
        throw std::invalid_argument("balance_omega2: singular detuning denominator");
    double arm2 = cfg.Delta1 * (1.0 / cfg.Delta2 + 1.0 / (cfg.Delta2 + cfg.omega12));
    if (arm2 == 0.0) throw std::invalid_argument("balance_omega2: degenerate arm");
    return 2.0 * cfg.omega1 / arm2;
}

}  // namespace cavityms
