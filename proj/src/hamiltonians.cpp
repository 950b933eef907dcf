#include "cavityms/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace cavityms {

Matrix TimeDependentHamiltonian::at(double t) const {
    Matrix h = static_part.mat;
    for (const auto& term : oscillating) {
        cx z = std::exp(-ii * term.freq * t);
        h.noalias() += z * term.op.mat;
        h.noalias() += std::conj(z) * term.op.mat.adjoint();
    }
    return h;
}

namespace {
void require_levels(const HilbertLayout& layout, int levels, const char* who) {
    for (int l : layout.atom_levels)
        if (l != levels)
            throw std::invalid_argument(std::string(who) + ": layout must have " +
                                        std::to_string(levels) + " levels per atom");
}

// sum over atoms of |to><from|, identity elsewhere
Matrix collective_transfer(const HilbertLayout& layout, int to, int from) {
    Matrix sum = Matrix::Zero(layout.dim(), layout.dim());
    for (int atom = 0; atom < layout.n_atoms(); ++atom)
        sum += embed(level_transfer(layout.atom_levels[atom], to, from), atom, layout).mat;
    return sum;
}
}  // namespace

TimeDependentHamiltonian build_full_raman(const RamanConfig& cfg,
                                          const HilbertLayout& layout) {
    require_levels(layout, 4, "build_full_raman");
    constexpr int g = 0, e = 1, r1 = 2, r2 = 3;

    Matrix stat = -cfg.Delta1 * collective_transfer(layout, r1, r1) -
                  cfg.Delta2 * collective_transfer(layout, r2, r2);

    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;
    TimeDependentHamiltonian h{{layout, std::move(stat)}, {}};
    h.oscillating.push_back({{layout, 0.5 * cfg.omega1 * collective_transfer(layout, r1, e)},
                             -0.5 * cfg.delta1});
    h.oscillating.push_back({{layout, 0.5 * cfg.omega2 * collective_transfer(layout, r2, g)},
                             -0.5 * cfg.delta2});
    h.oscillating.push_back({{layout, cfg.g * a * collective_transfer(layout, r1, g)},
                             0.5 * cfg.delta1});
    h.oscillating.push_back({{layout, cfg.g * a * collective_transfer(layout, r2, e)},
                             0.5 * cfg.delta2});
    return h;
}

TimeDependentHamiltonian build_effective(const EffectiveParams& eff,
                                         const HilbertLayout& layout) {
    require_levels(layout, 2, "build_effective");
    Matrix num = embed_photon(fock_number(layout.n_max()), layout).mat;
    Matrix sz = collective_spin(layout, 'z').mat;
    Matrix sx = collective_spin(layout, 'x').mat;
    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;

    TimeDependentHamiltonian h{{layout, eff.chi * num * sz}, {}};
    h.oscillating.push_back({{layout, eff.g_eff * a * sx}, eff.delta});
    return h;
}

ComplexOperator build_interaction_static(const EffectiveParams& eff,
                                         const HilbertLayout& layout) {
    require_levels(layout, 2, "build_interaction_static");
    if (eff.delta == 0.0)
        throw std::invalid_argument("build_interaction_static: delta must be nonzero");
    Matrix num = embed_photon(fock_number(layout.n_max()), layout).mat;
    Matrix sz = collective_spin(layout, 'z').mat;
    Matrix sx = collective_spin(layout, 'x').mat;
    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;
    Matrix h = eff.chi * num * sz + eff.delta * num +
               eff.g_eff * (a + Matrix(a.adjoint())) * sx;
    return {layout, std::move(h)};
}

TimeDependentHamiltonian build_rb87_effective(const Rb87Config& cfg,
                                              const HilbertLayout& layout) {
    require_levels(layout, 3, "build_rb87_effective");
    constexpr int g = 0, e = 1;
    Rb87Derived derived = derive_rb87(cfg);

    Matrix num = embed_photon(fock_number(layout.n_max()), layout).mat;
    Matrix sz = collective_spin(layout, 'z', g, e).mat;
    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;

    Matrix arm = derived.g_eff_1 * collective_transfer(layout, e, g) +
                 derived.g_eff_2 * collective_transfer(layout, g, e);
    TimeDependentHamiltonian h{{layout, derived.eff.chi * num * sz}, {}};
    h.oscillating.push_back({{layout, 0.5 * a * arm}, cfg.delta});
    return h;
}

}  // namespace cavityms
