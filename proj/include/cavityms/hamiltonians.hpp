#pragma once

#include <vector>

#include "cavityms/params.hpp"
#include "cavityms/qops.hpp"

namespace cavityms {

// One rotating pair op*e^{-i freq t} + op^dag*e^{+i freq t}
struct OscillatingTerm {
    ComplexOperator op;
    double freq = 0.0;
};

// H(t) = static + sum_k (op_k e^{-i w_k t} + h.c.), Hermitian for all t
struct TimeDependentHamiltonian {
    ComplexOperator static_part;
    std::vector<OscillatingTerm> oscillating;

    const HilbertLayout& layout() const { return static_part.layout; }
    bool is_static() const { return oscillating.empty(); }
    Matrix at(double t) const;
};

// Four-level Raman model in the rotated frame: bare detuning terms on the two
// excited states, laser drives on |e>-|r1| and |g>-|r2|, cavity couplings on
// |g>-|r1| and |e>-|r2|. Atom levels are ordered (g, e, r1, r2).
TimeDependentHamiltonian build_full_raman(const RamanConfig& cfg,
                                          const HilbertLayout& layout);

// Two-level effective model: chi a^dag a S_z + g_eff (e^{-i delta t} a + h.c.) S_x
TimeDependentHamiltonian build_effective(const EffectiveParams& eff,
                                         const HilbertLayout& layout);

// Time-independent picture of the same model:
// chi a^dag a S_z + delta a^dag a + g_eff (a + a^dag) S_x
ComplexOperator build_interaction_static(const EffectiveParams& eff,
                                         const HilbertLayout& layout);

// Rb-87 variant on three-level atoms (g, e, u): the two sideband arms may carry
// slightly different couplings; |u> is a dark shelf with no Hamiltonian coupling
TimeDependentHamiltonian build_rb87_effective(const Rb87Config& cfg,
                                              const HilbertLayout& layout);

}  // namespace cavityms
