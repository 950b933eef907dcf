#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <vector>

namespace cavityms {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr cx ii{0.0, 1.0};

// Tensor-product space of N atoms and one cavity mode. The ordering is fixed
// once and for all: atom 1 is the slowest-varying index, the photon the
// fastest, so a basis index decomposes as ((a1*d2 + a2)*... )*fock_dim + n.
struct HilbertLayout {
    std::vector<int> atom_levels;
    int fock_dim = 0;  // photon truncation, n_max + 1

    int n_atoms() const { return static_cast<int>(atom_levels.size()); }
    int n_max() const { return fock_dim - 1; }
    int atom_dim() const;
    int dim() const { return atom_dim() * fock_dim; }

    // site index convention used by embed(): 0..N-1 are atoms, N is the photon
    int photon_site() const { return n_atoms(); }
    int site_dim(int site) const;

    int basis_index(const std::vector<int>& atom_states, int n) const;

    static HilbertLayout qubits(int n_atoms, int n_max);
    static HilbertLayout uniform(int n_atoms, int levels_per_atom, int n_max);

    bool operator==(const HilbertLayout&) const = default;
};

struct ComplexOperator {
    HilbertLayout layout;
    Matrix mat;
};

struct Ket {
    HilbertLayout layout;
    Vector vec;
};

struct DensityOperator {
    HilbertLayout layout;
    Matrix mat;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Local (single-site) operators on the truncated Fock space
Matrix fock_annihilate(int n_max);
Matrix fock_number(int n_max);
Matrix displacement(cx alpha, int n_max);

// |to><from| on a d-level atom
Matrix level_transfer(int levels, int to, int from);

// e^{-iHt} for Hermitian H via eigendecomposition; rejects non-Hermitian input
Matrix expm_hermitian(const Matrix& h, double t);

ComplexOperator identity_op(const HilbertLayout& layout);
ComplexOperator embed(const Matrix& local, int site, const HilbertLayout& layout);
ComplexOperator embed_photon(const Matrix& local, const HilbertLayout& layout);

// 1/2 sum_i (|e><e| - |g><g|) for axis 'z', 1/2 sum_i (|e><g| + |g><e|) for
// 'x', and the matching 'y' component, embedded with identity on the photon
ComplexOperator collective_spin(const HilbertLayout& layout, char axis,
                                int g_index = 0, int e_index = 1);

Ket basis_ket(const HilbertLayout& layout, const std::vector<int>& atom_states, int n);

// Reduced atomic density matrix (dimension = product of atom_levels)
Matrix partial_trace_photon(const DensityOperator& rho);
Matrix partial_trace_photon(const Ket& psi);
// Reduced photon density matrix (dimension = fock_dim)
Matrix partial_trace_atoms(const DensityOperator& rho);

}  // namespace cavityms
