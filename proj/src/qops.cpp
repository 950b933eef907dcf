#include "cavityms/qops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cavityms {

int HilbertLayout::atom_dim() const {
    int d = 1;
    for (int l : atom_levels) d *= l;
    return d;
}

int HilbertLayout::site_dim(int site) const {
    if (site < 0 || site > n_atoms())
        throw std::invalid_argument("site index out of range");
    return site == n_atoms() ? fock_dim : atom_levels[site];
}

int HilbertLayout::basis_index(const std::vector<int>& atom_states, int n) const {
    if (static_cast<int>(atom_states.size()) != n_atoms())
        throw std::invalid_argument("basis_index: wrong number of atom states");
    if (n < 0 || n >= fock_dim)
        throw std::invalid_argument("basis_index: photon index out of range");
    int idx = 0;
    for (int i = 0; i < n_atoms(); ++i) {
        if (atom_states[i] < 0 || atom_states[i] >= atom_levels[i])
            throw std::invalid_argument("basis_index: atom state out of range");
        idx = idx * atom_levels[i] + atom_states[i];
    }
    return idx * fock_dim + n;
}

HilbertLayout HilbertLayout::qubits(int n_atoms, int n_max) {
    if (n_atoms < 1 || n_max < 1)
        throw std::invalid_argument("layout needs n_atoms >= 1 and n_max >= 1");
    return {std::vector<int>(n_atoms, 2), n_max + 1};
}

HilbertLayout HilbertLayout::uniform(int n_atoms, int levels_per_atom, int n_max) {
    if (n_atoms < 1 || levels_per_atom < 2 || n_max < 1)
        throw std::invalid_argument("invalid layout dimensions");
    return {std::vector<int>(n_atoms, levels_per_atom), n_max + 1};
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix fock_annihilate(int n_max) {
    if (n_max < 1) throw std::invalid_argument("fock_annihilate: n_max must be >= 1");
    Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Matrix fock_number(int n_max) {
    Matrix n = Matrix::Zero(n_max + 1, n_max + 1);
    for (int k = 0; k <= n_max; ++k) n(k, k) = double(k);
    return n;
}

Matrix displacement(cx alpha, int n_max) {
    // exp(alpha a^dag - alpha^* a) = exp(-i G) with Hermitian G = i(alpha a^dag - alpha^* a)
    Matrix a = fock_annihilate(n_max);
    Matrix g = ii * (alpha * a.adjoint() - std::conj(alpha) * a);
    return expm_hermitian(g, 1.0);
}

Matrix level_transfer(int levels, int to, int from) {
    if (to < 0 || to >= levels || from < 0 || from >= levels)
        throw std::invalid_argument("level_transfer: index out of range");
    Matrix m = Matrix::Zero(levels, levels);
    m(to, from) = 1.0;
    return m;
}

Matrix expm_hermitian(const Matrix& h, double t) {
    double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-10 * scale)
        throw std::invalid_argument("expm_hermitian: input is not Hermitian (deviation " +
                                    std::to_string(dev) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + Matrix(h.adjoint())));
    Vector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases(k) = std::exp(-ii * es.eigenvalues()(k) * t);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexOperator identity_op(const HilbertLayout& layout) {
    return {layout, Matrix::Identity(layout.dim(), layout.dim())};
}

ComplexOperator embed(const Matrix& local, int site, const HilbertLayout& layout) {
    int d = layout.site_dim(site);
    if (local.rows() != d || local.cols() != d)
        throw std::invalid_argument("embed: local operator dimension mismatch");
    int left = 1;
    for (int s = 0; s < site; ++s) left *= layout.site_dim(s);
    int right = layout.dim() / (left * d);
    Matrix m = kron(Matrix::Identity(left, left),
                    kron(local, Matrix::Identity(right, right)));
    return {layout, std::move(m)};
}

ComplexOperator embed_photon(const Matrix& local, const HilbertLayout& layout) {
    return embed(local, layout.photon_site(), layout);
}

ComplexOperator collective_spin(const HilbertLayout& layout, char axis,
                                int g_index, int e_index) {
    Matrix total = Matrix::Zero(layout.dim(), layout.dim());
    for (int atom = 0; atom < layout.n_atoms(); ++atom) {
        int d = layout.atom_levels[atom];
        if (g_index < 0 || e_index < 0 || g_index >= d || e_index >= d || g_index == e_index)
            throw std::invalid_argument("collective_spin: invalid qubit level indices");
        Matrix local = Matrix::Zero(d, d);
        switch (axis) {
            case 'z':
                local(e_index, e_index) = 0.5;
                local(g_index, g_index) = -0.5;
                break;
            case 'x':
                local(e_index, g_index) = 0.5;
                local(g_index, e_index) = 0.5;
                break;
            case 'y':
                local(e_index, g_index) = -0.5 * ii;
                local(g_index, e_index) = 0.5 * ii;
                break;
            default:
                throw std::invalid_argument("collective_spin: axis must be x, y or z");
        }
        total += embed(local, atom, layout).mat;
    }
    return {layout, std::move(total)};
}

Ket basis_ket(const HilbertLayout& layout, const std::vector<int>& atom_states, int n) {
    Vector v = Vector::Zero(layout.dim());
    v(layout.basis_index(atom_states, n)) = 1.0;
    return {layout, std::move(v)};
}

Matrix partial_trace_photon(const DensityOperator& rho) {
    int na = rho.layout.atom_dim(), nf = rho.layout.fock_dim;
    Matrix out = Matrix::Zero(na, na);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int n = 0; n < nf; ++n)
                out(a, b) += rho.mat(a * nf + n, b * nf + n);
    return out;
}

Matrix partial_trace_photon(const Ket& psi) {
    int na = psi.layout.atom_dim(), nf = psi.layout.fock_dim;
    // view psi as an (atoms x photon) matrix; the reduced state is M M^dag
    Eigen::Map<const Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(psi.vec.data(), na, nf);
    return m * m.adjoint();
}

Matrix partial_trace_atoms(const DensityOperator& rho) {
    int na = rho.layout.atom_dim(), nf = rho.layout.fock_dim;
    Matrix out = Matrix::Zero(nf, nf);
    for (int m = 0; m < nf; ++m)
        for (int n = 0; n < nf; ++n)
            for (int a = 0; a < na; ++a)
                out(m, n) += rho.mat(a * nf + m, a * nf + n);
    return out;
}

}  // namespace cavityms
