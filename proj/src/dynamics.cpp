#include "cavityms/dynamics.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>

namespace cavityms {

namespace {

using SpMat = Eigen::SparseMatrix<cx>;
using RhsFn = std::function<void(double, const Vector&, Vector&)>;

constexpr double kTruncationThreshold = 1e-6;
constexpr long kMaxSteps = 100'000'000;

SpMat sparsify(const Matrix& m) {
    double cut = 1e-15 * std::max(1.0, m.cwiseAbs().maxCoeff());
    std::vector<Eigen::Triplet<cx>> trips;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (std::abs(m(i, j)) > cut) trips.emplace_back(int(i), int(j), m(i, j));
    SpMat s(m.rows(), m.cols());
    s.setFromTriplets(trips.begin(), trips.end());
    s.makeCompressed();
    return s;
}

double error_norm(const Vector& err, const Vector& y0, const Vector& y1,
                  double rtol, double atol) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
        double sc = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        double r = std::abs(err(i)) / sc;
        acc += r * r;
    }
    return std::sqrt(acc / double(err.size()));
}

// Dormand-Prince 5(4) with FSAL. The last accepted stage doubles as the first
// stage of the next step, so an accepted step costs six RHS evaluations.
struct Stepper {
    const RhsFn& rhs;
    double rtol, atol;
    Vector k1, k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr;
    long rhs_evals = 0;

    Stepper(const RhsFn& f, Eigen::Index n, double rt, double at)
        : rhs(f), rtol(rt), atol(at) {
        for (Vector* v : {&k1, &k2, &k3, &k4, &k5, &k6, &k7, &ytmp, &ynew, &yerr})
            v->resize(n);
    }

    void eval(double t, const Vector& y, Vector& dy) {
        rhs(t, y, dy);
        ++rhs_evals;
    }

    // tries one step of size h from (t, y) with k1 = f(t, y) already valid;
    // on success ynew/k7 hold the result and its derivative
    double attempt(double t, double h, const Vector& y) {
        constexpr double a21 = 1.0 / 5;
        constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                         a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                         a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                         b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                         e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        ytmp = y + h * (a21 * k1);
        eval(t + h / 5, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        eval(t + 3 * h / 10, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        eval(t + 4 * h / 5, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        eval(t + 8 * h / 9, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        eval(t + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        eval(t + h, ynew, k7);
        yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        return error_norm(yerr, y, ynew, rtol, atol);
    }
};

struct StepMonitor {
    std::function<void(double, Vector&)> post_step;          // may adjust y
    std::function<void(double, const Vector&)> emit_output;  // at requested times
};

void integrate_adaptive(const RhsFn& rhs, Vector& y, const IntegratorConfig& cfg,
                        TrajectoryStats& stats, const StepMonitor& mon) {
    if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0)
        throw std::invalid_argument("integrator tolerances must be positive");
    if (cfg.output_times.empty())
        throw std::invalid_argument("output_times must not be empty");
    for (size_t i = 0; i < cfg.output_times.size(); ++i) {
        if (cfg.output_times[i] < 0.0 ||
            (i > 0 && cfg.output_times[i] < cfg.output_times[i - 1]))
            throw std::invalid_argument("output_times must be nonnegative and nondecreasing");
    }

    size_t out_idx = 0;
    double t = 0.0;
    auto emit_due = [&](double tcur, const Vector& ycur) {
        double slack = 1e-12 * std::max(1.0, std::abs(tcur));
        while (out_idx < cfg.output_times.size() &&
               cfg.output_times[out_idx] <= tcur + slack) {
            mon.emit_output(cfg.output_times[out_idx], ycur);
            ++out_idx;
        }
    };
    emit_due(t, y);
    if (out_idx >= cfg.output_times.size()) return;

    Stepper st(rhs, y.size(), cfg.rel_tol, cfg.abs_tol);
    st.eval(t, y, st.k1);

    const double t_end = cfg.output_times.back();
    double h;
    {
        double d0 = error_norm(y, y, y, cfg.rel_tol, cfg.abs_tol);
        double d1 = error_norm(st.k1, y, y, cfg.rel_tol, cfg.abs_tol);
        h = (d0 > 1e-10 && d1 > 1e-10) ? 0.01 * d0 / d1 : 1e-6 * t_end;
        h = std::min({h, t_end - t, cfg.max_step});
        if (h <= 0.0) h = std::min(1e-6 * t_end, cfg.max_step);
    }

    while (out_idx < cfg.output_times.size()) {
        if (stats.steps > kMaxSteps)
            throw std::runtime_error("integrator exceeded the global step limit");
        double t_target = cfg.output_times[out_idx];
        double h_try = std::min({h, t_target - t, cfg.max_step});
        if (h_try < 1e-14 * std::max(1.0, std::abs(t)))
            throw std::runtime_error("integrator step size underflow");
        bool clamped = h_try < h;

        double err = st.attempt(t, h_try, y);
        double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        factor = std::clamp(factor, 0.2, 5.0);
        if (err <= 1.0) {
            t += h_try;
            y.swap(st.ynew);
            st.k1.swap(st.k7);
            ++stats.steps;
            if (mon.post_step) mon.post_step(t, y);
            emit_due(t, y);
            if (!clamped || factor < 1.0) h = std::min(h_try * factor, cfg.max_step);
        } else {
            h = h_try * factor;
        }
    }
    stats.rhs_evals = st.rhs_evals;
}

struct PackedHamiltonian {
    SpMat h_static;
    std::vector<SpMat> osc, osc_dag;
    std::vector<double> freqs;
};

PackedHamiltonian pack_hamiltonian(const TimeDependentHamiltonian& h) {
    PackedHamiltonian p;
    p.h_static = sparsify(h.static_part.mat);
    for (const auto& term : h.oscillating) {
        p.osc.push_back(sparsify(term.op.mat));
        p.osc_dag.push_back(sparsify(term.op.mat.adjoint()));
        p.freqs.push_back(term.freq);
    }
    return p;
}

// Schroedinger right-hand side, dpsi/dt = -i H(t) psi
struct KetRhs {
    PackedHamiltonian h;
    mutable Vector tmp;

    void operator()(double t, const Vector& y, Vector& dy) const {
        dy.noalias() = h.h_static * y;
        for (size_t k = 0; k < h.osc.size(); ++k) {
            cx z = std::exp(-ii * h.freqs[k] * t);
            tmp.noalias() = h.osc[k] * y;
            dy.noalias() += z * tmp;
            tmp.noalias() = h.osc_dag[k] * y;
            dy.noalias() += std::conj(z) * tmp;
        }
        dy *= -ii;
    }
};

// Master-equation right-hand side on the invariant subspace of Hermitian
// operators, applied to a row of b slabs [sigma_1 ... sigma_b] at once. With
// K = H_static - i sum_k C_k^dag C_k the drift including the anticommutator
// part is -i(K rho) + h.c., one sparse product total; each rotating
// Hamiltonian pair and each 2 C rho C^dag likewise feed term + term^dag.
// Right multiplications act on the whole row through I_b (x) C^dag.
struct RhoRhs {
    int d = 0, batch = 1;
    SpMat big_k;
    std::vector<SpMat> c_ops, c_dags_blk;
    std::vector<SpMat> osc, osc_dag;
    std::vector<double> freqs;
    mutable Matrix w1, w2, w3;

    SpMat block_diag(const Matrix& m) const {
        std::vector<Eigen::Triplet<cx>> trips;
        double cut = 1e-15 * std::max(1.0, m.cwiseAbs().maxCoeff());
        for (int b = 0; b < batch; ++b)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                for (Eigen::Index i = 0; i < m.rows(); ++i)
                    if (std::abs(m(i, j)) > cut)
                        trips.emplace_back(b * d + int(i), b * d + int(j), m(i, j));
        SpMat s(batch * d, batch * d);
        s.setFromTriplets(trips.begin(), trips.end());
        s.makeCompressed();
        return s;
    }

    void init(const LindbladModel& model, int batch_size) {
        d = model.hamiltonian.layout().dim();
        batch = batch_size;
        Matrix damp = Matrix::Zero(d, d);
        for (const auto& c : model.collapse_ops) damp += c.mat.adjoint() * c.mat;
        big_k = sparsify(model.hamiltonian.static_part.mat - ii * damp);
        for (const auto& c : model.collapse_ops) {
            c_ops.push_back(sparsify(c.mat));
            c_dags_blk.push_back(block_diag(c.mat.adjoint()));
        }
        for (const auto& term : model.hamiltonian.oscillating) {
            osc.push_back(sparsify(term.op.mat));
            osc_dag.push_back(sparsify(term.op.mat.adjoint()));
            freqs.push_back(term.freq);
        }
        w1.resize(d, d * batch);
        w2.resize(d, d * batch);
        w3.resize(d, d * batch);
    }

    void operator()(double t, const Vector& y, Vector& dy) const {
        Eigen::Map<const Matrix> rho(y.data(), d, d * batch);
        Eigen::Map<Matrix> out(dy.data(), d, d * batch);

        w1.noalias() = big_k * rho;
        for (int b = 0; b < batch; ++b) {
            out.middleCols(b * d, d) = -ii * w1.middleCols(b * d, d);
            out.middleCols(b * d, d) += (-ii * w1.middleCols(b * d, d)).adjoint().eval();
        }

        for (size_t k = 0; k < osc.size(); ++k) {
            cx z = std::exp(-ii * freqs[k] * t);
            w2.noalias() = osc[k] * rho;
            w3.noalias() = osc_dag[k] * rho;
            w2 = (-ii * z) * w2 + (-ii * std::conj(z)) * w3;
            out.noalias() += w2;
            for (int b = 0; b < batch; ++b)
                out.middleCols(b * d, d) += w2.middleCols(b * d, d).adjoint().eval();
        }
        for (size_t k = 0; k < c_ops.size(); ++k) {
            w2.noalias() = c_ops[k] * rho;
            out.noalias() += 2.0 * (w2 * c_dags_blk[k]);
        }
    }
};

// population of the top Fock levels, used for the truncation guard
void fock_tail(const Vector& ket, const HilbertLayout& layout, double& top, double& top2) {
    int nf = layout.fock_dim, na = layout.atom_dim();
    top = 0.0;
    top2 = 0.0;
    for (int a = 0; a < na; ++a) {
        top += std::norm(ket(a * nf + nf - 1));
        if (nf >= 2) top2 += std::norm(ket(a * nf + nf - 2));
    }
    top2 += top;
}

void fock_tail_rho(const Eigen::Ref<const Matrix>& rho, const HilbertLayout& layout,
                   double& top, double& top2) {
    int nf = layout.fock_dim, na = layout.atom_dim();
    top = 0.0;
    top2 = 0.0;
    for (int a = 0; a < na; ++a) {
        top += std::abs(rho(a * nf + nf - 1, a * nf + nf - 1));
        if (nf >= 2) top2 += std::abs(rho(a * nf + nf - 2, a * nf + nf - 2));
    }
    top2 += top;
}

void check_layouts(const HilbertLayout& a, const HilbertLayout& b, const char* who) {
    if (!(a == b)) throw std::invalid_argument(std::string(who) + ": layout mismatch");
}

std::vector<RhoTrajectory> run_master_equation(const LindbladModel& model,
                                               const std::vector<Matrix>& starts,
                                               const IntegratorConfig& cfg,
                                               bool density_checks) {
    const HilbertLayout& layout = model.hamiltonian.layout();
    const int d = layout.dim();
    const int batch = int(starts.size());
    if (batch == 0) throw std::invalid_argument("evolve_rho: no initial operators");
    for (const auto& c : model.collapse_ops) check_layouts(c.layout, layout, "evolve_rho");
    for (const auto& start : starts) {
        if (start.rows() != d || start.cols() != d)
            throw std::invalid_argument("evolve_rho: state dimension mismatch");
        double hscale = std::max(1.0, start.cwiseAbs().maxCoeff());
        if ((start - start.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * hscale)
            throw std::invalid_argument("evolve_rho: initial operator is not Hermitian");
    }

    auto rhs_data = std::make_shared<RhoRhs>();
    rhs_data->init(model, batch);
    RhsFn rhs = [rhs_data](double t, const Vector& y, Vector& dy) { (*rhs_data)(t, y, dy); };

    Vector y(d * d * batch);
    std::vector<double> trace0(batch);
    for (int b = 0; b < batch; ++b) {
        Eigen::Map<Matrix> slab(y.data() + std::ptrdiff_t(b) * d * d, d, d);
        slab = 0.5 * (starts[b] + starts[b].adjoint());
        trace0[b] = slab.trace().real();
    }

    std::vector<RhoTrajectory> trajs(batch);
    TrajectoryStats stats;
    stats.min_eigenvalue = 0.0;
    auto scratch = std::make_shared<Matrix>(d, d);

    StepMonitor mon;
    mon.post_step = [&, scratch](double, Vector& yv) {
        for (int b = 0; b < batch; ++b) {
            Eigen::Map<Matrix> m(yv.data() + std::ptrdiff_t(b) * d * d, d, d);
            scratch->noalias() = m.adjoint();
            m = 0.5 * (m + *scratch);
            double top, top2;
            fock_tail_rho(m, layout, top, top2);
            stats.top_fock_pop = std::max(stats.top_fock_pop, top);
            stats.top2_fock_pop = std::max(stats.top2_fock_pop, top2);
        }
    };
    bool first_emit = true;
    mon.emit_output = [&](double t, const Vector& yv) {
        for (int b = 0; b < batch; ++b) {
            Eigen::Map<const Matrix> m(yv.data() + std::ptrdiff_t(b) * d * d, d, d);
            trajs[b].times.push_back(t);
            trajs[b].states.emplace_back(m);
            stats.norm_drift =
                std::max(stats.norm_drift, std::abs(m.trace().real() - trace0[b]));
            if (density_checks) {
                Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
                double lmin = es.eigenvalues().minCoeff();
                stats.min_eigenvalue =
                    first_emit ? lmin : std::min(stats.min_eigenvalue, lmin);
                first_emit = false;
                if (lmin < -1e-6)
                    throw std::runtime_error(
                        "evolve_rho: positivity violated (min eigenvalue " +
                        std::to_string(lmin) + ")");
            }
        }
    };

    integrate_adaptive(rhs, y, cfg, stats, mon);
    stats.truncation_flagged = stats.top_fock_pop > kTruncationThreshold;
    for (auto& traj : trajs) traj.stats = stats;
    return trajs;
}

}  // namespace

KetTrajectory evolve_ket(const TimeDependentHamiltonian& h, const Ket& psi0,
                         const IntegratorConfig& cfg) {
    const HilbertLayout& layout = h.layout();
    check_layouts(psi0.layout, layout, "evolve_ket");
    if (std::abs(psi0.vec.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("evolve_ket: initial state is not normalized");

    auto rhs_data = std::make_shared<KetRhs>();
    rhs_data->h = pack_hamiltonian(h);
    rhs_data->tmp.resize(layout.dim());
    RhsFn rhs = [rhs_data](double t, const Vector& y, Vector& dy) { (*rhs_data)(t, y, dy); };

    Vector y = psi0.vec;
    KetTrajectory traj;
    StepMonitor mon;
    mon.post_step = [&](double, Vector& yv) {
        double top, top2;
        fock_tail(yv, layout, top, top2);
        traj.stats.top_fock_pop = std::max(traj.stats.top_fock_pop, top);
        traj.stats.top2_fock_pop = std::max(traj.stats.top2_fock_pop, top2);
    };
    mon.emit_output = [&](double t, const Vector& yv) {
        traj.times.push_back(t);
        traj.states.push_back(yv);
        traj.stats.norm_drift = std::max(traj.stats.norm_drift, std::abs(yv.norm() - 1.0));
    };

    integrate_adaptive(rhs, y, cfg, traj.stats, mon);
    traj.stats.truncation_flagged = traj.stats.top_fock_pop > kTruncationThreshold;
    return traj;
}

RhoTrajectory evolve_rho(const LindbladModel& model, const DensityOperator& rho0,
                         const IntegratorConfig& cfg) {
    check_layouts(rho0.layout, model.hamiltonian.layout(), "evolve_rho");
    if (std::abs(rho0.mat.trace().real() - 1.0) > 1e-6)
        throw std::invalid_argument("evolve_rho: initial state must have unit trace");
    return std::move(run_master_equation(model, {rho0.mat}, cfg, true).front());
}

RhoTrajectory evolve_hermitian(const LindbladModel& model, const HilbertLayout& layout,
                               const Matrix& sigma0, const IntegratorConfig& cfg) {
    check_layouts(layout, model.hamiltonian.layout(), "evolve_hermitian");
    return std::move(run_master_equation(model, {sigma0}, cfg, false).front());
}

std::vector<RhoTrajectory> evolve_hermitian_batch(const LindbladModel& model,
                                                  const HilbertLayout& layout,
                                                  const std::vector<Matrix>& sigmas,
                                                  const IntegratorConfig& cfg) {
    check_layouts(layout, model.hamiltonian.layout(), "evolve_hermitian");
    return run_master_equation(model, sigmas, cfg, false);
}

std::vector<ComplexOperator> cavity_decay_ops(double kappa, const HilbertLayout& layout) {
    if (kappa < 0.0) throw std::invalid_argument("cavity_decay_ops: kappa must be >= 0");
    std::vector<ComplexOperator> ops;
    if (kappa == 0.0) return ops;
    ops.push_back({layout, std::sqrt(kappa) *
                               embed_photon(fock_annihilate(layout.n_max()), layout).mat});
    return ops;
}

namespace {
ComplexOperator assemble_channel(const DecayChannelSpec& spec, int atom,
                                 const HilbertLayout& layout, const Matrix& a_embedded) {
    int levels = layout.atom_levels[atom];
    Matrix m = spec.photon_amp *
                   (a_embedded *
                    embed(level_transfer(levels, spec.photon_to, spec.photon_from), atom,
                          layout).mat) +
               spec.drive_amp *
                   embed(level_transfer(levels, spec.drive_to, spec.drive_from), atom,
                         layout).mat;
    return {layout, std::sqrt(spec.rate) * m};
}
}  // namespace

std::vector<ComplexOperator> effective_atomic_ops(const RamanConfig& cfg,
                                                  const HilbertLayout& layout) {
    for (double r : {cfg.gamma_1g, cfg.gamma_1e, cfg.gamma_2g, cfg.gamma_2e})
        if (r < 0.0) throw std::invalid_argument("effective_atomic_ops: negative rate");
    if (cfg.Delta1 == 0.0 || cfg.Delta2 == 0.0)
        throw std::invalid_argument("effective_atomic_ops: zero detuning");

    const DecayChannelSpec table[4] = {
        {cfg.gamma_1g, cfg.g / cfg.Delta1, 0, 0, cfg.omega1 / (2 * cfg.Delta1), 0, 1},
        {cfg.gamma_1e, cfg.g / cfg.Delta1, 1, 0, cfg.omega1 / (2 * cfg.Delta1), 1, 1},
        {cfg.gamma_2g, cfg.g / cfg.Delta2, 0, 1, cfg.omega2 / (2 * cfg.Delta2), 0, 0},
        {cfg.gamma_2e, cfg.g / cfg.Delta2, 1, 1, cfg.omega2 / (2 * cfg.Delta2), 1, 0},
    };
    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;
    std::vector<ComplexOperator> ops;
    for (int atom = 0; atom < layout.n_atoms(); ++atom)
        for (const auto& spec : table)
            if (spec.rate > 0.0 && (spec.photon_amp != 0.0 || spec.drive_amp != 0.0))
                ops.push_back(assemble_channel(spec, atom, layout, a));
    return ops;
}

std::vector<DecayChannelSpec> rb87_decay_table(const Rb87Config& cfg) {
    if (cfg.Delta1 == 0.0 || cfg.Delta2 == 0.0 || cfg.Delta2 + cfg.omega12 == 0.0)
        throw std::invalid_argument("rb87_decay_table: singular detuning");
    constexpr int g = 0, e = 1, u = 2;
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    const double gm = cfg.gamma;
    const double d1 = cfg.Delta1, d2 = cfg.Delta2, d2p = cfg.Delta2 + cfg.omega12;

    // Clebsch-Gordan weighted channels; the three per-manifold rate groups are
    // {1/3, 1/2, 5/6}, {1/2, 1/12, 17/12} and {1/6, 1/4, 19/12} in units of gamma
    return {
        {gm / 3.0, cfg.g / (s3 * d1), g, g, cfg.omega1 / (2 * s2 * d1), g, e},
        {gm / 2.0, cfg.g / (s3 * d1), e, g, cfg.omega1 / (2 * s2 * d1), e, e},
        {gm / 2.0, cfg.g / (2 * s3 * d2), g, e, cfg.omega2 / (2 * s2 * d2), g, g},
        {gm / 12.0, cfg.g / (2 * s3 * d2), e, e, cfg.omega2 / (2 * s2 * d2), e, g},
        {gm / 6.0, cfg.g / (2 * d2p), g, e, cfg.omega2 / (2 * s6 * d2p), g, g},
        {gm / 4.0, cfg.g / (2 * d2p), e, e, cfg.omega2 / (2 * s6 * d2p), e, g},
        {5 * gm / 6.0, cfg.g / (2 * s3 * d1), u, g, cfg.omega1 / (2 * s2 * d1), u, e},
        {17 * gm / 12.0, cfg.g / (2 * s3 * d2), u, e, cfg.omega2 / (2 * s2 * d2), u, g},
        {19 * gm / 12.0, cfg.g / (2 * d2p), u, e, cfg.omega2 / (2 * s6 * d2p), u, g},
    };
}

std::vector<ComplexOperator> rb87_ops(const Rb87Config& cfg, const HilbertLayout& layout) {
    for (int l : layout.atom_levels)
        if (l != 3)
            throw std::invalid_argument("rb87_ops: layout must have 3 levels per atom");
    auto table = rb87_decay_table(cfg);
    Matrix a = embed_photon(fock_annihilate(layout.n_max()), layout).mat;
    std::vector<ComplexOperator> ops;
    for (int atom = 0; atom < layout.n_atoms(); ++atom)
        for (const auto& spec : table)
            if (spec.rate > 0.0) ops.push_back(assemble_channel(spec, atom, layout, a));
    return ops;
}

}  // namespace cavityms
