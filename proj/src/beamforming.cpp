#include "risfold/beamforming.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace risfold {

namespace {

/// Per-layer mask alpha * z^(l) (x) theta^(l) as a length-N vector.
VectorC layer_mask(const CascadeContext& ctx, int layer) {
    const int n = ctx.elements();
    VectorC mask(n);
    for (int i = 0; i < n; ++i) {
        const bool on = ctx.topology->active(layer - 1, i);
        mask(i) = on ? ctx.alpha * ctx.theta[static_cast<std::size_t>(layer - 1)](i) : Complex{0.0, 0.0};
    }
    return mask;
}

/// F_l x with F_l = alpha Z^(l) Theta^(l) h^(l).
VectorC factor_apply(const CascadeContext& ctx, int layer, const VectorC& x) {
    VectorC y = ctx.channels->h[static_cast<std::size_t>(layer - 1)] * x;
    return layer_mask(ctx, layer).cwiseProduct(y);
}

/// r^T F_l for a row vector r^T (returned as a column vector of the result).
VectorC row_apply(const CascadeContext& ctx, int layer, const VectorC& r) {
    const VectorC scaled = layer_mask(ctx, layer).cwiseProduct(r);
    return ctx.channels->h[static_cast<std::size_t>(layer - 1)].transpose() * scaled;
}

MatrixC factor_matrix(const CascadeContext& ctx, int layer) {
    return MatrixC(layer_mask(ctx, layer).asDiagonal()) *
           ctx.channels->h[static_cast<std::size_t>(layer - 1)];
}

/// v^H g^H T_(L,l+1) as a column vector r with r(n) = [v^H g^H T_(L,l+1)]_n.
VectorC suffix_row(const CascadeContext& ctx, const VectorC& v, int layer) {
    VectorC r = ctx.channels->g.conjugate() * v.conjugate(); // (v^H g^H)^T
    for (int ll = ctx.layer_count(); ll > layer; --ll)
        r = row_apply(ctx, ll, r);
    return r;
}

/// T_(l-1,1) w via forward matvecs.
VectorC prefix_vector(const CascadeContext& ctx, const VectorC& w, int layer) {
    VectorC t = w;
    for (int ll = 1; ll < layer; ++ll)
        t = factor_apply(ctx, ll, t);
    return t;
}

} // namespace

void CascadeContext::validate() const {
    if (channels == nullptr || topology == nullptr)
        throw std::invalid_argument("CascadeContext: channels and topology are required");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("CascadeContext: alpha must lie in (0, 1]");
    if (topology->layers != channels->layer_count() ||
        topology->per_layer != channels->elements_per_layer())
        throw std::invalid_argument("CascadeContext: topology does not match channel dimensions");
    if (static_cast<int>(theta.size()) != channels->layer_count())
        throw std::invalid_argument("CascadeContext: one phase vector per layer required");
    for (const VectorC& th : theta)
        if (th.size() != channels->elements_per_layer())
            throw std::invalid_argument("CascadeContext: phase vector length mismatch");
}

CascadeContext make_context(const ChannelSet& channels, const ActivationTopology& topology,
                            double alpha) {
    CascadeContext ctx;
    ctx.channels = &channels;
    ctx.topology = &topology;
    ctx.alpha = alpha;
    ctx.theta.assign(static_cast<std::size_t>(channels.layer_count()),
                     VectorC::Ones(channels.elements_per_layer()));
    ctx.validate();
    return ctx;
}

MatrixC cascade(const CascadeContext& ctx, int p, int q) {
    ctx.validate();
    const int n = ctx.elements();
    const int k = ctx.channels->user_antennas();
    const int l_count = ctx.layer_count();
    if (p == l_count && q == l_count + 1)
        return MatrixC::Identity(n, n);
    if (p == 0 && q == 1)
        return MatrixC::Identity(k, k);
    if (!(1 <= q && q <= p && p <= l_count))
        throw std::domain_error("cascade: invalid layer index pair");
    MatrixC t = factor_matrix(ctx, p);
    for (int l = p - 1; l >= q; --l)
        t = t * factor_matrix(ctx, l);
    return t;
}

VectorC effective_receive_vector(const CascadeContext& ctx, const VectorC& w) {
    VectorC t = prefix_vector(ctx, w, ctx.layer_count() + 1);
    return ctx.channels->g.adjoint() * t;
}

double snr(const CascadeContext& ctx, const VectorC& w, const VectorC& v, double noise_power) {
    if (!(noise_power > 0.0))
        throw std::domain_error("snr: noise power must be > 0");
    const double v_norm2 = v.squaredNorm();
    if (v_norm2 <= 0.0)
        throw std::domain_error("snr: combiner must be nonzero");
    const Complex numerator = (v.adjoint() * effective_receive_vector(ctx, w))(0);
    return std::norm(numerator) / (v_norm2 * noise_power);
}

double achievable_rate(double snr_value) { return std::log2(1.0 + snr_value); }

VectorC canonicalize_phase(const VectorC& v) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best) {
            best = mag;
            pivot = i;
        }
    }
    if (best <= 0.0)
        return v;
    const Complex rotation = std::conj(v(pivot)) / best;
    return v * rotation;
}

VectorC optimal_combiner(const CascadeContext& ctx, const VectorC& w) {
    const VectorC a = effective_receive_vector(ctx, w);
    const double a_norm = a.norm();
    if (a_norm <= 0.0)
        throw DegenerateChannelError("optimal_combiner: effective channel is zero");
    return canonicalize_phase(a / a_norm);
}

VectorC phase_coefficients(const CascadeContext& ctx, const VectorC& w, const VectorC& v,
                           int layer) {
    if (layer < 1 || layer > ctx.layer_count())
        throw std::domain_error("phase_coefficients: layer index out of range");
    const VectorC r = suffix_row(ctx, v, layer);
    const VectorC hx = ctx.channels->h[static_cast<std::size_t>(layer - 1)] *
                       prefix_vector(ctx, w, layer);
    const int n = ctx.elements();
    VectorC b(n);
    for (int i = 0; i < n; ++i) {
        const bool on = ctx.topology->active(layer - 1, i);
        b(i) = on ? ctx.alpha * r(i) * hx(i) : Complex{0.0, 0.0};
    }
    return b;
}

VectorC optimal_phases(const CascadeContext& ctx, const VectorC& w, const VectorC& v, int layer) {
    const VectorC b = phase_coefficients(ctx, w, v, layer);
    VectorC theta(b.size());
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        const double mag = std::abs(b(i));
        theta(i) = mag > 0.0 ? std::conj(b(i)) / mag : Complex{1.0, 0.0};
    }
    return theta;
}

VectorC optimal_precoder(const CascadeContext& ctx, const VectorC& v, double p_max) {
    if (!(p_max > 0.0))
        throw std::domain_error("optimal_precoder: P_max must be > 0");
    // a = T_(L,1)^H g v, computed as the conjugate of the row chain
    // (v^H g^H) T_(L,1) to stay matrix-free.
    VectorC r = suffix_row(ctx, v, 1);          // v^H g^H T_(L,2) as a column
    r = row_apply(ctx, 1, r);                   // append layer 1: v^H g^H T_(L,1)
    const VectorC a = r.conjugate();
    const double a_norm = a.norm();
    if (a_norm <= 0.0)
        throw DegenerateChannelError("optimal_precoder: effective channel is zero");
    return std::sqrt(p_max) * a / a_norm;
}

BeamformingSolution ao_solve(const ChannelSet& channels, const ActivationTopology& topology,
                             double alpha, double noise_power, double p_max,
                             const AoParams& params) {
    if (!(params.tol > 0.0))
        throw std::invalid_argument("ao_solve: tol must be > 0");
    if (params.max_sweeps < 1)
        throw std::invalid_argument("ao_solve: max_sweeps must be >= 1");
    if (!(noise_power > 0.0))
        throw std::invalid_argument("ao_solve: noise power must be > 0");
    if (!(p_max > 0.0))
        throw std::invalid_argument("ao_solve: P_max must be > 0");
    topology.validate();

    CascadeContext ctx = make_context(channels, topology, alpha);
    const int k = channels.user_antennas();
    const int m = channels.bs_antennas();

    BeamformingSolution sol;
    sol.w = VectorC::Zero(k);
    sol.w(0) = std::sqrt(p_max);
    sol.v = VectorC::Zero(m);
    sol.v(0) = 1.0;

    // A cascade that is identically zero (e.g. a fully inactive layer) has no
    // meaningful beamformers; report a flagged zero-SNR solution.
    if (effective_receive_vector(ctx, sol.w).norm() <= 0.0) {
        sol.theta = ctx.theta;
        sol.degenerate = true;
        sol.converged = true;
        return sol;
    }

    auto record = [&] {
        if (params.record_trace)
            sol.snr_trace.push_back(snr(ctx, sol.w, sol.v, noise_power));
    };

    double snr_prev = 0.0;
    double snr_now = 0.0;
    for (int sweep = 1; sweep <= params.max_sweeps; ++sweep) {
        sol.sweeps = sweep;
        sol.v = optimal_combiner(ctx, sol.w);
        record();
        for (int l = 1; l <= ctx.layer_count(); ++l) {
            ctx.theta[static_cast<std::size_t>(l - 1)] = optimal_phases(ctx, sol.w, sol.v, l);
            record();
        }
        sol.w = optimal_precoder(ctx, sol.v, p_max);
        snr_now = snr(ctx, sol.w, sol.v, noise_power);
        if (params.record_trace)
            sol.snr_trace.push_back(snr_now);

        const double gain = snr_now - snr_prev;
        if (sweep > 1 && gain < params.tol * std::max(snr_prev, DBL_MIN)) {
            sol.converged = true;
            break;
        }
        snr_prev = snr_now;
    }

    sol.theta = ctx.theta;
    sol.snr = snr_now;
    sol.rate = achievable_rate(sol.snr);
    return sol;
}

VectorC principal_eigenvector_power(const MatrixC& matrix, double tol, int max_iters) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("principal_eigenvector_power: square matrix required");
    // Deterministic start inside the range space: the largest column.
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
        const double n2 = matrix.col(j).norm();
        if (n2 > best) {
            best = n2;
            pivot = j;
        }
    }
    if (best <= 0.0)
        throw DegenerateChannelError("principal_eigenvector_power: zero matrix");
    VectorC x = matrix.col(pivot) / best;
    double lambda_prev = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        VectorC y = matrix * x;
        const double y_norm = y.norm();
        if (y_norm <= 0.0)
            throw DegenerateChannelError("principal_eigenvector_power: iterate left range space");
        x = y / y_norm;
        const double lambda = std::real((x.adjoint() * matrix * x)(0));
        if (it > 0 && std::abs(lambda - lambda_prev) <= tol * std::abs(lambda))
            break;
        lambda_prev = lambda;
    }
    return canonicalize_phase(x);
}

} // namespace risfold
