#pragma once

#include <vector>

#include "risfold/channel.hpp"
#include "risfold/topology.hpp"

namespace risfold {

/// Everything a cascade product depends on besides the beamformers:
/// channels, element activation, per-layer penetration loss, and the current
/// per-layer phase vectors.
struct CascadeContext {
    const ChannelSet* channels{nullptr};
    const ActivationTopology* topology{nullptr};
    double alpha{1.0};
    std::vector<VectorC> theta; // L unit-modulus vectors of length N

    int layer_count() const { return channels->layer_count(); }
    int elements() const { return channels->elements_per_layer(); }

    void validate() const;
};

/// A context with all-ones phases.
CascadeContext make_context(const ChannelSet& channels, const ActivationTopology& topology,
                            double alpha);

struct AoParams {
    double tol{1e-8};     // relative SNR improvement ending a sweep loop
    int max_sweeps{200};
    bool record_trace{false}; // collect SNR after every sub-step
};

struct BeamformingSolution {
    VectorC w;                  // precoder, length K, ||w||^2 == P_max
    std::vector<VectorC> theta; // L unit-modulus phase vectors
    VectorC v;                  // combiner, unit norm
    double snr{0.0};
    double rate{0.0}; // bits/s/Hz
    int sweeps{0};
    bool converged{false};
    bool degenerate{false};          // all-zero cascade, zero-SNR solution
    std::vector<double> snr_trace;   // per sub-step, when requested
};

/// Cascaded transmission matrix T_(p,q): the descending product of
/// alpha Z^(l) Theta^(l) h^(l) for l = p..q (layer p outermost), with
/// identity edge cases T_(L,L+1) = I_N and T_(0,1) = I_K.
/// Valid index pairs: 1 <= q <= p <= L, (L, L+1), (0, 1).
MatrixC cascade(const CascadeContext& ctx, int p, int q);

/// Decoding SNR |v^H g^H T_(L,1) w|^2 / (||v||^2 sigma^2).
double snr(const CascadeContext& ctx, const VectorC& w, const VectorC& v, double noise_power);

/// log2(1 + snr).
double achievable_rate(double snr_value);

/// Effective receive vector a = g^H T_(L,1) w.
VectorC effective_receive_vector(const CascadeContext& ctx, const VectorC& w);

/// Unit-norm combiner maximizing the SNR for fixed w and phases: the
/// principal eigenvector of the rank-1 matrix a a^H, i.e. a / ||a||, phase-
/// canonicalized so its largest-magnitude entry is real positive.
/// Throws DegenerateChannelError when a == 0.
VectorC optimal_combiner(const CascadeContext& ctx, const VectorC& w);

/// Per-element coefficients of the layer-l phase subproblem: entry n is the
/// factor multiplying theta_n^(l) in the numerator scalar (zero for inactive
/// elements).
VectorC phase_coefficients(const CascadeContext& ctx, const VectorC& w, const VectorC& v,
                           int layer);

/// Unit-modulus phase vector aligning every active element's contribution to
/// the real axis. Inactive or zero-coefficient entries are pinned to 1.
/// `layer` is 1-based.
VectorC optimal_phases(const CascadeContext& ctx, const VectorC& w, const VectorC& v, int layer);

/// Power-constrained precoder collinear with T_(L,1)^H g v, scaled so
/// ||w||^2 = P_max. Throws DegenerateChannelError when the direction is zero.
VectorC optimal_precoder(const CascadeContext& ctx, const VectorC& v, double p_max);

/// Alternating optimization: [combiner -> phases for l = 1..L -> precoder]
/// sweeps from a deterministic start (all-ones phases, first-basis precoder)
/// until the relative SNR improvement drops below tol. A cascade that is
/// identically zero yields a flagged zero-SNR solution instead of an error.
BeamformingSolution ao_solve(const ChannelSet& channels, const ActivationTopology& topology,
                             double alpha, double noise_power, double p_max,
                             const AoParams& params = {});

/// Generic dominant-eigenvector fallback (power iteration) used to verify
/// the closed-form combiner. Deterministic start, phase-canonicalized output.
VectorC principal_eigenvector_power(const MatrixC& matrix, double tol = 1e-12,
                                    int max_iters = 10000);

/// Scales v by a unit scalar so that its largest-magnitude entry is real
/// positive (first such entry wins ties).
VectorC canonicalize_phase(const VectorC& v);

} // namespace risfold
