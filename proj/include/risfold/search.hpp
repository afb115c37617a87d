#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <utility>
#include <vector>

#include "risfold/geometry.hpp"
#include "risfold/topology.hpp"

namespace risfold {

/// Bounded FIFO of solution fingerprints with exact membership.
template <typename Fingerprint>
class TabuList {
  public:
    explicit TabuList(int capacity) : capacity_(capacity) {}

    bool contains(const Fingerprint& f) const {
        for (const Fingerprint& e : entries_)
            if (e == f)
                return true;
        return false;
    }

    void push(const Fingerprint& f) {
        if (capacity_ <= 0 || contains(f))
            return;
        entries_.push_back(f);
        if (static_cast<int>(entries_.size()) > capacity_)
            entries_.pop_front();
    }

    int size() const { return static_cast<int>(entries_.size()); }

  private:
    int capacity_;
    std::deque<Fingerprint> entries_;
};

struct SearchTraceRow {
    int iteration{0};
    double best_candidate_rate{0.0};
    double best_so_far_rate{0.0};
    int evaluated{0};
    int tabu_hits{0};
    bool aspiration_fired{false};
};

using SearchTrace = std::vector<SearchTraceRow>;

struct ElementSearchParams {
    int swap_distance{1}; // d
    int neighbors{20};    // S
    int tabu_capacity{10};
    int max_iters{50};
    int stall_iters{15}; // stop after this many iterations without improvement; 0 disables
    int threads{1};
};

struct FoldSearchParams {
    int tabu_capacity{10};
    int max_iters{9};
    int stall_iters{15};
    int threads{1};
};

/// Uniformly random feasible topology with exactly `budget` active elements.
ActivationTopology random_topology(int layers, int per_layer, int budget, std::uint64_t seed);

/// Up to `count` distinct candidates obtained by swapping `swap_distance`
/// active elements with as many inactive ones (Hamming distance exactly
/// 2*swap_distance from z). Retries on duplicates are bounded, so fewer than
/// `count` candidates come back when the distinct neighborhood is smaller.
std::vector<ActivationTopology> swap_neighbors(const ActivationTopology& z, int swap_distance,
                                               int count, std::uint64_t seed);

/// Every configuration differing from c in exactly one coordinate; the
/// changed coordinate takes each other member of the angle set in order.
std::vector<FoldConfiguration> fold_neighbors(const FoldConfiguration& c, const AngleSet& set);

/// Stage-1 tabu search over element activation. `evaluate` must be a pure,
/// thread-safe function returning the achievable rate of a topology. Returns
/// the best topology seen (over every evaluated candidate, the initial
/// solution included) and the per-iteration trace.
std::pair<ActivationTopology, SearchTrace>
tabu_search_elements(const std::function<double(const ActivationTopology&)>& evaluate,
                     const ActivationTopology& init, const ElementSearchParams& params,
                     std::uint64_t seed);

/// Stage-2 tabu search over the fold configuration, same contract. The full
/// deterministic neighborhood (2(m-1) candidates) is used each iteration.
std::pair<FoldConfiguration, SearchTrace>
tabu_search_folds(const std::function<double(const FoldConfiguration&)>& evaluate,
                  const FoldConfiguration& init, const AngleSet& set,
                  const FoldSearchParams& params);

} // namespace risfold
