#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evt/cases.hpp"
#include "evt/kernels/backend.hpp"
#include "evt/sequences.hpp"

namespace evt {

struct SimConfig {
    Case c = Case::normal;
    std::int64_t n = 10000;    // pairs per repetition
    std::int64_t reps = 10000; // Monte Carlo repetitions
    std::uint64_t seed = 1;
    int workers = 0;           // 0: resolve via EVT_WORKERS, then hardware
    kernels::Backend backend = kernels::Backend::automatic;
};

// One maximum per repetition. values[r] is a pure function of
// (c, n, seed, r): workers and backend never change the output.
struct SampleSet {
    SimConfig config;
    std::vector<double> values;
    bool normalized = false;
};

struct QuantilePair {
    double level;
    double empirical;
    double gumbel;
};

struct HistogramBin {
    double lo;  // -inf for the left overflow bin
    double hi;  // +inf for the right overflow bin
    std::int64_t count;
};

struct GofReport {
    double ks;
    std::vector<QuantilePair> quantile_pairs;
    std::vector<HistogramBin> histogram;
};

// Sequential view of the (seed, rep) substream; one normal pair per call.
class PairStream {
  public:
    PairStream(std::uint64_t seed, std::uint64_t rep) : seed_(seed), rep_(rep) {}
    std::pair<double, double> next();
    std::uint64_t position() const { return block_; }

  private:
    std::uint64_t seed_;
    std::uint64_t rep_;
    std::uint64_t block_ = 0;
};

// Consumes n pairs and returns the case maximum.
double sample_statistic(Case c, std::int64_t n, PairStream& stream);

// Runs config.reps repetitions, distributing them over the workers.
SampleSet run(const SimConfig& config);

// v -> (v - b)/a. Throws std::logic_error if already normalized, and
// std::invalid_argument when seq does not belong to (case, n) unless
// allow_mismatch is set (the wrong-sequences control experiment).
SampleSet normalize(const SampleSet& s, const NormSeq& seq, bool allow_mismatch = false);

// One-sample Kolmogorov-Smirnov distance against the standard Gumbel law.
// Requires a normalized, non-empty sample; throws std::invalid_argument.
double ks_statistic(const SampleSet& s);

// Histogram over [lo, hi) in bins of the given width, plus overflow bins at
// both ends. Counts always sum to the number of values.
std::vector<HistogramBin> histogram(const SampleSet& s, double bin_width, double lo,
                                    double hi);

inline constexpr double gof_levels[] = {0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99};

// KS + quantile pairs + the default histogram (width 0.25 on [-4, 10]).
GofReport goodness_of_fit(const SampleSet& normalized);

int default_workers();  // EVT_WORKERS if set, hardware concurrency otherwise

} // namespace evt
