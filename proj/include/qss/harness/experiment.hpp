// Seeded Monte-Carlo experiment runner. Trials are independent protocol runs
// with per-trial seeds derived from the master seed; aggregation uses plain
// integer counters, so parallel and serial execution produce identical
// reports.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qss/adversary/coalition.hpp"
#include "qss/protocol/engine.hpp"

namespace qss::harness {

struct ExperimentSpec {
    protocol::ProtocolConfig protocol;          // per-trial seed is overwritten
    std::optional<adversary::CoalitionConfig> coalition;
    int attacked_copies = 0;                     // m, copied into the coalition
    int trials = 10000;
    std::uint64_t master_seed = 0;

    void validate() const;
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

// 95% Wilson score interval.
Interval wilson_interval(std::int64_t successes, std::int64_t total);

struct MetricsReport {
    // experiment identity
    protocol::Variant variant = protocol::Variant::Secure;
    adversary::StrategyKind strategy = adversary::StrategyKind::HonestNull;
    int copies = 0;
    double check_rate = 0.0;
    int attacked = 0;
    int trials = 0;
    std::uint64_t seed = 0;

    // aggregate counters (order-independent, exactly reproducible)
    std::int64_t detected_count = 0;
    std::int64_t infeasible_count = 0;
    std::int64_t failure_count = 0;      // runs without an eligible secret copy
    std::int64_t guess_total = 0;        // escaped runs that reached step (4)
    std::int64_t guess_correct = 0;
    std::int64_t recon_total = 0;
    std::int64_t recon_correct = 0;
    std::int64_t attacked_covered = 0;   // attacked and fully checked copies
    std::int64_t attacked_failed = 0;    // of those, parity failures

    // derived rates
    double detection_rate = 0.0;
    Interval detection_ci;
    double escape_rate = 1.0;
    double cheater_accuracy = 0.0;       // conditioned on escape; 0 when no data
    Interval accuracy_ci;
    double reconstruction_rate = 0.0;    // conditioned on reaching step (4)
    double epsilon_hat = 0.0;            // attacked_failed / attacked_covered

    double runtime_seconds = 0.0;        // informational; never serialized
};

MetricsReport run_experiment(const ExperimentSpec& spec);

// One report per m value; point i uses master seed derive(master, 1000 + i).
std::vector<MetricsReport> sweep(const ExperimentSpec& base,
                                 const std::vector<int>& attacked_values);

// Least-squares slope of log(escape_rate) against m over a sweep's reports;
// points with zero escapes are skipped.
double fitted_escape_slope(const std::vector<MetricsReport>& reports);

} // namespace qss::harness
