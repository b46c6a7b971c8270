#include "qss/harness/experiment.hpp"

#include <chrono>
#include <cmath>

#include "qss/errors.hpp"

namespace qss::harness {

void ExperimentSpec::validate() const {
    protocol.validate();
    if (trials < 1) throw ValidationError("experiment: need at least one trial");
    if (attacked_copies < 0 || attacked_copies > protocol.copies)
        throw ValidationError("experiment: attacked copies must lie in [0, copies]");
    if (coalition) {
        adversary::CoalitionConfig cfg = *coalition;
        cfg.attacked_count = attacked_copies;
        cfg.validate(protocol.copies);
    }
}

Interval wilson_interval(std::int64_t successes, std::int64_t total) {
    if (total <= 0) return Interval{0.0, 1.0};
    const double z = 1.959963984540054;  // 97.5th normal percentile
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

MetricsReport run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();

    MetricsReport r;
    r.variant = spec.protocol.variant;
    r.strategy = spec.coalition ? spec.coalition->strategy.kind
                                : adversary::StrategyKind::HonestNull;
    r.copies = spec.protocol.copies;
    r.check_rate = spec.protocol.check_rate;
    r.attacked = spec.attacked_copies;
    r.trials = spec.trials;
    r.seed = spec.master_seed;

    std::int64_t detected = 0, infeasible = 0, failure = 0;
    std::int64_t guess_total = 0, guess_correct = 0;
    std::int64_t recon_total = 0, recon_correct = 0;
    std::int64_t attacked_covered = 0, attacked_failed = 0;

    bool failed = false;
    std::string error;

#pragma omp parallel for schedule(dynamic, 16) \
    reduction(+ : detected, infeasible, failure, guess_total, guess_correct, \
                  recon_total, recon_correct, attacked_covered, attacked_failed)
    for (int t = 0; t < spec.trials; ++t) {
        bool already_failed;
#pragma omp atomic read
        already_failed = failed;
        if (already_failed) continue;
        try {
            protocol::ProtocolConfig cfg = spec.protocol;
            cfg.seed = Rng::derive(spec.master_seed, static_cast<std::uint64_t>(t));
            cfg.record_transcript = false;

            std::optional<adversary::CoalitionConfig> coalition = spec.coalition;
            if (coalition) coalition->attacked_count = spec.attacked_copies;

            const protocol::ProtocolOutcome out = protocol::run_protocol(cfg, coalition);

            if (out.detected) ++detected;
            if (out.strategy_infeasible) ++infeasible;
            if (out.protocol_failure) ++failure;
            if (!out.detected && out.secret_copy) {
                ++recon_total;
                if (out.reconstructed_bit && out.alice_bit &&
                    *out.reconstructed_bit == *out.alice_bit)
                    ++recon_correct;
                if (out.cheater_guess) {
                    ++guess_total;
                    if (*out.cheater_guess == *out.alice_bit) ++guess_correct;
                }
            }
            for (const protocol::CopyRecord& rec : out.copies) {
                if (rec.attacked && rec.fully_covered) {
                    ++attacked_covered;
                    if (!rec.parity_ok) ++attacked_failed;
                }
            }
        } catch (const std::exception& e) {
#pragma omp critical
            {
                if (!failed) {
                    error = std::string(e.what()) + " [strategy=" +
                            adversary::to_string(r.strategy) +
                            ", qubit_cap=" + std::to_string(spec.protocol.qubit_cap) + "]";
                }
#pragma omp atomic write
                failed = true;
            }
        }
    }
    if (failed) throw CapacityError("experiment aborted: " + error);

    r.detected_count = detected;
    r.infeasible_count = infeasible;
    r.failure_count = failure;
    r.guess_total = guess_total;
    r.guess_correct = guess_correct;
    r.recon_total = recon_total;
    r.recon_correct = recon_correct;
    r.attacked_covered = attacked_covered;
    r.attacked_failed = attacked_failed;

    const double n = static_cast<double>(spec.trials);
    r.detection_rate = static_cast<double>(detected) / n;
    r.detection_ci = wilson_interval(detected, spec.trials);
    r.escape_rate = 1.0 - r.detection_rate;
    r.cheater_accuracy =
        guess_total > 0 ? static_cast<double>(guess_correct) / static_cast<double>(guess_total)
                        : 0.0;
    r.accuracy_ci = wilson_interval(guess_correct, guess_total);
    r.reconstruction_rate =
        recon_total > 0 ? static_cast<double>(recon_correct) / static_cast<double>(recon_total)
                        : 0.0;
    r.epsilon_hat = attacked_covered > 0
                        ? static_cast<double>(attacked_failed) /
                              static_cast<double>(attacked_covered)
                        : 0.0;

    r.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<MetricsReport> sweep(const ExperimentSpec& base,
                                 const std::vector<int>& attacked_values) {
    std::vector<MetricsReport> reports;
    reports.reserve(attacked_values.size());
    for (std::size_t i = 0; i < attacked_values.size(); ++i) {
        ExperimentSpec point = base;
        point.attacked_copies = attacked_values[i];
        point.master_seed = Rng::derive(base.master_seed, 1000 + i);
        reports.push_back(run_experiment(point));
    }
    return reports;
}

double fitted_escape_slope(const std::vector<MetricsReport>& reports) {
    std::vector<std::pair<double, double>> pts;
    for (const MetricsReport& r : reports) {
        if (r.trials - r.detected_count <= 0) continue;
        pts.push_back({static_cast<double>(r.attacked), std::log(r.escape_rate)});
    }
    if (pts.size() < 2) throw ValidationError("escape-slope fit needs two usable points");
    double mx = 0.0, my = 0.0;
    for (auto [x, y] : pts) { mx += x; my += y; }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double num = 0.0, den = 0.0;
    for (auto [x, y] : pts) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    return num / den;
}

} // namespace qss::harness
