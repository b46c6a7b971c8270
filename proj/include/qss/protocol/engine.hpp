// Executable state machines for the two protocol variants.
#pragma once

#include <optional>

#include "qss/adversary/coalition.hpp"
#include "qss/protocol/types.hpp"

namespace qss::protocol {

// Step (3) selection: every position of every receiver is requested
// independently with probability check_rate. The request depends only on
// positions, never on the ordering secret.
CheckRequest select_check_sets(int copies, double check_rate, Rng& rng);

struct CheckResult {
    bool detected = false;
    std::vector<int> failing_copies;
    std::vector<int> verified_copies;  // fully covered copies, pass or fail
    bool missing_announcement = false;
};

// Evaluates r_A ^ r_B ^ r_C ^ r_D over every copy whose three receiver
// positions are all requested. A requested position without an announcement
// is a protocol violation and counts as detection.
CheckResult verify_checks(const CheckRequest& request,
                          const std::vector<ResultAnnouncement>& announcements,
                          const OrderingSecret& ordering,
                          const std::vector<int>& alice_bits);

ProtocolOutcome run_original_protocol(
    const ProtocolConfig& config,
    const std::optional<adversary::CoalitionConfig>& coalition = std::nullopt);

ProtocolOutcome run_secure_protocol(
    const ProtocolConfig& config,
    const std::optional<adversary::CoalitionConfig>& coalition = std::nullopt);

// Dispatch on config.variant.
ProtocolOutcome run_protocol(
    const ProtocolConfig& config,
    const std::optional<adversary::CoalitionConfig>& coalition = std::nullopt);

} // namespace qss::protocol
