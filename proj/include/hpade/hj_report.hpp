#pragma once

#include <optional>
#include <vector>

namespace hpade {

/// Result of the nonvanishing test for a denominator on a sample grid.
struct GridCertificate {
    long grid = 0;
    double min_abs = 0.0;
    double max_abs = 0.0;
    double threshold = 0.0;
    bool nonvanishing = false;
};

struct HJComponent {
    /// f_j - P_j/Q has the required high-order zero.
    bool holds = false;
    /// Lowest order inside the checked window where the expansion disagrees.
    std::optional<long> first_bad_order;
    /// Lowest order anywhere in the known range where it disagrees (diagnostic).
    std::optional<long> mismatch_order;
    bool expandable = false;
    /// Largest coefficient deviation inside the window; 0 for exact checks.
    double max_deviation = 0.0;
};

struct HJReport {
    std::vector<HJComponent> components;
    /// Highest order compared for the verdict (n + m).
    long window = 0;
    bool exact = true;
    std::optional<GridCertificate> certificate;
    long samples = 0;

    bool all_hold() const {
        for (const auto& c : components) {
            if (!c.holds) return false;
        }
        return true;
    }
};

}  // namespace hpade
