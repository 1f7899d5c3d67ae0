#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perception.hpp"

namespace stowsim {

// Free-space estimate for one bin. `final` prefers the kinesthetic value and
// otherwise the larger of the two perception-driven categories.
struct SpaceEstimate {
    double directly_usable_mm = 0.0;  // widest fully-free column span, front half
    double rigid_sweep_mm = 0.0;      // bin width minus summed perceived box widths
    std::optional<double> kinesthetic_mm;
    double final_mm = 0.0;
    EstimateSource source = EstimateSource::cat1;
    bool clamped = false;

    void finalize();
};

// Widest contiguous free rectangle spanning the full insertion height. Only
// instances whose front face lies in the front half of the bin depth count
// as obstacles.
int estimate_cat1(const MultiMask& mask);

// Bin width minus the sum of perceived bounding-box widths, clamped at 0.
int estimate_cat2a(const MultiMask& mask);

// Space implied by a completed sweep: measured created space minus the width
// of the item that was stowed into it (0 if none). Clamps at zero.
SpaceEstimate update_kinesthetic(const SpaceEstimate& prev, double created_space_mm,
                                 double stowed_item_width_mm);

enum class AffordanceKind { plank_insert, item_insert };

// Scalar cost grid aligned to a multi-mask. Obstacles carry cost 1.0; free
// cells carry (S - d) / S where d is the Chebyshev clearance, so cost falls
// with distance from the nearest obstacle. Values are multiples of 1/S which
// keeps footprint sums exact in double arithmetic.
struct CostMap {
    int width_cells = 0;
    int height_cells = 0;
    int cell_size_mm = 10;
    std::vector<int> clearance;  // Chebyshev distance to nearest obstacle, 0 = obstacle
    std::string provenance;

    static constexpr int kScale = 128;
    size_t idx(int x, int y) const { return static_cast<size_t>(y) * width_cells + x; }
    bool obstacle(int x, int y) const { return clearance[idx(x, y)] == 0; }
    double cost(int x, int y) const {
        int d = std::min(clearance[idx(x, y)], kScale - 1);
        return static_cast<double>(kScale - d) / kScale;
    }
};

struct Affordance {
    AffordanceKind kind = AffordanceKind::item_insert;
    int x_mm = 0;  // pose: left edge of the kernel footprint
    int y_mm = 0;  // bottom edge
    int rotation_deg = 0;  // 0 or 90
    int kernel_width_mm = 0;
    int kernel_height_mm = 0;
    int margin_mm = 0;  // clearance from the footprint to the nearest obstacle
    double cost = 0.0;
};

// Builds the cost map for a task. Item cells and out-of-grid space are
// obstacles; the distance transform is chessboard.
CostMap build_costmap(const MultiMask& mask, AffordanceKind task);

// Minimum-cost placement of a kernel over the cost map. Poses covering any
// obstacle cell are invalid; ties break on lowest x, then lowest y, then 0
// degrees. Returns nullopt when no valid pose exists.
std::optional<Affordance> generate_affordance(const CostMap& map, int kernel_width_mm,
                                              int kernel_height_mm, bool allow_rotation,
                                              AffordanceKind kind);

// Sweep-variant plank poses that are not plain convolutions: corner sweeps
// ride above a wall-adjacent item, item-push sweeps start at it. Returns
// nullopt when the precondition (a wall-adjacent perceived item) fails.
std::optional<Affordance> plank_affordance(const MultiMask& mask, const CostMap& map,
                                           BehaviorKind kind, int plank_thickness_mm,
                                           int wall_adjacency_tol_mm);

// Text rendering of a cost map with an optional pose footprint, for the
// dump-masks subcommand.
std::string dump_costmap(const CostMap& map, const std::optional<Affordance>& pose);

}  // namespace stowsim
