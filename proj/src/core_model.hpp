#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace stowsim {

// All geometry is integer millimetres along the bin width axis. Items are
// upright slabs; height/depth enter only as feasibility constraints.

enum class Fragility { standard, book, lightweight_box, bagged_soft };

const char* to_string(Fragility f);
Fragility fragility_from_string(const std::string& s);

struct Item {
    uint64_t id = 0;
    int width_mm = 0;   // as grasped, long axis horizontal
    int height_mm = 0;
    int depth_mm = 0;
    int mass_g = 0;
    double compressibility = 0.0;  // max relative width reduction, in [0, 1)
    bool deformable = false;
    Fragility fragility = Fragility::standard;
    int manifest_dims_error_mm = 0;  // manifest minus true width, signed

    // Width the item cannot be compressed below.
    int min_width_mm() const;
    void validate() const;
};

enum class Orientation { upright, stacked };

// One item resting in a bin. `stacked` means the item lies rotated 90 degrees
// in the frontal plane, so its footprint along the width axis is its height.
struct Placement {
    Item item;
    int x_mm = 0;             // left edge
    int current_width_mm = 0; // footprint now; <= rigid, >= min
    Orientation orient = Orientation::upright;
    int depth_offset_mm = 0;  // distance of the item's front face from the bin front

    int rigid_width_mm() const {
        return orient == Orientation::upright ? item.width_mm : item.height_mm;
    }
    int min_width_mm() const;
    int frontal_height_mm() const {
        return orient == Orientation::upright ? item.height_mm : item.width_mm;
    }
    int right_mm() const { return x_mm + current_width_mm; }
};

struct BandSegment {
    int y_mm = 0;
    bool pinned = false;
};

struct BinState {
    uint64_t bin_id = 0;
    int width_mm = 0;
    int height_mm = 0;
    int depth_mm = 0;
    int lip_height_mm = 0;
    int row = 0;  // vertical position on the pod face, 0 = bottom
    std::vector<Placement> placements;  // sorted by x, non-overlapping
    std::vector<BandSegment> band_segments;

    void validate() const;
    // Sum of current footprints.
    int occupied_width_mm() const;
    double fill_fraction() const;
    // Width of the largest contiguous gap, and its left edge.
    struct Gap { int x_mm = 0; int width_mm = 0; };
    Gap widest_gap() const;
    // Gap containing (or adjacent to) position x, width of that free interval.
    Gap gap_at(int x_mm) const;
};

// Free width if every item were rigid at nominal footprint (assume_rigid) or
// compressed to its limit. Clamped at zero.
int true_free_width(const BinState& bin, bool assume_rigid);

// Insert `item` at left edge `x`, displacing overlapped neighbours toward
// their nearer wall and compressing each side only as much as required.
// Throws OverfullBin when the compression allowance cannot absorb the insert.
BinState apply_placement(const BinState& bin, const Item& item, int x_mm,
                         Orientation orient = Orientation::upright);

// Squeeze `placements` (kept in order, current widths) into `span_mm`,
// reducing every item by the same fraction of its compressible slack.
// Integer residue goes to the leftmost items. Throws OverfullBin if even the
// fully compressed widths exceed the span.
void compress_to_span(std::vector<Placement>& placements, int span_mm);

struct Pod {
    uint64_t pod_id = 0;
    std::vector<BinState> bins;  // 1..52
    double arrival_time_s = 0.0;

    void validate() const;
};

inline constexpr int kBufferSlots = 32;

// Fixed 32-slot buffer wall plus the recycle queue feeding it.
class BufferWall {
public:
    BufferWall() : slots_(kBufferSlots) {}

    bool has_free_slot() const;
    size_t occupied() const;
    // Throws InvariantViolation when full.
    void put(const Item& item);
    // Removes the item with this id; throws InvariantViolation if absent.
    Item take(uint64_t item_id);
    const std::optional<Item>& slot(size_t i) const { return slots_.at(i); }
    std::vector<const Item*> items() const;

    void recycle(const Item& item) { recycle_queue_.push_back(item); }
    size_t recycle_pending() const { return recycle_queue_.size(); }
    // Moves recycled items into free slots, oldest first. Returns how many
    // re-entered the wall.
    int absorb_recycled();

private:
    std::vector<std::optional<Item>> slots_;
    std::deque<Item> recycle_queue_;
};

enum class OutcomeClass { success, unproductive, amnesty, damage, other };
inline constexpr int kOutcomeCount = 5;

const char* to_string(OutcomeClass c);
OutcomeClass outcome_from_string(const std::string& s);

enum class BehaviorKind { direct_insert, stack, direct_sweep, corner_sweep, item_push_sweep };
inline constexpr int kBehaviorCount = 5;

const char* to_string(BehaviorKind k);
BehaviorKind behavior_from_string(const std::string& s);

inline bool is_sweep_family(BehaviorKind k) {
    return k == BehaviorKind::direct_sweep || k == BehaviorKind::corner_sweep ||
           k == BehaviorKind::item_push_sweep;
}

enum class EstimateSource { cat1, cat2a, cat2b };
const char* to_string(EstimateSource s);
EstimateSource estimate_source_from_string(const std::string& s);

// One stow attempt as logged. kinesthetic_space is present iff a sweep-family
// behavior ran its plank phase.
struct OutcomeRecord {
    uint64_t attempt_id = 0;
    uint64_t pod_id = 0;
    uint64_t bin_id = 0;
    uint64_t item_id = 0;
    BehaviorKind behavior = BehaviorKind::direct_insert;
    OutcomeClass outcome = OutcomeClass::success;
    double cycle_time_s = 0.0;
    double predicted_space_mm = 0.0;
    EstimateSource estimate_source = EstimateSource::cat2a;
    std::optional<double> kinesthetic_space_mm;
    double margin_est_mm = 0.0;
    int item_width_mm = 0;
    int item_height_mm = 0;
    int item_depth_mm = 0;
    int item_mass_g = 0;
    Fragility fragility = Fragility::standard;
    double bin_fill_fraction = 0.0;
    bool exploratory = false;
    bool band_overlap = false;
    double timestamp_s = 0.0;

    void validate() const;
};

// Rolling (T, N_s) pair driving the expected-rate objective. The window spans
// the most recent `window` attempts; totals for reporting are kept separately
// by the harness.
class WorkcellClock {
public:
    explicit WorkcellClock(size_t window = 200) : window_(window) {}

    void record_attempt(double cycle_time_s, bool success);
    double T() const { return t_sum_; }
    long long N_s() const { return n_success_; }
    size_t attempts_in_window() const { return events_.size(); }
    // Success fraction over the window; fallback when empty.
    double success_rate(double fallback) const;

private:
    size_t window_;
    std::deque<std::pair<double, bool>> events_;
    double t_sum_ = 0.0;
    long long n_success_ = 0;
};

// Item generation ------------------------------------------------------------

struct ItemClassConfig {
    std::string name;
    double weight = 1.0;
    Fragility fragility = Fragility::standard;
    int width_mm_min = 50, width_mm_max = 200;
    int height_mm_min = 50, height_mm_max = 250;
    int depth_mm_min = 50, depth_mm_max = 300;
    int mass_g_min = 100, mass_g_max = 2000;
    double compress_min = 0.0, compress_max = 0.0;
    double deformable_prob = 0.0;
};

struct ItemDistribution {
    std::vector<ItemClassConfig> classes;
    double manifest_error_std_mm = 0.0;

    void validate() const;
};

// Draws one item; deterministic for a fixed rng state. `next_id` is taken and
// incremented by the caller.
Item sample_item(const ItemDistribution& dist, Rng& rng, uint64_t id);

}  // namespace stowsim
