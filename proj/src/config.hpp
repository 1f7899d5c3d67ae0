#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core_model.hpp"

namespace stowsim {

// Behavior families index rows in the outcome model and risk tables.
enum class Family { insert = 0, sweep = 1 };
inline constexpr int kFamilyCount = 2;

inline Family family_of(BehaviorKind k) {
    return is_sweep_family(k) ? Family::sweep : Family::insert;
}
const char* to_string(Family f);

struct BinConfig {
    int width_mm = 500;
    int height_mm = 300;
    int depth_mm = 400;
    int lip_height_mm = 25;
    int band_count = 2;
    int band_width_mm = 50;
    double band_pinned_prob = 0.3;
};

struct FillMixtureEntry {
    double fill_fraction = 0.0;
    double weight = 1.0;
};

struct PodConfig {
    int rows = 10;
    int cols = 4;
    std::vector<FillMixtureEntry> fill_mixture;
    double deep_item_prob = 0.0;  // chance a prefilled item sits behind the depth midpoint
};

struct PerceptionNoise {
    double item_width_bias_mm = 0.0;
    double item_width_std_mm = 0.0;
    double occlusion_below_lip_prob = 0.0;
    double segmentation_merge_prob = 0.0;
    int occlusion_drop_height_mm = 50;  // items at most this tall vanish when occluded

    void validate() const;
};

struct TimingConstants {
    double kickout_s = 6.0;
    double no_stow_turnaway_s = 12.0;
    double buffer_cycle_s = 8.0;
    double reorientation_success = 0.98;
    double band_open_s = 3.0;

    void validate() const;
};

// One probability row over the five outcome classes, indexed by OutcomeClass.
using OutcomeRow = std::array<double, kOutcomeCount>;

// Margin buckets: 0 = negative margin (gated), then one bucket per edge pair.
// Default edges {0, 10, 30} give buckets [0,10), [10,30), [30,inf).
struct OutcomeModelConfig {
    std::array<OutcomeRow, kFamilyCount> family_rows;  // marginal target rates
    std::vector<int> margin_bucket_edges_mm = {0, 10, 30};
    // Per family, success multipliers and calibration draw mix for the
    // non-negative buckets. The loader rescales multipliers so the
    // mix-weighted mean is exactly 1, keeping family marginals intact.
    std::array<std::vector<double>, kFamilyCount> margin_success_multipliers;
    std::array<std::vector<double>, kFamilyCount> bucket_mix;
    std::array<double, 4> fragility_success_multipliers = {1.0, 1.0, 1.0, 1.0};
    double family_mix_insert = 0.79802;  // calibration draw share of insert-family attempts
    double band_overlap_rate = 0.048;
    double band_overlap_success = 0.60;
    double band_amnesty_share = 0.19;
    // family x {success, unproductive, defect} mean cycle seconds
    std::array<std::array<double, 3>, kFamilyCount> cycle_means_s;
    double cycle_sigma_rel = 0.15;

    void validate() const;
    int bucket_count() const { return static_cast<int>(margin_bucket_edges_mm.size()) + 1; }
    // Bucket index for a margin, 0 for negative.
    int bucket_of(double margin_mm) const;
};

struct PlannerConfig {
    int feasibility_slack_mm = 25;
    int margin_prune_mm = 10;
    int heavy_mass_g = 5000;
    int heavy_max_row = 1;  // heavier items only go to rows <= this
    double epsilon_frequentist = 0.0;
    double epsilon_learned = 0.01;
    double epsilon_training = 0.05;
    int rolling_window = 200;
    std::string risk_model_path;

    void validate() const;
};

struct BehaviorConfig {
    int plank_thickness_mm = 20;
    int force_cap_mass_g = 8000;  // heavier items are immovable during sweeps
    double kinesthetic_noise_std_mm = 0.0;
    int sweep_creation_allowance_mm = 0;
    int wall_adjacency_tol_mm = 20;

    void validate() const;
};

struct RunConfig {
    int max_pods = 100;
    long long max_attempts = 0;  // 0 = no cap
    int max_item_attempts = 3;
    double human_baseline_uph = 243.0;
    int cell_size_mm = 10;

    void validate() const;
};

struct ScenarioConfig {
    BinConfig bin;
    PodConfig pod;
    ItemDistribution items;
    PerceptionNoise perception;
    TimingConstants timing;
    OutcomeModelConfig outcome_model;
    PlannerConfig planner;
    BehaviorConfig behavior;
    RunConfig run;

    void validate() const;

    // Canonical JSON (sorted keys), used both for dumping and hashing.
    std::string to_json() const;
    uint64_t hash() const;

    static ScenarioConfig from_json(const std::string& text);
    static ScenarioConfig load(const std::string& path);
    static ScenarioConfig defaults();

    // Point override, e.g. set("/planner/margin_prune_mm", "15").
    void set(const std::string& json_pointer, const std::string& json_value);
};

}  // namespace stowsim
