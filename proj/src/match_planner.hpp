#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "behavior_engine.hpp"
#include "config.hpp"
#include "core_model.hpp"
#include "risk_model.hpp"
#include "rng.hpp"
#include "space_affordance.hpp"

namespace stowsim {

// Candidate action {behavior, item, bin} with its affordances and features.
struct MatchTuple {
    BehaviorKind kind = BehaviorKind::direct_insert;
    uint64_t item_id = 0;
    uint64_t bin_id = 0;
    size_t bin_index = 0;
    MatchFeatures features;
    std::optional<Affordance> plank;
    std::optional<Affordance> item_pose;
    SweepDir sweep_dir = SweepDir::left;
    int rigid_footprint_mm = 0;
    bool exploratory = false;

    Behavior to_behavior() const;
};

// Planner-visible state of one bin: known pod geometry plus perceived layers.
// True placements are deliberately absent.
struct BinView {
    uint64_t bin_id = 0;
    size_t index = 0;
    int width_mm = 0;
    int height_mm = 0;
    int depth_mm = 0;
    int row = 0;
    SpaceEstimate estimate;
    const MultiMask* mask = nullptr;
    const CostMap* item_costmap = nullptr;
    const CostMap* plank_costmap = nullptr;
    double perceived_fill = 0.0;

    // Lazily filled caches keyed by kernel cells; shared across items with
    // equal quantized dims.
    mutable std::map<std::pair<int, int>, std::optional<Affordance>> item_affordance_cache;
    mutable std::array<std::optional<std::optional<Affordance>>, kBehaviorCount> plank_cache;
};

// Contiguous obstacle-free column run containing x, in mm. This is the
// perceived gap an insert at x would use.
int perceived_gap_at(const MultiMask& mask, int x_mm);

// Enumerates feasible {behavior, item, bin} tuples: geometric fit, space
// check with behavior allowance and slack, the heavy-item-up-high rule, and
// an existing affordance.
std::vector<MatchTuple> generate_feasible(const std::vector<const Item*>& buffer_items,
                                          const std::vector<BinView>& bins,
                                          const PlannerConfig& planner_cfg,
                                          const BehaviorConfig& behavior_cfg);

// Expected units-per-hour of attempting `tuple` given the rolling clock,
// with the 3600 s/h conversion. Throws DegenerateClock when T + t <= 0.
double expected_uph(const MatchTuple& tuple, const RiskModel& model, const WorkcellClock& clock);

// Expected UPH of kicking out now: a guaranteed next stow after the kickout
// charge plus a mean insert cycle, at the rolling success rate.
double kickout_expected_uph(const WorkcellClock& clock, double kickout_s,
                            double mean_insert_cycle_s, double fallback_success_rate);

// Ranked plan: insert family first, then sweeps; within a rank, largest item
// into the smallest sufficient space; greedy conflict removal; tuples inside
// the pruning margin are dropped.
std::vector<MatchTuple> plan_frequentist(const std::vector<MatchTuple>& tuples,
                                         const PlannerConfig& cfg);

// Expected-UPH greedy plan. With probability epsilon the margin pruning is
// relaxed and one affordance-bearing tuple is chosen uniformly and tagged
// exploratory. Tuples that do not beat the kickout alternative are dropped.
std::vector<MatchTuple> plan_learned(const std::vector<MatchTuple>& tuples,
                                     const RiskModel& model, const WorkcellClock& clock,
                                     double epsilon, Rng& rng, const PlannerConfig& cfg,
                                     double kickout_s, double mean_insert_cycle_s,
                                     double fallback_success_rate);

// True when the plan is empty or nothing in it beats kicking out.
bool decide_kickout(const std::vector<MatchTuple>& plan, const RiskModel& model,
                    const WorkcellClock& clock, double kickout_s, double mean_insert_cycle_s,
                    double fallback_success_rate);

// Fit the reference tabular risk model from a log.
TableRiskModel fit_risk_model(const std::vector<OutcomeRecord>& log,
                              const std::vector<int>& margin_bucket_edges_mm);

struct PlannerState {
    WorkcellClock clock;
    double epsilon = 0.0;

    void validate() const {
        if (epsilon < 0.0 || epsilon > 0.05)
            throw ConfigError("exploration epsilon must stay within [0, 0.05]");
    }
};

}  // namespace stowsim
