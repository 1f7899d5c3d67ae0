#include "match_planner.hpp"

#include <algorithm>
#include <cmath>

namespace stowsim {

Behavior MatchTuple::to_behavior() const {
    Behavior b;
    b.kind = kind;
    b.plank = plank;
    b.item_pose = item_pose;
    b.sweep_dir = sweep_dir;
    return b;
}

int perceived_gap_at(const MultiMask& mask, int x_mm) {
    int col = std::clamp(x_mm / mask.cell_size_mm, 0, mask.width_cells - 1);
    std::vector<uint8_t> blocked(mask.width_cells, 0);
    for (int x = 0; x < mask.width_cells; ++x) {
        for (int y = 0; y < mask.height_cells; ++y) {
            if (mask.item_instances[mask.idx(x, y)] >= 0) {
                blocked[x] = 1;
                break;
            }
        }
    }
    if (blocked[col]) return 0;
    int lo = col, hi = col;
    while (lo > 0 && !blocked[lo - 1]) --lo;
    while (hi + 1 < mask.width_cells && !blocked[hi + 1]) ++hi;
    return (hi - lo + 1) * mask.cell_size_mm;
}

namespace {

const std::optional<Affordance>& item_affordance(const BinView& bin, int kw_mm, int kh_mm) {
    auto key = std::make_pair(kw_mm, kh_mm);
    auto it = bin.item_affordance_cache.find(key);
    if (it == bin.item_affordance_cache.end()) {
        auto a = generate_affordance(*bin.item_costmap, kw_mm, kh_mm, false,
                                     AffordanceKind::item_insert);
        it = bin.item_affordance_cache.emplace(key, a).first;
    }
    return it->second;
}

const std::optional<Affordance>& plank_for(const BinView& bin, BehaviorKind kind,
                                           const BehaviorConfig& cfg) {
    auto& slot = bin.plank_cache[static_cast<int>(kind)];
    if (!slot.has_value()) {
        slot = plank_affordance(*bin.mask, *bin.plank_costmap, kind, cfg.plank_thickness_mm,
                                cfg.wall_adjacency_tol_mm);
    }
    return *slot;
}

int family_rank(BehaviorKind k) { return is_sweep_family(k) ? 1 : 0; }

}  // namespace

std::vector<MatchTuple> generate_feasible(const std::vector<const Item*>& buffer_items,
                                          const std::vector<BinView>& bins,
                                          const PlannerConfig& planner_cfg,
                                          const BehaviorConfig& behavior_cfg) {
    std::vector<MatchTuple> out;
    const BehaviorKind kinds[] = {BehaviorKind::direct_insert, BehaviorKind::stack,
                                  BehaviorKind::direct_sweep, BehaviorKind::corner_sweep,
                                  BehaviorKind::item_push_sweep};
    for (const BinView& bin : bins) {
        for (const Item* item : buffer_items) {
            bool heavy = item->mass_g > planner_cfg.heavy_mass_g;
            if (heavy && bin.row > planner_cfg.heavy_max_row) continue;
            if (item->depth_mm > bin.depth_mm) continue;

            for (BehaviorKind kind : kinds) {
                Orientation orient =
                    kind == BehaviorKind::stack ? Orientation::stacked : Orientation::upright;
                int footprint = orient == Orientation::upright ? item->width_mm : item->height_mm;
                int vertical = orient == Orientation::upright ? item->height_mm : item->width_mm;
                if (vertical > bin.height_mm || footprint > bin.width_mm) continue;

                bool sweep = is_sweep_family(kind);
                // Inserts need directly usable space; sweeps work against the
                // hybrid estimate plus whatever the sweep itself can open.
                double basis = sweep ? bin.estimate.final_mm + behavior_cfg.sweep_creation_allowance_mm
                                     : bin.estimate.directly_usable_mm;
                if (basis + planner_cfg.feasibility_slack_mm < footprint) continue;

                MatchTuple t;
                t.kind = kind;
                t.item_id = item->id;
                t.bin_id = bin.bin_id;
                t.bin_index = bin.index;
                t.rigid_footprint_mm = footprint;
                t.sweep_dir = SweepDir::left;

                if (sweep) {
                    const auto& plank = plank_for(bin, kind, behavior_cfg);
                    if (!plank.has_value()) continue;
                    t.plank = plank;
                    // Push items away from the widest perceived free region so
                    // the sweep extends it.
                    t.sweep_dir = (plank->x_mm + plank->kernel_width_mm / 2) * 2 <= bin.width_mm
                                      ? SweepDir::right
                                      : SweepDir::left;
                    t.features.margin_est_mm = basis - footprint;
                    t.features.estimated_space_mm = basis;
                } else {
                    const auto& pose = item_affordance(bin, footprint, vertical);
                    if (!pose.has_value()) continue;
                    t.item_pose = pose;
                    double gap = perceived_gap_at(*bin.mask, pose->x_mm + footprint / 2);
                    t.features.margin_est_mm = gap - footprint;
                    t.features.estimated_space_mm = gap;
                }
                t.features.behavior = kind;
                t.features.item_width_mm = item->width_mm;
                t.features.item_height_mm = item->height_mm;
                t.features.item_depth_mm = item->depth_mm;
                t.features.fragility = item->fragility;
                t.features.bin_fill_fraction = bin.perceived_fill;
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

double expected_uph(const MatchTuple& tuple, const RiskModel& model, const WorkcellClock& clock) {
    double p = std::clamp(model.predict_success(tuple.features), 0.0, 1.0);
    double t1 = model.predict_time(tuple.features, true);
    double t0 = model.predict_time(tuple.features, false);
    if (t1 <= 0.0 || t0 <= 0.0) throw DegenerateClock("predicted cycle times must be positive");
    double T = clock.T();
    if (T + t1 <= 0.0 || T + t0 <= 0.0) throw DegenerateClock("non-positive horizon in expected UPH");
    double ns = static_cast<double>(clock.N_s());
    return (p * (ns + 1.0) / (T + t1) + (1.0 - p) * ns / (T + t0)) * 3600.0;
}

double kickout_expected_uph(const WorkcellClock& clock, double kickout_s,
                            double mean_insert_cycle_s, double fallback_success_rate) {
    double p = clock.success_rate(fallback_success_rate);
    double denom = clock.T() + kickout_s + mean_insert_cycle_s;
    if (denom <= 0.0) throw DegenerateClock("non-positive horizon in kickout valuation");
    return (static_cast<double>(clock.N_s()) + p) / denom * 3600.0;
}

namespace {

// Deterministic total order used to resolve exact ties everywhere.
bool id_order(const MatchTuple& a, const MatchTuple& b) {
    return std::tuple(a.item_id, a.bin_id, static_cast<int>(a.kind)) <
           std::tuple(b.item_id, b.bin_id, static_cast<int>(b.kind));
}

std::vector<MatchTuple> greedy_sequence(std::vector<MatchTuple> ranked) {
    std::vector<MatchTuple> plan;
    while (!ranked.empty()) {
        MatchTuple head = ranked.front();
        plan.push_back(head);
        std::vector<MatchTuple> rest;
        for (size_t i = 1; i < ranked.size(); ++i) {
            if (ranked[i].item_id == head.item_id || ranked[i].bin_id == head.bin_id) continue;
            rest.push_back(std::move(ranked[i]));
        }
        ranked = std::move(rest);
    }
    return plan;
}

}  // namespace

std::vector<MatchTuple> plan_frequentist(const std::vector<MatchTuple>& tuples,
                                         const PlannerConfig& cfg) {
    std::vector<MatchTuple> kept;
    for (const auto& t : tuples)
        if (t.features.margin_est_mm >= cfg.margin_prune_mm) kept.push_back(t);

    std::sort(kept.begin(), kept.end(), [](const MatchTuple& a, const MatchTuple& b) {
        int ra = family_rank(a.kind), rb = family_rank(b.kind);
        if (ra != rb) return ra < rb;
        if (a.rigid_footprint_mm != b.rigid_footprint_mm)
            return a.rigid_footprint_mm > b.rigid_footprint_mm;  // largest item first
        if (a.features.estimated_space_mm != b.features.estimated_space_mm)
            return a.features.estimated_space_mm < b.features.estimated_space_mm;  // smallest space
        return id_order(a, b);
    });
    return greedy_sequence(std::move(kept));
}

std::vector<MatchTuple> plan_learned(const std::vector<MatchTuple>& tuples,
                                     const RiskModel& model, const WorkcellClock& clock,
                                     double epsilon, Rng& rng, const PlannerConfig& cfg,
                                     double kickout_s, double mean_insert_cycle_s,
                                     double fallback_success_rate) {
    if (epsilon > 0.0 && rng.bernoulli(epsilon)) {
        // Exploration: margins relaxed, uniform over every tuple that still
        // carries an affordance (all feasible tuples do by construction).
        if (tuples.empty()) return {};
        size_t pick = static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(tuples.size()) - 1));
        MatchTuple chosen = tuples[pick];
        chosen.exploratory = true;
        return {chosen};
    }

    std::vector<MatchTuple> pruned;
    for (const auto& t : tuples)
        if (t.features.margin_est_mm >= cfg.margin_prune_mm) pruned.push_back(t);

    double kick = kickout_expected_uph(clock, kickout_s, mean_insert_cycle_s, fallback_success_rate);
    std::vector<MatchTuple> plan;
    while (!pruned.empty()) {
        const MatchTuple* best = nullptr;
        double best_euph = 0.0;
        for (const auto& t : pruned) {
            double e = expected_uph(t, model, clock);
            if (!best || e > best_euph || (e == best_euph && id_order(t, *best))) {
                best = &t;
                best_euph = e;
            }
        }
        if (!best || best_euph <= kick) break;  // nothing improves on kicking out
        MatchTuple head = *best;
        plan.push_back(head);
        std::vector<MatchTuple> rest;
        for (const auto& t : pruned) {
            if (t.item_id == head.item_id || t.bin_id == head.bin_id) continue;
            rest.push_back(t);
        }
        pruned = std::move(rest);
    }
    return plan;
}

bool decide_kickout(const std::vector<MatchTuple>& plan, const RiskModel& model,
                    const WorkcellClock& clock, double kickout_s, double mean_insert_cycle_s,
                    double fallback_success_rate) {
    if (plan.empty()) return true;
    double kick = kickout_expected_uph(clock, kickout_s, mean_insert_cycle_s, fallback_success_rate);
    for (const auto& t : plan)
        if (expected_uph(t, model, clock) > kick) return false;
    return true;
}

TableRiskModel fit_risk_model(const std::vector<OutcomeRecord>& log,
                              const std::vector<int>& margin_bucket_edges_mm) {
    return TableRiskModel::fit(log, margin_bucket_edges_mm);
}

}  // namespace stowsim
