#include "behavior_engine.hpp"

#include <algorithm>
#include <cmath>

namespace stowsim {

void Behavior::validate() const {
    if (is_sweep_family(kind)) {
        if (!plank.has_value())
            throw InvalidAffordance("sweep-family behavior needs a plank affordance");
    } else {
        if (plank.has_value())
            throw InvalidAffordance("insert-family behavior must not carry a plank affordance");
        if (!item_pose.has_value())
            throw InvalidAffordance("insert-family behavior needs an item affordance");
    }
}

void ExecutionResult::validate() const {
    if (outcome == OutcomeClass::unproductive && !item_retained)
        throw InvariantViolation("unproductive outcome must retain the item");
    if (outcome == OutcomeClass::amnesty && (item_retained || item_placed))
        throw InvariantViolation("amnesty outcome must lose the item");
}

namespace {

void check_row(const OutcomeRow& row, const char* what) {
    double sum = 0.0;
    for (double p : row) {
        if (p < -1e-12 || p > 1.0 + 1e-12)
            throw ConfigError(std::string("derived outcome probability out of range in ") + what);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError(std::string("derived outcome row does not sum to 1 in ") + what);
}

OutcomeRow scale_success(const OutcomeRow& base, double multiplier, const char* what) {
    double s = base[0] * multiplier;
    if (s > 1.0 + 1e-12)
        throw ConfigError(std::string("success multiplier pushes probability above 1 in ") + what);
    s = std::min(1.0, s);
    OutcomeRow out{};
    out[0] = s;
    double fail_scale = base[0] >= 1.0 ? 0.0 : (1.0 - s) / (1.0 - base[0]);
    for (int i = 1; i < kOutcomeCount; ++i) out[i] = base[i] * fail_scale;
    return out;
}

}  // namespace

OutcomeModel OutcomeModel::from_config(const OutcomeModelConfig& cfg) {
    cfg.validate();
    OutcomeModel m;
    m.cfg_ = cfg;

    double r = cfg.band_overlap_rate;
    double overall_amnesty = cfg.family_mix_insert * cfg.family_rows[0][2] +
                             (1.0 - cfg.family_mix_insert) * cfg.family_rows[1][2];

    for (int f = 0; f < kFamilyCount; ++f) {
        const OutcomeRow& marginal = cfg.family_rows[f];
        OutcomeRow degraded = marginal;
        OutcomeRow base = marginal;
        if (r > 0.0) {
            // Degraded row: band overlaps keep the configured success rate,
            // carry an amnesty share consistent with the overall amnesty
            // attribution, and spread the rest over the family's failure mix.
            double amnesty_deg = cfg.band_amnesty_share * overall_amnesty / r;
            double rest = 1.0 - cfg.band_overlap_success - amnesty_deg;
            if (rest < 0.0)
                throw ConfigError("band overlap success and amnesty exceed probability 1");
            double fail_mass = marginal[1] + marginal[3] + marginal[4];
            degraded[0] = cfg.band_overlap_success;
            degraded[2] = amnesty_deg;
            degraded[1] = fail_mass > 0.0 ? rest * marginal[1] / fail_mass : rest;
            degraded[3] = fail_mass > 0.0 ? rest * marginal[3] / fail_mass : 0.0;
            degraded[4] = fail_mass > 0.0 ? rest * marginal[4] / fail_mass : 0.0;
            check_row(degraded, "degraded row");
            // Back-solve the clear-band row so the marginal matches targets.
            for (int i = 0; i < kOutcomeCount; ++i) {
                base[i] = (marginal[i] - r * degraded[i]) / (1.0 - r);
                if (base[i] < -1e-12)
                    throw ConfigError("band parameters leave a negative base outcome rate");
                base[i] = std::max(0.0, base[i]);
            }
            check_row(base, "base row");
        }
        m.degraded_[f] = degraded;

        // Normalize multipliers so the mix-weighted mean is exactly 1.
        std::vector<double> mult = cfg.margin_success_multipliers[f];
        double weighted = 0.0;
        for (size_t b = 0; b < mult.size(); ++b) weighted += mult[b] * cfg.bucket_mix[f][b];
        if (weighted <= 0.0) throw ConfigError("margin multipliers have zero weighted mean");
        for (double& v : mult) v /= weighted;

        int buckets = cfg.bucket_count();
        m.rows_[f].resize(buckets);
        for (int b = 0; b < buckets; ++b) {
            OutcomeRow bucket_row;
            if (b == 0) {
                // Negative margin: the kinesthetic gate forces unproductive.
                bucket_row = OutcomeRow{0.0, 1.0, 0.0, 0.0, 0.0};
            } else {
                bucket_row = scale_success(base, mult[b - 1], "margin bucket");
            }
            for (int frag = 0; frag < 4; ++frag) {
                double fm = cfg.fragility_success_multipliers[frag];
                m.rows_[f][b][frag] =
                    fm == 1.0 ? bucket_row : scale_success(bucket_row, fm, "fragility");
                check_row(m.rows_[f][b][frag], "bucket row");
            }
        }
    }
    return m;
}

const OutcomeRow& OutcomeModel::row(Family f, int bucket, Fragility frag) const {
    int b = std::clamp(bucket, 0, bucket_count() - 1);
    return rows_[static_cast<int>(f)][b][static_cast<int>(frag)];
}

OutcomeClass OutcomeModel::sample(Family f, int bucket, Fragility frag, bool band_overlap,
                                  Rng& rng) const {
    const OutcomeRow& r = band_overlap ? degraded_[static_cast<int>(f)] : row(f, bucket, frag);
    double u = rng.uniform01();
    double acc = 0.0;
    for (int i = 0; i < kOutcomeCount; ++i) {
        acc += r[i];
        if (u < acc) return static_cast<OutcomeClass>(i);
    }
    return OutcomeClass::other;
}

double OutcomeModel::mean_cycle(Family f, OutcomeClass c) const {
    int group = c == OutcomeClass::success ? 0 : (c == OutcomeClass::unproductive ? 1 : 2);
    return cfg_.cycle_means_s[static_cast<int>(f)][group];
}

double OutcomeModel::cycle_time(Family f, OutcomeClass c, Rng& rng) const {
    return rng.lognormal_mean_rel(mean_cycle(f, c), cfg_.cycle_sigma_rel);
}

BandEvent band_event(Rng& rng, const OutcomeModel& model) {
    return rng.bernoulli(model.band_overlap_rate()) ? BandEvent::overlap : BandEvent::clear;
}

ConsolidationResult consolidate(const BinState& bin, SweepDir dir, int force_cap_mass_g) {
    ConsolidationResult out;
    out.placements = bin.placements;
    if (dir == SweepDir::left) {
        int cursor = 0;
        for (auto& p : out.placements) {
            if (p.item.mass_g > force_cap_mass_g) {
                cursor = p.right_mm();  // pinned: the plank cannot move it
                continue;
            }
            p.current_width_mm = p.min_width_mm();
            p.x_mm = cursor;
            cursor = p.right_mm();
        }
        out.gap = {cursor, bin.width_mm - cursor};
    } else {
        int cursor = bin.width_mm;
        for (auto it = out.placements.rbegin(); it != out.placements.rend(); ++it) {
            if (it->item.mass_g > force_cap_mass_g) {
                cursor = it->x_mm;
                continue;
            }
            it->current_width_mm = it->min_width_mm();
            it->x_mm = cursor - it->current_width_mm;
            cursor = it->x_mm;
        }
        out.gap = {0, cursor};
    }
    return out;
}

double measure_created_space(const BinState& bin, const Behavior& sweep,
                             const BehaviorConfig& cfg, Rng& rng) {
    sweep.validate();
    if (!is_sweep_family(sweep.kind))
        throw InvalidAffordance("created space is only measured by sweep-family behaviors");
    auto consolidated = consolidate(bin, sweep.sweep_dir, cfg.force_cap_mass_g);
    double space = consolidated.gap.width_mm;
    if (cfg.kinesthetic_noise_std_mm > 0.0)
        space += rng.normal(0.0, cfg.kinesthetic_noise_std_mm);
    return std::max(0.0, space);
}

ExecutionResult execute(const Behavior& behavior, const Item& item, const BinState& bin,
                        const OutcomeModel& model, const BehaviorConfig& cfg, Rng& rng) {
    behavior.validate();
    ExecutionResult res;
    res.bin_after = bin;

    Family family = family_of(behavior.kind);
    Orientation orient =
        behavior.kind == BehaviorKind::stack ? Orientation::stacked : Orientation::upright;
    int rigid_w = orient == Orientation::upright ? item.width_mm : item.height_mm;

    // Geometric phase.
    BinState::Gap true_gap;
    int insert_x = 0;
    double measured_space = 0.0;
    if (family == Family::sweep) {
        const Affordance& plank = *behavior.plank;
        if (plank.x_mm < 0 || plank.x_mm + plank.kernel_width_mm > bin.width_mm)
            throw InvalidAffordance("plank affordance outside bin");
        auto consolidated = consolidate(bin, behavior.sweep_dir, cfg.force_cap_mass_g);
        res.bin_after.placements = consolidated.placements;  // the sweep happened
        true_gap = consolidated.gap;
        measured_space = true_gap.width_mm;
        if (cfg.kinesthetic_noise_std_mm > 0.0)
            measured_space += rng.normal(0.0, cfg.kinesthetic_noise_std_mm);
        measured_space = std::max(0.0, measured_space);
        res.created_space_mm = measured_space;
        insert_x = behavior.sweep_dir == SweepDir::left ? true_gap.x_mm
                                                        : true_gap.x_mm + true_gap.width_mm - rigid_w;
    } else {
        const Affordance& pose = *behavior.item_pose;
        if (pose.x_mm < 0 || pose.x_mm >= bin.width_mm)
            throw InvalidAffordance("item affordance outside bin");
        true_gap = bin.gap_at(pose.x_mm);
        measured_space = true_gap.width_mm;
        insert_x = pose.x_mm;
    }

    res.margin_mm = measured_space - rigid_w;

    // Kinesthetic space check: insufficient space is unproductive regardless
    // of the stochastic draw, and the item stays in hand.
    if (res.margin_mm < 0.0) {
        res.outcome = OutcomeClass::unproductive;
        res.item_retained = true;
        res.cycle_time_s = model.cycle_time(family, res.outcome, rng);
        res.validate();
        return res;
    }

    res.band_overlap = band_event(rng, model) == BandEvent::overlap;
    OutcomeClass drawn =
        model.sample(family, model.bucket_of(res.margin_mm), item.fragility, res.band_overlap, rng);

    bool wants_placement = drawn == OutcomeClass::success || drawn == OutcomeClass::damage ||
                           drawn == OutcomeClass::other;
    if (wants_placement) {
        // The physical insert still fails if the true gap cannot take the
        // item rigidly (conveyor stall / still-in-hand detection).
        if (true_gap.width_mm < rigid_w) {
            drawn = OutcomeClass::unproductive;
        } else {
            int x = std::clamp(insert_x, true_gap.x_mm, true_gap.x_mm + true_gap.width_mm - rigid_w);
            res.bin_after = apply_placement(res.bin_after, item, x, orient);
            res.item_placed = true;
            res.placed_x_mm = x;
        }
    }
    res.outcome = drawn;
    res.item_retained = drawn == OutcomeClass::unproductive;
    res.cycle_time_s = model.cycle_time(family, res.outcome, rng);
    res.validate();
    return res;
}

double CalibrationCounts::rate(OutcomeClass c) const {
    return attempts > 0 ? static_cast<double>(total[static_cast<int>(c)]) / attempts : 0.0;
}

double CalibrationCounts::family_rate(Family f, OutcomeClass c) const {
    long long n = 0;
    for (long long v : by_family[static_cast<int>(f)]) n += v;
    return n > 0 ? static_cast<double>(by_family[static_cast<int>(f)][static_cast<int>(c)]) / n
                 : 0.0;
}

CalibrationCounts calibration_trial(const OutcomeModel& model, long long n, Rng& rng) {
    const auto& cfg = model.config();
    CalibrationCounts counts;
    counts.attempts = n;
    for (long long i = 0; i < n; ++i) {
        Family f = rng.bernoulli(cfg.family_mix_insert) ? Family::insert : Family::sweep;
        int fi = static_cast<int>(f);
        // Draw a non-negative margin bucket from the configured mix.
        size_t b = rng.pick_weighted(cfg.bucket_mix[fi]) + 1;
        bool overlap = band_event(rng, model) == BandEvent::overlap;
        OutcomeClass c = model.sample(f, static_cast<int>(b), Fragility::standard, overlap, rng);
        ++counts.by_family[fi][static_cast<int>(c)];
        ++counts.total[static_cast<int>(c)];
    }
    return counts;
}

}  // namespace stowsim
