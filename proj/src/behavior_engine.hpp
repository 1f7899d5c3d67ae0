#pragma once

#include <array>
#include <optional>
#include <vector>

#include "config.hpp"
#include "core_model.hpp"
#include "rng.hpp"
#include "space_affordance.hpp"

namespace stowsim {

enum class SweepDir { left, right };  // wall the in-bin items are pushed toward

struct Behavior {
    BehaviorKind kind = BehaviorKind::direct_insert;
    std::optional<Affordance> plank;      // sweep family only
    std::optional<Affordance> item_pose;  // insert family only
    SweepDir sweep_dir = SweepDir::left;

    void validate() const;
};

// Calibrated stochastic outcome overlay. Rows are derived from marginal
// family rates: the band-overlap event swaps in a degraded row, so base rows
// are back-solved to keep the marginal mix at the configured targets; margin
// buckets scale success with the failure mass rescaled proportionally, with
// the mix-weighted mean pinned to 1.
class OutcomeModel {
public:
    static OutcomeModel from_config(const OutcomeModelConfig& cfg);

    const OutcomeModelConfig& config() const { return cfg_; }
    int bucket_of(double margin_mm) const { return cfg_.bucket_of(margin_mm); }
    int bucket_count() const { return cfg_.bucket_count(); }

    const OutcomeRow& row(Family f, int bucket, Fragility frag) const;
    const OutcomeRow& degraded_row(Family f) const { return degraded_[static_cast<int>(f)]; }

    OutcomeClass sample(Family f, int bucket, Fragility frag, bool band_overlap, Rng& rng) const;
    double cycle_time(Family f, OutcomeClass c, Rng& rng) const;
    double mean_cycle(Family f, OutcomeClass c) const;
    double band_overlap_rate() const { return cfg_.band_overlap_rate; }

private:
    OutcomeModelConfig cfg_;
    // rows_[family][bucket][fragility]
    std::array<std::vector<std::array<OutcomeRow, 4>>, kFamilyCount> rows_;
    std::array<OutcomeRow, kFamilyCount> degraded_;
};

enum class BandEvent { clear, overlap };

// Bernoulli draw of a band-overlap event at the model's configured rate.
BandEvent band_event(Rng& rng, const OutcomeModel& model);

struct ExecutionResult {
    OutcomeClass outcome = OutcomeClass::unproductive;
    double cycle_time_s = 0.0;
    std::optional<double> created_space_mm;  // measured; present for sweep family
    bool item_retained = false;
    bool item_placed = false;
    BinState bin_after;
    double margin_mm = 0.0;  // created space minus rigid item footprint
    bool band_overlap = false;
    int placed_x_mm = -1;

    void validate() const;
};

// Deterministic sweep geometry: movable items pack toward `dir` at their
// compressed widths, items above the force cap stay pinned and block the
// stack. Returns the updated placements and the contiguous gap opened on the
// opposite side.
struct ConsolidationResult {
    std::vector<Placement> placements;
    BinState::Gap gap;
};
ConsolidationResult consolidate(const BinState& bin, SweepDir dir, int force_cap_mass_g);

// Gap width a sweep would report: consolidation plus Gaussian sensor noise.
double measure_created_space(const BinState& bin, const Behavior& sweep,
                             const BehaviorConfig& cfg, Rng& rng);

// Runs one behavior: geometric phase, kinesthetic space check, stochastic
// outcome draw, and bin mutation. Only the overlay consumes randomness for
// the outcome; the geometry is pure.
ExecutionResult execute(const Behavior& behavior, const Item& item, const BinState& bin,
                        const OutcomeModel& model, const BehaviorConfig& cfg, Rng& rng);

// Draws n attempts straight through the outcome sampler using the configured
// calibration mixes, exercising the same row selection and bookkeeping the
// executor uses. Returns counts indexed [family][outcome] plus totals.
struct CalibrationCounts {
    std::array<std::array<long long, kOutcomeCount>, kFamilyCount> by_family{};
    std::array<long long, kOutcomeCount> total{};
    long long attempts = 0;

    double rate(OutcomeClass c) const;
    double family_rate(Family f, OutcomeClass c) const;
};
CalibrationCounts calibration_trial(const OutcomeModel& model, long long n, Rng& rng);

}  // namespace stowsim
