#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "config.hpp"
#include "core_model.hpp"

namespace stowsim {

// Engineered features a planner may condition on. Everything here is known
// before execution: perception estimates plus manifest data.
struct MatchFeatures {
    BehaviorKind behavior = BehaviorKind::direct_insert;
    double margin_est_mm = 0.0;      // estimated space minus rigid footprint
    double estimated_space_mm = 0.0;
    int item_width_mm = 0;
    int item_height_mm = 0;
    int item_depth_mm = 0;
    Fragility fragility = Fragility::standard;
    double bin_fill_fraction = 0.0;

    Family family() const { return family_of(behavior); }
};

class RiskModel {
public:
    virtual ~RiskModel() = default;
    virtual double predict_success(const MatchFeatures& f) const = 0;
    // Predicted cycle seconds conditioned on the binary outcome.
    virtual double predict_time(const MatchFeatures& f, bool success) const = 0;
};

// Frequentist baseline: family-level empirical rates and mean cycle times,
// blind to margins and item attributes.
class StaticFamilyRiskModel : public RiskModel {
public:
    explicit StaticFamilyRiskModel(const OutcomeModelConfig& cfg);
    double predict_success(const MatchFeatures& f) const override;
    double predict_time(const MatchFeatures& f, bool success) const override;

private:
    std::array<double, kFamilyCount> success_;
    std::array<std::array<double, 2>, kFamilyCount> time_;  // [family][success?0:1]... see cpp
};

// Reference learned model: a Laplace-smoothed frequency table over
// (family, margin bucket, fragility) with bucketed mean cycle times. The
// interface admits richer tabular classifiers; this one is calibrated by
// construction on its own training distribution.
class TableRiskModel : public RiskModel {
public:
    double predict_success(const MatchFeatures& f) const override;
    double predict_time(const MatchFeatures& f, bool success) const override;

    void save(const std::string& path) const;
    static TableRiskModel load(const std::string& path);

    // Fits from a log. Throws InsufficientData when the log is empty or one
    // of the binary outcome classes is missing.
    static TableRiskModel fit(const std::vector<OutcomeRecord>& log,
                              const std::vector<int>& margin_bucket_edges_mm);

    static MatchFeatures features_of(const OutcomeRecord& rec);

    int bucket_of(double margin_mm) const;

private:
    struct Cell {
        long long successes = 0;
        long long total = 0;
    };
    std::vector<int> edges_ = {0, 10, 30};
    // cells_[family][bucket][fragility]
    std::array<std::vector<std::array<Cell, 4>>, kFamilyCount> cells_;
    std::array<Cell, kFamilyCount> family_totals_;
    // time sums/counts per family and binary outcome
    std::array<std::array<double, 2>, kFamilyCount> time_sum_{};
    std::array<std::array<long long, 2>, kFamilyCount> time_count_{};
    std::array<double, 2> global_time_sum_{};
    std::array<long long, 2> global_time_count_{};

    friend TableRiskModel;
};

// Mean squared error of predicted success probability against the binary
// outcome; lower is better calibrated.
double brier_score(const RiskModel& model, const std::vector<OutcomeRecord>& log);
// Brier score of the constant predictor at the log's base success rate.
double brier_score_constant(double rate, const std::vector<OutcomeRecord>& log);

}  // namespace stowsim
