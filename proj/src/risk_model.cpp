#include "risk_model.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace stowsim {

using nlohmann::json;

StaticFamilyRiskModel::StaticFamilyRiskModel(const OutcomeModelConfig& cfg) {
    for (int f = 0; f < kFamilyCount; ++f) {
        success_[f] = cfg.family_rows[f][0];
        // Success time is the family's successful-cycle mean; failure time is
        // the outcome-weighted mean over the failure classes.
        double fail_mass = 1.0 - cfg.family_rows[f][0];
        double unproductive = cfg.family_rows[f][1];
        double defect = cfg.family_rows[f][2] + cfg.family_rows[f][3] + cfg.family_rows[f][4];
        double fail_time = fail_mass > 0.0
                               ? (unproductive * cfg.cycle_means_s[f][1] +
                                  defect * cfg.cycle_means_s[f][2]) / fail_mass
                               : cfg.cycle_means_s[f][1];
        time_[f] = {cfg.cycle_means_s[f][0], fail_time};
    }
}

double StaticFamilyRiskModel::predict_success(const MatchFeatures& f) const {
    return success_[static_cast<int>(f.family())];
}

double StaticFamilyRiskModel::predict_time(const MatchFeatures& f, bool success) const {
    return time_[static_cast<int>(f.family())][success ? 0 : 1];
}

int TableRiskModel::bucket_of(double margin_mm) const {
    if (margin_mm < edges_.front()) return 0;
    int b = 1;
    for (size_t i = 1; i < edges_.size(); ++i)
        if (margin_mm >= edges_[i]) ++b;
    return b;
}

MatchFeatures TableRiskModel::features_of(const OutcomeRecord& rec) {
    MatchFeatures f;
    f.behavior = rec.behavior;
    f.margin_est_mm = rec.margin_est_mm;
    f.estimated_space_mm = rec.predicted_space_mm;
    f.item_width_mm = rec.item_width_mm;
    f.item_height_mm = rec.item_height_mm;
    f.item_depth_mm = rec.item_depth_mm;
    f.fragility = rec.fragility;
    f.bin_fill_fraction = rec.bin_fill_fraction;
    return f;
}

TableRiskModel TableRiskModel::fit(const std::vector<OutcomeRecord>& log,
                                   const std::vector<int>& margin_bucket_edges_mm) {
    if (log.empty()) throw InsufficientData("risk model needs a non-empty log");
    TableRiskModel m;
    m.edges_ = margin_bucket_edges_mm;
    int buckets = static_cast<int>(m.edges_.size()) + 1;
    for (auto& fam : m.cells_) fam.resize(buckets);

    long long successes = 0;
    for (const auto& rec : log) {
        int f = static_cast<int>(family_of(rec.behavior));
        int b = m.bucket_of(rec.margin_est_mm);
        int frag = static_cast<int>(rec.fragility);
        bool ok = rec.outcome == OutcomeClass::success;
        Cell& cell = m.cells_[f][b][frag];
        cell.total += 1;
        cell.successes += ok ? 1 : 0;
        m.family_totals_[f].total += 1;
        m.family_totals_[f].successes += ok ? 1 : 0;
        successes += ok ? 1 : 0;
        int t = ok ? 0 : 1;
        m.time_sum_[f][t] += rec.cycle_time_s;
        m.time_count_[f][t] += 1;
        m.global_time_sum_[t] += rec.cycle_time_s;
        m.global_time_count_[t] += 1;
    }
    if (successes == 0 || successes == static_cast<long long>(log.size()))
        throw InsufficientData("risk model needs both outcome classes in the log");
    return m;
}

double TableRiskModel::predict_success(const MatchFeatures& f) const {
    int fam = static_cast<int>(f.family());
    if (cells_[fam].empty()) throw ModelUnavailable("risk model has no cells");
    const Cell& cell = cells_[fam][bucket_of(f.margin_est_mm)][static_cast<int>(f.fragility)];
    if (cell.total > 0)
        return static_cast<double>(cell.successes + 1) / static_cast<double>(cell.total + 2);
    const Cell& fallback = family_totals_[fam];
    return static_cast<double>(fallback.successes + 1) / static_cast<double>(fallback.total + 2);
}

double TableRiskModel::predict_time(const MatchFeatures& f, bool success) const {
    int fam = static_cast<int>(f.family());
    int t = success ? 0 : 1;
    if (time_count_[fam][t] > 0) return time_sum_[fam][t] / time_count_[fam][t];
    if (global_time_count_[t] > 0) return global_time_sum_[t] / global_time_count_[t];
    return success ? 11.0 : 18.0;  // unreachable after a successful fit
}

void TableRiskModel::save(const std::string& path) const {
    json j;
    j["schema"] = "stowsim-risk-model";
    j["version"] = 1;
    j["margin_bucket_edges_mm"] = edges_;
    json fams = json::array();
    for (int f = 0; f < kFamilyCount; ++f) {
        json buckets = json::array();
        for (const auto& bucket : cells_[f]) {
            json frags = json::array();
            for (const auto& cell : bucket) frags.push_back({cell.successes, cell.total});
            buckets.push_back(frags);
        }
        fams.push_back({{"family", to_string(static_cast<Family>(f))},
                        {"cells", buckets},
                        {"family_total", {family_totals_[f].successes, family_totals_[f].total}},
                        {"time_sum", time_sum_[f]},
                        {"time_count", time_count_[f]}});
    }
    j["tables"] = fams;
    j["global_time_sum"] = global_time_sum_;
    j["global_time_count"] = global_time_count_;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write risk model: " + path);
    out << j.dump(2) << "\n";
}

TableRiskModel TableRiskModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open risk model: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("risk model parse error: ") + e.what());
    }
    if (j.value("schema", "") != "stowsim-risk-model")
        throw ConfigError("not a risk model file: " + path);
    if (j.value("version", 0) != 1) throw ConfigError("unsupported risk model version");

    TableRiskModel m;
    m.edges_ = j.at("margin_bucket_edges_mm").get<std::vector<int>>();
    const auto& fams = j.at("tables");
    for (int f = 0; f < kFamilyCount; ++f) {
        const auto& fam = fams.at(f);
        const auto& buckets = fam.at("cells");
        m.cells_[f].resize(buckets.size());
        for (size_t b = 0; b < buckets.size(); ++b) {
            for (int frag = 0; frag < 4; ++frag) {
                m.cells_[f][b][frag].successes = buckets.at(b).at(frag).at(0).get<long long>();
                m.cells_[f][b][frag].total = buckets.at(b).at(frag).at(1).get<long long>();
            }
        }
        m.family_totals_[f].successes = fam.at("family_total").at(0).get<long long>();
        m.family_totals_[f].total = fam.at("family_total").at(1).get<long long>();
        m.time_sum_[f] = fam.at("time_sum").get<std::array<double, 2>>();
        m.time_count_[f] = fam.at("time_count").get<std::array<long long, 2>>();
    }
    m.global_time_sum_ = j.at("global_time_sum").get<std::array<double, 2>>();
    m.global_time_count_ = j.at("global_time_count").get<std::array<long long, 2>>();
    return m;
}

double brier_score(const RiskModel& model, const std::vector<OutcomeRecord>& log) {
    if (log.empty()) throw InsufficientData("empty log");
    double sum = 0.0;
    for (const auto& rec : log) {
        double p = model.predict_success(TableRiskModel::features_of(rec));
        double y = rec.outcome == OutcomeClass::success ? 1.0 : 0.0;
        sum += (p - y) * (p - y);
    }
    return sum / static_cast<double>(log.size());
}

double brier_score_constant(double rate, const std::vector<OutcomeRecord>& log) {
    if (log.empty()) throw InsufficientData("empty log");
    double sum = 0.0;
    for (const auto& rec : log) {
        double y = rec.outcome == OutcomeClass::success ? 1.0 : 0.0;
        sum += (rate - y) * (rate - y);
    }
    return sum / static_cast<double>(log.size());
}

}  // namespace stowsim
