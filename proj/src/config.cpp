#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stowsim {

using nlohmann::json;

const char* to_string(Family f) { return f == Family::insert ? "insert" : "sweep"; }

void PerceptionNoise::validate() const {
    if (item_width_std_mm < 0.0) throw ConfigError("perception width std must be >= 0");
    if (occlusion_below_lip_prob < 0.0 || occlusion_below_lip_prob > 1.0 ||
        segmentation_merge_prob < 0.0 || segmentation_merge_prob > 1.0)
        throw ConfigError("perception probabilities must be in [0, 1]");
}

void TimingConstants::validate() const {
    if (kickout_s <= 0.0 || no_stow_turnaway_s <= 0.0 || buffer_cycle_s <= 0.0 ||
        band_open_s <= 0.0)
        throw ConfigError("timing constants must be positive");
    if (reorientation_success <= 0.0 || reorientation_success > 1.0)
        throw ConfigError("reorientation success must be in (0, 1]");
}

int OutcomeModelConfig::bucket_of(double margin_mm) const {
    if (margin_mm < margin_bucket_edges_mm.front()) return 0;
    int b = 1;
    for (size_t i = 1; i < margin_bucket_edges_mm.size(); ++i) {
        if (margin_mm >= margin_bucket_edges_mm[i]) ++b;
    }
    return b;
}

void OutcomeModelConfig::validate() const {
    for (int f = 0; f < kFamilyCount; ++f) {
        double sum = 0.0;
        for (double p : family_rows[f]) {
            if (p < 0.0 || p > 1.0) throw ConfigError("outcome rate out of [0, 1]");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("outcome row must sum to 1");
        size_t n = margin_bucket_edges_mm.size();  // buckets excluding the negative one
        if (margin_success_multipliers[f].size() != n || bucket_mix[f].size() != n)
            throw ConfigError("margin multipliers and bucket mix must cover every non-negative bucket");
        double mix_sum = 0.0;
        for (double m : bucket_mix[f]) {
            if (m < 0.0) throw ConfigError("bucket mix weights must be >= 0");
            mix_sum += m;
        }
        if (std::abs(mix_sum - 1.0) > 1e-9) throw ConfigError("bucket mix must sum to 1");
        for (double m : margin_success_multipliers[f])
            if (m <= 0.0) throw ConfigError("margin success multipliers must be positive");
        for (auto& row : cycle_means_s)
            for (double t : row)
                if (t <= 0.0) throw ConfigError("cycle time means must be positive");
    }
    if (margin_bucket_edges_mm.empty() || margin_bucket_edges_mm.front() != 0)
        throw ConfigError("margin bucket edges must start at 0");
    for (size_t i = 1; i < margin_bucket_edges_mm.size(); ++i)
        if (margin_bucket_edges_mm[i] <= margin_bucket_edges_mm[i - 1])
            throw ConfigError("margin bucket edges must be increasing");
    if (band_overlap_rate < 0.0 || band_overlap_rate > 1.0 || band_overlap_success < 0.0 ||
        band_overlap_success > 1.0 || band_amnesty_share < 0.0 || band_amnesty_share > 1.0)
        throw ConfigError("band rates must be in [0, 1]");
    if (family_mix_insert < 0.0 || family_mix_insert > 1.0)
        throw ConfigError("family mix must be in [0, 1]");
    if (cycle_sigma_rel < 0.0) throw ConfigError("cycle sigma must be >= 0");
    for (double m : fragility_success_multipliers)
        if (m <= 0.0) throw ConfigError("fragility multipliers must be positive");
}

void PlannerConfig::validate() const {
    if (feasibility_slack_mm < 0 || margin_prune_mm < 0)
        throw ConfigError("planner margins must be >= 0");
    for (double e : {epsilon_frequentist, epsilon_learned, epsilon_training})
        if (e < 0.0 || e > 0.05) throw ConfigError("exploration epsilon must be in [0, 0.05]");
    if (rolling_window <= 0) throw ConfigError("rolling window must be positive");
}

void BehaviorConfig::validate() const {
    if (plank_thickness_mm <= 0) throw ConfigError("plank thickness must be positive");
    if (force_cap_mass_g <= 0) throw ConfigError("force cap must be positive");
    if (kinesthetic_noise_std_mm < 0.0) throw ConfigError("kinesthetic noise std must be >= 0");
    if (sweep_creation_allowance_mm < 0) throw ConfigError("creation allowance must be >= 0");
    if (wall_adjacency_tol_mm < 0) throw ConfigError("wall adjacency tolerance must be >= 0");
}

void RunConfig::validate() const {
    if (max_pods < 0 || max_attempts < 0) throw ConfigError("run limits must be >= 0");
    if (max_pods == 0 && max_attempts == 0)
        throw ConfigError("either max_pods or max_attempts must be set");
    if (max_item_attempts <= 0) throw ConfigError("max item attempts must be positive");
    if (cell_size_mm <= 0) throw ConfigError("cell size must be positive");
}

void ScenarioConfig::validate() const {
    if (bin.width_mm <= 0 || bin.height_mm <= 0 || bin.depth_mm <= 0)
        throw ConfigError("bin dimensions must be positive");
    if (bin.lip_height_mm < 0 || bin.lip_height_mm >= bin.height_mm)
        throw ConfigError("bin lip height out of range");
    if (bin.width_mm % run.cell_size_mm != 0 || bin.height_mm % run.cell_size_mm != 0)
        throw ConfigError("bin width and height must be multiples of the cell size");
    if (pod.rows <= 0 || pod.cols <= 0 || pod.rows * pod.cols > 52)
        throw ConfigError("pod must hold between 1 and 52 bins");
    if (pod.fill_mixture.empty()) throw ConfigError("pod fill mixture is empty");
    for (const auto& e : pod.fill_mixture)
        if (e.fill_fraction < 0.0 || e.fill_fraction > 1.0 || e.weight < 0.0)
            throw ConfigError("pod fill mixture entry invalid");
    if (pod.deep_item_prob < 0.0 || pod.deep_item_prob > 1.0)
        throw ConfigError("deep item probability must be in [0, 1]");
    items.validate();
    for (const auto& c : items.classes) {
        if (c.width_mm_max > bin.width_mm || c.height_mm_max > bin.height_mm ||
            c.depth_mm_max > bin.depth_mm)
            throw ConfigError("item class can exceed bin dimensions: " + c.name);
    }
    perception.validate();
    timing.validate();
    outcome_model.validate();
    planner.validate();
    behavior.validate();
    run.validate();
}

namespace {

json row_to_json(const OutcomeRow& row) {
    return json{{"success", row[0]},
                {"unproductive", row[1]},
                {"amnesty", row[2]},
                {"damage", row[3]},
                {"other", row[4]}};
}

OutcomeRow row_from_json(const json& j) {
    OutcomeRow row{};
    row[0] = j.at("success").get<double>();
    row[1] = j.at("unproductive").get<double>();
    row[2] = j.at("amnesty").get<double>();
    row[3] = j.at("damage").get<double>();
    row[4] = j.at("other").get<double>();
    return row;
}

json config_to_json(const ScenarioConfig& c) {
    json j;
    j["bin"] = {{"width_mm", c.bin.width_mm},
                {"height_mm", c.bin.height_mm},
                {"depth_mm", c.bin.depth_mm},
                {"lip_height_mm", c.bin.lip_height_mm},
                {"band_count", c.bin.band_count},
                {"band_width_mm", c.bin.band_width_mm},
                {"band_pinned_prob", c.bin.band_pinned_prob}};
    json mix = json::array();
    for (const auto& e : c.pod.fill_mixture)
        mix.push_back({{"fill_fraction", e.fill_fraction}, {"weight", e.weight}});
    j["pod"] = {{"rows", c.pod.rows},
                {"cols", c.pod.cols},
                {"fill_mixture", mix},
                {"deep_item_prob", c.pod.deep_item_prob}};
    json classes = json::array();
    for (const auto& cls : c.items.classes) {
        classes.push_back({{"name", cls.name},
                           {"weight", cls.weight},
                           {"fragility", to_string(cls.fragility)},
                           {"width_mm", {cls.width_mm_min, cls.width_mm_max}},
                           {"height_mm", {cls.height_mm_min, cls.height_mm_max}},
                           {"depth_mm", {cls.depth_mm_min, cls.depth_mm_max}},
                           {"mass_g", {cls.mass_g_min, cls.mass_g_max}},
                           {"compressibility", {cls.compress_min, cls.compress_max}},
                           {"deformable_prob", cls.deformable_prob}});
    }
    j["items"] = {{"classes", classes},
                  {"manifest_error_std_mm", c.items.manifest_error_std_mm}};
    j["perception"] = {{"item_width_bias_mm", c.perception.item_width_bias_mm},
                       {"item_width_std_mm", c.perception.item_width_std_mm},
                       {"occlusion_below_lip_prob", c.perception.occlusion_below_lip_prob},
                       {"segmentation_merge_prob", c.perception.segmentation_merge_prob},
                       {"occlusion_drop_height_mm", c.perception.occlusion_drop_height_mm}};
    j["timing"] = {{"kickout_s", c.timing.kickout_s},
                   {"no_stow_turnaway_s", c.timing.no_stow_turnaway_s},
                   {"buffer_cycle_s", c.timing.buffer_cycle_s},
                   {"reorientation_success", c.timing.reorientation_success},
                   {"band_open_s", c.timing.band_open_s}};
    const auto& m = c.outcome_model;
    j["outcome_model"] = {
        {"family_rows", {{"insert", row_to_json(m.family_rows[0])},
                         {"sweep", row_to_json(m.family_rows[1])}}},
        {"margin_bucket_edges_mm", m.margin_bucket_edges_mm},
        {"margin_success_multipliers", {{"insert", m.margin_success_multipliers[0]},
                                        {"sweep", m.margin_success_multipliers[1]}}},
        {"bucket_mix", {{"insert", m.bucket_mix[0]}, {"sweep", m.bucket_mix[1]}}},
        {"fragility_success_multipliers", m.fragility_success_multipliers},
        {"family_mix_insert", m.family_mix_insert},
        {"band", {{"overlap_rate", m.band_overlap_rate},
                  {"overlap_success", m.band_overlap_success},
                  {"amnesty_share", m.band_amnesty_share}}},
        {"cycle_means_s", {{"insert", m.cycle_means_s[0]}, {"sweep", m.cycle_means_s[1]}}},
        {"cycle_sigma_rel", m.cycle_sigma_rel}};
    j["planner"] = {{"feasibility_slack_mm", c.planner.feasibility_slack_mm},
                    {"margin_prune_mm", c.planner.margin_prune_mm},
                    {"heavy_mass_g", c.planner.heavy_mass_g},
                    {"heavy_max_row", c.planner.heavy_max_row},
                    {"epsilon_frequentist", c.planner.epsilon_frequentist},
                    {"epsilon_learned", c.planner.epsilon_learned},
                    {"epsilon_training", c.planner.epsilon_training},
                    {"rolling_window", c.planner.rolling_window},
                    {"risk_model_path", c.planner.risk_model_path}};
    j["behavior"] = {{"plank_thickness_mm", c.behavior.plank_thickness_mm},
                     {"force_cap_mass_g", c.behavior.force_cap_mass_g},
                     {"kinesthetic_noise_std_mm", c.behavior.kinesthetic_noise_std_mm},
                     {"sweep_creation_allowance_mm", c.behavior.sweep_creation_allowance_mm},
                     {"wall_adjacency_tol_mm", c.behavior.wall_adjacency_tol_mm}};
    j["run"] = {{"max_pods", c.run.max_pods},
                {"max_attempts", c.run.max_attempts},
                {"max_item_attempts", c.run.max_item_attempts},
                {"human_baseline_uph", c.run.human_baseline_uph},
                {"cell_size_mm", c.run.cell_size_mm}};
    return j;
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void range_from(const json& j, const char* key, int& lo, int& hi) {
    if (!j.contains(key)) return;
    const auto& a = j.at(key);
    lo = a.at(0).get<int>();
    hi = a.at(1).get<int>();
}

void range_from(const json& j, const char* key, double& lo, double& hi) {
    if (!j.contains(key)) return;
    const auto& a = j.at(key);
    lo = a.at(0).get<double>();
    hi = a.at(1).get<double>();
}

ScenarioConfig config_from_json(const json& j) {
    ScenarioConfig c = ScenarioConfig::defaults();
    if (j.contains("bin")) {
        const auto& b = j.at("bin");
        maybe(b, "width_mm", c.bin.width_mm);
        maybe(b, "height_mm", c.bin.height_mm);
        maybe(b, "depth_mm", c.bin.depth_mm);
        maybe(b, "lip_height_mm", c.bin.lip_height_mm);
        maybe(b, "band_count", c.bin.band_count);
        maybe(b, "band_width_mm", c.bin.band_width_mm);
        maybe(b, "band_pinned_prob", c.bin.band_pinned_prob);
    }
    if (j.contains("pod")) {
        const auto& p = j.at("pod");
        maybe(p, "rows", c.pod.rows);
        maybe(p, "cols", c.pod.cols);
        maybe(p, "deep_item_prob", c.pod.deep_item_prob);
        if (p.contains("fill_mixture")) {
            c.pod.fill_mixture.clear();
            for (const auto& e : p.at("fill_mixture"))
                c.pod.fill_mixture.push_back(
                    {e.at("fill_fraction").get<double>(), e.at("weight").get<double>()});
        }
    }
    if (j.contains("items")) {
        const auto& it = j.at("items");
        maybe(it, "manifest_error_std_mm", c.items.manifest_error_std_mm);
        if (it.contains("classes")) {
            c.items.classes.clear();
            for (const auto& e : it.at("classes")) {
                ItemClassConfig cls;
                maybe(e, "name", cls.name);
                maybe(e, "weight", cls.weight);
                if (e.contains("fragility"))
                    cls.fragility = fragility_from_string(e.at("fragility").get<std::string>());
                range_from(e, "width_mm", cls.width_mm_min, cls.width_mm_max);
                range_from(e, "height_mm", cls.height_mm_min, cls.height_mm_max);
                range_from(e, "depth_mm", cls.depth_mm_min, cls.depth_mm_max);
                range_from(e, "mass_g", cls.mass_g_min, cls.mass_g_max);
                range_from(e, "compressibility", cls.compress_min, cls.compress_max);
                maybe(e, "deformable_prob", cls.deformable_prob);
                c.items.classes.push_back(cls);
            }
        }
    }
    if (j.contains("perception")) {
        const auto& p = j.at("perception");
        maybe(p, "item_width_bias_mm", c.perception.item_width_bias_mm);
        maybe(p, "item_width_std_mm", c.perception.item_width_std_mm);
        maybe(p, "occlusion_below_lip_prob", c.perception.occlusion_below_lip_prob);
        maybe(p, "segmentation_merge_prob", c.perception.segmentation_merge_prob);
        maybe(p, "occlusion_drop_height_mm", c.perception.occlusion_drop_height_mm);
    }
    if (j.contains("timing")) {
        const auto& t = j.at("timing");
        maybe(t, "kickout_s", c.timing.kickout_s);
        maybe(t, "no_stow_turnaway_s", c.timing.no_stow_turnaway_s);
        maybe(t, "buffer_cycle_s", c.timing.buffer_cycle_s);
        maybe(t, "reorientation_success", c.timing.reorientation_success);
        maybe(t, "band_open_s", c.timing.band_open_s);
    }
    if (j.contains("outcome_model")) {
        const auto& m = j.at("outcome_model");
        auto& om = c.outcome_model;
        if (m.contains("family_rows")) {
            om.family_rows[0] = row_from_json(m.at("family_rows").at("insert"));
            om.family_rows[1] = row_from_json(m.at("family_rows").at("sweep"));
        }
        maybe(m, "margin_bucket_edges_mm", om.margin_bucket_edges_mm);
        if (m.contains("margin_success_multipliers")) {
            om.margin_success_multipliers[0] =
                m.at("margin_success_multipliers").at("insert").get<std::vector<double>>();
            om.margin_success_multipliers[1] =
                m.at("margin_success_multipliers").at("sweep").get<std::vector<double>>();
        }
        if (m.contains("bucket_mix")) {
            om.bucket_mix[0] = m.at("bucket_mix").at("insert").get<std::vector<double>>();
            om.bucket_mix[1] = m.at("bucket_mix").at("sweep").get<std::vector<double>>();
        }
        maybe(m, "fragility_success_multipliers", om.fragility_success_multipliers);
        maybe(m, "family_mix_insert", om.family_mix_insert);
        if (m.contains("band")) {
            const auto& b = m.at("band");
            maybe(b, "overlap_rate", om.band_overlap_rate);
            maybe(b, "overlap_success", om.band_overlap_success);
            maybe(b, "amnesty_share", om.band_amnesty_share);
        }
        if (m.contains("cycle_means_s")) {
            om.cycle_means_s[0] = m.at("cycle_means_s").at("insert").get<std::array<double, 3>>();
            om.cycle_means_s[1] = m.at("cycle_means_s").at("sweep").get<std::array<double, 3>>();
        }
        maybe(m, "cycle_sigma_rel", om.cycle_sigma_rel);
    }
    if (j.contains("planner")) {
        const auto& p = j.at("planner");
        maybe(p, "feasibility_slack_mm", c.planner.feasibility_slack_mm);
        maybe(p, "margin_prune_mm", c.planner.margin_prune_mm);
        maybe(p, "heavy_mass_g", c.planner.heavy_mass_g);
        maybe(p, "heavy_max_row", c.planner.heavy_max_row);
        maybe(p, "epsilon_frequentist", c.planner.epsilon_frequentist);
        maybe(p, "epsilon_learned", c.planner.epsilon_learned);
        maybe(p, "epsilon_training", c.planner.epsilon_training);
        maybe(p, "rolling_window", c.planner.rolling_window);
        maybe(p, "risk_model_path", c.planner.risk_model_path);
    }
    if (j.contains("behavior")) {
        const auto& b = j.at("behavior");
        maybe(b, "plank_thickness_mm", c.behavior.plank_thickness_mm);
        maybe(b, "force_cap_mass_g", c.behavior.force_cap_mass_g);
        maybe(b, "kinesthetic_noise_std_mm", c.behavior.kinesthetic_noise_std_mm);
        maybe(b, "sweep_creation_allowance_mm", c.behavior.sweep_creation_allowance_mm);
        maybe(b, "wall_adjacency_tol_mm", c.behavior.wall_adjacency_tol_mm);
    }
    if (j.contains("run")) {
        const auto& r = j.at("run");
        maybe(r, "max_pods", c.run.max_pods);
        maybe(r, "max_attempts", c.run.max_attempts);
        maybe(r, "max_item_attempts", c.run.max_item_attempts);
        maybe(r, "human_baseline_uph", c.run.human_baseline_uph);
        maybe(r, "cell_size_mm", c.run.cell_size_mm);
    }
    c.validate();
    return c;
}

}  // namespace

std::string ScenarioConfig::to_json() const {
    return config_to_json(*this).dump(2);
}

uint64_t ScenarioConfig::hash() const {
    // FNV-1a over the canonical dump; stable across platforms.
    std::string s = config_to_json(*this).dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

ScenarioConfig ScenarioConfig::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    return config_from_json(j);
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void ScenarioConfig::set(const std::string& json_pointer, const std::string& json_value) {
    json j = config_to_json(*this);
    json v = json::parse(json_value, nullptr, true, true);
    j[json::json_pointer(json_pointer)] = v;
    *this = config_from_json(j);
}

ScenarioConfig ScenarioConfig::defaults() {
    ScenarioConfig c;

    c.pod.fill_mixture = {{0.35, 0.15}, {0.55, 0.30}, {0.70, 0.30}, {0.85, 0.20}, {0.95, 0.05}};
    c.pod.deep_item_prob = 0.03;

    // Item mixture: dimensions chosen so typical items contest typical gaps.
    ItemClassConfig standard;
    standard.name = "standard";
    standard.weight = 0.45;
    standard.fragility = Fragility::standard;
    standard.width_mm_min = 60;
    standard.width_mm_max = 220;
    standard.height_mm_min = 60;
    standard.height_mm_max = 260;
    standard.depth_mm_min = 60;
    standard.depth_mm_max = 340;
    standard.mass_g_min = 150;
    standard.mass_g_max = 4500;
    standard.compress_min = 0.0;
    standard.compress_max = 0.05;

    ItemClassConfig book;
    book.name = "book";
    book.weight = 0.25;
    book.fragility = Fragility::book;
    book.width_mm_min = 15;
    book.width_mm_max = 70;
    book.height_mm_min = 180;
    book.height_mm_max = 280;
    book.depth_mm_min = 120;
    book.depth_mm_max = 240;
    book.mass_g_min = 200;
    book.mass_g_max = 1500;
    book.compress_min = 0.0;
    book.compress_max = 0.03;

    ItemClassConfig lightbox;
    lightbox.name = "lightweight_box";
    lightbox.weight = 0.15;
    lightbox.fragility = Fragility::lightweight_box;
    lightbox.width_mm_min = 80;
    lightbox.width_mm_max = 250;
    lightbox.height_mm_min = 80;
    lightbox.height_mm_max = 250;
    lightbox.depth_mm_min = 80;
    lightbox.depth_mm_max = 300;
    lightbox.mass_g_min = 50;
    lightbox.mass_g_max = 600;
    lightbox.compress_min = 0.02;
    lightbox.compress_max = 0.10;

    ItemClassConfig bagged;
    bagged.name = "bagged_soft";
    bagged.weight = 0.15;
    bagged.fragility = Fragility::bagged_soft;
    bagged.width_mm_min = 90;
    bagged.width_mm_max = 280;
    bagged.height_mm_min = 80;
    bagged.height_mm_max = 240;
    bagged.depth_mm_min = 80;
    bagged.depth_mm_max = 320;
    bagged.mass_g_min = 100;
    bagged.mass_g_max = 1800;
    bagged.compress_min = 0.20;
    bagged.compress_max = 0.45;
    bagged.deformable_prob = 1.0;

    c.items.classes = {standard, book, lightbox, bagged};
    c.items.manifest_error_std_mm = 3.0;

    c.perception.item_width_bias_mm = 2.0;
    c.perception.item_width_std_mm = 6.0;
    c.perception.occlusion_below_lip_prob = 0.02;
    c.perception.segmentation_merge_prob = 0.02;

    // Outcome rates from the deployed system's 100k-attempt breakdown.
    // Family rows come from the per-behavior outcome counts; the defect mass
    // is split amnesty/damage/other in the observed overall proportions.
    const double amnesty_share = 3767.0 / 4830.0;
    const double damage_share = 244.0 / 4830.0;
    const double other_share = 819.0 / 4830.0;
    auto family_row = [&](double success, double unproductive, double defect) {
        OutcomeRow row{};
        row[0] = success;
        row[1] = unproductive;
        row[2] = defect * amnesty_share;
        row[3] = defect * damage_share;
        row[4] = defect * other_share;
        // Absorb rounding so the row sums to exactly 1.
        row[1] += 1.0 - (row[0] + row[1] + row[2] + row[3] + row[4]);
        return row;
    };
    c.outcome_model.family_rows[0] =
        family_row(72390.0 / 79795.0, 4530.0 / 79795.0, 2875.0 / 79795.0);
    c.outcome_model.family_rows[1] =
        family_row(13469.0 / 20204.0, 4780.0 / 20204.0, 1955.0 / 20204.0);
    c.outcome_model.family_mix_insert = 79795.0 / 99999.0;
    c.outcome_model.margin_bucket_edges_mm = {0, 10, 30};
    // Tight fits fail more often; the mix-weighted mean of each multiplier
    // set is exactly 1 so family marginals stay at the measured rates.
    c.outcome_model.margin_success_multipliers[0] = {0.855, 1.01, 1.08};
    c.outcome_model.margin_success_multipliers[1] = {0.58, 1.0, 1.35};
    c.outcome_model.bucket_mix[0] = {0.20, 0.50, 0.30};
    c.outcome_model.bucket_mix[1] = {0.25, 0.45, 0.30};
    c.outcome_model.cycle_means_s[0] = {10.87, 18.24, 10.17};
    c.outcome_model.cycle_means_s[1] = {13.68, 19.69, 16.83};

    c.behavior.kinesthetic_noise_std_mm = 4.0;

    c.run.max_pods = 100;
    return c;
}

}  // namespace stowsim
