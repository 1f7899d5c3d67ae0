#include "core_model.hpp"

#include <algorithm>
#include <cmath>

namespace stowsim {

const char* to_string(Fragility f) {
    switch (f) {
        case Fragility::standard: return "standard";
        case Fragility::book: return "book";
        case Fragility::lightweight_box: return "lightweight_box";
        case Fragility::bagged_soft: return "bagged_soft";
    }
    return "standard";
}

Fragility fragility_from_string(const std::string& s) {
    if (s == "standard") return Fragility::standard;
    if (s == "book") return Fragility::book;
    if (s == "lightweight_box") return Fragility::lightweight_box;
    if (s == "bagged_soft") return Fragility::bagged_soft;
    throw ConfigError("unknown fragility class: " + s);
}

const char* to_string(OutcomeClass c) {
    switch (c) {
        case OutcomeClass::success: return "success";
        case OutcomeClass::unproductive: return "unproductive";
        case OutcomeClass::amnesty: return "amnesty";
        case OutcomeClass::damage: return "damage";
        case OutcomeClass::other: return "other";
    }
    return "other";
}

OutcomeClass outcome_from_string(const std::string& s) {
    if (s == "success") return OutcomeClass::success;
    if (s == "unproductive") return OutcomeClass::unproductive;
    if (s == "amnesty") return OutcomeClass::amnesty;
    if (s == "damage") return OutcomeClass::damage;
    if (s == "other") return OutcomeClass::other;
    throw ConfigError("unknown outcome class: " + s);
}

const char* to_string(BehaviorKind k) {
    switch (k) {
        case BehaviorKind::direct_insert: return "direct_insert";
        case BehaviorKind::stack: return "stack";
        case BehaviorKind::direct_sweep: return "direct_sweep";
        case BehaviorKind::corner_sweep: return "corner_sweep";
        case BehaviorKind::item_push_sweep: return "item_push_sweep";
    }
    return "direct_insert";
}

BehaviorKind behavior_from_string(const std::string& s) {
    if (s == "direct_insert") return BehaviorKind::direct_insert;
    if (s == "stack") return BehaviorKind::stack;
    if (s == "direct_sweep") return BehaviorKind::direct_sweep;
    if (s == "corner_sweep") return BehaviorKind::corner_sweep;
    if (s == "item_push_sweep") return BehaviorKind::item_push_sweep;
    throw ConfigError("unknown behavior kind: " + s);
}

const char* to_string(EstimateSource s) {
    switch (s) {
        case EstimateSource::cat1: return "cat1";
        case EstimateSource::cat2a: return "cat2a";
        case EstimateSource::cat2b: return "cat2b";
    }
    return "cat2a";
}

EstimateSource estimate_source_from_string(const std::string& s) {
    if (s == "cat1") return EstimateSource::cat1;
    if (s == "cat2a") return EstimateSource::cat2a;
    if (s == "cat2b") return EstimateSource::cat2b;
    throw ConfigError("unknown estimate source: " + s);
}

int Item::min_width_mm() const {
    int w = static_cast<int>(std::llround(width_mm * (1.0 - compressibility)));
    return std::max(1, w);
}

void Item::validate() const {
    if (width_mm <= 0 || height_mm <= 0 || depth_mm <= 0)
        throw ConfigError("item dimensions must be positive");
    if (compressibility < 0.0 || compressibility >= 1.0)
        throw ConfigError("compressibility must be in [0, 1)");
    if (mass_g < 0) throw ConfigError("item mass must be non-negative");
}

int Placement::min_width_mm() const {
    int rigid = rigid_width_mm();
    int w = static_cast<int>(std::llround(rigid * (1.0 - item.compressibility)));
    return std::max(1, w);
}

void BinState::validate() const {
    if (width_mm <= 0 || height_mm <= 0 || depth_mm <= 0)
        throw ConfigError("bin dimensions must be positive");
    if (lip_height_mm < 0 || lip_height_mm >= height_mm)
        throw ConfigError("bin lip height out of range");
    int prev_right = 0;
    int min_total = 0;
    for (const auto& p : placements) {
        if (p.x_mm < 0 || p.right_mm() > width_mm)
            throw InvariantViolation("placement outside bin");
        if (p.x_mm < prev_right)
            throw InvariantViolation("placements overlap");
        if (p.current_width_mm < p.min_width_mm() || p.current_width_mm > p.rigid_width_mm())
            throw InvariantViolation("placement width outside compression range");
        prev_right = p.right_mm();
        min_total += p.min_width_mm();
    }
    if (min_total > width_mm)
        throw InvariantViolation("compressed widths exceed bin width");
}

int BinState::occupied_width_mm() const {
    int total = 0;
    for (const auto& p : placements) total += p.current_width_mm;
    return total;
}

double BinState::fill_fraction() const {
    return width_mm > 0 ? static_cast<double>(occupied_width_mm()) / width_mm : 0.0;
}

BinState::Gap BinState::widest_gap() const {
    Gap best{0, 0};
    int cursor = 0;
    for (const auto& p : placements) {
        if (p.x_mm - cursor > best.width_mm) best = {cursor, p.x_mm - cursor};
        cursor = p.right_mm();
    }
    if (width_mm - cursor > best.width_mm) best = {cursor, width_mm - cursor};
    return best;
}

BinState::Gap BinState::gap_at(int x) const {
    int lo = 0;
    int hi = width_mm;
    for (const auto& p : placements) {
        if (p.right_mm() <= x) {
            lo = std::max(lo, p.right_mm());
        } else if (p.x_mm > x) {
            hi = std::min(hi, p.x_mm);
            break;
        } else {
            return {x, 0};  // x lies inside an item
        }
    }
    return {lo, hi - lo};
}

int true_free_width(const BinState& bin, bool assume_rigid) {
    int sum = 0;
    for (const auto& p : bin.placements)
        sum += assume_rigid ? p.rigid_width_mm() : p.min_width_mm();
    return std::max(0, bin.width_mm - sum);
}

void compress_to_span(std::vector<Placement>& placements, int span_mm) {
    long long current = 0, minimum = 0;
    for (const auto& p : placements) {
        current += p.current_width_mm;
        minimum += p.min_width_mm();
    }
    if (current <= span_mm) return;
    if (minimum > span_mm) throw OverfullBin("compression allowance exceeded");

    long long need = current - span_mm;
    long long slack = current - minimum;
    // Same fraction of each item's slack, floor first, then hand the integer
    // residue to the leftmost items still holding slack.
    double f = static_cast<double>(need) / static_cast<double>(slack);
    std::vector<int> reduction(placements.size());
    long long taken = 0;
    for (size_t i = 0; i < placements.size(); ++i) {
        int s = placements[i].current_width_mm - placements[i].min_width_mm();
        reduction[i] = static_cast<int>(std::floor(f * s));
        taken += reduction[i];
    }
    for (size_t i = 0; i < placements.size() && taken < need; ++i) {
        int s = placements[i].current_width_mm - placements[i].min_width_mm();
        if (reduction[i] < s) {
            ++reduction[i];
            ++taken;
        }
    }
    for (size_t i = 0; i < placements.size(); ++i)
        placements[i].current_width_mm -= reduction[i];
}

namespace {

// Push from the right so every right edge ends up <= `bound`. Items slide
// left only when contacted, forming a contact chain; if the chain reaches
// past the wall the whole pressed stack compresses uniformly into [0, bound].
// `side` is ordered by x and stays ordered.
void pack_left_of(std::vector<Placement>& side, int bound) {
    int b = bound;
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
        if (it->right_mm() <= b) break;  // nothing pushes items further left
        it->x_mm = b - it->current_width_mm;  // may be negative transiently
        b = it->x_mm;
    }
    if (!side.empty() && side.front().x_mm < 0) {
        compress_to_span(side, bound);
        int x = 0;
        for (auto& p : side) {
            p.x_mm = x;
            x = p.right_mm();
        }
    }
}

void mirror(std::vector<Placement>& side, int width) {
    for (auto& p : side) p.x_mm = width - p.right_mm();
    std::reverse(side.begin(), side.end());
}

}  // namespace

BinState apply_placement(const BinState& bin, const Item& item, int x_mm, Orientation orient) {
    Placement inserted;
    inserted.item = item;
    inserted.orient = orient;
    inserted.current_width_mm = inserted.rigid_width_mm();
    int w = inserted.current_width_mm;
    if (x_mm < 0 || x_mm + w > bin.width_mm)
        throw OverfullBin("placement outside bin walls");

    std::vector<Placement> left, right;
    for (const auto& p : bin.placements) {
        if (p.right_mm() <= x_mm) {
            left.push_back(p);
        } else if (p.x_mm >= x_mm + w) {
            right.push_back(p);
        } else {
            // Overlapped: displace toward the nearer wall, ties to the left.
            int center = p.x_mm + p.current_width_mm / 2;
            if (center * 2 <= bin.width_mm) left.push_back(p);
            else right.push_back(p);
        }
    }

    long long left_min = 0, right_min = 0;
    for (const auto& p : left) left_min += p.min_width_mm();
    for (const auto& p : right) right_min += p.min_width_mm();
    if (left_min > x_mm || right_min > bin.width_mm - (x_mm + w))
        throw OverfullBin("insert does not fit under compression allowance");

    pack_left_of(left, x_mm);
    // The right side is the mirror problem.
    mirror(right, bin.width_mm);
    pack_left_of(right, bin.width_mm - (x_mm + w));
    mirror(right, bin.width_mm);

    inserted.x_mm = x_mm;

    BinState out = bin;
    out.placements.clear();
    out.placements.reserve(left.size() + right.size() + 1);
    for (const auto& p : left) out.placements.push_back(p);
    out.placements.push_back(inserted);
    for (const auto& p : right) out.placements.push_back(p);
    out.validate();
    return out;
}

void Pod::validate() const {
    if (bins.empty() || bins.size() > 52)
        throw ConfigError("pod must hold between 1 and 52 bins");
    for (const auto& b : bins) b.validate();
}

bool BufferWall::has_free_slot() const {
    for (const auto& s : slots_)
        if (!s.has_value()) return true;
    return false;
}

size_t BufferWall::occupied() const {
    size_t n = 0;
    for (const auto& s : slots_)
        if (s.has_value()) ++n;
    return n;
}

void BufferWall::put(const Item& item) {
    for (auto& s : slots_) {
        if (!s.has_value()) {
            s = item;
            return;
        }
    }
    throw InvariantViolation("buffer wall overfull");
}

Item BufferWall::take(uint64_t item_id) {
    for (auto& s : slots_) {
        if (s.has_value() && s->id == item_id) {
            Item out = *s;
            s.reset();
            return out;
        }
    }
    throw InvariantViolation("item not in buffer wall");
}

std::vector<const Item*> BufferWall::items() const {
    std::vector<const Item*> out;
    for (const auto& s : slots_)
        if (s.has_value()) out.push_back(&*s);
    return out;
}

int BufferWall::absorb_recycled() {
    int moved = 0;
    while (!recycle_queue_.empty() && has_free_slot()) {
        put(recycle_queue_.front());
        recycle_queue_.pop_front();
        ++moved;
    }
    return moved;
}

void OutcomeRecord::validate() const {
    bool sweep = is_sweep_family(behavior);
    if (sweep != kinesthetic_space_mm.has_value())
        throw InvariantViolation("kinesthetic space must be present exactly for sweep-family attempts");
    if (cycle_time_s < 0.0) throw InvariantViolation("negative cycle time");
}

void WorkcellClock::record_attempt(double cycle_time_s, bool success) {
    events_.emplace_back(cycle_time_s, success);
    t_sum_ += cycle_time_s;
    if (success) ++n_success_;
    while (events_.size() > window_) {
        auto [t, s] = events_.front();
        events_.pop_front();
        t_sum_ -= t;
        if (s) --n_success_;
    }
}

double WorkcellClock::success_rate(double fallback) const {
    if (events_.empty()) return fallback;
    return static_cast<double>(n_success_) / static_cast<double>(events_.size());
}

void ItemDistribution::validate() const {
    if (classes.empty()) throw ConfigError("item mixture is empty");
    double total = 0.0;
    for (const auto& c : classes) {
        if (c.weight < 0.0) throw ConfigError("item class weight must be non-negative");
        total += c.weight;
        if (c.width_mm_min <= 0 || c.width_mm_max < c.width_mm_min ||
            c.height_mm_min <= 0 || c.height_mm_max < c.height_mm_min ||
            c.depth_mm_min <= 0 || c.depth_mm_max < c.depth_mm_min)
            throw ConfigError("item class dimension range invalid: " + c.name);
        if (c.compress_min < 0.0 || c.compress_max >= 1.0 || c.compress_max < c.compress_min)
            throw ConfigError("item class compressibility range invalid: " + c.name);
        if (c.mass_g_min < 0 || c.mass_g_max < c.mass_g_min)
            throw ConfigError("item class mass range invalid: " + c.name);
    }
    if (total <= 0.0) throw ConfigError("item mixture weights sum to zero");
}

Item sample_item(const ItemDistribution& dist, Rng& rng, uint64_t id) {
    dist.validate();
    std::vector<double> weights;
    weights.reserve(dist.classes.size());
    for (const auto& c : dist.classes) weights.push_back(c.weight);
    const ItemClassConfig& c = dist.classes[rng.pick_weighted(weights)];

    Item item;
    item.id = id;
    item.width_mm = static_cast<int>(rng.uniform_int(c.width_mm_min, c.width_mm_max));
    item.height_mm = static_cast<int>(rng.uniform_int(c.height_mm_min, c.height_mm_max));
    item.depth_mm = static_cast<int>(rng.uniform_int(c.depth_mm_min, c.depth_mm_max));
    item.mass_g = static_cast<int>(rng.uniform_int(c.mass_g_min, c.mass_g_max));
    item.compressibility = rng.uniform(c.compress_min, c.compress_max);
    item.deformable = rng.bernoulli(c.deformable_prob);
    item.fragility = c.fragility;
    item.manifest_dims_error_mm =
        static_cast<int>(std::llround(rng.normal(0.0, dist.manifest_error_std_mm)));
    item.validate();
    return item;
}

}  // namespace stowsim
