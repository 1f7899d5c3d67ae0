#include "perception.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace stowsim {

void MultiMask::validate() const {
    size_t n = static_cast<size_t>(width_cells) * height_cells;
    if (bin_mask.size() != n || item_instances.size() != n || band_mask.size() != n ||
        depth_mm.size() != n)
        throw InvariantViolation("multi-mask layers disagree on dimensions");
    for (size_t i = 0; i < n; ++i) {
        if (item_instances[i] >= 0 && !bin_mask[i])
            throw InvariantViolation("item instance outside bin mask");
        if (bin_mask[i] && depth_mm[i] <= 0)
            throw InvariantViolation("depth layer must be positive inside the bin");
    }
}

namespace {

// Nearest-edge quantization of a mm interval onto the cell grid.
std::pair<int, int> cell_span(double lo_mm, double hi_mm, int cell, int max_cells) {
    int c0 = static_cast<int>(std::floor(lo_mm / cell + 0.5));
    int c1 = static_cast<int>(std::floor(hi_mm / cell + 0.5)) - 1;
    if (c1 < c0) c1 = c0;  // keep at least one cell
    c0 = std::clamp(c0, 0, max_cells - 1);
    c1 = std::clamp(c1, 0, max_cells - 1);
    return {c0, c1};
}

}  // namespace

MultiMask render_multimask(const BinState& bin, const PerceptionNoise& noise, Rng& rng,
                           int cell_size_mm) {
    MultiMask m;
    m.cell_size_mm = cell_size_mm;
    m.width_cells = bin.width_mm / cell_size_mm;
    m.height_cells = bin.height_mm / cell_size_mm;
    m.bin_width_mm = bin.width_mm;
    m.bin_height_mm = bin.height_mm;
    m.bin_depth_mm = bin.depth_mm;
    size_t n = static_cast<size_t>(m.width_cells) * m.height_cells;
    m.bin_mask.assign(n, 1);
    m.item_instances.assign(n, -1);
    m.band_mask.assign(n, 0);
    m.depth_mm.assign(n, bin.depth_mm);

    struct Extent {
        double x0, x1;
        int y_cells;
        int depth;
        int32_t id;
        bool visible;
    };
    std::vector<Extent> extents;
    extents.reserve(bin.placements.size());

    int32_t next_id = 0;
    for (const auto& p : bin.placements) {
        Extent e;
        double center = p.x_mm + p.current_width_mm / 2.0;
        double w = p.current_width_mm + noise.item_width_bias_mm;
        if (noise.item_width_std_mm > 0.0) w += rng.normal(0.0, noise.item_width_std_mm);
        w = std::max(static_cast<double>(cell_size_mm), w);
        e.x0 = std::max(0.0, center - w / 2.0);
        e.x1 = std::min(static_cast<double>(bin.width_mm), center + w / 2.0);
        e.y_cells = std::max(1, (p.frontal_height_mm() + cell_size_mm / 2) / cell_size_mm);
        e.y_cells = std::min(e.y_cells, m.height_cells);
        e.depth = std::max(1, p.depth_offset_mm);
        e.id = next_id++;
        e.visible = true;
        // Short items sitting behind the lip are occasionally missed outright.
        if (noise.occlusion_below_lip_prob > 0.0 && rng.bernoulli(noise.occlusion_below_lip_prob)) {
            if (p.frontal_height_mm() <= noise.occlusion_drop_height_mm) {
                e.visible = false;
            } else {
                // Truncated: the band below the lip is not attributed to the item.
                int lip_cells = (bin.lip_height_mm + cell_size_mm / 2) / cell_size_mm;
                e.y_cells = std::max(1, e.y_cells - lip_cells);
            }
        }
        extents.push_back(e);
    }

    // Adjacent perceived instances occasionally merge into one id.
    for (size_t i = 1; i < extents.size(); ++i) {
        if (!extents[i].visible || !extents[i - 1].visible) continue;
        bool adjacent = extents[i].x0 - extents[i - 1].x1 <= cell_size_mm;
        if (adjacent && noise.segmentation_merge_prob > 0.0 &&
            rng.bernoulli(noise.segmentation_merge_prob)) {
            extents[i].id = extents[i - 1].id;
        }
    }

    for (const auto& e : extents) {
        if (!e.visible) continue;
        auto [c0, c1] = cell_span(e.x0, e.x1, cell_size_mm, m.width_cells);
        for (int y = 0; y < e.y_cells; ++y) {
            for (int x = c0; x <= c1; ++x) {
                size_t i = m.idx(x, y);
                m.item_instances[i] = e.id;
                m.depth_mm[i] = e.depth;
            }
        }
    }

    for (const auto& band : bin.band_segments) {
        int band_w = 50;  // band strap height in mm; geometry only, never occludes
        auto [r0, r1] = cell_span(band.y_mm, band.y_mm + band_w, cell_size_mm, m.height_cells);
        for (int y = r0; y <= r1; ++y)
            for (int x = 0; x < m.width_cells; ++x) m.band_mask[m.idx(x, y)] = 1;
    }

    return m;
}

std::vector<PerceivedBox> perceived_items(const MultiMask& mask) {
    std::map<int32_t, PerceivedBox> boxes;
    for (int y = 0; y < mask.height_cells; ++y) {
        for (int x = 0; x < mask.width_cells; ++x) {
            int32_t id = mask.item_instances[mask.idx(x, y)];
            if (id < 0) continue;
            auto it = boxes.find(id);
            if (it == boxes.end()) {
                PerceivedBox b;
                b.instance_id = id;
                b.x_mm = x;
                b.y_mm = y;
                b.width_mm = x;   // store max x/y in these fields until finalized
                b.height_mm = y;
                b.front_depth_mm = mask.depth_mm[mask.idx(x, y)];
                boxes.emplace(id, b);
            } else {
                PerceivedBox& b = it->second;
                b.x_mm = std::min(b.x_mm, x);
                b.y_mm = std::min(b.y_mm, y);
                b.width_mm = std::max(b.width_mm, x);
                b.height_mm = std::max(b.height_mm, y);
                b.front_depth_mm = std::min(b.front_depth_mm, mask.depth_mm[mask.idx(x, y)]);
            }
        }
    }
    std::vector<PerceivedBox> out;
    out.reserve(boxes.size());
    for (auto& [id, b] : boxes) {
        PerceivedBox r = b;
        r.x_mm = b.x_mm * mask.cell_size_mm;
        r.y_mm = b.y_mm * mask.cell_size_mm;
        r.width_mm = (b.width_mm - b.x_mm + 1) * mask.cell_size_mm;
        r.height_mm = (b.height_mm - b.y_mm + 1) * mask.cell_size_mm;
        out.push_back(r);
    }
    return out;
}

std::string dump_layer(const MultiMask& mask, const std::string& layer) {
    std::ostringstream os;
    auto emit = [&](auto value_of, int maxval, bool pgm) {
        os << (pgm ? "P2" : "P1") << "\n";
        os << "# cell_size_mm " << mask.cell_size_mm << "\n";
        os << mask.width_cells << " " << mask.height_cells << "\n";
        if (pgm) os << maxval << "\n";
        for (int y = mask.height_cells - 1; y >= 0; --y) {  // top row first
            for (int x = 0; x < mask.width_cells; ++x) {
                if (x) os << " ";
                os << value_of(x, y);
            }
            os << "\n";
        }
    };
    if (layer == "bin") {
        emit([&](int x, int y) { return static_cast<int>(mask.bin_mask[mask.idx(x, y)]); }, 1,
             false);
    } else if (layer == "bands") {
        emit([&](int x, int y) { return static_cast<int>(mask.band_mask[mask.idx(x, y)]); }, 1,
             false);
    } else if (layer == "items") {
        int32_t maxid = 0;
        for (int32_t v : mask.item_instances) maxid = std::max(maxid, v + 1);
        emit([&](int x, int y) { return mask.item_instances[mask.idx(x, y)] + 1; },
             std::max(1, maxid), true);
    } else if (layer == "depth") {
        emit([&](int x, int y) { return mask.depth_mm[mask.idx(x, y)]; }, mask.bin_depth_mm, true);
    } else {
        throw ConfigError("unknown mask layer: " + layer);
    }
    return os.str();
}

}  // namespace stowsim
