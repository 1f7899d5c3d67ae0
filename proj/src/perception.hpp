#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "core_model.hpp"
#include "rng.hpp"

namespace stowsim {

// Layered orthographic frontal view of one bin. x runs along the bin width,
// y upward from the floor; all layers share dimensions.
struct MultiMask {
    int width_cells = 0;
    int height_cells = 0;
    int cell_size_mm = 10;
    int bin_width_mm = 0;
    int bin_height_mm = 0;
    int bin_depth_mm = 0;
    std::vector<uint8_t> bin_mask;        // 1 inside the bin
    std::vector<int32_t> item_instances;  // instance id per cell, -1 empty
    std::vector<uint8_t> band_mask;
    std::vector<int32_t> depth_mm;        // front-face distance per cell

    size_t idx(int x, int y) const { return static_cast<size_t>(y) * width_cells + x; }
    bool in_grid(int x, int y) const {
        return x >= 0 && x < width_cells && y >= 0 && y < height_cells;
    }
    void validate() const;
};

struct PerceivedBox {
    int32_t instance_id = 0;
    int x_mm = 0;       // left edge
    int y_mm = 0;       // bottom edge
    int width_mm = 0;
    int height_mm = 0;
    int front_depth_mm = 0;  // min depth over the instance cells

    int right_mm() const { return x_mm + width_mm; }
};

// Renders the perceived multi-mask: true extents plus sampled width noise,
// lip occlusion drops or truncates short items, adjacent instances may merge.
// Bands are rendered but never occlude items.
MultiMask render_multimask(const BinState& bin, const PerceptionNoise& noise, Rng& rng,
                           int cell_size_mm);

// Axis-aligned bounding box per instance id, ordered by id.
std::vector<PerceivedBox> perceived_items(const MultiMask& mask);

// PGM-style text dump of one layer ("bin", "items", "bands", "depth"),
// top row first. Used for golden tests and the dump-masks subcommand.
std::string dump_layer(const MultiMask& mask, const std::string& layer);

}  // namespace stowsim
