#include "space_affordance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace stowsim {

void SpaceEstimate::finalize() {
    directly_usable_mm = std::max(0.0, directly_usable_mm);
    rigid_sweep_mm = std::max(0.0, rigid_sweep_mm);
    if (kinesthetic_mm.has_value()) {
        final_mm = std::max(0.0, *kinesthetic_mm);
        source = EstimateSource::cat2b;
    } else if (directly_usable_mm >= rigid_sweep_mm) {
        final_mm = directly_usable_mm;
        source = EstimateSource::cat1;
    } else {
        final_mm = rigid_sweep_mm;
        source = EstimateSource::cat2a;
    }
}

int estimate_cat1(const MultiMask& mask) {
    // A column is blocked if any cell in it holds an instance whose front
    // face is in the front half of the bin depth.
    int mid = mask.bin_depth_mm / 2;
    std::vector<uint8_t> blocked(mask.width_cells, 0);
    for (int x = 0; x < mask.width_cells; ++x) {
        for (int y = 0; y < mask.height_cells; ++y) {
            size_t i = mask.idx(x, y);
            if (mask.item_instances[i] >= 0 && mask.depth_mm[i] <= mid) {
                blocked[x] = 1;
                break;
            }
        }
    }
    int best = 0, run = 0;
    for (int x = 0; x < mask.width_cells; ++x) {
        run = blocked[x] ? 0 : run + 1;
        best = std::max(best, run);
    }
    return best * mask.cell_size_mm;
}

int estimate_cat2a(const MultiMask& mask) {
    int total = 0;
    for (const auto& box : perceived_items(mask)) total += box.width_mm;
    return std::max(0, mask.bin_width_mm - total);
}

SpaceEstimate update_kinesthetic(const SpaceEstimate& prev, double created_space_mm,
                                 double stowed_item_width_mm) {
    SpaceEstimate out = prev;
    double remaining = created_space_mm - stowed_item_width_mm;
    out.clamped = remaining < 0.0;
    out.kinesthetic_mm = std::max(0.0, remaining);
    out.finalize();
    return out;
}

CostMap build_costmap(const MultiMask& mask, AffordanceKind task) {
    CostMap map;
    map.width_cells = mask.width_cells;
    map.height_cells = mask.height_cells;
    map.cell_size_mm = mask.cell_size_mm;
    map.provenance = std::string(task == AffordanceKind::item_insert ? "item" : "plank") +
                     ":bin+items,chebyshev";
    size_t n = static_cast<size_t>(map.width_cells) * map.height_cells;
    const int inf = std::numeric_limits<int>::max() / 4;
    map.clearance.assign(n, inf);

    // Obstacles: item cells plus everything outside the bin walls. Border
    // cells therefore start at clearance 1.
    for (int y = 0; y < map.height_cells; ++y) {
        for (int x = 0; x < map.width_cells; ++x) {
            size_t i = map.idx(x, y);
            if (mask.item_instances[i] >= 0 || !mask.bin_mask[i]) {
                map.clearance[i] = 0;
            } else {
                int wall = std::min(std::min(x, y),
                                    std::min(map.width_cells - 1 - x, map.height_cells - 1 - y)) +
                           1;
                map.clearance[i] = wall;
            }
        }
    }
    // Two-pass chessboard distance transform.
    auto relax = [&](int x, int y, int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= map.width_cells || ny >= map.height_cells) return;
        map.clearance[map.idx(x, y)] =
            std::min(map.clearance[map.idx(x, y)], map.clearance[map.idx(nx, ny)] + 1);
    };
    for (int y = 0; y < map.height_cells; ++y) {
        for (int x = 0; x < map.width_cells; ++x) {
            relax(x, y, x - 1, y);
            relax(x, y, x, y - 1);
            relax(x, y, x - 1, y - 1);
            relax(x, y, x + 1, y - 1);
        }
    }
    for (int y = map.height_cells - 1; y >= 0; --y) {
        for (int x = map.width_cells - 1; x >= 0; --x) {
            relax(x, y, x + 1, y);
            relax(x, y, x, y + 1);
            relax(x, y, x + 1, y + 1);
            relax(x, y, x - 1, y + 1);
        }
    }
    return map;
}

namespace {

struct Pose {
    double cost = 0.0;
    int x = 0, y = 0, rot = 0;
    int min_clearance = 0;
};

// Integral images over the scaled integer costs and the obstacle mask make
// each pose O(1); the naive route lives in the tests as the oracle.
std::optional<Pose> best_pose(const CostMap& map, int kw, int kh, int rot) {
    int W = map.width_cells, H = map.height_cells;
    if (kw <= 0 || kh <= 0 || kw > W || kh > H) return std::nullopt;

    std::vector<int64_t> cost_sum(static_cast<size_t>(W + 1) * (H + 1), 0);
    std::vector<int32_t> obst_sum(static_cast<size_t>(W + 1) * (H + 1), 0);
    auto at = [&](auto& v, int x, int y) -> auto& { return v[static_cast<size_t>(y) * (W + 1) + x]; };
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            int d = std::min(map.clearance[map.idx(x, y)], CostMap::kScale - 1);
            int64_t c = CostMap::kScale - d;
            at(cost_sum, x + 1, y + 1) =
                c + at(cost_sum, x, y + 1) + at(cost_sum, x + 1, y) - at(cost_sum, x, y);
            at(obst_sum, x + 1, y + 1) = (d == 0 ? 1 : 0) + at(obst_sum, x, y + 1) +
                                         at(obst_sum, x + 1, y) - at(obst_sum, x, y);
        }
    }
    auto rect = [&](auto& v, int x0, int y0, int x1, int y1) {  // half-open
        return at(v, x1, y1) - at(v, x0, y1) - at(v, x1, y0) + at(v, x0, y0);
    };

    std::optional<Pose> best;
    for (int y = 0; y + kh <= H; ++y) {
        for (int x = 0; x + kw <= W; ++x) {
            if (rect(obst_sum, x, y, x + kw, y + kh) > 0) continue;
            double c = static_cast<double>(rect(cost_sum, x, y, x + kw, y + kh)) / CostMap::kScale;
            if (!best || c < best->cost ||
                (c == best->cost &&
                 std::tuple(x, y, rot) < std::tuple(best->x, best->y, best->rot))) {
                best = Pose{c, x, y, rot, 0};
            }
        }
    }
    if (best) {
        int dmin = std::numeric_limits<int>::max();
        for (int y = best->y; y < best->y + kh; ++y)
            for (int x = best->x; x < best->x + kw; ++x)
                dmin = std::min(dmin, map.clearance[map.idx(x, y)]);
        best->min_clearance = dmin;
    }
    return best;
}

}  // namespace

std::optional<Affordance> generate_affordance(const CostMap& map, int kernel_width_mm,
                                              int kernel_height_mm, bool allow_rotation,
                                              AffordanceKind kind) {
    int cell = map.cell_size_mm;
    auto cells = [cell](int mm) { return (mm + cell - 1) / cell; };
    int kw = cells(kernel_width_mm);
    int kh = cells(kernel_height_mm);

    std::optional<Pose> best = best_pose(map, kw, kh, 0);
    if (allow_rotation && kw != kh) {
        auto rotated = best_pose(map, kh, kw, 90);
        // Overall order: cost, then x, then y, then 0-degree rotation.
        auto better = [](const Pose& a, const Pose& b) {
            return std::tuple(a.cost, a.x, a.y, a.rot) < std::tuple(b.cost, b.x, b.y, b.rot);
        };
        if (rotated && (!best || better(*rotated, *best))) best = rotated;
    }
    if (!best) return std::nullopt;

    Affordance a;
    a.kind = kind;
    a.x_mm = best->x * cell;
    a.y_mm = best->y * cell;
    a.rotation_deg = best->rot;
    a.kernel_width_mm = kernel_width_mm;
    a.kernel_height_mm = kernel_height_mm;
    a.margin_mm = std::max(0, (best->min_clearance - 1) * cell);
    a.cost = best->cost;
    return a;
}

std::optional<Affordance> plank_affordance(const MultiMask& mask, const CostMap& map,
                                           BehaviorKind kind, int plank_thickness_mm,
                                           int wall_adjacency_tol_mm) {
    if (kind == BehaviorKind::direct_sweep) {
        // Thin vertical blade dropped into free space between items.
        return generate_affordance(map, plank_thickness_mm, mask.bin_height_mm, false,
                                   AffordanceKind::plank_insert);
    }

    auto boxes = perceived_items(mask);
    if (boxes.empty()) return std::nullopt;
    const PerceivedBox* anchor = nullptr;
    for (const auto& b : boxes) {
        bool left_wall = b.x_mm <= wall_adjacency_tol_mm;
        bool right_wall = b.right_mm() >= mask.bin_width_mm - wall_adjacency_tol_mm;
        if (left_wall || right_wall) {
            anchor = &b;
            break;
        }
    }
    if (!anchor) return std::nullopt;

    Affordance a;
    a.kind = AffordanceKind::plank_insert;
    a.kernel_width_mm = plank_thickness_mm;
    a.kernel_height_mm = mask.bin_height_mm;
    a.rotation_deg = 0;
    a.cost = 0.0;
    a.margin_mm = 0;
    if (kind == BehaviorKind::corner_sweep) {
        // Rotated entry above the wall-adjacent item needs headroom.
        int clearance = mask.bin_height_mm - (anchor->y_mm + anchor->height_mm);
        if (clearance < plank_thickness_mm) return std::nullopt;
        a.x_mm = anchor->x_mm;
        a.y_mm = anchor->y_mm + anchor->height_mm;
        a.margin_mm = clearance - plank_thickness_mm;
    } else {  // item_push_sweep: start at the wall-adjacent item and push deeper
        a.x_mm = anchor->x_mm;
        a.y_mm = anchor->y_mm;
    }
    return a;
}

std::string dump_costmap(const CostMap& map, const std::optional<Affordance>& pose) {
    std::ostringstream os;
    os << "# cost map " << map.width_cells << "x" << map.height_cells << " (" << map.provenance
       << ")";
    if (pose)
        os << " pose=(" << pose->x_mm << "," << pose->y_mm << ") rot=" << pose->rotation_deg
           << " cost=" << pose->cost << " margin_mm=" << pose->margin_mm;
    os << "\n";
    int cell = map.cell_size_mm;
    auto cells = [cell](int mm) { return (mm + cell - 1) / cell; };
    for (int y = map.height_cells - 1; y >= 0; --y) {
        for (int x = 0; x < map.width_cells; ++x) {
            char ch;
            if (pose) {
                int kw = pose->rotation_deg == 0 ? cells(pose->kernel_width_mm)
                                                 : cells(pose->kernel_height_mm);
                int kh = pose->rotation_deg == 0 ? cells(pose->kernel_height_mm)
                                                 : cells(pose->kernel_width_mm);
                int px = pose->x_mm / cell, py = pose->y_mm / cell;
                if (x >= px && x < px + kw && y >= py && y < py + kh) {
                    os << '*';
                    continue;
                }
            }
            if (map.obstacle(x, y)) {
                ch = '#';
            } else {
                // Deciles of cost for a readable overlay.
                int decile = static_cast<int>(map.cost(x, y) * 10.0);
                ch = static_cast<char>('0' + std::clamp(decile, 0, 9));
            }
            os << ch;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace stowsim
