#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "termnet/nnht.hpp"

namespace termnet {

/// Archimedean spiral placement ordered by descending weight from the center:
/// node i sits at theta = i * dtheta, r = c * theta.
struct SpiralLayout {
    double c = 1.0;
    double dtheta = 0.5;

    struct Placement {
        std::string term;
        double x = 0.0;
        double y = 0.0;
    };
    std::vector<Placement> placements;  // weight desc, term asc
};

/// Edge list CSV: header `source,target,source_tier,target_tier`, term fields
/// double-quoted, rows sorted by (source, target), LF endings. Byte-identical
/// across runs for the same network.
void write_edge_csv(const Nnht& net, const std::filesystem::path& path);

/// Strict reader for the write_edge_csv format. Node weights are absent from
/// the file and come back as zero. Malformed rows, tiers outside 1..3,
/// non-ascending tier pairs, inconsistent tiers and duplicate edges are
/// rejected with their line number.
Nnht read_edge_csv(const std::filesystem::path& path);

/// GEXF 1.2 directed graph with integer node attributes `tier` and `weight`;
/// when a layout is given, nodes carry viz position elements (x, y, 0).
void write_gexf(const Nnht& net, const SpiralLayout* layout, const std::filesystem::path& path);

SpiralLayout spiral_layout(const Nnht& net, double c, double dtheta);

/// `term<TAB>x<TAB>y`, one row per placement, layout order.
void write_layout_tsv(const SpiralLayout& layout, const std::filesystem::path& path);

}  // namespace termnet
