#include "termnet/exporters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "termnet/error.hpp"

namespace termnet {
namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

struct CsvRow {
    std::string source, target;
    int source_tier = 0, target_tier = 0;
};

std::vector<CsvRow> sorted_rows(const Nnht& net) {
    std::vector<CsvRow> rows;
    rows.reserve(net.edges.size());
    for (const auto& [s, t] : net.edges) {
        rows.push_back({net.nodes[s].term, net.nodes[t].term, net.nodes[s].tier,
                        net.nodes[t].tier});
    }
    std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    return rows;
}

[[noreturn]] void csv_error(const std::filesystem::path& path, std::size_t lineno,
                            const std::string& what) {
    throw Error(path.string() + ":" + std::to_string(lineno) + ": " + what);
}

// Parses one double-quoted field starting at pos; advances pos past the
// closing quote. Doubled quotes inside the field decode to one quote.
std::string parse_quoted(const std::string& line, std::size_t& pos,
                         const std::filesystem::path& path, std::size_t lineno) {
    if (pos >= line.size() || line[pos] != '"') csv_error(path, lineno, "expected quoted field");
    ++pos;
    std::string out;
    while (pos < line.size()) {
        if (line[pos] == '"') {
            if (pos + 1 < line.size() && line[pos + 1] == '"') {
                out.push_back('"');
                pos += 2;
            } else {
                ++pos;
                return out;
            }
        } else {
            out.push_back(line[pos++]);
        }
    }
    csv_error(path, lineno, "unterminated quoted field");
}

int parse_tier(const std::string& field, const std::filesystem::path& path, std::size_t lineno) {
    if (field.size() != 1 || field[0] < '0' || field[0] > '9')
        csv_error(path, lineno, "tier is not an integer: '" + field + "'");
    int tier = field[0] - '0';
    if (tier < 1 || tier > 3) csv_error(path, lineno, "tier outside 1..3: " + field);
    return tier;
}

}  // namespace

void write_edge_csv(const Nnht& net, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << "source,target,source_tier,target_tier\n";
    for (const auto& row : sorted_rows(net)) {
        out << '"' << row.source << "\",\"" << row.target << "\"," << row.source_tier << ','
            << row.target_tier << '\n';
    }
    if (!out) throw Error("write failed: " + path.string());
}

Nnht read_edge_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());

    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw Error(path.string() + ": empty file, expected header");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "source,target,source_tier,target_tier")
        csv_error(path, lineno, "bad header: '" + line + "'");

    std::map<std::string, int> tiers;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> seen;

    auto note_tier = [&](const std::string& term, int tier, std::size_t ln) {
        if (term.empty()) csv_error(path, ln, "empty term");
        auto [it, inserted] = tiers.emplace(term, tier);
        if (!inserted && it->second != tier)
            csv_error(path, ln, "inconsistent tier for term '" + term + "'");
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t pos = 0;
        std::string source = parse_quoted(line, pos, path, lineno);
        if (pos >= line.size() || line[pos] != ',') csv_error(path, lineno, "expected ','");
        ++pos;
        std::string target = parse_quoted(line, pos, path, lineno);
        if (pos >= line.size() || line[pos] != ',') csv_error(path, lineno, "expected ','");
        ++pos;
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) csv_error(path, lineno, "expected four fields");
        int source_tier = parse_tier(line.substr(pos, comma - pos), path, lineno);
        int target_tier = parse_tier(line.substr(comma + 1), path, lineno);
        if (source_tier >= target_tier)
            csv_error(path, lineno, "edge does not point from a lower tier to a higher one");
        note_tier(source, source_tier, lineno);
        note_tier(target, target_tier, lineno);
        if (!seen.emplace(source, target).second)
            csv_error(path, lineno, "duplicate edge");
        edges.emplace_back(std::move(source), std::move(target));
    }

    Nnht net;
    net.nodes.reserve(tiers.size());
    for (const auto& [term, tier] : tiers) net.nodes.push_back({term, tier, 0});
    std::sort(net.nodes.begin(), net.nodes.end(), [](const NnhtNode& a, const NnhtNode& b) {
        return a.tier != b.tier ? a.tier < b.tier : a.term < b.term;
    });
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < net.nodes.size(); ++i) index[net.nodes[i].term] = i;
    net.edges.reserve(edges.size());
    for (const auto& [s, t] : edges) net.edges.emplace_back(index[s], index[t]);
    return net;
}

void write_gexf(const Nnht& net, const SpiralLayout* layout, const std::filesystem::path& path) {
    std::map<std::string, const SpiralLayout::Placement*> positions;
    if (layout)
        for (const auto& p : layout->placements) positions[p.term] = &p;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\""
           " xmlns:viz=\"http://www.gexf.net/1.2draft/viz\""
           " xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
           " xsi:schemaLocation=\"http://www.gexf.net/1.2draft"
           " http://www.gexf.net/1.2draft/gexf.xsd\" version=\"1.2\">\n";
    out << "  <meta>\n"
           "    <creator>termnet</creator>\n"
           "    <description>three-tier term containment network</description>\n"
           "  </meta>\n";
    out << "  <graph mode=\"static\" defaultedgetype=\"directed\">\n";
    out << "    <attributes class=\"node\">\n"
           "      <attribute id=\"0\" title=\"tier\" type=\"integer\"/>\n"
           "      <attribute id=\"1\" title=\"weight\" type=\"integer\"/>\n"
           "    </attributes>\n";
    out << "    <nodes>\n";
    for (const auto& node : net.nodes) {
        std::string id = xml_escape(node.term);
        out << "      <node id=\"" << id << "\" label=\"" << id << "\">\n";
        out << "        <attvalues>\n"
            << "          <attvalue for=\"0\" value=\"" << node.tier << "\"/>\n"
            << "          <attvalue for=\"1\" value=\"" << node.weight << "\"/>\n"
            << "        </attvalues>\n";
        auto pos = positions.find(node.term);
        if (pos != positions.end()) {
            out << "        <viz:position x=\"" << fmt_double(pos->second->x) << "\" y=\""
                << fmt_double(pos->second->y) << "\" z=\"0\"/>\n";
        }
        out << "      </node>\n";
    }
    out << "    </nodes>\n";
    out << "    <edges>\n";
    std::size_t edge_id = 0;
    for (const auto& row : sorted_rows(net)) {
        out << "      <edge id=\"" << edge_id++ << "\" source=\"" << xml_escape(row.source)
            << "\" target=\"" << xml_escape(row.target) << "\"/>\n";
    }
    out << "    </edges>\n";
    out << "  </graph>\n";
    out << "</gexf>\n";
    if (!out) throw Error("write failed: " + path.string());
}

SpiralLayout spiral_layout(const Nnht& net, double c, double dtheta) {
    if (c <= 0.0 || dtheta <= 0.0) throw Error("spiral parameters must be positive");
    SpiralLayout layout;
    layout.c = c;
    layout.dtheta = dtheta;

    std::vector<const NnhtNode*> order;
    order.reserve(net.nodes.size());
    for (const auto& node : net.nodes) order.push_back(&node);
    std::sort(order.begin(), order.end(), [](const NnhtNode* a, const NnhtNode* b) {
        return a->weight != b->weight ? a->weight > b->weight : a->term < b->term;
    });

    layout.placements.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        double theta = static_cast<double>(i) * dtheta;
        double r = c * theta;
        layout.placements.push_back({order[i]->term, r * std::cos(theta), r * std::sin(theta)});
    }
    return layout;
}

void write_layout_tsv(const SpiralLayout& layout, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    for (const auto& p : layout.placements)
        out << p.term << '\t' << fmt_double(p.x) << '\t' << fmt_double(p.y) << '\n';
    if (!out) throw Error("write failed: " + path.string());
}

}  // namespace termnet
