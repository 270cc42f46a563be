#pragma once

#include "ramanujan/connection.hpp"

#include <map>
#include <string>
#include <vector>

namespace ramanujan {

// Raw text of data/connection_matrices.txt, embedded at build time.
const char* connection_data_text();

// One parsed chart block: the delta-scaled coefficient polynomials exactly
// as listed, keyed by (row, column, coordinate), 1-based indices.
struct RawChartData {
    std::string name;
    unsigned g = 0;
    std::vector<std::string> coords;
    MultiPoly delta;
    std::string curve;
    std::vector<std::string> frame_labels;
    std::map<std::tuple<unsigned, unsigned, std::string>, MultiPoly> entries;
    std::vector<std::string> notes; // data oddities found while loading
};

// One parsed morphism block.
struct RawMorphismData {
    std::string name;
    std::string source, target;
    std::map<std::string, RatFunc> coordinate_map;
    std::vector<std::tuple<unsigned, unsigned, RatFunc>> frame_entries; // overrides on identity
};

struct BuiltinData {
    std::map<std::string, RawChartData> charts;
    std::map<std::string, RawMorphismData> morphisms;
};

// Parse arbitrary data text (used directly by tests) and the embedded copy
// (parsed once, cached).
BuiltinData parse_connection_data(const std::string& text);
const BuiltinData& builtin_data();

// Chart domain / connection chart / morphism constructed from the data.
// Chart names: "weierstrass", "e", "b".  Morphism names: "e_to_weierstrass",
// "b_to_e".  printed_chart uses the listed matrices verbatim (delta-scaled
// sums divided by delta); derived_chart("e") pulls the weierstrass chart
// back along e_to_weierstrass, derived_chart("b") pulls that result back
// along b_to_e.  derived_chart("weierstrass") is the printed chart.
ChartDomain builtin_domain(const std::string& chart_name);
ConnectionChart printed_chart(const std::string& chart_name);
ChartMorphism builtin_morphism(const std::string& morphism_name);
ConnectionChart derived_chart(const std::string& chart_name);

// Smallest-power clearing: f * delta^k as a polynomial, k minimal.  Throws
// std::domain_error if no k <= max_power works.
MultiPoly clear_delta(const RatFunc& f, const MultiPoly& delta, unsigned max_power = 8);

} // namespace ramanujan
