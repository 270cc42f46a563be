#include "ramanujan/builtin_data.hpp"

#include "ramanujan/parse.hpp"

#include <sstream>
#include <stdexcept>

namespace ramanujan {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

// Remainder of the line after the first n whitespace-separated tokens.
std::string rest_after(const std::string& line, std::size_t n) {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < n; ++k) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    return line.substr(pos);
}

unsigned parse_index(const std::string& tok, const std::string& what) {
    try {
        unsigned long v = std::stoul(tok);
        if (v == 0) throw std::invalid_argument("zero");
        return static_cast<unsigned>(v);
    } catch (...) {
        throw std::invalid_argument("connection data: bad " + what + " index '" + tok + "'");
    }
}

} // namespace

BuiltinData parse_connection_data(const std::string& text) {
    BuiltinData data;
    std::istringstream in(text);
    std::string line;
    RawChartData* chart = nullptr;
    RawMorphismData* morphism = nullptr;
    std::vector<std::tuple<unsigned, unsigned, unsigned, unsigned>> pending_neg;
    int lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("connection data line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];

        if (kw == "chart") {
            if (chart || morphism) fail("nested block");
            if (toks.size() != 2) fail("chart needs a name");
            chart = &data.charts[toks[1]];
            chart->name = toks[1];
            pending_neg.clear();
        } else if (kw == "morphism") {
            if (chart || morphism) fail("nested block");
            if (toks.size() != 2) fail("morphism needs a name");
            morphism = &data.morphisms[toks[1]];
            morphism->name = toks[1];
        } else if (kw == "end") {
            if (chart) {
                if (chart->g == 0 || chart->coords.empty() || chart->delta.is_zero())
                    fail("chart block is missing g, coords or delta");
                for (auto [i, j, k, l] : pending_neg)
                    for (const std::string& c : chart->coords) {
                        auto it = chart->entries.find({k, l, c});
                        if (it != chart->entries.end()) chart->entries[{i, j, c}] = -it->second;
                    }
                chart = nullptr;
            } else if (morphism) {
                if (morphism->source.empty() || morphism->target.empty())
                    fail("morphism block is missing source or target");
                morphism = nullptr;
            } else {
                fail("end outside a block");
            }
        } else if (chart) {
            if (kw == "g") {
                if (toks.size() != 2) fail("g needs one value");
                chart->g = parse_index(toks[1], "g");
            } else if (kw == "coords") {
                chart->coords.assign(toks.begin() + 1, toks.end());
            } else if (kw == "delta") {
                chart->delta = parse_poly(rest_after(line, 1));
            } else if (kw == "curve") {
                chart->curve = rest_after(line, 1);
            } else if (kw == "frame-labels") {
                chart->frame_labels.assign(toks.begin() + 1, toks.end());
            } else if (kw == "omega") {
                if (toks.size() < 5) fail("omega needs i j coord expr");
                unsigned i = parse_index(toks[1], "row"), j = parse_index(toks[2], "column");
                const std::string& coord = toks[3];
                MultiPoly expr = parse_poly(rest_after(line, 4));
                auto key = std::make_tuple(i, j, coord);
                auto it = chart->entries.find(key);
                if (it == chart->entries.end()) {
                    chart->entries[key] = expr;
                } else {
                    it->second += expr;
                    chart->notes.push_back("chart " + chart->name + ": entry (" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           ") lists coordinate " + coord +
                                           " more than once; contributions were summed");
                }
            } else if (kw == "omega-neg") {
                if (toks.size() != 5) fail("omega-neg needs i j k l");
                pending_neg.emplace_back(parse_index(toks[1], "row"), parse_index(toks[2], "column"),
                                         parse_index(toks[3], "row"), parse_index(toks[4], "column"));
            } else {
                fail("unknown chart keyword '" + kw + "'");
            }
        } else if (morphism) {
            if (kw == "source") {
                if (toks.size() != 2) fail("source needs a chart name");
                morphism->source = toks[1];
            } else if (kw == "target") {
                if (toks.size() != 2) fail("target needs a chart name");
                morphism->target = toks[1];
            } else if (kw == "map") {
                if (toks.size() < 3) fail("map needs a variable and an expression");
                morphism->coordinate_map[toks[1]] = parse_ratfunc(rest_after(line, 2));
            } else if (kw == "frame") {
                if (toks.size() < 4) fail("frame needs i j expr");
                morphism->frame_entries.emplace_back(parse_index(toks[1], "row"),
                                                     parse_index(toks[2], "column"),
                                                     parse_ratfunc(rest_after(line, 3)));
            } else {
                fail("unknown morphism keyword '" + kw + "'");
            }
        } else {
            fail("statement outside a block: '" + kw + "'");
        }
    }
    if (chart || morphism) throw std::invalid_argument("connection data: unterminated block");
    return data;
}

const BuiltinData& builtin_data() {
    static const BuiltinData data = parse_connection_data(connection_data_text());
    return data;
}

namespace {

const RawChartData& raw_chart(const std::string& name) {
    const auto& charts = builtin_data().charts;
    auto it = charts.find(name);
    if (it == charts.end()) throw std::invalid_argument("unknown chart '" + name + "'");
    return it->second;
}

const RawMorphismData& raw_morphism(const std::string& name) {
    const auto& morphisms = builtin_data().morphisms;
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw std::invalid_argument("unknown morphism '" + name + "'");
    return it->second;
}

} // namespace

ChartDomain builtin_domain(const std::string& chart_name) {
    const RawChartData& raw = raw_chart(chart_name);
    return ChartDomain{raw.name, raw.coords, raw.delta};
}

ConnectionChart printed_chart(const std::string& chart_name) {
    const RawChartData& raw = raw_chart(chart_name);
    const std::size_t n = 2 * static_cast<std::size_t>(raw.g);
    RatFunc delta_inv = RatFunc(raw.delta).inverse();
    std::map<std::string, RFMat> omega;
    for (const std::string& c : raw.coords) {
        RFMat m = rf_zeros(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                auto it = raw.entries.find({i + 1, j + 1, c});
                if (it != raw.entries.end()) m[i][j] = RatFunc(it->second) * delta_inv;
            }
        omega[c] = std::move(m);
    }
    return ConnectionChart(ChartDomain{raw.name, raw.coords, raw.delta}, raw.g, std::move(omega));
}

ChartMorphism builtin_morphism(const std::string& morphism_name) {
    const RawMorphismData& raw = raw_morphism(morphism_name);
    ChartDomain source = builtin_domain(raw.source);
    ChartDomain target = builtin_domain(raw.target);
    const unsigned g = raw_chart(raw.source).g;
    RFMat frame = rf_identity(2 * static_cast<std::size_t>(g));
    for (const auto& [i, j, expr] : raw.frame_entries) {
        if (i > 2 * g || j > 2 * g)
            throw std::invalid_argument("morphism " + raw.name + ": frame index out of range");
        frame[i - 1][j - 1] = expr;
    }
    return ChartMorphism(std::move(source), std::move(target), raw.coordinate_map, std::move(frame));
}

ConnectionChart derived_chart(const std::string& chart_name) {
    if (chart_name == "weierstrass") return printed_chart("weierstrass");
    if (chart_name == "e")
        return pullback_connection(printed_chart("weierstrass"), builtin_morphism("e_to_weierstrass"));
    if (chart_name == "b")
        return pullback_connection(derived_chart("e"), builtin_morphism("b_to_e"));
    throw std::invalid_argument("unknown chart '" + chart_name + "'");
}

MultiPoly clear_delta(const RatFunc& f, const MultiPoly& delta, unsigned max_power) {
    RatFunc acc = f;
    RatFunc d(delta);
    for (unsigned k = 0; k <= max_power; ++k) {
        if (acc.is_polynomial()) {
            // canonical denominator is an integer constant; fold it in
            return acc.num() * acc.den().constant_value().inverse();
        }
        acc = acc * d;
    }
    throw std::domain_error("clear_delta: no power of delta clears the denominator");
}

} // namespace ramanujan
