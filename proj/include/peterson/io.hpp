#pragma once

// Text, CSV and JSON renderings of the calculus results. JSON objects use
// sorted keys and compact separators so that output is byte-stable.

#include "bigint.hpp"
#include "billey.hpp"
#include "calculus.hpp"
#include "subset.hpp"
#include "words.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace peterson {

using Json = nlohmann::json;

enum class OutputFormat { table, json, csv };

inline OutputFormat parse_output_format(std::string_view s) {
    if (s == "table") return OutputFormat::table;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

/// "1,3,4" or "all"; letters must lie in 1..rank and be distinct.
inline Subset parse_subset(std::string_view text, int rank) {
    if (text == "all") return Subset::full(rank);
    Subset out;
    for (int i : parse_word(text)) {
        if (i > rank)
            throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
        if (out.contains(i)) throw std::invalid_argument("repeated index " + std::to_string(i));
        out.insert(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Rational& q) {
    return Json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

inline Json to_json(const TMonomial& m) {
    Json j = to_json(m.coeff);
    j["deg"] = m.is_zero() ? 0 : m.degree;
    return j;
}

inline Json to_json(Subset s) { return Json(s.indices()); }

inline Json to_json(const BasisTable& t) {
    Json pts = Json::array();
    for (Subset s : t.order) pts.push_back(to_json(s));
    Json rows = Json::array();
    for (const auto& row : t.matrix) {
        Json r = Json::array();
        for (const TMonomial& m : row) r.push_back(to_json(m));
        rows.push_back(std::move(r));
    }
    return Json{{"type", t.type.name()}, {"fixed_points", pts}, {"classes", pts}, {"matrix", rows}};
}

inline Json to_json(const MonkExpansion& m) {
    Json terms = Json::array();
    for (const MonkTerm& t : m.terms) terms.push_back(Json{{"J", to_json(t.j)}, {"coeff", to_json(t.coeff)}});
    return Json{{"i", m.i}, {"K", to_json(m.k)}, {"diagonal", to_json(m.diagonal)}, {"terms", terms}};
}

inline Json to_json(const GiambelliCertificate& g) {
    Json comps = Json::array();
    std::vector<std::size_t> counts;
    for (const ComponentCount& c : g.components) {
        comps.push_back(Json{{"indices", to_json(c.component.indices)},
                             {"type", c.component.type.name()},
                             {"index_map", c.component.ambient_of},
                             {"reduced_words", c.reduced_words}});
        counts.push_back(c.reduced_words);
    }
    return Json{{"K", to_json(g.k)},
                {"constant", to_json(g.constant)},
                {"components", comps},
                {"reduced_word_counts", counts},
                {"verified_points", g.verified_points}};
}

inline Json to_json(const HeightList& h) { return Json{{"word", h.word}, {"heights", h.heights}}; }

inline Json to_json(const NonIntegralCoefficient& c) {
    return Json{{"i", c.i}, {"K", to_json(c.k)}, {"J", to_json(c.j)}, {"coeff", to_json(c.coeff)}};
}

inline Json scan_json(LieType t, const std::vector<NonIntegralCoefficient>& found) {
    Json entries = Json::array();
    for (const auto& c : found) entries.push_back(to_json(c));
    return Json{{"type", t.name()}, {"nonintegral", entries}};
}

// ---------------------------------------------------------------------------
// Plain text and CSV

namespace detail {

inline std::string grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string csv(const std::vector<std::vector<std::string>>& cells) {
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_field(row[c]);
        out += "\n";
    }
    return out;
}

inline std::vector<std::vector<std::string>> basis_cells(const BasisTable& t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"K"};
    for (Subset s : t.order) head.push_back("p" + to_string(s));
    cells.push_back(head);
    for (std::size_t r = 0; r < t.order.size(); ++r) {
        std::vector<std::string> row{to_string(t.order[r])};
        for (const TMonomial& m : t.matrix[r]) row.push_back(to_string(m));
        cells.push_back(std::move(row));
    }
    return cells;
}

inline std::vector<std::vector<std::string>> monk_cells(const MonkExpansion& m) {
    std::vector<std::vector<std::string>> cells{{"i", "K", "J", "coeff"}};
    cells.push_back({std::to_string(m.i), to_string(m.k), to_string(m.k), to_string(m.diagonal)});
    for (const MonkTerm& t : m.terms)
        cells.push_back({std::to_string(m.i), to_string(m.k), to_string(t.j), to_string(t.coeff)});
    return cells;
}

inline std::vector<std::vector<std::string>> giambelli_cells(const std::vector<GiambelliCertificate>& gs) {
    std::vector<std::vector<std::string>> cells{{"K", "C", "components", "reduced_words"}};
    for (const auto& g : gs) {
        std::string comps, counts;
        for (const auto& c : g.components) {
            if (!comps.empty()) comps += " x ";
            if (!counts.empty()) counts += " ";
            comps += c.component.type.name();
            counts += std::to_string(c.reduced_words);
        }
        cells.push_back({to_string(g.k), to_string(g.constant), comps.empty() ? "-" : comps,
                         counts.empty() ? "-" : counts});
    }
    return cells;
}

inline std::vector<std::vector<std::string>> heights_cells(const HeightList& h) {
    std::vector<std::vector<std::string>> cells{{"position", "letter", "height"}};
    for (std::size_t p = 0; p < h.word.size(); ++p)
        cells.push_back({std::to_string(p + 1), std::to_string(h.word[p]), std::to_string(h.heights[p])});
    return cells;
}

inline std::vector<std::vector<std::string>> scan_cells(const std::vector<NonIntegralCoefficient>& found) {
    std::vector<std::vector<std::string>> cells{{"i", "K", "J", "coeff"}};
    for (const auto& c : found)
        cells.push_back({std::to_string(c.i), to_string(c.k), to_string(c.j), to_string(c.coeff)});
    return cells;
}

}  // namespace detail

inline std::string render(const BasisTable& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return to_json(t).dump() + "\n";
        case OutputFormat::csv: return detail::csv(detail::basis_cells(t));
        case OutputFormat::table: break;
    }
    return detail::grid(detail::basis_cells(t));
}

inline std::string render(const MonkExpansion& m, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return to_json(m).dump() + "\n";
        case OutputFormat::csv: return detail::csv(detail::monk_cells(m));
        case OutputFormat::table: break;
    }
    std::string out = "p_s" + std::to_string(m.i) + " * p_v" + to_string(m.k) + " = (" + to_string(m.diagonal) +
                      ") p_v" + to_string(m.k);
    for (const MonkTerm& t : m.terms)
        if (t.coeff != 0) out += " + (" + to_string(t.coeff) + ") p_v" + to_string(t.j);
    out += "\n";
    if (m.terms.empty()) out += "no superset terms\n";
    return out + detail::grid(detail::monk_cells(m));
}

inline std::string render(const std::vector<GiambelliCertificate>& gs, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: {
            Json arr = Json::array();
            for (const auto& g : gs) arr.push_back(to_json(g));
            return arr.dump() + "\n";
        }
        case OutputFormat::csv: return detail::csv(detail::giambelli_cells(gs));
        case OutputFormat::table: break;
    }
    return detail::grid(detail::giambelli_cells(gs));
}

inline std::string render(const HeightList& h, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return to_json(h).dump() + "\n";
        case OutputFormat::csv: return detail::csv(detail::heights_cells(h));
        case OutputFormat::table: break;
    }
    return "word    " + to_string(h.word) + "\nheights " + to_string(Word(h.heights)) + "\n";
}

inline std::string render_scan(LieType t, const std::vector<NonIntegralCoefficient>& found, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return scan_json(t, found).dump() + "\n";
        case OutputFormat::csv: return detail::csv(detail::scan_cells(found));
        case OutputFormat::table: break;
    }
    std::string out = t.name() + ": " + std::to_string(found.size()) + " non-integral Monk coefficient" +
                      (found.size() == 1 ? "" : "s") + " (empirical evidence only)\n";
    if (!found.empty()) out += detail::grid(detail::scan_cells(found));
    return out;
}

}  // namespace peterson
