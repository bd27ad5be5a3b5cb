#include "tnn/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "tnn/errors.hpp"

namespace tnn::io {

namespace {

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": invalid JSON: " + e.what());
    }
}

int positive_int(const Json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1 ||
        doc[key].get<long long>() > std::numeric_limits<int>::max()) {
        throw ParseError(std::string("matrix: \"") + key + "\" must be a positive integer");
    }
    return doc[key].get<int>();
}

Rational entry_from_json(const Json& v, int i, int a) {
    const std::string where = "matrix entry (" + std::to_string(i) + "," + std::to_string(a) + ")";
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Rational(mpz_class(std::to_string(v.get<std::uint64_t>())))
                                      : Rational(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const DomainError& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_float()) {
        throw ParseError(where + ": floating-point literals are not exact; quote the decimal as a string");
    }
    throw ParseError(where + ": expected an integer or a rational string");
}

GridIndex pair_from_json(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
        throw ParseError(where + ": expected a [row, column] pair of integers");
    }
    return {v[0].get<int>(), v[1].get<int>()};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Matrix matrix_from_json(const Json& doc) {
    if (!doc.is_object()) {
        throw ParseError("matrix: top-level value must be an object");
    }
    const int m = positive_int(doc, "rows");
    const int p = positive_int(doc, "cols");
    if (!doc.contains("data") || !doc["data"].is_array() || doc["data"].size() != static_cast<std::size_t>(m)) {
        throw ParseError("matrix: \"data\" must be an array of " + std::to_string(m) + " rows");
    }
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(p));
    for (int i = 1; i <= m; ++i) {
        const Json& row = doc["data"][static_cast<std::size_t>(i - 1)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(p)) {
            throw ParseError("matrix: row " + std::to_string(i) + " must have " + std::to_string(p) + " entries");
        }
        for (int a = 1; a <= p; ++a) entries.push_back(entry_from_json(row[static_cast<std::size_t>(a - 1)], i, a));
    }
    return Matrix(m, p, std::move(entries));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
    return matrix_from_json(parse_json(read_text_file(path), path.string()));
}

Json matrix_to_json(const Matrix& m) {
    Json data = Json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        Json row = Json::array();
        for (int a = 1; a <= m.cols(); ++a) {
            const Rational& x = m(i, a);
            if (x.is_integer() && x.numerator().fits_slong_p()) {
                row.push_back(x.numerator().get_si());
            } else {
                row.push_back(x.to_string());
            }
        }
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json rational_grid(const Matrix& m) {
    Json grid = Json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        Json row = Json::array();
        for (int a = 1; a <= m.cols(); ++a) row.push_back(m(i, a).to_string());
        grid.push_back(std::move(row));
    }
    return grid;
}

CauchonDiagram read_diagram_file(const std::filesystem::path& path) {
    return CauchonDiagram::parse_ascii(read_text_file(path));
}

Json scheme_to_json(const CellMinorScheme& scheme) {
    Json boxes = Json::array();
    for (const auto& e : scheme.entries()) {
        Json seq = Json::array();
        for (const GridIndex& g : e.sequence.points) seq.push_back({g.row, g.col});
        boxes.push_back({{"box", {e.box.row, e.box.col}}, {"sequence", std::move(seq)}, {"minor", e.spec.to_string()}});
    }
    return Json{{"diagram", scheme.diagram().ascii_lines()}, {"boxes", std::move(boxes)}};
}

CellMinorScheme scheme_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("diagram") || !doc["diagram"].is_array()) {
        throw ParseError("scheme: expected an object with a \"diagram\" array of rows");
    }
    std::vector<std::string> lines;
    for (const Json& line : doc["diagram"]) {
        if (!line.is_string()) throw ParseError("scheme: diagram rows must be strings");
        lines.push_back(line.get<std::string>());
    }
    const CauchonDiagram c = CauchonDiagram::from_lines(lines);

    std::map<GridIndex, LacunarySequence> overrides;
    if (doc.contains("boxes")) {
        if (!doc["boxes"].is_array()) throw ParseError("scheme: \"boxes\" must be an array");
        for (const Json& entry : doc["boxes"]) {
            if (!entry.is_object() || !entry.contains("box") || !entry.contains("sequence") ||
                !entry["sequence"].is_array()) {
                throw ParseError("scheme: each box needs \"box\" and \"sequence\"");
            }
            const GridIndex box = pair_from_json(entry["box"], "scheme box");
            LacunarySequence seq;
            for (const Json& pt : entry["sequence"]) seq.points.push_back(pair_from_json(pt, "scheme sequence point"));
            if (seq.points.empty() || seq.start() != box) {
                std::ostringstream msg;
                msg << "scheme: sequence for box " << box << " must start at that box";
                throw DomainError(msg.str());
            }
            if (!overrides.emplace(box, std::move(seq)).second) {
                std::ostringstream msg;
                msg << "scheme: box " << box << " listed twice";
                throw ParseError(msg.str());
            }
        }
    }
    return build_scheme(c, overrides);
}

CellMinorScheme read_scheme_file(const std::filesystem::path& path) {
    return scheme_from_json(parse_json(read_text_file(path), path.string()));
}

Json report_to_json(const MembershipReport& report) {
    Json boxes = Json::array();
    for (const BoxCheck& b : report.boxes) {
        boxes.push_back({{"box", {b.box.row, b.box.col}},
                         {"minor", b.spec.to_string()},
                         {"rows", b.spec.rows},
                         {"cols", b.spec.cols},
                         {"value", b.value.to_string()},
                         {"expected", to_string(b.expected)},
                         {"pass", b.pass}});
    }
    return Json{{"verdict", report.verdict}, {"minorsEvaluated", report.minors_evaluated}, {"boxes", std::move(boxes)}};
}

Json classification_to_json(const CellAssignment& cell) {
    Json out{{"tnn", cell.is_tnn}, {"tMatrix", rational_grid(cell.t_matrix)}};
    out["diagram"] = cell.diagram ? Json(cell.diagram->ascii_lines()) : Json(nullptr);
    return out;
}

}  // namespace tnn::io
