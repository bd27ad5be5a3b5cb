#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tnn/diagram.hpp"
#include "tnn/matrix.hpp"
#include "tnn/recognition.hpp"
#include "tnn/reduction.hpp"

namespace tnn::io {

using Json = nlohmann::json;

/// Whole file as text; ParseError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// {"rows": m, "cols": p, "data": [[entry, ...], ...]} with each entry an
/// integer, a decimal string or a "p/q" string. Binary floats are rejected.
Matrix matrix_from_json(const Json& doc);
Matrix read_matrix_file(const std::filesystem::path& path);
/// Integers that fit in 64 bits are written as numbers, everything else as strings.
Json matrix_to_json(const Matrix& m);
/// Entries as rational strings, row by row.
Json rational_grid(const Matrix& m);

CauchonDiagram read_diagram_file(const std::filesystem::path& path);

/// {"diagram": [lines], "boxes": [{"box": [j, b], "sequence": [[i, a], ...]}, ...]}
Json scheme_to_json(const CellMinorScheme& scheme);
/// Boxes missing from the document keep their default sequence. Throws
/// ParseError on malformed JSON structure and DomainError on invalid sequences.
CellMinorScheme scheme_from_json(const Json& doc);
CellMinorScheme read_scheme_file(const std::filesystem::path& path);

Json report_to_json(const MembershipReport& report);
Json classification_to_json(const CellAssignment& cell);

}  // namespace tnn::io
