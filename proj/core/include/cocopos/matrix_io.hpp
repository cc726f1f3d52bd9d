#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cocopos/blockops.hpp"
#include "cocopos/densemat.hpp"
#include "cocopos/maps.hpp"

namespace cocopos {

// Documents use insertion-ordered objects so key order is part of the format.
using Json = nlohmann::ordered_json;

// Matrix document:      {"rows": r, "cols": c, "data": [[re, im], ...]}   (row-major)
// Block matrix:         {"m": m, "n": n, "rows": .., "cols": .., "data": ..}
// Linear map:           {"n": n, "k": k, "basis_images": [matrix, ...]}  (Phi(E_ij), (i,j) row-major)
// Doubles are written in shortest round-trip form, so parse(serialize(x))
// reproduces x bit for bit.
Json to_json(const ComplexMatrix& x);
Json to_json(const BlockMatrix& a);
Json to_json(const LinearMap& phi);

// Throw ParseError (malformed or missing fields, with the offending field
// named) or ValidationError (non-finite values, inconsistent shapes).
ComplexMatrix matrix_from_json(const Json& doc);
BlockMatrix block_matrix_from_json(const Json& doc);
LinearMap linear_map_from_json(const Json& doc);

std::string serialize(const ComplexMatrix& x);
std::string serialize(const BlockMatrix& a);
std::string serialize(const LinearMap& phi);

// Parses text into a document; ParseError carries the parser's line/column.
Json parse_document(std::string_view text);

ComplexMatrix parse_matrix(std::string_view text);
BlockMatrix parse_block_matrix(std::string_view text);
LinearMap parse_linear_map(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cocopos
