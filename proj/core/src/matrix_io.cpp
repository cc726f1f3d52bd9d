#include "cocopos/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "cocopos/errors.hpp"

namespace cocopos {

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t dimension_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field '") + name + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double number_at(const Json& v, std::size_t index, int part) {
  if (!v.is_number()) {
    std::ostringstream os;
    os << "field 'data[" << index << "][" << part << "]' is not a number";
    throw ParseError(os.str());
  }
  return v.get<double>();
}

}  // namespace

Json to_json(const ComplexMatrix& x) {
  Json data = Json::array();
  for (const Complex& z : x.entries()) data.push_back(Json::array({z.real(), z.imag()}));
  Json doc = Json::object();
  doc["rows"] = x.rows();
  doc["cols"] = x.cols();
  doc["data"] = std::move(data);
  return doc;
}

Json to_json(const BlockMatrix& a) {
  Json doc = Json::object();
  doc["m"] = a.m();
  doc["n"] = a.n();
  Json mat = to_json(a.mat());
  for (auto& [key, value] : mat.items()) doc[key] = std::move(value);
  return doc;
}

Json to_json(const LinearMap& phi) {
  Json images = Json::array();
  for (const ComplexMatrix& img : phi.basis_images()) images.push_back(to_json(img));
  Json doc = Json::object();
  doc["n"] = phi.n();
  doc["k"] = phi.k();
  doc["basis_images"] = std::move(images);
  return doc;
}

ComplexMatrix matrix_from_json(const Json& doc) {
  const std::size_t rows = dimension_field(doc, "rows");
  const std::size_t cols = dimension_field(doc, "cols");
  const Json& data = field(doc, "data");
  if (!data.is_array()) throw ParseError("field 'data' must be an array");
  if (data.size() != rows * cols) {
    std::ostringstream os;
    os << "field 'data' has " << data.size() << " entries, expected " << rows * cols;
    throw ValidationError(os.str());
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const Json& pair = data[k];
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("field 'data[" + std::to_string(k) + "]' must be a [re, im] pair");
    }
    const double re = number_at(pair[0], k, 0);
    const double im = number_at(pair[1], k, 1);
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ValidationError("field 'data[" + std::to_string(k) + "]' is not finite");
    }
    entries.emplace_back(re, im);
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

BlockMatrix block_matrix_from_json(const Json& doc) {
  const std::size_t m = dimension_field(doc, "m");
  const std::size_t n = dimension_field(doc, "n");
  ComplexMatrix mat = matrix_from_json(doc);
  if (m == 0 || n == 0 || mat.rows() != m * n || mat.cols() != m * n) {
    std::ostringstream os;
    os << "block shape (" << m << ", " << n << ") does not match a " << mat.rows() << "x" << mat.cols()
       << " matrix";
    throw ValidationError(os.str());
  }
  return BlockMatrix({m, n}, std::move(mat));
}

LinearMap linear_map_from_json(const Json& doc) {
  const std::size_t n = dimension_field(doc, "n");
  const std::size_t k = dimension_field(doc, "k");
  const Json& images = field(doc, "basis_images");
  if (!images.is_array()) throw ParseError("field 'basis_images' must be an array");
  if (n == 0 || k == 0 || images.size() != n * n) {
    throw ValidationError("field 'basis_images' must hold n*n images with n, k positive");
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(images.size());
  for (std::size_t idx = 0; idx < images.size(); ++idx) {
    try {
      mats.push_back(matrix_from_json(images[idx]));
    } catch (const ParseError& e) {
      throw ParseError("basis_images[" + std::to_string(idx) + "]: " + e.what());
    }
    if (mats.back().rows() != k || mats.back().cols() != k) {
      throw ValidationError("basis_images[" + std::to_string(idx) + "] is not k x k");
    }
  }
  return LinearMap(n, k, std::move(mats));
}

std::string serialize(const ComplexMatrix& x) { return to_json(x).dump(); }
std::string serialize(const BlockMatrix& a) { return to_json(a).dump(); }
std::string serialize(const LinearMap& phi) { return to_json(phi).dump(); }

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

ComplexMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse_document(text)); }
BlockMatrix parse_block_matrix(std::string_view text) { return block_matrix_from_json(parse_document(text)); }
LinearMap parse_linear_map(std::string_view text) { return linear_map_from_json(parse_document(text)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace cocopos
