#include "dianorm/matrix_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dianorm/errors.hpp"

namespace dianorm {

namespace {

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path.string());
  return std::move(buf).str();
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (const Complex& v : m.entries()) data.push_back({v.real(), v.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw ParseError("matrix JSON must carry rows, cols and data");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() ||
      j["rows"].get<std::size_t>() == 0 || j["cols"].get<std::size_t>() == 0)
    throw ParseError("rows/cols must be positive integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& data = j["data"];
  if (!data.is_array() || data.size() != rows * cols)
    throw ParseError("data length must equal rows*cols");

  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& pair : data) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ParseError("each entry must be a [re, im] number pair");
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  ComplexMatrix m(rows, cols, std::move(entries));
  if (!m.is_finite()) throw ParseError("matrix entries must be finite");
  return m;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  const std::string bytes = read_bytes(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
  }

  MatrixFile f;
  f.matrix = matrix_from_json(j);
  auto read_dim = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0)
      throw ParseError(std::string(key) + " must be a positive integer");
    return j[key].get<std::size_t>();
  };
  f.dim_w = read_dim("dim_w");
  f.dim_v = read_dim("dim_v");
  if (f.dim_w.has_value() != f.dim_v.has_value())
    throw ParseError("dim_w and dim_v must be given together");
  if (f.dim_w && (*f.dim_w * *f.dim_v != f.matrix.rows() || !f.matrix.is_square()))
    throw ParseError("bipartite dims require a square matrix of side dim_w*dim_v");
  return f;
}

void save_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                      std::optional<std::size_t> dim_w, std::optional<std::size_t> dim_v) {
  nlohmann::json j = matrix_to_json(m);
  if (dim_w) j["dim_w"] = *dim_w;
  if (dim_v) j["dim_v"] = *dim_v;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failure: " + path.string());
}

std::string file_digest(const std::filesystem::path& path) {
  const std::string bytes = read_bytes(path);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

BipartiteOperator as_bipartite(const MatrixFile& f, std::optional<std::size_t> dim_w_flag,
                               std::optional<std::size_t> dim_v_flag) {
  const std::optional<std::size_t> dw = dim_w_flag ? dim_w_flag : f.dim_w;
  const std::optional<std::size_t> dv = dim_v_flag ? dim_v_flag : f.dim_v;
  if (!dw || !dv)
    throw ParseError("bipartite dims missing: provide --dim-w/--dim-v or record them in the file");
  if (!f.matrix.is_square() || *dw * *dv != f.matrix.rows())
    throw ParseError("matrix side does not equal dim_w*dim_v");
  return {*dw, *dv, f.matrix};
}

}  // namespace dianorm
