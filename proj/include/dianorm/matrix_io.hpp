#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "dianorm/bipartite.hpp"
#include "dianorm/complex_matrix.hpp"

namespace dianorm {

/// On-disk JSON matrix: rows, cols, row-major [re, im] pairs, and optional
/// bipartite factor dimensions.
struct MatrixFile {
  ComplexMatrix matrix;
  std::optional<std::size_t> dim_w;
  std::optional<std::size_t> dim_v;
};

/// Throws IoError if the file cannot be read, ParseError on malformed content.
MatrixFile load_matrix_file(const std::filesystem::path& path);

void save_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                      std::optional<std::size_t> dim_w = std::nullopt,
                      std::optional<std::size_t> dim_v = std::nullopt);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit digest of the raw file bytes, as a 16-char hex string.
std::string file_digest(const std::filesystem::path& path);

/// Interpret a loaded file as a bipartite operator. Explicit dims override
/// the ones recorded in the file; missing or inconsistent dims throw.
BipartiteOperator as_bipartite(const MatrixFile& f, std::optional<std::size_t> dim_w_flag,
                               std::optional<std::size_t> dim_v_flag);

}  // namespace dianorm
