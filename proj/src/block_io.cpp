#include "schurcert/block_io.hpp"

#include <fstream>

namespace schurcert {

BlockMatrix block_matrix_from_json(const nlohmann::json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("blocks")) {
    throw ShapeMismatch("block-matrix document needs \"dims\" and \"blocks\"");
  }
  std::vector<int> dims;
  for (const auto& d : j.at("dims")) {
    if (!d.is_number_integer() || d.get<int>() <= 0) {
      throw ShapeMismatch("\"dims\" entries must be positive integers");
    }
    dims.push_back(d.get<int>());
  }
  const int n = static_cast<int>(dims.size());
  const auto& grid = j.at("blocks");
  if (!grid.is_array() || static_cast<int>(grid.size()) != n) {
    throw ShapeMismatch("\"blocks\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<DenseMatrix>> blocks(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = grid.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ShapeMismatch("blocks row " + std::to_string(i + 1) + " must have " +
                          std::to_string(n) + " entries");
    }
    for (int jj = 0; jj < n; ++jj) {
      const auto& flat = row.at(jj);
      if (!flat.is_array()) {
        throw ShapeMismatch("block (" + std::to_string(i + 1) + "," +
                            std::to_string(jj + 1) + ") must be a flat array");
      }
      std::vector<double> entries;
      entries.reserve(flat.size());
      for (const auto& v : flat) {
        if (!v.is_number()) {
          throw ShapeMismatch("block (" + std::to_string(i + 1) + "," +
                              std::to_string(jj + 1) + ") has a non-numeric entry");
        }
        entries.push_back(v.get<double>());
      }
      if (static_cast<int>(entries.size()) != dims[i] * dims[jj]) {
        throw ShapeMismatch("block (" + std::to_string(i + 1) + "," +
                            std::to_string(jj + 1) + ") has " +
                            std::to_string(entries.size()) + " entries, expected " +
                            std::to_string(dims[i] * dims[jj]));
      }
      blocks[i].emplace_back(dims[i], dims[jj], std::move(entries));
    }
  }
  return BlockMatrix(std::move(dims), std::move(blocks), tol);
}

nlohmann::ordered_json block_matrix_to_json(const BlockMatrix& b) {
  nlohmann::ordered_json j;
  j["dims"] = b.dims();
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (int i = 0; i < b.order(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < b.order(); ++k) {
      row.push_back(b.block(i, k).entries());
    }
    grid.push_back(std::move(row));
  }
  j["blocks"] = std::move(grid);
  return j;
}

BlockMatrix load_block_matrix(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  nlohmann::json j = nlohmann::json::parse(in);  // parse_error carries byte position
  return block_matrix_from_json(j, tol);
}

}  // namespace schurcert
