#ifndef SCHURCERT_BLOCK_IO_HPP
#define SCHURCERT_BLOCK_IO_HPP

#include <string>

#include <json.hpp>

#include "schurcert/block_matrix.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// Block-matrix file format:
///   { "dims": [d1, ..., dn],
///     "blocks": [[ [row-major reals of length di*dj], ... ], ...] }
BlockMatrix block_matrix_from_json(const nlohmann::json& j, const Tolerances& tol = {});
nlohmann::ordered_json block_matrix_to_json(const BlockMatrix& b);

/// Loads the format above from a file. JSON parse errors propagate as
/// nlohmann::json::parse_error (they carry the byte position); structural
/// problems raise schurcert errors.
BlockMatrix load_block_matrix(const std::string& path, const Tolerances& tol = {});

}  // namespace schurcert

#endif
