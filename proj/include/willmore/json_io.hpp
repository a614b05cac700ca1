#pragma once

#include <string>
#include <utility>

#include "json.hpp"
#include "willmore/frames.hpp"
#include "willmore/geometry.hpp"
#include "willmore/laurent.hpp"
#include "willmore/linalg.hpp"

namespace willmore {

// Keys keep their insertion order so that serialization is byte-stable.
using Json = nlohmann::ordered_json;

// Complex matrix over a diagonal bilinear form:
//   {"dim": N, "timelike": t, "entries": [[re, im], ...]}  (row-major)
Json matrix_to_json(const Mat& m, const BilinearForm& form);
std::pair<Mat, BilinearForm> matrix_from_json(const Json& j);

// As above, for matrices certified real (imaginary parts below 1e-12).
Json matrix_to_json(const RMat& m, const BilinearForm& form);
std::pair<RMat, BilinearForm> real_matrix_from_json(const Json& j);

// Laurent loop:
//   {"degree": d, "split": [head, tail], "timelike": t,
//    "coeffs": {"-d": matrix, ..., "d": matrix}}
// Reading fills a missing coefficient at -k with the conjugate of the one
// at +k (the real-loop convention); `strict` instead rejects windows where
// only one of the pair is present.
Json loop_to_json(const LaurentLoop& loop);
LaurentLoop loop_from_json(const Json& j, bool strict = false);

// Sampled chart together with the loop parameter it was sampled at:
//   {"lambda_theta": t, "nu": nu, "nv": nv,
//    "grid": [[u, v], ...], "points": [[y_0, ...], ...]}  (row-major)
struct MeshData {
  SurfaceGrid grid;
  double lambda_theta = 0.0;
};

Json mesh_to_json(const SurfaceGrid& grid, double lambda_theta);
MeshData mesh_from_json(const Json& j);

// Monodromy triple (with its construction metadata when available):
//   {"m": m, "weight": w, "A1": loop, "A2": loop, "A3": matrix,
//    "adapted_basis": matrix}
// m, weight and adapted_basis are optional on input.
Json monodromy_to_json(const HomogeneousSphereData& data);
HomogeneousSphereData monodromy_from_json(const Json& j);

// File helpers; parse failures and filesystem errors become SchemaError.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace willmore
