#include "willmore/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace willmore {

namespace {

[[noreturn]] void schema_fail(const std::string& what) {
  throw SchemaError("json: " + what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    schema_fail(std::string("missing required key '") + key + "'");
  }
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) {
    schema_fail(std::string("key '") + key + "' must be an integer");
  }
  return v.get<int>();
}

double require_double(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number()) {
    schema_fail(std::string("key '") + key + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

Json matrix_to_json(const Mat& m, const BilinearForm& form) {
  if (m.rows() != m.cols() || static_cast<int>(m.rows()) != form.dim) {
    throw SchemaError("matrix_to_json: matrix does not match the form");
  }
  Json j;
  j["dim"] = form.dim;
  j["timelike"] = form.timelike;
  Json entries = Json::array();
  for (int r = 0; r < form.dim; ++r) {
    for (int c = 0; c < form.dim; ++c) {
      entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

Json matrix_to_json(const RMat& m, const BilinearForm& form) {
  return matrix_to_json(Mat(m.cast<Cplx>()), form);
}

std::pair<Mat, BilinearForm> matrix_from_json(const Json& j) {
  const int dim = require_int(j, "dim");
  const int timelike = require_int(j, "timelike");
  if (dim <= 0 || timelike < 0 || timelike > dim) {
    schema_fail("matrix has inconsistent dim/timelike");
  }
  const Json& entries = require(j, "entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    schema_fail("matrix entries must list dim*dim [re, im] pairs");
  }
  Mat m(dim, dim);
  size_t idx = 0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c, ++idx) {
      const Json& cell = entries.at(idx);
      if (!cell.is_array() || cell.size() != 2 || !cell.at(0).is_number() ||
          !cell.at(1).is_number()) {
        schema_fail("matrix entry must be a [re, im] pair of numbers");
      }
      m(r, c) = Cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  BilinearForm form{dim, timelike};
  return {std::move(m), form};
}

std::pair<RMat, BilinearForm> real_matrix_from_json(const Json& j) {
  auto [m, form] = matrix_from_json(j);
  RMat r;
  try {
    r = real_part_checked(m, 1e-12, "real matrix");
  } catch (const NumericalError& e) {
    schema_fail(std::string("matrix expected to be real: ") + e.what());
  }
  return {std::move(r), form};
}

Json loop_to_json(const LaurentLoop& loop) {
  Json j;
  j["degree"] = loop.degree();
  j["split"] = Json::array({loop.split().head, loop.split().tail});
  j["timelike"] = loop.form().timelike;
  Json coeffs;
  for (int k = -loop.degree(); k <= loop.degree(); ++k) {
    coeffs[std::to_string(k)] = matrix_to_json(loop.coeff(k), loop.form());
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentLoop loop_from_json(const Json& j, bool strict) {
  const int degree = require_int(j, "degree");
  const Json& split_j = require(j, "split");
  if (!split_j.is_array() || split_j.size() != 2 ||
      !split_j.at(0).is_number_integer() ||
      !split_j.at(1).is_number_integer()) {
    schema_fail("loop split must be a [head, tail] pair of integers");
  }
  const BlockSplit split{split_j.at(0).get<int>(), split_j.at(1).get<int>()};
  const int timelike = require_int(j, "timelike");
  if (degree < 0 || split.head < 0 || split.tail < 0) {
    schema_fail("loop degree and split must be nonnegative");
  }
  const BilinearForm form{split.dim(), timelike};

  LaurentLoop loop(degree, form, split);
  std::vector<bool> seen(static_cast<size_t>(2 * degree + 1), false);
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_object()) schema_fail("loop coeffs must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    int k = 0;
    try {
      size_t pos = 0;
      k = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_fail("loop coefficient key '" + key + "' is not an integer");
    }
    if (std::abs(k) > degree) {
      schema_fail("loop coefficient key '" + key +
                  "' lies outside the degree window");
    }
    auto [m, mform] = matrix_from_json(value);
    if (mform.dim != form.dim || mform.timelike != form.timelike) {
      schema_fail("loop coefficient '" + key +
                  "' does not match the loop's form");
    }
    loop.coeff(k) = std::move(m);
    seen[static_cast<size_t>(k + degree)] = true;
  }

  for (int k = 1; k <= degree; ++k) {
    const bool has_pos = seen[static_cast<size_t>(k + degree)];
    const bool has_neg = seen[static_cast<size_t>(-k + degree)];
    if (has_pos == has_neg) continue;
    if (strict) {
      schema_fail("strict loop: coefficient " + std::to_string(k) +
                  " present without its mirror");
    }
    if (has_pos) {
      loop.coeff(-k) = loop.coeff(k).conjugate();
    } else {
      loop.coeff(k) = loop.coeff(-k).conjugate();
    }
  }
  return loop;
}

Json mesh_to_json(const SurfaceGrid& grid, double lambda_theta) {
  Json j;
  j["lambda_theta"] = lambda_theta;
  j["nu"] = grid.nu;
  j["nv"] = grid.nv;
  Json nodes = Json::array();
  Json points = Json::array();
  for (int iu = 0; iu < grid.nu; ++iu) {
    for (int iv = 0; iv < grid.nv; ++iv) {
      const Cplx z = grid.point(iu, iv);
      nodes.push_back(Json::array({z.real(), z.imag()}));
      const RVec& y = grid.sample(iu, iv);
      Json coords = Json::array();
      for (int c = 0; c < y.size(); ++c) coords.push_back(y(c));
      points.push_back(std::move(coords));
    }
  }
  j["grid"] = std::move(nodes);
  j["points"] = std::move(points);
  return j;
}

MeshData mesh_from_json(const Json& j) {
  MeshData out;
  out.lambda_theta = require_double(j, "lambda_theta");
  const int nu = require_int(j, "nu");
  const int nv = require_int(j, "nv");
  if (nu < 2 || nv < 2) schema_fail("mesh needs at least a 2x2 grid");
  const Json& nodes = require(j, "grid");
  const Json& points = require(j, "points");
  const size_t count = static_cast<size_t>(nu) * static_cast<size_t>(nv);
  if (!nodes.is_array() || nodes.size() != count) {
    schema_fail("mesh grid must list nu*nv [u, v] nodes");
  }
  if (!points.is_array() || points.size() != count) {
    schema_fail("mesh points must list nu*nv coordinate rows");
  }

  SurfaceGrid& grid = out.grid;
  grid.nu = nu;
  grid.nv = nv;
  const auto node_at = [&](size_t idx) -> std::pair<double, double> {
    const Json& n = nodes.at(idx);
    if (!n.is_array() || n.size() != 2 || !n.at(0).is_number() ||
        !n.at(1).is_number()) {
      schema_fail("mesh grid node must be a [u, v] pair of numbers");
    }
    return {n.at(0).get<double>(), n.at(1).get<double>()};
  };
  const auto [u0, v0] = node_at(0);
  grid.u0 = u0;
  grid.v0 = v0;
  grid.h = (nv > 1) ? node_at(1).second - v0
                    : node_at(static_cast<size_t>(nv)).first - u0;
  if (!(grid.h > 0.0)) schema_fail("mesh spacing must be positive");
  grid.u1 = u0 + (nu - 1) * grid.h;
  grid.v1 = v0 + (nv - 1) * grid.h;

  size_t dim = 0;
  grid.samples.reserve(count);
  for (int iu = 0; iu < nu; ++iu) {
    for (int iv = 0; iv < nv; ++iv) {
      const size_t idx =
          static_cast<size_t>(iu) * static_cast<size_t>(nv) + iv;
      const auto [u, v] = node_at(idx);
      if (std::abs(u - (u0 + iu * grid.h)) > 1e-9 ||
          std::abs(v - (v0 + iv * grid.h)) > 1e-9) {
        schema_fail("mesh grid nodes are not a uniform row-major lattice");
      }
      const Json& row = points.at(idx);
      if (!row.is_array() || row.empty()) {
        schema_fail("mesh point row must be a nonempty array");
      }
      if (dim == 0) dim = row.size();
      if (row.size() != dim) {
        schema_fail("mesh point rows have inconsistent dimensions");
      }
      RVec y(static_cast<int>(dim));
      for (size_t c = 0; c < dim; ++c) {
        if (!row.at(c).is_number()) {
          schema_fail("mesh point coordinates must be numbers");
        }
        y(static_cast<int>(c)) = row.at(c).get<double>();
      }
      grid.samples.push_back(std::move(y));
    }
  }
  return out;
}

Json monodromy_to_json(const HomogeneousSphereData& data) {
  Json j;
  j["m"] = data.m;
  j["weight"] = data.weight;
  j["A1"] = loop_to_json(data.A1);
  j["A2"] = loop_to_json(data.A2);
  j["A3"] = matrix_to_json(data.A3, data.form);
  if (data.adapted_basis.size() > 0) {
    j["adapted_basis"] = matrix_to_json(
        data.adapted_basis,
        euclidean_form(static_cast<int>(data.adapted_basis.rows())));
  }
  return j;
}

HomogeneousSphereData monodromy_from_json(const Json& j) {
  HomogeneousSphereData data;
  data.A1 = loop_from_json(require(j, "A1"));
  data.A2 = loop_from_json(require(j, "A2"));
  auto [a3, a3_form] = real_matrix_from_json(require(j, "A3"));
  data.A3 = std::move(a3);
  data.form = data.A1.form();
  data.split = data.A1.split();
  if (data.A2.dim() != data.form.dim || a3_form.dim != data.form.dim ||
      data.A2.split().head != data.split.head) {
    schema_fail("monodromy components live on different spaces");
  }
  if (j.contains("m")) data.m = require_int(j, "m");
  if (j.contains("weight")) data.weight = require_double(j, "weight");
  if (j.contains("adapted_basis")) {
    auto [q, q_form] = real_matrix_from_json(j.at("adapted_basis"));
    (void)q_form;
    data.adapted_basis = std::move(q);
  }
  return data;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_fail("cannot open '" + path + "' for reading");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    schema_fail("parse error in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) schema_fail("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) schema_fail("write to '" + path + "' failed");
}

}  // namespace willmore
