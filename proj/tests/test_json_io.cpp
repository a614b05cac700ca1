#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "willmore/frames.hpp"
#include "willmore/geometry.hpp"
#include "willmore/json_io.hpp"
#include "willmore/linalg.hpp"
#include "willmore/spherical.hpp"

using namespace willmore;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("json_io_test_") + name;
}

}  // namespace

TEST_CASE("matrix serialization round-trips complex entries exactly") {
  Mat m(2, 2);
  m << Cplx(1.5, -0.25), Cplx(0.0, 3.0), Cplx(-2.0, 0.125), Cplx(0.75, 0.0);
  const BilinearForm form{2, 1};
  const Json j = matrix_to_json(m, form);
  const auto [back, back_form] = matrix_from_json(j);
  CHECK(max_abs(Mat(back - m)) == 0.0);
  CHECK(back_form.dim == 2);
  CHECK(back_form.timelike == 1);

  // Real matrices go through the same schema.
  RMat r(2, 2);
  r << 1.0, -0.5, 0.25, 2.0;
  const auto [rback, rform] = real_matrix_from_json(matrix_to_json(r, form));
  CHECK(max_abs(RMat(rback - r)) == 0.0);
  CHECK(rform.timelike == 1);
}

TEST_CASE("matrix deserialization validates the schema") {
  Mat m = Mat::Zero(2, 2);
  Json j = matrix_to_json(m, BilinearForm{2, 0});

  Json wrong_count = j;
  wrong_count["entries"].erase(3);
  CHECK_THROWS_AS(matrix_from_json(wrong_count), SchemaError);

  Json bad_timelike = j;
  bad_timelike["timelike"] = 7;
  CHECK_THROWS_AS(matrix_from_json(bad_timelike), SchemaError);

  Json missing = j;
  missing.erase("dim");
  CHECK_THROWS_AS(matrix_from_json(missing), SchemaError);

  // A complex entry cannot be certified real.
  Mat c = Mat::Zero(2, 2);
  c(0, 1) = Cplx(0.0, 1e-6);
  CHECK_THROWS_AS(real_matrix_from_json(matrix_to_json(c, BilinearForm{2, 0})),
                  SchemaError);
}

TEST_CASE("loop serialization round-trips and fills conjugate halves") {
  const HomogeneousSphereData data = veronese_monodromy(2);
  const Json j = loop_to_json(data.A1);
  const LaurentLoop back = loop_from_json(j, /*strict=*/true);
  CHECK(back.degree() == data.A1.degree());
  CHECK(back.split().head == 4);
  CHECK(back.split().tail == 2);
  for (int k = -1; k <= 1; ++k) {
    CHECK(max_abs(Mat(back.coeff(k) - data.A1.coeff(k))) == 0.0);
  }

  // Drop the -1 coefficient: lenient reading restores it by conjugation.
  Json half = j;
  half["coeffs"].erase("-1");
  const LaurentLoop filled = loop_from_json(half);
  CHECK(max_abs(Mat(filled.coeff(-1) - data.A1.coeff(-1))) == 0.0);
  CHECK_THROWS_AS(loop_from_json(half, /*strict=*/true), SchemaError);
}

TEST_CASE("mesh serialization preserves samples and lattice layout") {
  const auto sphere = [](Cplx z) {
    return stereographic_point(z);
  };
  const SurfaceGrid grid = make_surface_grid(sphere, -0.5, 0.5, -0.25, 0.75,
                                             0.125);
  const Json j = mesh_to_json(grid, 0.4);
  const MeshData back = mesh_from_json(j);
  CHECK(back.lambda_theta == 0.4);
  CHECK(back.grid.nu == grid.nu);
  CHECK(back.grid.nv == grid.nv);
  CHECK(back.grid.u0 == grid.u0);
  CHECK(back.grid.v0 == grid.v0);
  CHECK(back.grid.h == grid.h);
  for (int iu = 0; iu < grid.nu; ++iu) {
    for (int iv = 0; iv < grid.nv; ++iv) {
      CHECK(max_abs(RMat(back.grid.sample(iu, iv) - grid.sample(iu, iv))) ==
            0.0);
    }
  }

  Json skewed = j;
  skewed["grid"][3][0] = skewed["grid"][3][0].get<double>() + 1e-3;
  CHECK_THROWS_AS(mesh_from_json(skewed), SchemaError);

  Json ragged = j;
  ragged["points"][2].erase(1);
  CHECK_THROWS_AS(mesh_from_json(ragged), SchemaError);

  Json short_list = j;
  short_list["points"].erase(0);
  CHECK_THROWS_AS(mesh_from_json(short_list), SchemaError);
}

TEST_CASE("monodromy serialization round-trips the full data set") {
  const HomogeneousSphereData data = veronese_monodromy(2);
  const Json j = monodromy_to_json(data);
  const HomogeneousSphereData back = monodromy_from_json(j);
  CHECK(back.m == 2);
  CHECK(back.weight == data.weight);
  CHECK(back.form.dim == 6);
  CHECK(back.split.tail == 2);
  for (int k = -1; k <= 1; ++k) {
    CHECK(max_abs(Mat(back.A1.coeff(k) - data.A1.coeff(k))) == 0.0);
    CHECK(max_abs(Mat(back.A2.coeff(k) - data.A2.coeff(k))) == 0.0);
  }
  CHECK(max_abs(RMat(back.A3 - data.A3)) == 0.0);
  CHECK(max_abs(RMat(back.adapted_basis - data.adapted_basis)) == 0.0);
  CHECK(monodromy_residuals(back).max() < 1e-12);
}

TEST_CASE("file helpers: write, read back, stable bytes, clear failures") {
  const HomogeneousSphereData data = veronese_monodromy(1);
  const Json j = monodromy_to_json(data);
  const std::string path = temp_path("roundtrip.json");
  write_json_file(path, j);
  const Json back = read_json_file(path);
  CHECK(back == j);

  // Two dumps of the same document are byte-identical.
  const std::string path2 = temp_path("roundtrip2.json");
  write_json_file(path2, back);
  std::ifstream f1(path), f2(path2);
  const std::string s1((std::istreambuf_iterator<char>(f1)),
                       std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)),
                       std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK(!s1.empty());

  CHECK_THROWS_AS(read_json_file(temp_path("does_not_exist.json")),
                  SchemaError);
  const std::string corrupt = temp_path("corrupt.json");
  {
    std::ofstream out(corrupt);
    out << "{\"m\": 2, ";  // truncated document
  }
  CHECK_THROWS_AS(read_json_file(corrupt), SchemaError);

  std::remove(path.c_str());
  std::remove(path2.c_str());
  std::remove(corrupt.c_str());
}
