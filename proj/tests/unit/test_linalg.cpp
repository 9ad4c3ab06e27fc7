#include "ecassoc/linalg.hpp"

#include "expect_error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ecassoc;
using oracle::error_code_of;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias) {
  std::uniform_int_distribution<int> v(-4, 4);
  std::uniform_int_distribution<int> z(0, 9);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = z(rng) < zero_bias ? f.zero() : f.from_int(v(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("small examples") {
  const auto f5 = Field::prime(5);
  Matrix id(f5, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = f5.one();
  const auto rk = rank_kernel(id);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.empty());

  const auto zero = rank_kernel(Matrix(f5, 2, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel.size() == 3);

  const auto m = Matrix::from_rows(f5, {{f5.from_int(1), f5.from_int(2), f5.from_int(3)},
                                        {f5.from_int(2), f5.from_int(4), f5.from_int(0)}});
  const auto r = rank_kernel(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  REQUIRE(r.kernel.size() == 1);
  CHECK(r.kernel[0][1] == f5.one());
  CHECK(is_zero_vector(multiply(m, r.kernel[0])));
}

TEST_CASE("rank and kernel agree with an independent elimination") {
  std::mt19937_64 rng(99);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::finite(2, 2), Field::rationals()}) {
    for (int trial = 0; trial < 150; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 9);
      const auto m = random_matrix(f, dim(rng), dim(rng), rng, trial % 8);
      const auto rk = rank_kernel(m);
      CHECK(rk.rank == oracle::rank(m.data()));
      CHECK(rk.rank + rk.kernel.size() == m.cols());
      for (const auto& v : rk.kernel) CHECK(is_zero_vector(multiply(m, v)));
      if (!rk.kernel.empty()) CHECK(oracle::rank(rk.kernel) == rk.kernel.size());

      std::vector<std::size_t> perm(m.cols());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto alt = rank_kernel_permuted(m, perm);
      CHECK(alt.rank == rk.rank);
      for (const auto& v : alt.kernel) CHECK(is_zero_vector(multiply(m, v)));
      auto both = rk.kernel;
      both.insert(both.end(), alt.kernel.begin(), alt.kernel.end());
      CHECK(oracle::rank(both) == rk.kernel.size());
    }
  }
}

TEST_CASE("permute_columns") {
  const auto f3 = Field::prime(3);
  const auto m = Matrix::from_rows(f3, {{f3.from_int(0), f3.from_int(1), f3.from_int(2)}});
  const auto p = permute_columns(m, {2, 0, 1});
  CHECK(p.row(0) == Vector{f3.from_int(2), f3.from_int(0), f3.from_int(1)});
}

TEST_CASE("solve") {
  std::mt19937_64 rng(5);
  const auto f7 = Field::prime(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(f7, 4, 5, rng, 3);
    Vector x(5);
    for (auto& v : x) v = f7.from_int(static_cast<int>(rng() % 7));
    const auto b = multiply(m, x);
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(multiply(m, *sol) == b);
  }
  Matrix z(f7, 1, 2);
  CHECK(!solve(z, Vector{f7.one()}).has_value());
}

TEST_CASE("field mixing is rejected") {
  const auto f5 = Field::prime(5);
  const auto f7 = Field::prime(7);
  CHECK(error_code_of([&] { Matrix::from_rows(f5, {{f5.one(), f7.one()}}); }) == ErrorCode::MixedFields);
  CHECK(error_code_of([&] { Matrix::from_rows(f5, {{f5.one(), f5.one()}, {f5.one()}}); }).has_value());
}
