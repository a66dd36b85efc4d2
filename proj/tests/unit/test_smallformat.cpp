#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperdet/errors.hpp"
#include "hyperdet/exactdet.hpp"
#include "hyperdet/hyperdet.hpp"
#include "hyperdet/smallformat.hpp"
#include "support/generators.hpp"

#include <algorithm>

using namespace hdet;
using hdet::testing::Rng;
using hdet::testing::random_tensor;

TEST_CASE("det222 fixtures of the counterexample tensors") {
  Rng rng(50);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar a000 = testing::random_int(rng), a111 = testing::random_int(rng);
    const Scalar b001 = testing::random_int(rng), b110 = testing::random_int(rng);
    CHECK(det222(counterexample_a(a000, a111)) == a000 * a000 * a111 * a111);
    CHECK(det222(counterexample_b(b001, b110)) == b001 * b001 * b110 * b110);
  }
}

TEST_CASE("det222 of a single-entry tensor is 0") {
  for (std::size_t pos = 0; pos < 8; ++pos) {
    std::vector<Scalar> e(8);
    e[pos] = 5;
    CHECK(det222(MultiMatrix::from_entries(Format({2, 2, 2}), e)) == 0);
  }
}

TEST_CASE("schlafli pencil coefficients") {
  std::vector<Scalar> e(8);
  for (std::size_t i = 0; i < 8; ++i) e[i] = static_cast<long>(i + 1);
  const auto q = schlafli_pencil(MultiMatrix::from_entries(Format({2, 2, 2}), e));
  // slices [[1,2],[3,4]] and [[5,6],[7,8]]
  CHECK(q.a == -2);
  CHECK(q.c == -2);
  CHECK(q.b == 1 * 8 + 5 * 4 - 2 * 7 - 6 * 3);
  CHECK(q.discriminant() == q.b * q.b - 16);
}

TEST_CASE("det222 is invariant under all axis permutations") {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_tensor(rng, {2, 2, 2});
    const Scalar d = det222(a);
    std::vector<std::size_t> sigma{0, 1, 2};
    do {
      CHECK(det222(permute_axes(a, sigma)) == d);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("det222 homogeneity and equivariance") {
  Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_tensor(rng, {2, 2, 2});
    const Scalar t = testing::random_int(rng);
    CHECK(det222(scale(a, t)) == pow(t, 4) * det222(a));
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const auto g = testing::random_square(rng, 2, -4, 4);
      const Scalar dg = det_bareiss(g);
      CHECK(det222(apply_axis_map(a, axis, g)) == dg * dg * det222(a));
    }
  }
}

// Cayley's expansion of the 2x2x2 hyperdeterminant, written out term by term.
Scalar cayley(const MultiMatrix& t) {
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return t.get({i, j, k}); };
  return a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
         a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1) -
         2 * (a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
              a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
              a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) + a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1)) +
         4 * (a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1));
}

TEST_CASE("det222 agrees with the Cayley expansion") {
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_tensor(rng, {2, 2, 2});
    CHECK(det222(a) == cayley(a));
  }
}

TEST_CASE("det222 wrong format and 2x2x2 is not boundary format") {
  CHECK_THROWS_AS(det222(MultiMatrix::zeros(Format({3, 2, 2}))), ShapeError);
  CHECK_THROWS_AS(hyperdet(MultiMatrix::zeros(Format({2, 2, 2}))), FormatError);
}

TEST_CASE("counterexample report") {
  SUBCASE("default instantiation") {
    const auto r = counterexample_report();
    CHECK(r.det_a == 1);
    CHECK(r.det_b == 1);
    CHECK(r.a_nondegenerate);
    CHECK(r.b_nondegenerate);
    CHECK(r.product.format() == Format({2, 2, 2, 2}));
    CHECK(r.witness == std::vector<Vector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(r.witness_valid);
  }
  SUBCASE("scaling A by 3") {
    const auto r = counterexample_report(scale(counterexample_a(), 3), counterexample_b());
    CHECK(r.det_a == 81);
    CHECK(r.witness_valid);
  }
  SUBCASE("B with b_001 only is degenerate") {
    const auto r = counterexample_report(counterexample_a(), counterexample_b(1, 0));
    CHECK(r.det_b == 0);
    CHECK_FALSE(r.b_nondegenerate);
  }
}
