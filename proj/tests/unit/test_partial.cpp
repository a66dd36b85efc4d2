#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperdet/errors.hpp"
#include "hyperdet/partial.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <set>
#include <sstream>
#include <utility>

using namespace hdet;
using hdet::testing::Rng;
using hdet::testing::random_tensor;

TEST_CASE("p = 1: the partial map is the transpose") {
  Rng rng(20);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = random_tensor(rng, {n, n});
    const PartialMap map = build_partial(a);
    CHECK(map.matrix == as_square_matrix(a).transpose());
    CHECK(map.m_sequence == std::vector<std::size_t>{0});
  }
}

TEST_CASE("zero tensor gives the zero matrix") {
  const PartialMap map = build_partial(MultiMatrix::zeros(Format({3, 2, 2})));
  CHECK(map.matrix.size() == 6);
  CHECK(map.matrix.count_nonzero() == 0);
}

TEST_CASE("multiplication tensor: hand-assembled 3x2x2 partial map") {
  // Columns (i0, alpha_2) = e0(1,0), e0(0,1), e1(1,0), e1(0,1), e2(1,0), e2(0,1);
  // rows (beta_1, beta_2) with beta_1 in {(1,0),(0,1)}, beta_2 in {(2,0),(1,1),(0,2)}.
  // e_{i0,i1,i2} = 1 iff i0 = i1 + i2 puts ones at:
  const std::set<std::pair<std::size_t, std::size_t>> expected{
      {0, 0}, {1, 1}, {1, 2}, {3, 2}, {2, 3}, {4, 3}, {4, 4}, {5, 5}};
  const PartialMap map = build_partial(testing::multiplication_tensor());
  REQUIRE(map.matrix.size() == 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(map.matrix(r, c) == (expected.count({r, c}) ? 1 : 0));
    }
  CHECK(testing::leibniz_det(map.matrix) == -1);
  CHECK(map.row_basis[3].to_string() == "(0,1)(2,0)");
  CHECK(map.col_basis[2].to_string() == "e1(0,0)(1,0)");
}

TEST_CASE("builder agrees with the brute-force entry-rule oracle") {
  Rng rng(21);
  const std::vector<std::vector<std::size_t>> formats{
      {2, 2}, {3, 2, 2}, {4, 3, 2}, {4, 2, 3}, {4, 2, 2, 2}, {5, 3, 3}, {3, 1, 3}};
  for (const auto& dims : formats) {
    const auto a = random_tensor(rng, dims);
    CAPTURE(a.format().to_string());
    const PartialMap map = build_partial(a);
    CHECK(map.matrix.size() == degree_N(a.format()));
    CHECK(map.row_basis.size() == map.matrix.size());
    CHECK(map.col_basis.size() == map.matrix.size());
    CHECK(map.matrix == testing::oracle_partial(a, a.format().m_sequence()));
  }
}

TEST_CASE("entries are single tensor entries and structure depends only on the format") {
  Rng rng(22);
  const std::vector<std::vector<std::size_t>> formats{{3, 2, 2}, {4, 3, 2}, {4, 2, 2, 2}};
  for (const auto& dims : formats) {
    // Distinct entries 1..size make every value identify its tensor position.
    const Format f(dims);
    std::vector<Scalar> distinct(f.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) distinct[i] = static_cast<long>(i + 1);
    const PartialMap labelled = build_partial(MultiMatrix::from_entries(f, distinct));
    const PartialMap random = build_partial(random_tensor(rng, dims, 1, 9));
    std::size_t inner = f.size() / f.dim(0);
    for (std::size_t r = 0; r < labelled.matrix.size(); ++r)
      for (std::size_t c = 0; c < labelled.matrix.size(); ++c) {
        const Scalar& v = labelled.matrix(r, c);
        CHECK((sgn(v) != 0) == (sgn(random.matrix(r, c)) != 0));
        if (sgn(v) != 0) {
          // Entry comes from slice i0 of the column.
          const std::size_t pos = v.get_num().get_ui() - 1;
          CHECK(pos / inner == labelled.col_basis[c].i0);
        }
      }
    for (std::size_t c = 0; c < labelled.matrix.size(); ++c) {
      std::size_t nonzeros = 0;
      for (std::size_t r = 0; r < labelled.matrix.size(); ++r) nonzeros += sgn(labelled.matrix(r, c)) != 0;
      CHECK(nonzeros == inner);
    }
  }
}

TEST_CASE("build_partial is linear") {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_tensor(rng, {4, 3, 2});
    const auto b = random_tensor(rng, {4, 3, 2});
    const Scalar t = testing::random_int(rng);
    const SquareMatrix ma = build_partial(a).matrix, mb = build_partial(b).matrix;
    const SquareMatrix sum = build_partial(a + b).matrix;
    const SquareMatrix scaled = build_partial(scale(a, t)).matrix;
    for (std::size_t r = 0; r < ma.size(); ++r)
      for (std::size_t c = 0; c < ma.size(); ++c) {
        CHECK(sum(r, c) == ma(r, c) + mb(r, c));
        CHECK(scaled(r, c) == t * ma(r, c));
      }
  }
}

TEST_CASE("non-boundary format is rejected with k_0 vs sum") {
  try {
    build_partial(MultiMatrix::zeros(Format({2, 2, 2})));
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("k_0 = 1") != std::string::npos);
    CHECK(msg.find("= 2") != std::string::npos);
  }
}

TEST_CASE("generalized builder") {
  Rng rng(24);
  SUBCASE("q = 1 matches build_partial") {
    const auto a = random_tensor(rng, {4, 2, 3});
    const std::size_t ks[] = {3, 1, 2};
    const PartialMap g = build_generalized_partial(a, 1, ks);
    CHECK(g.matrix == build_partial(a).matrix);
  }
  SUBCASE("q = 2, ks = (2,1,1) is square") {
    const auto a = random_tensor(rng, {6, 4, 2});
    const std::size_t ks[] = {2, 1, 1};
    // source q(k_0+1) * count(2, m_2 = 1) = 6 * 2, target q(k_1+1) * count(2, 2) = 4 * 3
    CHECK(6 * monomial_count(2, 1) == 4 * monomial_count(2, 2));
    const PartialMap g = build_generalized_partial(a, 2, ks);
    CHECK(g.matrix.size() == 12);
    CHECK(g.matrix == testing::oracle_partial(a, {0, 1}));
  }
  SUBCASE("validation") {
    const auto a = random_tensor(rng, {4, 4, 1});
    const std::size_t zero_k[] = {1, 1, 0};
    CHECK_THROWS_AS(build_generalized_partial(a, 2, zero_k), ShapeError);
    const std::size_t ks[] = {2, 1, 1};
    CHECK_THROWS_AS(build_generalized_partial(random_tensor(rng, {6, 2, 2}), 2, ks), ShapeError);
    CHECK_THROWS_AS(build_generalized_partial(random_tensor(rng, {6, 4, 2}), 0, ks), ShapeError);
    const std::size_t not_boundary[] = {3, 1, 1};
    CHECK_THROWS_AS(build_generalized_partial(random_tensor(rng, {8, 4, 2}), 2, not_boundary), ShapeError);
  }
}

TEST_CASE("dump_partial") {
  SUBCASE("zero tensor lists no entries") {
    const std::string dump = dump_partial(build_partial(MultiMatrix::zeros(Format({3, 2, 2}))));
    CHECK(dump.find("nonzeros=0") != std::string::npos);
    CHECK(dump.substr(dump.find("# entries\n") + 10).empty());
  }
  SUBCASE("multiplication tensor lists 8 entries") {
    const std::string dump = dump_partial(build_partial(testing::multiplication_tensor()));
    std::istringstream in(dump.substr(dump.find("# entries\n") + 10));
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
      CHECK(line.find(" | ") != std::string::npos);
      ++count;
    }
    CHECK(count == 8);
    CHECK(dump.find("(0,1)(2,0) | e1(0,0)(1,0) | 1\n") != std::string::npos);
    CHECK(dump == dump_partial(build_partial(testing::multiplication_tensor())));
  }
  SUBCASE("2x2 identity") {
    std::vector<Scalar> id{1, 0, 0, 1};
    const std::string dump = dump_partial(build_partial(MultiMatrix::from_entries(Format({2, 2}), id)));
    CHECK(dump ==
          "# partial map format=2x2 m=(0) size=2 nonzeros=2\n"
          "# rows\nr0 (1,0)\nr1 (0,1)\n"
          "# cols\nc0 e0(0,0)\nc1 e1(0,0)\n"
          "# entries\n(1,0) | e0(0,0) | 1\n(0,1) | e1(0,0) | 1\n");
  }
}
