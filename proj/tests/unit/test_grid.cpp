#include <doctest.h>

#include "massprec/grid.hpp"

using namespace massprec;

TEST_CASE("grid spec derives h and size from n") {
  const GridSpec g(3, 4);
  CHECK(g.h() == 1.0 / 5.0);
  CHECK(g.size() == 64);
  CHECK(g.stride(0) == 16);
  CHECK(g.stride(1) == 4);
  CHECK(g.stride(2) == 1);
  CHECK_THROWS_AS(g.stride(3), DomainError);
}

TEST_CASE("grid spec rejects bad dimension or n") {
  CHECK_THROWS_AS(GridSpec(0, 4), DomainError);
  CHECK_THROWS_AS(GridSpec(4, 4), DomainError);
  CHECK_THROWS_AS(GridSpec(2, 0), DomainError);
}

TEST_CASE("grid vector length must match the grid") {
  const GridSpec g(2, 3);
  CHECK_THROWS_AS(GridVector(g, std::vector<double>(8)), DimensionError);
  const GridVector v(g);
  CHECK(v.size() == 9);
  CHECK_THROWS_AS(require_same_grid(GridSpec(1, 9), v), DimensionError);
}

TEST_CASE("operator kind names round-trip") {
  for (auto k : {OperatorKind::kLaplacian, OperatorKind::kMass, OperatorKind::kPreconditioned}) {
    CHECK(parse_operator_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_operator_kind("jacobi").has_value());
}
