#include <doctest.h>

#include "demazure/errors.hpp"
#include "demazure/linalg.hpp"

using namespace demazure;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  size_t r = rows.size();
  size_t c = rows.begin()->size();
  Mat m(r, c);
  size_t i = 0;
  for (const auto& row : rows) {
    size_t j = 0;
    for (int x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rank and kernel") {
  Mat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  Mat k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());

  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(kernel_basis(Mat::identity(3)).cols() == 0);
  CHECK(kernel_basis(Mat(2, 0)).cols() == 0);
  CHECK(kernel_basis(Mat(0, 3)).cols() == 3);
}

TEST_CASE("column space canonical form") {
  Mat a = from_rows({{1, 2}, {0, 1}});
  Mat b = from_rows({{3, 5}, {1, 2}});
  CHECK(same_column_span(a, b));
  CHECK(colspace_basis(a) == colspace_basis(b));
  CHECK(colspace_basis(Mat(3, 0)).cols() == 0);
}

TEST_CASE("intersection of column spans") {
  // span{(1,0,0),(0,1,0)} ∩ span{(0,1,0),(0,0,1)} = span{(0,1,0)}
  Mat a = from_rows({{1, 0}, {0, 1}, {0, 0}});
  Mat b = from_rows({{0, 0}, {1, 0}, {0, 1}});
  Mat i = intersect_columns(a, b);
  REQUIRE(i.cols() == 1);
  CHECK(i.at(0, 0) == 0);
  CHECK(i.at(1, 0) == 1);
  CHECK(i.at(2, 0) == 0);
  CHECK(intersect_columns(a, Mat(3, 0)).cols() == 0);
}

TEST_CASE("preimage of a subspace") {
  // x(u0,u1) = (u0, u0); preimage of span{(1,1)} is everything,
  // preimage of span{(1,0)} is the kernel {u0 = 0}
  Mat x = from_rows({{1, 0}, {1, 0}});
  Mat diag = from_rows({{1}, {1}});
  CHECK(preimage_basis(x, diag).cols() == 2);
  Mat e0 = from_rows({{1}, {0}});
  Mat p = preimage_basis(x, e0);
  REQUIRE(p.cols() == 1);
  CHECK(p.at(0, 0) == 0);
}

TEST_CASE("inverse") {
  Mat m = from_rows({{2, 1}, {1, 1}});
  Mat inv = inverse(m);
  CHECK(m * inv == Mat::identity(2));
  CHECK_THROWS_AS(inverse(from_rows({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("rational parsing is exact") {
  CHECK(rat_from_string("2/4") == Rat(1, 2));
  CHECK(rat_from_string("-7") == -7);
  CHECK(rat_from_string("1/3") + rat_from_string("1/6") == Rat(1, 2));
  CHECK_THROWS_AS(rat_from_string("zz"), Error);
}
