#include "transgress/matrix.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace transgress;

TEST(Matrix, InitializerAndAccess) {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(1, 2), 6);
  EXPECT_EQ(m.column(1), (std::vector<Integer>{2, 5}));
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), InvalidInput);
}

TEST(Matrix, TransposeAndProduct) {
  IntMatrix a{{1, 2}, {3, 4}, {5, 6}};
  IntMatrix at = a.transpose();
  EXPECT_EQ(at, (IntMatrix{{1, 3, 5}, {2, 4, 6}}));
  EXPECT_EQ(at * a, (IntMatrix{{35, 44}, {44, 56}}));
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_THROW(a * a, InvalidInput);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Matrix, RowAndColumnOperations) {
  IntMatrix m{{1, 2}, {3, 4}};
  m.add_row_multiple(1, 0, -3);
  EXPECT_EQ(m, (IntMatrix{{1, 2}, {0, -2}}));
  m.add_col_multiple(1, 0, -2);
  EXPECT_EQ(m, (IntMatrix{{1, 0}, {0, -2}}));
  m.negate_row(1);
  m.swap_cols(0, 1);
  EXPECT_EQ(m, (IntMatrix{{0, 1}, {2, 0}}));
}

TEST(Matrix, BigEntriesStayExact) {
  IntMatrix m{{Integer("123456789012345678901234567890")}};
  auto sq = m * m;
  EXPECT_EQ(sq(0, 0), Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST(Matrix, Helpers) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(mod_residue(-1, 5), 4);
  IntMatrix out;
  EXPECT_TRUE(try_to_integral(to_rational(IntMatrix{{2, -1}}), out));
  EXPECT_FALSE(try_to_integral(RatMatrix{{Rational(1, 2)}}, out));
  std::ostringstream os;
  os << IntMatrix{{1, -2}, {0, 3}};
  EXPECT_EQ(os.str(), "[[1,-2],[0,3]]");
}
