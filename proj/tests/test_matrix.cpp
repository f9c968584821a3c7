#include "doctest.h"

#include <cremona/matrix.hpp>
#include <cremona/rng.hpp>

#include <vector>

using namespace cremona;

namespace {

QMat random_matrix(Rng& rng, int rows, int cols, int height) {
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(height);
  return m;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  QMat id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(id.rank() == 3);
  CHECK(id.kernel().empty());

  QMat z(4, 2);
  CHECK(z.rank() == 0);
  CHECK(z.kernel().size() == 2);

  // Two proportional rows.
  QMat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = rat(1, 2);
  m.at(1, 1) = 1;
  m.at(1, 2) = rat(3, 2);
  CHECK(m.rank() == 1);
  CHECK(m.kernel().size() == 2);
}

TEST_CASE("kernel of a single row") {
  QMat m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  // Canonical primitive representative with positive free coordinate.
  CHECK(ker[0][0] == -1);
  CHECK(ker[0][1] == 1);
}

TEST_CASE("kernel vectors annihilate the matrix") {
  Rng rng(77001);
  for (int trial = 0; trial < 4; ++trial) {
    int rows = 5 + (int)rng.below(6);
    int cols = rows + 2 + (int)rng.below(5);
    QMat m = random_matrix(rng, rows, cols, 9);
    auto ker = m.kernel();
    int r = m.rank();
    CHECK((int)ker.size() == cols - r);
    for (const auto& v : ker) {
      CHECK(!is_zero_vector(v));
      CHECK(is_zero_vector(m.apply(v)));
    }
  }
}

TEST_CASE("rank plus nullity on a wide random matrix") {
  Rng rng(77002);
  QMat m = random_matrix(rng, 40, 60, 5);
  int r = m.rank();
  // A random 40x60 matrix has full row rank with overwhelming probability.
  CHECK(r == 40);
  auto ker = m.kernel();
  CHECK((int)ker.size() == 60 - r);
  for (size_t k = 0; k < ker.size(); k += 5) CHECK(is_zero_vector(m.apply(ker[k])));
}

TEST_CASE("kernel vectors are primitive and independent") {
  Rng rng(77003);
  QMat m = random_matrix(rng, 3, 6, 7);
  auto ker = m.kernel();
  REQUIRE((int)ker.size() == 6 - m.rank());
  for (const auto& v : ker) {
    Integer content = 0;
    bool all_integer = true;
    for (const auto& x : v) {
      if (x.get_den() != 1) all_integer = false;
      content = gcd(content, x.get_num());
    }
    CHECK(all_integer);
    CHECK(content == 1);
  }
  // Stacking the kernel vectors gives a full-rank matrix.
  QMat stack((int)ker.size(), 6);
  for (int i = 0; i < (int)ker.size(); ++i)
    for (int j = 0; j < 6; ++j) stack.at(i, j) = ker[i][j];
  CHECK(stack.rank() == (int)ker.size());
}

TEST_CASE("determinant") {
  QMat m(2, 2);
  m.at(0, 0) = rat(1, 2);
  m.at(0, 1) = 3;
  m.at(1, 0) = 1;
  m.at(1, 1) = 4;
  CHECK(m.det() == Rational(-1));

  // det of a triangular matrix is the product of the diagonal.
  QMat t(3, 3);
  t.at(0, 0) = 2;
  t.at(1, 0) = 5;
  t.at(1, 1) = rat(-1, 3);
  t.at(2, 0) = 7;
  t.at(2, 1) = 11;
  t.at(2, 2) = rat(3, 2);
  CHECK(t.det() == Rational(-1));

  // Singular matrix.
  QMat s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  CHECK(s.det() == Rational(0));

  // Row swap flips the sign.
  QMat a(2, 2);
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  CHECK(a.det() == Rational(-1));
}

TEST_CASE("det is multiplicative on random matrices") {
  Rng rng(77004);
  for (int trial = 0; trial < 3; ++trial) {
    int n = 4;
    QMat a = random_matrix(rng, n, n, 6);
    QMat b = random_matrix(rng, n, n, 6);
    QMat ab(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
        ab.at(i, j) = s;
      }
    CHECK(ab.det() == a.det() * b.det());
  }
}

TEST_CASE("modular rank lower-bounds the exact rank") {
  Rng rng(77005);
  for (int trial = 0; trial < 5; ++trial) {
    QMat m = random_matrix(rng, 6 + (int)rng.below(4), 9 + (int)rng.below(4), 8);
    int r = m.rank();
    int rm = m.rank_mod();
    CHECK(rm <= r);
    // Random small-height matrices almost never lose rank mod a 61-bit prime.
    CHECK(rm == r);
  }
}

TEST_CASE("full modular column rank certifies a trivial kernel") {
  Rng rng(77006);
  QMat m = random_matrix(rng, 12, 8, 5);
  REQUIRE(m.rank_mod() == 8);
  CHECK(m.kernel().empty());
}
