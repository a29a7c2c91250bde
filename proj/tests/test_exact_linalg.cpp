#include <doctest.h>

#include <random>

#include "k3iso/exact_linalg.hpp"
#include "oracles.hpp"

using namespace k3iso;

namespace {

bool is_row_hnf(const IntMatrix& h) {
  long prev = -1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (static_cast<long>(c) <= prev) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    for (std::size_t below = r + 1; below < h.rows(); ++below)
      if (h(below, c) != 0) return false;
    prev = static_cast<long>(c);
  }
  return true;
}

const std::vector<IntVec4> kWeights = {
    {1, 1, 1, 1},   {1, 6, 14, 21}, {2, 4, 5, 9},  {3, 6, 7, 8},   {1, 2, 5, 7},
    {5, 6, 22, 33}, {2, 3, 7, 9},   {3, 4, 5, 6},  {1, 4, 10, 15}, {7, 8, 9, 12}};

}  // namespace

TEST_CASE("hnf of small hand-reduced matrices") {
  CHECK(hnf(IntMatrix{{2, 0}, {0, 3}}).h == IntMatrix{{2, 0}, {0, 3}});
  CHECK(hnf(IntMatrix{{2, 4}, {1, 3}}).h == IntMatrix{{1, 1}, {0, 2}});
  CHECK(hnf(IntMatrix{{0, -5}}).h == IntMatrix{{0, 5}});
  CHECK(hnf(IntMatrix{{6}, {4}, {10}}).h == IntMatrix{{2}, {0}, {0}});
}

TEST_CASE("hnf transform and shape on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 4) % 5);
    const IntMatrix m = oracle::random_matrix(rng, rows, cols, trial % 3 == 0 ? 3 : 40);
    const auto d = hnf(m);
    CHECK(d.u * m == d.h);
    CHECK(abs(oracle::cofactor_det(d.u)) == 1);
    CHECK(is_row_hnf(d.h));
  }
}

TEST_CASE("smith invariants agree with determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 4);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 3) % 4);
    IntMatrix m = oracle::random_matrix(rng, rows, cols, 6);
    if (trial % 5 == 0)
      for (std::size_t c = 0; c < cols; ++c) m(0, c) *= 4;
    CHECK(smith_invariants(m) == oracle::smith_by_minors(m));
  }
  CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
}

TEST_CASE("determinant and inverse") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    const IntMatrix m = oracle::random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == oracle::cofactor_det(m));
    const auto inv = inverse(to_rational(m));
    CHECK(inv.has_value() == (oracle::cofactor_det(m) != 0));
    if (inv) CHECK(*inv * to_rational(m) == RatMatrix::identity(n));
  }
  CHECK_FALSE(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(IntMatrix{{1, 1}, {0, 1}}));
  CHECK(is_unimodular(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{1, 2, 3}}));
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) CHECK(is_unimodular(oracle::random_unimodular(rng)));
}

TEST_CASE("kernel basis for hand-computed weights") {
  CHECK(kernel_basis({1, 1, 1, 1}) == IntMatrix{{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
  CHECK(kernel_basis({1, 6, 14, 21}) == IntMatrix{{1, 1, 1, -1}, {0, 7, 0, -2}, {0, 0, 3, -2}});
}

TEST_CASE("kernel basis is orthogonal, saturated and canonical") {
  std::mt19937 rng(13);
  for (const auto& w : kWeights) {
    const IntMatrix b = kernel_basis(w);
    REQUIRE(b.rows() == 3);
    REQUIRE(b.cols() == 4);
    for (std::size_t r = 0; r < 3; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < 4; ++c) s += b(r, c) * w[c];
      CHECK(s == 0);
    }
    // Saturation: the 3x3 minors are coprime.
    CHECK(oracle::determinantal_divisor(b, 3) == 1);
    CHECK(is_row_hnf(b));

    // Every small kernel vector is an integer combination of the rows.
    IntVec4 m;
    for (long a = -3; a <= 3; ++a)
      for (long bb = -3; bb <= 3; ++bb)
        for (long c = -3; c <= 3; ++c) {
          m = {a, bb, c, 0};
          const Integer rest = -(w[0] * a + w[1] * bb + w[2] * c);
          if (rest % w[3] != 0) continue;
          m[3] = rest / w[3];
          CHECK(from_coords(to_coords(m, b), b) == m);
        }

    // Another generating set of the same lattice has the same HNF.
    const IntMatrix u = oracle::random_unimodular(rng);
    CHECK(hnf(u * b).h == b);
  }
}

TEST_CASE("coordinates round trip") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-50, 50);
  for (const auto& w : kWeights) {
    const IntMatrix b = kernel_basis(w);
    for (int i = 0; i < 1000; ++i) {
      const IntVec3 c{e(rng), e(rng), e(rng)};
      const IntVec4 m = from_coords(c, b);
      CHECK(to_coords(m, b) == c);
    }
  }
  const IntMatrix b = kernel_basis({1, 6, 14, 21});
  CHECK(to_coords(IntVec4{41, -1, -1, -1}, b) == IntVec3{41, -6, -14});
}

TEST_CASE("coordinates outside the lattice") {
  const IntMatrix b = kernel_basis({1, 6, 14, 21});
  CHECK_THROWS_AS(to_coords(IntVec4{1, 0, 0, 0}, b), Error);
  IntMatrix doubled = b;
  for (std::size_t c = 0; c < 4; ++c) doubled(0, c) *= 2;
  try {
    to_coords(IntVec4{1, 1, 1, -1}, doubled);
    FAIL("expected NotInLattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInLattice);
  }
  const RatVec3 half = to_coords(RatVec4{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}, b);
  CHECK(half == RatVec3{Rational(1, 2), 0, 0});
}
