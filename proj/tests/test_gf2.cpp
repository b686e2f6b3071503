#include <gtest/gtest.h>

#include <random>

#include "holo/gf2.hpp"

using namespace holo;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, bit(rng));
    }
  }
  return m;
}

// Every XOR combination of the rows, as a set of distinct vectors.
std::size_t span_size(const BitMatrix& m) {
  std::vector<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    BitVector v(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if ((mask >> r) & 1U) {
        v ^= m.row(r);
      }
    }
    seen.push_back(v.to_string());
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

// Bit-by-bit elimination on plain vectors.
std::size_t naive_rank(const BitMatrix& m) {
  std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m.get(r, c) ? 1 : 0;
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) {
      ++p;
    }
    if (p == a.size()) {
      continue;
    }
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
          a[r][k] ^= a[rank][k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

BitVector combine(const BitMatrix& rows, const BitVector& lambda) {
  BitVector sum(rows.cols());
  for (const std::size_t j : lambda.set_bits()) {
    sum ^= rows.row(j);
  }
  return sum;
}

}  // namespace

TEST(BitVector, TailBitsStayZero) {
  BitVector v(70);
  v.set(69);
  v.set(3);
  EXPECT_EQ(v.popcount(), 2U);
  EXPECT_EQ(v.first_set(), 3U);
  EXPECT_EQ(v.to_string().size(), 70U);
  EXPECT_TRUE((v ^ v).none());
  EXPECT_EQ(BitVector::from_string(v.to_string()), v);
}

TEST(BitVector, LexOrderPutsBitZeroFirst) {
  EXPECT_TRUE(BitVector::from_string("0110").lex_less(BitVector::from_string("1000")));
  EXPECT_FALSE(BitVector::from_string("1000").lex_less(BitVector::from_string("0111")));
  EXPECT_FALSE(BitVector::from_string("0101").lex_less(BitVector::from_string("0101")));
}

TEST(BitVector, DotAndSubset) {
  const auto a = BitVector::from_string("1101");
  const auto b = BitVector::from_string("1001");
  EXPECT_FALSE(a.dot(b));
  EXPECT_TRUE(a.dot(BitVector::from_string("0100")));
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
}

TEST(Rank, Identity) { EXPECT_EQ(rank(BitMatrix::identity(3)), 3U); }

TEST(Rank, DuplicateRows) {
  BitMatrix m({BitVector::from_string("1011"), BitVector::from_string("1011")}, 4);
  EXPECT_EQ(rank(m), 1U);
}

TEST(Rank, MatchesSpanEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const BitMatrix m = random_matrix(rng, 20, 12);
    const std::size_t r = rank(m);
    EXPECT_EQ(std::size_t{1} << r, span_size(m));
  }
}

TEST(Rank, PackedMatchesNaive) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> dim(1, 64);
  for (int trial = 0; trial < 1000; ++trial) {
    const BitMatrix m = random_matrix(rng, dim(rng), dim(rng), trial % 2 ? 0.5 : 0.1);
    ASSERT_EQ(rank(m), naive_rank(m)) << "trial " << trial;
  }
}

TEST(Rank, InputUntouchedAndEchelonInPlace) {
  std::mt19937_64 rng(13);
  const BitMatrix m = random_matrix(rng, 9, 70);
  BitMatrix copy = m;
  const std::size_t r = rank(m);
  EXPECT_EQ(copy, m);
  EXPECT_EQ(reduce_to_echelon(copy), r);
  std::size_t last_pivot = 0;
  for (std::size_t row = 0; row < copy.rows(); ++row) {
    const std::size_t p = copy.row(row).first_set();
    if (row >= r) {
      EXPECT_TRUE(copy.row(row).none());
      continue;
    }
    if (row > 0) {
      EXPECT_GT(p, last_pivot);
    }
    for (std::size_t other = 0; other < r; ++other) {
      if (other != row) {
        EXPECT_FALSE(copy.get(other, p));
      }
    }
    last_pivot = p;
  }
}

TEST(Solve, IdentityBasis) {
  const auto lambda = solve_combination(BitMatrix::identity(4), BitVector::from_string("0101"));
  ASSERT_TRUE(lambda);
  EXPECT_EQ(lambda->to_string(), "0101");
}

TEST(Solve, TwoRowXor) {
  BitMatrix rows({BitVector::from_string("110"), BitVector::from_string("011")}, 3);
  const auto lambda = solve_combination(rows, BitVector::from_string("101"));
  ASSERT_TRUE(lambda);
  EXPECT_EQ(lambda->to_string(), "11");
  EXPECT_FALSE(solve_combination(rows, BitVector::from_string("100")));
}

TEST(Solve, DimensionMismatchThrows) {
  EXPECT_THROW((void)solve_combination(BitMatrix::identity(3), BitVector(4)), std::invalid_argument);
}

TEST(Solve, MatchesExhaustiveCombinations) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const BitMatrix rows = random_matrix(rng, 6, 10, 0.3);
    BitVector target(10);
    for (std::size_t c = 0; c < 10; ++c) {
      target.set(c, rng() & 1U);
    }
    bool reachable = false;
    for (std::uint64_t mask = 0; mask < 64 && !reachable; ++mask) {
      BitVector v(10);
      for (std::size_t r = 0; r < 6; ++r) {
        if ((mask >> r) & 1U) {
          v ^= rows.row(r);
        }
      }
      reachable = v == target;
    }
    const auto lambda = solve_combination(rows, target);
    ASSERT_EQ(lambda.has_value(), reachable);
    if (lambda) {
      EXPECT_EQ(combine(rows, *lambda), target);
      EXPECT_EQ(solve_combination(rows, target), lambda);
    }
  }
}

TEST(Kernel, FullRankHasEmptyKernel) { EXPECT_TRUE(kernel_basis(BitMatrix::identity(3)).empty()); }

TEST(Kernel, ZeroMatrix) { EXPECT_EQ(kernel_basis(BitMatrix(2, 5)).size(), 2U); }

TEST(Kernel, AnnihilatesAndCountsRankNullity) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const BitMatrix m = random_matrix(rng, 8, 8, trial % 3 ? 0.5 : 0.2);
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(kernel.size() + rank(m), m.rows());
    for (const auto& x : kernel) {
      EXPECT_TRUE(combine(m, x).none());
      EXPECT_TRUE(x.any());
    }
    EXPECT_EQ(rank(BitMatrix(kernel, m.rows())), kernel.size());
  }
}

TEST(XorBasis, InsertReportsLowestPivotAndRejectsDependent) {
  XorBasis b(6);
  EXPECT_EQ(b.insert(BitVector::from_string("001100")), std::optional<std::size_t>(2));
  EXPECT_EQ(b.insert(BitVector::from_string("000110")), std::optional<std::size_t>(3));
  EXPECT_EQ(b.insert(BitVector::from_string("001010")), std::nullopt);
  EXPECT_EQ(b.rank(), 2U);
  EXPECT_EQ(b.lowest_pivot_at_or_above(3), 3U);
  EXPECT_EQ(b.lowest_pivot_at_or_above(4), 6U);
  EXPECT_TRUE(b.contains(BitVector::from_string("001010")));
  b.clear();
  EXPECT_EQ(b.rank(), 0U);
}

TEST(XorBasis, FullyReducedGivesLexSmallestCosetElement) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix m = random_matrix(rng, 5, 9);
    XorBasis b(9, true);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      b.insert(m.row(r));
    }
    BitVector v(9);
    for (std::size_t c = 0; c < 9; ++c) {
      v.set(c, rng() & 1U);
    }
    BitVector best = v;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      BitVector w = v;
      for (std::size_t r = 0; r < 5; ++r) {
        if ((mask >> r) & 1U) {
          w ^= m.row(r);
        }
      }
      if (w.lex_less(best)) {
        best = w;
      }
    }
    EXPECT_EQ(b.reduce(v), best);
  }
}
