#include "holo/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "holo/errors.hpp"

namespace holo {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

void require_same_size(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bit vector length mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length) {
  if (length > kMaxBits) {
    throw capacity_error("bit vector of " + std::to_string(length) + " bits exceeds the 2^20 limit");
  }
  words_.assign(words_for(length), 0);
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

bool BitVector::lex_less(const BitVector& other) const {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const word_type diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      const auto bit = static_cast<unsigned>(std::countr_zero(diff));
      return ((words_[w] >> bit) & 1U) == 0;
    }
  }
  return false;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t total = 0;
  for (const word_type w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return length_;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(*this, other);
  word_type acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> BitVector::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    word_type bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) {
      throw std::invalid_argument("BitMatrix rows must all have " + std::to_string(cols_) + " columns");
    }
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("appended row has wrong length");
  }
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const std::size_t c : rows_[r].set_bits()) {
      t.set(c, r);
    }
  }
  return t;
}

namespace {

// Gauss-Jordan elimination over the first `pivot_cols` columns. With `full`
// unset only rows below the pivot are cleared (row echelon form).
std::size_t eliminate(BitMatrix& m, std::size_t pivot_cols, bool full, EliminationStats* stats) {
  std::size_t rank = 0;
  const std::size_t nrows = m.rows();
  for (std::size_t c = 0; c < pivot_cols && rank < nrows; ++c) {
    std::size_t pivot = rank;
    while (pivot < nrows && !m.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == nrows) {
      continue;
    }
    if (pivot != rank) {
      std::swap(m.row(pivot), m.row(rank));
    }
    const BitVector& prow = m.row(rank);
    const std::size_t first_word = c / BitVector::kWordBits;
    for (std::size_t r = full ? 0 : rank + 1; r < nrows; ++r) {
      if (r != rank && m.get(r, c)) {
        // prow is zero below column c.
        m.row(r).xor_from_word(prow, first_word);
        if (stats != nullptr) {
          stats->word_xors += prow.word_count() - first_word;
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t reduce_to_echelon(BitMatrix& m, EliminationStats* stats) {
  return eliminate(m, m.cols(), /*full=*/true, stats);
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix copy = m;
  return eliminate(copy, copy.cols(), /*full=*/false, nullptr);
}

std::optional<BitVector> solve_combination(const BitMatrix& rows, const BitVector& target, EliminationStats* stats) {
  if (target.size() != rows.cols()) {
    throw std::invalid_argument("solve_combination: target has " + std::to_string(target.size()) +
                                " bits but rows have " + std::to_string(rows.cols()));
  }
  const std::size_t nvars = rows.rows();
  // One equation per column of `rows`; the last bit holds the right-hand side.
  BitMatrix system(rows.cols(), nvars + 1);
  for (std::size_t j = 0; j < nvars; ++j) {
    for (const std::size_t i : rows.row(j).set_bits()) {
      system.set(i, j);
    }
  }
  for (const std::size_t i : target.set_bits()) {
    system.set(i, nvars);
  }
  const std::size_t r = eliminate(system, nvars, /*full=*/true, stats);
  for (std::size_t i = r; i < system.rows(); ++i) {
    if (system.get(i, nvars)) {
      return std::nullopt;
    }
  }
  BitVector lambda(nvars);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t pivot = system.row(i).first_set();
    if (system.get(i, nvars)) {
      lambda.set(pivot);
    }
  }
  return lambda;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  BitMatrix aug(nrows, ncols + nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (const std::size_t c : m.row(r).set_bits()) {
      aug.set(r, c);
    }
    aug.set(r, ncols + r);
  }
  const std::size_t r = eliminate(aug, ncols, /*full=*/false, nullptr);
  std::vector<BitVector> basis;
  basis.reserve(nrows - r);
  for (std::size_t i = r; i < nrows; ++i) {
    BitVector x(nrows);
    for (std::size_t j = 0; j < nrows; ++j) {
      if (aug.get(i, ncols + j)) {
        x.set(j);
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

XorBasis::XorBasis(std::size_t width, bool fully_reduced)
    : width_(width), fully_reduced_(fully_reduced), pivots_(width), slot_of_pivot_(width, -1) {}

BitVector XorBasis::reduce(BitVector v) const {
  if (v.size() != width_) {
    throw std::invalid_argument("XorBasis: vector width mismatch");
  }
  const auto piv = pivots_.words();
  auto vw = v.words();
  for (std::size_t w = 0; w < vw.size(); ++w) {
    while ((vw[w] & piv[w]) != 0) {
      const std::size_t p = w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(vw[w] & piv[w]));
      const BitVector& b = basis_[static_cast<std::size_t>(slot_of_pivot_[p])];
      v.xor_from_word(b, w);
      stats_.word_xors += b.word_count() - w;
    }
  }
  return v;
}

std::optional<std::size_t> XorBasis::insert(BitVector v) {
  BitVector r = reduce(std::move(v));
  const std::size_t p = r.first_set();
  if (p == width_) {
    return std::nullopt;
  }
  if (fully_reduced_) {
    for (auto& b : basis_) {
      if (b.get(p)) {
        const std::size_t start = p / BitVector::kWordBits;
        b.xor_from_word(r, start);
        stats_.word_xors += r.word_count() - start;
      }
    }
  }
  pivots_.set(p);
  slot_of_pivot_[p] = static_cast<std::ptrdiff_t>(basis_.size());
  basis_.push_back(std::move(r));
  return p;
}

std::size_t XorBasis::lowest_pivot_at_or_above(std::size_t from) const {
  for (std::size_t p = from; p < width_; ++p) {
    if (pivots_.get(p)) {
      return p;
    }
  }
  return width_;
}

std::vector<BitVector> XorBasis::vectors() const {
  std::vector<BitVector> out;
  out.reserve(basis_.size());
  for (std::size_t p = 0; p < width_; ++p) {
    if (slot_of_pivot_[p] >= 0) {
      out.push_back(basis_[static_cast<std::size_t>(slot_of_pivot_[p])]);
    }
  }
  return out;
}

void XorBasis::clear() {
  basis_.clear();
  pivots_ = BitVector(width_);
  std::fill(slot_of_pivot_.begin(), slot_of_pivot_.end(), -1);
  stats_ = {};
}

}  // namespace holo
