#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holo {

/// Upper bound on the number of bits a single vector may hold.
inline constexpr std::size_t kMaxBits = std::size_t{1} << 20;

/// Dense bit vector packed into 64-bit words. Bits past size() are kept zero.
class BitVector {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }
  [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }
  [[nodiscard]] std::span<word_type> words() noexcept { return words_; }

  [[nodiscard]] bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  /// XORs `other` into *this, skipping the first `first_word` words (known to be zero in `other`).
  void xor_from_word(const BitVector& other, std::size_t first_word) noexcept {
    for (std::size_t w = first_word; w < words_.size(); ++w) {
      words_[w] ^= other.words_[w];
    }
  }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Lexicographic order with bit 0 most significant and 0 < 1.
  [[nodiscard]] bool lex_less(const BitVector& other) const;

  [[nodiscard]] std::size_t popcount() const noexcept;
  [[nodiscard]] bool any() const noexcept;
  [[nodiscard]] bool none() const noexcept { return !any(); }
  /// Index of the lowest set bit, or size() when the vector is zero.
  [[nodiscard]] std::size_t first_set() const noexcept;
  /// Parity of the bitwise AND with `other`.
  [[nodiscard]] bool dot(const BitVector& other) const;
  /// True when every set bit of *this is also set in `other`.
  [[nodiscard]] bool is_subset_of(const BitVector& other) const;

  [[nodiscard]] std::vector<std::size_t> set_bits() const;
  [[nodiscard]] std::string to_string() const;

private:
  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

/// Row-major bit matrix; every row is a BitVector of cols() bits.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length; `cols` is required so that an empty row list keeps its width.
  BitMatrix(std::vector<BitVector> rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] const BitVector& row(std::size_t r) const { return rows_[r]; }
  [[nodiscard]] BitVector& row(std::size_t r) { return rows_[r]; }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  void append_row(BitVector row);
  [[nodiscard]] BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Word-level XOR count accumulated by an elimination routine.
struct EliminationStats {
  std::uint64_t word_xors = 0;
};

/// GF(2) row rank. The input is copied.
[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// Reduces `m` in place to reduced row echelon form (pivot columns ascending,
/// zero rows last) and returns the rank.
std::size_t reduce_to_echelon(BitMatrix& m, EliminationStats* stats = nullptr);

/// Finds coefficients `lambda` with XOR_{j : lambda_j = 1} rows.row(j) == target.
///
/// Solves rows^T * lambda = target by eliminating the transposed system
/// augmented with `target`, pivoting on the lowest column and breaking ties by
/// the lowest row. Free coefficients are set to zero, so the result is a
/// deterministic function of the input. Throws std::invalid_argument when
/// target.size() != rows.cols().
[[nodiscard]] std::optional<BitVector> solve_combination(const BitMatrix& rows, const BitVector& target,
                                                         EliminationStats* stats = nullptr);

/// Basis of the left kernel {x : x^T m = 0}; it has rows() - rank(m) elements.
[[nodiscard]] std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Incrementally built basis kept in echelon form keyed on the lowest set bit.
///
/// Every stored vector has a distinct pivot (its lowest set bit). With
/// `fully_reduced` set, each stored vector is also zero at the pivots of all
/// the others, which makes reduce() return the lexicographically smallest
/// element of the coset v + span.
class XorBasis {
public:
  explicit XorBasis(std::size_t width, bool fully_reduced = false);

  /// Reduces `v` against the basis and stores the remainder if it is nonzero.
  /// Returns the pivot of the new element, or nullopt when `v` was already in the span.
  std::optional<std::size_t> insert(BitVector v);
  /// Remainder of `v` after reduction against the basis.
  [[nodiscard]] BitVector reduce(BitVector v) const;
  [[nodiscard]] bool contains(const BitVector& v) const { return reduce(v).none(); }

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }
  /// Smallest pivot among stored vectors that is >= `from`, or width() if none.
  [[nodiscard]] std::size_t lowest_pivot_at_or_above(std::size_t from) const;
  [[nodiscard]] std::vector<BitVector> vectors() const;
  void clear();

  [[nodiscard]] const EliminationStats& stats() const noexcept { return stats_; }

private:
  std::size_t width_;
  bool fully_reduced_;
  BitVector pivots_;
  std::vector<BitVector> basis_;
  std::vector<std::ptrdiff_t> slot_of_pivot_;  // pivot column -> index into basis_, or -1
  mutable EliminationStats stats_;
};

}  // namespace holo
