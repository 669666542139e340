#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schur_scope {

using Int = std::int64_t;

// Overflow-checked arithmetic; throws Error(Overflow).
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Integer coordinates in the simple-root basis alpha_1..alpha_n.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t n) : coords_(n, 0) {}
  RootVector(std::initializer_list<Int> coords) : coords_(coords) {}
  explicit RootVector(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static RootVector simple(std::size_t n, std::size_t i);

  /// Parses "1,1,0".
  static RootVector parse(std::string_view text);

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }

  /// Sum of absolute coordinates.
  Int height() const noexcept;
  bool is_zero() const noexcept;
  bool is_positive() const noexcept;  // nonzero, all coordinates >= 0
  bool is_negative() const noexcept;

  /// The positive member of {v, -v}; v itself when v has mixed signs.
  RootVector abs() const;

  RootVector operator-() const;
  RootVector operator+(const RootVector& other) const;
  RootVector operator-(const RootVector& other) const;
  RootVector scaled(Int factor) const;

  std::string to_string() const;

  auto operator<=>(const RootVector&) const = default;
  bool operator==(const RootVector&) const = default;

 private:
  std::vector<Int> coords_;
};

/// Orders roots by height, then lexicographically on coordinates.
bool height_less(const RootVector& a, const RootVector& b);

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::size_t n, std::vector<Int> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::span<const Int> data() const noexcept { return data_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  RootVector operator*(const RootVector& v) const;

  IntMatrix transposed() const;
  RootVector column(std::size_t c) const;
  bool is_identity() const noexcept;

  Int determinant() const;
  std::size_t rank() const;
  /// Exact inverse; throws unless the determinant is +-1.
  IntMatrix unimodular_inverse() const;

  std::size_t hash() const noexcept;

  bool operator==(const IntMatrix&) const = default;
  auto operator<=>(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

/// Determinant of an arbitrary square matrix given row-major, by fraction-free elimination.
Int bareiss_determinant(std::size_t n, std::vector<Int> a);

/// Mixes a sequence of integers into one hash value.
std::size_t hash_ints(std::span<const Int> values, std::size_t seed = 0) noexcept;

std::vector<Int> parse_int_list(std::string_view text);
std::string join_ints(std::span<const Int> values, std::string_view sep = ",");

}  // namespace schur_scope
