#include "schur_scope/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "schur_scope/error.hpp"

namespace schur_scope {

namespace {
__extension__ typedef __int128 Wide;  // intermediate products in elimination
}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Diagonal: return "diagonal";
    case ErrorKind::Sign: return "sign";
    case ErrorKind::Symmetrizability: return "symmetrizability";
    case ErrorKind::Irreducibility: return "irreducibility";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::RankMismatch: return "rank-mismatch";
    case ErrorKind::NotFinite: return "not-finite";
    case ErrorKind::NotAffine: return "not-affine";
    case ErrorKind::NotReflection: return "not-reflection";
    case ErrorKind::NotRealRoot: return "not-real-root";
    case ErrorKind::NotPermutation: return "not-permutation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::UnknownName: return "unknown-name";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return out;
}

// ---------------------------------------------------------------------------
// RootVector

RootVector RootVector::simple(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorKind::IndexOutOfRange, "simple root index out of range");
  RootVector v(n);
  v[i] = 1;
  return v;
}

RootVector RootVector::parse(std::string_view text) {
  auto values = parse_int_list(text);
  if (values.empty()) throw Error(ErrorKind::Parse, "empty root vector");
  return RootVector(std::move(values));
}

Int RootVector::height() const noexcept {
  Int h = 0;
  for (Int c : coords_) h += c < 0 ? -c : c;
  return h;
}

bool RootVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

bool RootVector::is_positive() const noexcept {
  return !is_zero() &&
         std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
}

bool RootVector::is_negative() const noexcept {
  return !is_zero() &&
         std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c <= 0; });
}

RootVector RootVector::abs() const { return is_negative() ? -*this : *this; }

RootVector RootVector::operator-() const {
  RootVector out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

RootVector RootVector::operator+(const RootVector& other) const {
  if (other.size() != size()) throw Error(ErrorKind::RankMismatch, "root vector size mismatch");
  RootVector out(*this);
  for (std::size_t i = 0; i < size(); ++i) out[i] = checked_add(out[i], other[i]);
  return out;
}

RootVector RootVector::operator-(const RootVector& other) const { return *this + (-other); }

RootVector RootVector::scaled(Int factor) const {
  RootVector out(*this);
  for (auto& c : out.coords_) c = checked_mul(c, factor);
  return out;
}

std::string RootVector::to_string() const { return join_ints(coords_); }

bool height_less(const RootVector& a, const RootVector& b) {
  const Int ha = a.height();
  const Int hb = b.height();
  if (ha != hb) return ha < hb;
  return a < b;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t n, std::vector<Int> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw Error(ErrorKind::RankMismatch, "matrix data size mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorKind::RankMismatch, "matrix rank mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const Int b = rhs(k, j);
        if (b == 0) continue;
        out(i, j) = checked_add(out(i, j), checked_mul(a, b));
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorKind::RankMismatch, "matrix rank mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = checked_add(data_[i], -rhs.data_[i]);
  return out;
}

RootVector IntMatrix::operator*(const RootVector& v) const {
  if (v.size() != n_) throw Error(ErrorKind::RankMismatch, "matrix/vector rank mismatch");
  RootVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] != 0) acc = checked_add(acc, checked_mul((*this)(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RootVector IntMatrix::column(std::size_t c) const {
  RootVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool IntMatrix::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int bareiss_determinant(std::size_t n, std::vector<Int> a) {
  if (n == 0) return 1;
  std::vector<Wide> m(a.begin(), a.end());
  auto at = [&](std::size_t r, std::size_t c) -> Wide& { return m[r * n + c]; };
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  const Wide det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) throw Error(ErrorKind::Overflow, "determinant overflow");
  return static_cast<Int>(det);
}

Int IntMatrix::determinant() const { return bareiss_determinant(n_, data_); }

std::size_t IntMatrix::rank() const {
  // Fraction-free row echelon form.
  std::vector<Wide> m(data_.begin(), data_.end());
  auto at = [&](std::size_t r, std::size_t c) -> Wide& { return m[r * n_ + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_ && at(pivot, col) == 0) ++pivot;
    if (pivot == n_) continue;
    for (std::size_t c = 0; c < n_; ++c) std::swap(at(rank, c), at(pivot, c));
    for (std::size_t r = rank + 1; r < n_; ++r) {
      const Wide f = at(r, col);
      if (f == 0) continue;
      const Wide p = at(rank, col);
      Wide g = 0;
      for (std::size_t c = 0; c < n_; ++c) {
        at(r, c) = at(r, c) * p - at(rank, c) * f;
        const Wide v = at(r, c) < 0 ? -at(r, c) : at(r, c);
        g = std::gcd(static_cast<unsigned long long>(g), static_cast<unsigned long long>(v));
      }
      if (g > 1)
        for (std::size_t c = 0; c < n_; ++c) at(r, c) /= g;
    }
    ++rank;
  }
  return rank;
}

IntMatrix IntMatrix::unimodular_inverse() const {
  const Int det = determinant();
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::Precondition, "matrix is not invertible over the integers");
  }
  if (n_ == 1) return IntMatrix(1, {det});
  IntMatrix out(n_);
  std::vector<Int> minor((n_ - 1) * (n_ - 1));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t k = 0;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          if (c == j) continue;
          minor[k++] = (*this)(r, c);
        }
      }
      const Int cofactor = ((i + j) % 2 == 0 ? 1 : -1) * bareiss_determinant(n_ - 1, minor);
      out(j, i) = cofactor * det;  // adj / det with det = +-1
    }
  }
  return out;
}

std::size_t hash_ints(std::span<const Int> values, std::size_t seed) noexcept {
  std::size_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (Int v : values) {
    std::size_t x = static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= x;
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

std::size_t IntMatrix::hash() const noexcept { return hash_ints(data_, n_); }

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      if (next == text.size() && out.empty() && pos == 0) break;
      throw Error(ErrorKind::Parse, "empty entry in integer list '" + std::string(text) + "'");
    }
    if (token.front() == '+') token.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::Parse, "not an integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

std::string join_ints(std::span<const Int> values, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

}  // namespace schur_scope
