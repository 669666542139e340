#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schur_scope/lattice.hpp"

namespace schur_scope {

enum class TypeClass { Finite, Affine, Indefinite };

const char* to_string(TypeClass t) noexcept;

/// An irreducible symmetrizable generalized Cartan matrix.
///
/// Construction validates every invariant and throws Error with kind Diagonal,
/// Sign, Irreducibility or Symmetrizability. The symmetrizer is computed once
/// and kept with the matrix.
class CartanMatrix {
 public:
  static CartanMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                                std::vector<std::string> labels = {});

  std::size_t rank() const noexcept { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  std::span<const Int> symmetrizer() const noexcept { return symmetrizer_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Gram matrix of the invariant form: entry (i,j) = d_i * a_ij.
  IntMatrix symmetrized() const;

  /// B(u,v) = sum d_i a_ij u_i v_j.
  Int form(const RootVector& u, const RootVector& v) const;

  bool operator==(const CartanMatrix& other) const { return entries_ == other.entries_; }

 private:
  CartanMatrix() = default;

  IntMatrix entries_;
  std::vector<Int> symmetrizer_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Parses "n / row / row ..." (rows separated by '/' or newlines).
CartanMatrix parse_cartan(std::string_view text);

std::vector<Int> symmetrizer(const CartanMatrix& cartan);

/// m_ij keyed on a_ij * a_ji: 0,1,2,3 -> 2,3,4,6; nullopt stands for infinity.
std::optional<int> coxeter_exponent(const CartanMatrix& cartan, std::size_t i, std::size_t j);

TypeClass classify_type(const CartanMatrix& cartan);

/// Definiteness class of any symmetric integer matrix (irreducibility not required).
TypeClass classify_symmetric(const IntMatrix& symmetric);

/// Multiplicative order of the Coxeter element s_1 s_2 ... s_n; finite types only.
int coxeter_number(const CartanMatrix& cartan);

/// Preset by label, case-insensitive: A<n>, B<n>, C<n>, D<n>, E6..E8, F4, G2,
/// affine-A<n>, affine-A1, universal:<rank>:<weight>.
CartanMatrix preset(std::string_view name);

/// The labels accepted by preset(), as patterns.
std::vector<std::string> preset_patterns();

}  // namespace schur_scope
