#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schur_scope/cartan.hpp"
#include "schur_scope/weyl.hpp"

namespace schur_scope {

/// A Cartan matrix with an ordering of its vertices; the Coxeter element is
/// c = s_{order[0]} s_{order[1]} ... s_{order[n-1]}. Orientations of an acyclic
/// quiver correspond to such orders, and sink/source mutation rotates them.
class Orientation {
 public:
  explicit Orientation(CartanMatrix cartan);
  Orientation(CartanMatrix cartan, std::vector<std::size_t> order);

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  std::span<const std::size_t> order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return order_.size(); }
  const WeylElement& coxeter() const noexcept { return coxeter_; }

  /// (s_{order[0]}, ..., s_{order[n-1]}).
  std::vector<Reflection> canonical_tuple() const;

  /// First and last letters of the Coxeter word.
  std::size_t first_letter() const noexcept { return order_.front(); }
  std::size_t last_letter() const noexcept { return order_.back(); }

  /// 1-based, comma separated, e.g. "2,3,1".
  std::string order_string() const;

  bool operator==(const Orientation& other) const {
    return cartan_ == other.cartan_ && order_ == other.order_;
  }

 private:
  CartanMatrix cartan_;
  std::vector<std::size_t> order_;
  WeylElement coxeter_;
};

/// Product s_{order[0]} ... s_{order[n-1]}; throws NotPermutation.
WeylElement coxeter_element(const CartanMatrix& cartan, std::span<const std::size_t> order);
WeylElement coxeter_element(const CartanMatrix& cartan);

/// Parses a 1-based permutation "2,1,3" into 0-based indices.
std::vector<std::size_t> parse_order(std::string_view text, std::size_t n);

}  // namespace schur_scope
