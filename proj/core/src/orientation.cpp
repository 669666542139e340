#include "schur_scope/orientation.hpp"

#include <algorithm>
#include <numeric>

#include "schur_scope/error.hpp"

namespace schur_scope {

namespace {

void require_permutation(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) {
    throw Error(ErrorKind::NotPermutation, "order has " + std::to_string(order.size()) +
                                               " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw Error(ErrorKind::NotPermutation, "order is not a permutation");
    seen[v] = true;
  }
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

WeylElement coxeter_element(const CartanMatrix& cartan, std::span<const std::size_t> order) {
  require_permutation(order, cartan.rank());
  return word_element(cartan, order);
}

WeylElement coxeter_element(const CartanMatrix& cartan) {
  return coxeter_element(cartan, identity_order(cartan.rank()));
}

Orientation::Orientation(CartanMatrix cartan)
    : Orientation(cartan, identity_order(cartan.rank())) {}

Orientation::Orientation(CartanMatrix cartan, std::vector<std::size_t> order)
    : cartan_(std::move(cartan)), order_(std::move(order)) {
  coxeter_ = coxeter_element(cartan_, order_);
}

std::vector<Reflection> Orientation::canonical_tuple() const {
  std::vector<Reflection> out;
  out.reserve(order_.size());
  for (std::size_t v : order_) out.push_back(simple_reflection(cartan_, v));
  return out;
}

std::string Orientation::order_string() const {
  std::vector<Int> one_based;
  for (std::size_t v : order_) one_based.push_back(static_cast<Int>(v) + 1);
  return join_ints(one_based);
}

std::vector<std::size_t> parse_order(std::string_view text, std::size_t n) {
  std::vector<std::size_t> order;
  for (Int v : parse_int_list(text)) {
    if (v < 1) throw Error(ErrorKind::NotPermutation, "order entries are 1-based");
    order.push_back(static_cast<std::size_t>(v - 1));
  }
  require_permutation(order, n);
  return order;
}

}  // namespace schur_scope
