#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur_scope/cartan.hpp"
#include "schur_scope/lattice.hpp"

namespace schur_scope {

/// Element of the Weyl group as an integer matrix; column j is the image of alpha_j.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix matrix) : matrix_(std::move(matrix)) {}

  static WeylElement identity(std::size_t n) { return WeylElement(IntMatrix::identity(n)); }

  std::size_t rank() const noexcept { return matrix_.size(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  bool is_identity() const noexcept { return matrix_.is_identity(); }
  Int determinant() const { return matrix_.determinant(); }

  std::size_t hash() const noexcept { return matrix_.hash(); }

  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

 private:
  IntMatrix matrix_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

/// A reflection together with its positive root.
struct Reflection {
  WeylElement element;
  RootVector root;

  bool operator==(const Reflection& other) const { return root == other.root; }
};

WeylElement compose(const WeylElement& u, const WeylElement& w);
WeylElement inverse(const WeylElement& w);
RootVector apply(const WeylElement& w, const RootVector& v);
/// w^k for any integer k.
WeylElement power(const WeylElement& w, int k);
/// Left-to-right product of the given elements; identity when empty.
WeylElement product(std::span<const WeylElement> factors, std::size_t rank);
WeylElement conjugate(const WeylElement& by, const WeylElement& w);  // by * w * by^-1

Reflection simple_reflection(const CartanMatrix& cartan, std::size_t i);

/// Product s_{i_1} ... s_{i_k} of simple reflections.
WeylElement word_element(const CartanMatrix& cartan, std::span<const std::size_t> word);

/// True iff w^2 = id and rank(w - id) = 1.
bool is_reflection(const WeylElement& w);

/// The reflection r_beta(v) = v - (2B(v,beta)/B(beta,beta)) beta. Accepts either
/// sign of beta; throws NotRealRoot if the result is not an integral reflection.
Reflection reflection_for_root(const CartanMatrix& cartan, const RootVector& beta);

/// Positive primitive generator of the image of (t - id).
RootVector root_of_reflection(const WeylElement& t);

/// Wraps an element already known to be a reflection.
Reflection as_reflection(const WeylElement& t);

/// All real roots of height <= height_bound (both signs), sorted by height.
/// Finite types ignore the bound and return the whole root system.
std::vector<RootVector> enumerate_real_roots(const CartanMatrix& cartan, Int height_bound);

/// Positive real roots of height <= height_bound, sorted by height.
std::vector<RootVector> positive_real_roots(const CartanMatrix& cartan, Int height_bound);

/// All group elements (finite types only), in breadth-first order from the identity.
std::vector<WeylElement> enumerate_group(const CartanMatrix& cartan);

/// Multiplicative order of w, or nullopt if not reached within max_order.
std::optional<int> element_order(const WeylElement& w, int max_order);

/// Search limits shared by every bounded search.
struct SearchBounds {
  std::size_t orbit_cap = 1'000'000;  ///< nodes per orbit search
  Int height = 20;                    ///< root height bound for enumerations
  int length_cap = 0;                 ///< absolute-length cap; 0 means the rank
  Int pool_ceiling = 128;             ///< largest reflection height used by length search
  Int prune_multiple = 4;             ///< orbit search prunes beyond this multiple of the query height
};

/// Reflections sorted by root height.
class ReflectionPool {
 public:
  ReflectionPool(const CartanMatrix& cartan, Int height_bound);

  std::span<const Reflection> reflections() const noexcept { return reflections_; }
  Int height_bound() const noexcept { return height_bound_; }
  /// True when every reflection of the group is present (finite types).
  bool complete() const noexcept { return complete_; }

 private:
  std::vector<Reflection> reflections_;
  Int height_bound_;
  bool complete_;
};

/// A factorization of w into reflections, when one of the requested length exists in the pool.
std::optional<std::vector<Reflection>> factor_into_reflections(const WeylElement& w, int length,
                                                               const ReflectionPool& pool);

struct AbsoluteLength {
  std::optional<int> length;          ///< nullopt means Unknown
  std::vector<Reflection> factors;    ///< certificate when length is known
  bool exact = false;                 ///< minimality certified
};

/// Minimal k <= cap with w a product of k reflections. Finite types search the
/// complete reflection set; other types raise the pool height adaptively up to
/// bounds.pool_ceiling and report Unknown when no certificate appears.
AbsoluteLength absolute_length(const CartanMatrix& cartan, const WeylElement& w, int cap,
                               const SearchBounds& bounds = {});

/// Lower bound rank(w - id) on the absolute length.
int fixed_space_codimension(const WeylElement& w);

std::string to_string(const WeylElement& w);

}  // namespace schur_scope

template <>
struct std::hash<schur_scope::WeylElement> {
  std::size_t operator()(const schur_scope::WeylElement& w) const noexcept { return w.hash(); }
};
