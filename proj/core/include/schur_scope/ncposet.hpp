#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur_scope/hurwitz.hpp"
#include "schur_scope/orientation.hpp"

namespace schur_scope {

/// The interval [1, c] in absolute order, for a finite type.
struct NCPoset {
  std::vector<WeylElement> elements;  ///< sorted by rank, then matrix
  std::vector<int> ranks;             ///< absolute length of each element
  std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< (lower, upper) indices
  std::vector<char> order;            ///< order[i * size + j] = elements[i] <= elements[j]
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const noexcept { return elements.size(); }
  bool leq(std::size_t i, std::size_t j) const { return order[i * size() + j] != 0; }
  std::optional<std::size_t> index_of(const WeylElement& w) const;

  bool operator==(const NCPoset&) const = default;
};

/// u <= w iff l(u) + l(u^-1 w) = l(w). Unknown when some length is not certified.
Verdict absolute_leq(const WeylElement& u, const WeylElement& w, const CartanMatrix& cartan,
                     const SearchBounds& bounds = {});

/// Filters the whole group by l(w) + l(w^-1 c) = n; throws NotFinite otherwise.
NCPoset enumerate_nc(const Orientation& orientation);

struct IntervalFactorization {
  std::vector<Reflection> steps;  ///< u t_1 ... t_m = w, m = l(w) - l(u)
  Factorization full;             ///< a factorization of c passing through u and w
};

/// Throws Precondition unless u <= w <= c is certified.
IntervalFactorization interval_factorization(const WeylElement& u, const WeylElement& w,
                                             const Orientation& orientation,
                                             const SearchBounds& bounds = {});

struct PosetProperties {
  std::vector<std::size_t> rank_sizes;  ///< number of elements of each rank
  bool rank_symmetric = false;          ///< rank generating function is palindromic
  Int maximal_chains = 0;
  bool is_lattice = false;
  std::size_t atoms = 0;

  bool operator==(const PosetProperties&) const = default;
};

PosetProperties poset_properties(const NCPoset& poset);

/// Graphviz rendering; reflections are labelled by their roots.
std::string to_dot(const NCPoset& poset);

}  // namespace schur_scope
