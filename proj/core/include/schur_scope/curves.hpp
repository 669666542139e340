#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur_scope/hurwitz.hpp"
#include "schur_scope/orientation.hpp"

namespace schur_scope {

/// A curve from the basepoint to a puncture, recorded by the rays it crosses.
///
/// Letters are 0-based ray indices in crossing order. The word is freely
/// reduced and never ends with `end`: a trailing crossing of the endpoint's own
/// ray is a winding around that puncture and is stored as a sign flip instead.
struct CurveWord {
  std::vector<std::size_t> letters;
  std::size_t end = 0;
  int sign = 1;

  /// 1-based text "2,1|3", or "-(2,1|3)" for sign -1; "|2" for an empty word.
  std::string to_string() const;
  bool operator==(const CurveWord&) const = default;
};

/// A closed curve at the basepoint, as a freely reduced crossing word.
struct LoopWord {
  std::vector<std::size_t> letters;

  std::string to_string() const;  // 1-based, comma separated
  bool operator==(const LoopWord&) const = default;
};

/// Removes adjacent equal letters until none remain.
std::vector<std::size_t> free_reduce(std::span<const std::size_t> letters);

/// Free reduction, then a trailing endpoint letter is traded for a sign flip.
CurveWord canonicalize(std::span<const std::size_t> raw_letters, std::size_t end, int sign = 1);

/// Builds a canonical curve from 1-based text: letters "2,3" and endpoint 3.
CurveWord parse_curve(std::string_view letters, std::size_t end_one_based, bool negative = false);

/// letters, end, reversed letters.
LoopWord loop_of_curve(const CurveWord& curve);

WeylElement evaluate(const LoopWord& loop, const CartanMatrix& cartan);

/// sign * s_{j1} ... s_{jk} (alpha_end).
RootVector root_of_curve(const CurveWord& curve, const CartanMatrix& cartan);

/// The element presented by the loop word; always a reflection.
Reflection reflection_of_curve(const CurveWord& curve, const CartanMatrix& cartan);

/// Straight curves O -> p_k for the orientation's order (curve k ends at order[k]).
std::vector<CurveWord> fan(const Orientation& orientation);
std::vector<CurveWord> fan(std::size_t n);

/// Hurwitz move on a tuple of curves; i is 1-based.
std::vector<CurveWord> braid_move_curves(std::span<const CurveWord> tuple, int i, bool inverse);
std::vector<CurveWord> apply_braid_word_curves(std::span<const CurveWord> tuple, const BraidWord& word);

/// Reflections of the loop words, as a factorization.
Factorization curves_factorization(std::span<const CurveWord> tuple, const CartanMatrix& cartan);

/// Prepends the Coxeter word |k| times (its reverse when k < 0).
CurveWord spiral(const CurveWord& curve, const Orientation& orientation, int k);

enum class MutationSide { Source, Sink };

/// Prepends s(c) (source) or t(c) (sink).
CurveWord mutation_word_map(const CurveWord& curve, MutationSide which, const Orientation& orientation);

struct SimplicityResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Factorization> certificate;  ///< in the universal group
};

/// Decides whether the curve lies in the braid orbit of the fan by running the
/// prefix test for its loop in the universal Coxeter group of the same rank.
/// `order` is the Coxeter order (identity when empty).
SimplicityResult is_simple(const CurveWord& curve, std::size_t rank,
                           std::span<const std::size_t> order = {}, const SearchBounds& bounds = {});

/// All canonical curve words with at most max_letters letters.
std::vector<CurveWord> canonical_words(std::size_t rank, std::size_t max_letters);

struct CurveHarvest {
  std::vector<std::vector<CurveWord>> tuples;  ///< breadth-first from the fan
  bool complete = false;                       ///< no tuple was pruned or capped
};

/// Breadth-first closure of the fan under braid moves on curve tuples, skipping
/// tuples whose roots exceed height_limit (0 = unlimited) and stopping at node_cap.
CurveHarvest harvest_curve_tuples(const Orientation& orientation, std::size_t node_cap,
                                  Int height_limit);

}  // namespace schur_scope
