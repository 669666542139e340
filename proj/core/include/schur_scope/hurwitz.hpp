#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schur_scope/orientation.hpp"
#include "schur_scope/weyl.hpp"

namespace schur_scope {

/// Outcome of a question that a bounded search may fail to settle.
enum class Verdict {
  Yes,
  No,             ///< certified negative
  NoWithinBound,  ///< the bounded search space was exhausted without a witness
  Unknown,        ///< a cap was hit before the search space was exhausted
};

const char* to_string(Verdict v) noexcept;

/// Ordered reflections; a factorization of c when their product is c.
struct Factorization {
  std::vector<Reflection> parts;

  std::size_t size() const noexcept { return parts.size(); }
  WeylElement product() const;
  /// product() == target, computed without 64-bit intermediate limits.
  bool multiplies_to(const WeylElement& target) const;
  /// Concatenated positive roots; identifies the tuple uniquely.
  std::vector<Int> key() const;

  bool operator==(const Factorization& other) const { return key() == other.key(); }
};

Factorization canonical_factorization(const Orientation& orientation);

/// Letters +i for sigma_i and -i for sigma_i^{-1}, 1 <= i <= n-1. Letters are
/// applied to a tuple in reading order, left to right.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<int> letters);

  /// Parses "1,-2,1"; the empty string is the empty word.
  static BraidWord parse(std::string_view text);

  const std::vector<int>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;
  BraidWord operator*(const BraidWord& rhs) const;  // this, then rhs

  /// Throws IndexOutOfRange when a letter exceeds n-1.
  void validate(std::size_t strands) const;

  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<int> letters_;
};

/// sigma_i (1-based) or its inverse on adjacent slots i, i+1.
Factorization braid_move(const Factorization& f, int i, bool inverse);
Factorization apply_braid_word(const Factorization& f, const BraidWord& word);

struct OrbitResult {
  std::vector<Factorization> members;  ///< breadth-first discovery order
  bool complete = false;               ///< closure terminated below the cap

  bool operator==(const OrbitResult&) const = default;
};

/// Breadth-first closure of start under all sigma_i^{+-1}.
OrbitResult hurwitz_orbit(const Factorization& start, std::size_t node_cap);

/// n! h^n / |G|, with h and |G| computed from the matrix (finite types only).
Int factorization_count_formula(const CartanMatrix& cartan);

struct PrefixResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Factorization> certificate;  ///< first part is the query reflection
  Verdict by_length = Verdict::Unknown;      ///< route: l(t c) = n - 1
  Verdict by_orbit = Verdict::Unknown;       ///< route: Hurwitz search from the canonical tuple
};

enum class PrefixRoutes { Both, LengthOnly, OrbitOnly };

/// Whether t r_2 ... r_n = c for some reflections r_k.
PrefixResult is_prefix_of_coxeter(const Reflection& t, const Orientation& orientation,
                                  const SearchBounds& bounds = {},
                                  PrefixRoutes routes = PrefixRoutes::Both);
PrefixResult is_prefix_of_coxeter(const WeylElement& t, const Orientation& orientation,
                                  const SearchBounds& bounds = {},
                                  PrefixRoutes routes = PrefixRoutes::Both);

/// Checks that a candidate certificate multiplies to c and starts with t.
bool validate_prefix_certificate(const Factorization& f, const Reflection& t,
                                 const Orientation& orientation);

/// Whether the word fixes the canonical tuple componentwise.
bool stabilizer_check(const BraidWord& word, const Orientation& orientation);

/// (sigma_{n-1} ... sigma_1)^{n k} sends the canonical tuple to its conjugate by c^k.
bool full_twist_identity_check(const Orientation& orientation, int k);

/// Full twist (sigma_{n-1} ... sigma_1)^{n k} as a word.
BraidWord full_twist(std::size_t strands, int k);

struct StabilizerElement {
  BraidWord word;
  std::string label;
};

struct StabilizerSurvey {
  std::vector<StabilizerElement> elements;
  std::vector<std::string> skipped;  ///< subdiagrams without a finite Coxeter number
};

/// The stabilizer elements built from adjacent exponents m, subdiagram twists
/// (sigma_{j-1}...sigma_i)^{(j-i+1) h_ij} and the global twist power.
StabilizerSurvey stabilizer_elements(const Orientation& orientation);

struct NormalityWitness {
  BraidWord stabilizer;  ///< tau, fixes the canonical tuple
  int conjugator = 0;    ///< signed generator letter sigma
  BraidWord conjugate;   ///< sigma tau sigma^{-1} as a word; does not fix the tuple
};

/// Searches tau among products of up to search_depth surveyed stabilizer
/// elements and sigma among single generators.
std::optional<NormalityWitness> normality_probe(const Orientation& orientation, int search_depth);

}  // namespace schur_scope
