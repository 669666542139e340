#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur_scope/curves.hpp"
#include "schur_scope/hurwitz.hpp"
#include "schur_scope/orientation.hpp"

namespace schur_scope {

struct SchurVerdict {
  Verdict answer = Verdict::Unknown;
  std::optional<Factorization> certificate;  ///< t r_2 ... r_n = c with t = r_beta
  bool fast_path = false;                    ///< answer came from the finite / rank-2 shortcut

  bool operator==(const SchurVerdict&) const = default;
};

struct SchurOptions {
  bool fast_path = true;
  PrefixRoutes routes = PrefixRoutes::Both;
};

/// Real Schur test: r_beta is a prefix of c. beta may have either sign; the
/// reflection decides. Throws NotRealRoot when beta is not a real root.
SchurVerdict is_schur_root(const RootVector& beta, const Orientation& orientation,
                           const SearchBounds& bounds = {}, SchurOptions options = {});

/// Re-multiplies a Yes certificate.
bool validate_schur_certificate(const SchurVerdict& verdict, const RootVector& beta,
                                const Orientation& orientation);

struct TransversalRoot {
  std::string name;  ///< "beta_k" or "delta_k", 1-based k
  RootVector root;
  CurveWord word;
  Verdict verdict = Verdict::Unknown;

  bool operator==(const TransversalRoot&) const = default;
};

/// beta_k = s_{o1} ... s_{o(k-1)} alpha_{ok}, one per c-orbit (finite types).
std::vector<TransversalRoot> schur_transversal_finite(const Orientation& orientation,
                                                      const SearchBounds& bounds = {});

/// beta_k as above plus delta_k = s_{on} ... s_{o(k+1)} alpha_{ok} (affine types).
std::vector<TransversalRoot> schur_transversal_affine(const Orientation& orientation,
                                                      const SearchBounds& bounds = {});

struct COrbit {
  std::vector<RootVector> roots;  ///< c^k beta in increasing k
  bool closed = false;            ///< a cycle was found

  bool operator==(const COrbit&) const = default;
};

COrbit c_orbit(const RootVector& beta, const Orientation& orientation, int step_bound);

struct OrbitCensus {
  std::vector<COrbit> orbits;
  int coxeter_number = 0;
  std::size_t root_count = 0;
  /// For each transversal root beta_k, the index of its orbit.
  std::vector<std::size_t> transversal_orbit;
  bool valid = false;  ///< n orbits, each of size h, covering every root, transversal distinct

  bool operator==(const OrbitCensus&) const = default;
};

OrbitCensus c_orbit_census_finite(const Orientation& orientation);

/// Closed forms for sigma_1^m on (s_1, s_2) and the two conjugation identities,
/// for exponents up to `range` in absolute value.
bool rank2_closed_forms_check(const Orientation& orientation, int range);

/// Source: (i1,...,in) -> (i2,...,in,i1), so c -> s(c) c s(c). Sink is the inverse rotation.
Orientation mutate(const Orientation& orientation, MutationSide which);

struct MutationAgreement {
  RootVector mapped;  ///< s(c) beta or t(c) beta
  Verdict before = Verdict::Unknown;
  Verdict after = Verdict::Unknown;
  bool agree = false;     ///< no certified disagreement
  bool resolved = false;  ///< both sides certified (Yes or No)

  bool operator==(const MutationAgreement&) const = default;
};

MutationAgreement mutation_equivalence_check(const RootVector& beta, const Orientation& orientation,
                                             const SearchBounds& bounds = {},
                                             MutationSide which = MutationSide::Source);

struct ConjectureReport {
  std::string cartan_name;
  std::string order;
  Int height_bound = 0;
  std::vector<RootVector> prefix;        ///< P: reflections that are prefixes of c
  std::vector<RootVector> curves;        ///< S: roots of curves reached from the fan
  std::optional<std::vector<RootVector>> all_positive;  ///< F: finite types only
  std::vector<RootVector> unknowns;      ///< prefix search hit a cap
  std::vector<RootVector> bounded_no;    ///< prefix search exhausted its bounded space
  bool truncated = false;                ///< curve harvest was pruned or capped
  bool prefix_equals_curves = false;
  std::optional<bool> prefix_equals_all;
  std::optional<bool> curves_equals_all;

  bool operator==(const ConjectureReport&) const = default;
};

/// Compares P, S and (for finite types) F over positive roots of height <= height_bound.
ConjectureReport verify_conjecture(const Orientation& orientation, Int height_bound,
                                   const SearchBounds& bounds = {});

}  // namespace schur_scope
