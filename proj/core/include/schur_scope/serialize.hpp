#pragma once

#include <string>
#include <string_view>

#include "schur_scope/curves.hpp"
#include "schur_scope/hurwitz.hpp"
#include "schur_scope/ncposet.hpp"
#include "schur_scope/schur.hpp"

namespace schur_scope {

/// JSON text for a report type. Instantiated for RootVector, CurveWord,
/// Factorization, OrbitResult, SchurVerdict, TransversalRoot, COrbit,
/// OrbitCensus, MutationAgreement, ConjectureReport, NCPoset and PosetProperties.
template <class T>
std::string emit_json(const T& value, int indent = 2);

/// Inverse of emit_json; throws Error(Parse) on malformed or mistyped input.
template <class T>
T parse_json(std::string_view text);

}  // namespace schur_scope
