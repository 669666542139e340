#include "schur_scope/schur.hpp"

#include <algorithm>
#include <set>

#include "schur_scope/error.hpp"

namespace schur_scope {

SchurVerdict is_schur_root(const RootVector& beta, const Orientation& orientation,
                           const SearchBounds& bounds, SchurOptions options) {
  const CartanMatrix& cartan = orientation.cartan();
  const Reflection t = reflection_for_root(cartan, beta);
  SchurVerdict out;

  if (options.fast_path) {
    // Every real root is Schur in finite types and in rank 2.
    if (classify_type(cartan) == TypeClass::Finite) {
      out.answer = Verdict::Yes;
      out.fast_path = true;
      out.certificate = is_prefix_of_coxeter(t, orientation, bounds, PrefixRoutes::LengthOnly).certificate;
    } else if (cartan.rank() == 2) {
      // t r = c with r = t c, which has determinant -1 and so is a reflection of the dihedral group.
      out.answer = Verdict::Yes;
      out.fast_path = true;
      out.certificate = Factorization{{t, as_reflection(compose(t.element, orientation.coxeter()))}};
    }
    if (out.fast_path) {
      if (!validate_schur_certificate(out, beta, orientation)) {
        throw Error(ErrorKind::Internal, "fast-path certificate failed for " + beta.to_string());
      }
      return out;
    }
  }

  PrefixResult prefix = is_prefix_of_coxeter(t, orientation, bounds, options.routes);
  out.answer = prefix.verdict;
  out.certificate = std::move(prefix.certificate);
  return out;
}

bool validate_schur_certificate(const SchurVerdict& verdict, const RootVector& beta,
                                const Orientation& orientation) {
  if (verdict.answer != Verdict::Yes) return !verdict.certificate.has_value();
  if (!verdict.certificate) return false;
  const auto& f = *verdict.certificate;
  if (f.parts.empty() || f.parts.front().root != beta.abs()) return false;
  return validate_prefix_certificate(f, f.parts.front(), orientation);
}

namespace {

TransversalRoot make_transversal(std::string name, std::vector<std::size_t> letters, std::size_t end,
                                 const Orientation& orientation, const SearchBounds& bounds) {
  TransversalRoot out;
  out.name = std::move(name);
  out.word = canonicalize(letters, end);
  out.root = root_of_curve(out.word, orientation.cartan());
  out.verdict = is_schur_root(out.root, orientation, bounds).answer;
  return out;
}

std::vector<TransversalRoot> betas(const Orientation& orientation, const SearchBounds& bounds) {
  const auto order = orientation.order();
  std::vector<TransversalRoot> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(make_transversal("beta_" + std::to_string(k + 1), prefix, order[k], orientation, bounds));
  }
  return out;
}

}  // namespace

std::vector<TransversalRoot> schur_transversal_finite(const Orientation& orientation,
                                                      const SearchBounds& bounds) {
  if (classify_type(orientation.cartan()) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "finite transversal requires a finite type");
  }
  return betas(orientation, bounds);
}

std::vector<TransversalRoot> schur_transversal_affine(const Orientation& orientation,
                                                      const SearchBounds& bounds) {
  if (classify_type(orientation.cartan()) != TypeClass::Affine) {
    throw Error(ErrorKind::NotAffine, "affine transversal requires an affine type");
  }
  auto out = betas(orientation, bounds);
  const auto order = orientation.order();
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> suffix;
    for (std::size_t j = n; j > k + 1; --j) suffix.push_back(order[j - 1]);
    out.push_back(make_transversal("delta_" + std::to_string(k + 1), suffix, order[k], orientation, bounds));
  }
  return out;
}

COrbit c_orbit(const RootVector& beta, const Orientation& orientation, int step_bound) {
  const WeylElement& c = orientation.coxeter();
  COrbit out;
  std::vector<RootVector> forward{beta};
  RootVector v = beta;
  for (int k = 1; k <= step_bound; ++k) {
    v = apply(c, v);
    if (v == beta) {
      out.closed = true;
      break;
    }
    forward.push_back(v);
  }
  std::vector<RootVector> backward;
  if (!out.closed) {
    const WeylElement c_inv = inverse(c);
    v = beta;
    for (int k = 1; k <= step_bound; ++k) {
      v = apply(c_inv, v);
      backward.push_back(v);
    }
  }
  out.roots.assign(backward.rbegin(), backward.rend());
  out.roots.insert(out.roots.end(), forward.begin(), forward.end());
  return out;
}

OrbitCensus c_orbit_census_finite(const Orientation& orientation) {
  const CartanMatrix& cartan = orientation.cartan();
  if (classify_type(cartan) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "c-orbit census requires a finite type");
  }
  OrbitCensus out;
  out.coxeter_number = *element_order(orientation.coxeter(), 1000);
  const auto roots = enumerate_real_roots(cartan, 0);
  out.root_count = roots.size();
  std::set<RootVector> unassigned(roots.begin(), roots.end());
  for (const auto& r : roots) {
    if (!unassigned.contains(r)) continue;
    COrbit orbit = c_orbit(r, orientation, out.coxeter_number + 1);
    for (const auto& x : orbit.roots) unassigned.erase(x);
    out.orbits.push_back(std::move(orbit));
  }
  const auto transversal = schur_transversal_finite(orientation, {});
  std::set<std::size_t> hit;
  for (const auto& t : transversal) {
    for (std::size_t i = 0; i < out.orbits.size(); ++i) {
      const auto& rs = out.orbits[i].roots;
      if (std::find(rs.begin(), rs.end(), t.root) != rs.end()) {
        out.transversal_orbit.push_back(i);
        hit.insert(i);
        break;
      }
    }
  }
  const std::size_t n = orientation.rank();
  std::size_t covered = 0;
  bool sizes_ok = true;
  for (const auto& o : out.orbits) {
    covered += o.roots.size();
    sizes_ok = sizes_ok && o.closed && o.roots.size() == static_cast<std::size_t>(out.coxeter_number);
  }
  out.valid = out.orbits.size() == n && sizes_ok && covered == roots.size() && unassigned.empty() &&
              out.transversal_orbit.size() == n && hit.size() == n;
  return out;
}

bool rank2_closed_forms_check(const Orientation& orientation, int range) {
  if (orientation.rank() != 2) throw Error(ErrorKind::Precondition, "closed forms need rank 2");
  const Factorization start = canonical_factorization(orientation);
  const WeylElement& g1 = start.parts[0].element;
  const WeylElement& g2 = start.parts[1].element;
  const WeylElement& c = orientation.coxeter();
  const WeylElement g121 = compose(compose(g1, g2), g1);
  const WeylElement g212 = compose(compose(g2, g1), g2);
  auto conj = [&](int k, const WeylElement& x) { return compose(compose(power(c, k), x), power(c, -k)); };
  auto sigma = [&](int m) { return apply_braid_word(start, BraidWord({1}).power(m)); };
  auto matches = [](const Factorization& f, const WeylElement& a, const WeylElement& b) {
    return f.parts[0].element == a && f.parts[1].element == b;
  };

  for (int h = -range; h <= range; ++h) {
    if (!matches(sigma(2 * h), conj(h, g1), conj(h, g2))) return false;
  }
  for (int k = 0; k <= range; ++k) {
    if (!matches(sigma(2 * k + 1), conj(k, g121), conj(k, g1))) return false;
    if (!matches(sigma(-(2 * k + 1)), conj(-k, g2), conj(-k, g212))) return false;
  }
  return g121 == conj(1, g2) && g212 == conj(-1, g1);
}

Orientation mutate(const Orientation& orientation, MutationSide which) {
  std::vector<std::size_t> order(orientation.order().begin(), orientation.order().end());
  if (which == MutationSide::Source) {
    std::rotate(order.begin(), order.begin() + 1, order.end());
  } else {
    std::rotate(order.rbegin(), order.rbegin() + 1, order.rend());
  }
  return Orientation(orientation.cartan(), std::move(order));
}

MutationAgreement mutation_equivalence_check(const RootVector& beta, const Orientation& orientation,
                                             const SearchBounds& bounds, MutationSide which) {
  const std::size_t letter =
      which == MutationSide::Source ? orientation.first_letter() : orientation.last_letter();
  MutationAgreement out;
  out.mapped = apply(simple_reflection(orientation.cartan(), letter).element, beta);
  const SchurOptions generic{false, PrefixRoutes::Both};
  out.before = is_schur_root(beta, orientation, bounds, generic).answer;
  out.after = is_schur_root(out.mapped, mutate(orientation, which), bounds, generic).answer;
  auto definite = [](Verdict v) { return v == Verdict::Yes || v == Verdict::No; };
  out.resolved = definite(out.before) && definite(out.after);
  // Yes against anything else is a disagreement; bounded negatives only agree unresolved.
  const bool before_yes = out.before == Verdict::Yes;
  const bool after_yes = out.after == Verdict::Yes;
  out.agree = before_yes == after_yes;
  return out;
}

ConjectureReport verify_conjecture(const Orientation& orientation, Int height_bound,
                                   const SearchBounds& bounds) {
  const CartanMatrix& cartan = orientation.cartan();
  const bool finite = classify_type(cartan) == TypeClass::Finite;
  ConjectureReport out;
  out.cartan_name = cartan.name();
  out.order = orientation.order_string();
  out.height_bound = height_bound;

  const auto roots = positive_real_roots(cartan, height_bound);
  std::vector<RootVector> in_bound;
  for (const auto& r : roots) {
    if (r.height() <= height_bound) in_bound.push_back(r);
  }
  for (const auto& beta : in_bound) {
    const auto result = is_prefix_of_coxeter(reflection_for_root(cartan, beta), orientation, bounds);
    switch (result.verdict) {
      case Verdict::Yes: out.prefix.push_back(beta); break;
      case Verdict::No: break;
      case Verdict::NoWithinBound: out.bounded_no.push_back(beta); break;
      case Verdict::Unknown: out.unknowns.push_back(beta); break;
    }
  }

  const Int limit = finite ? 0 : bounds.prune_multiple * height_bound;
  const auto harvest = harvest_curve_tuples(orientation, bounds.orbit_cap, limit);
  out.truncated = !harvest.complete;
  std::set<RootVector> seen;
  for (const auto& tuple : harvest.tuples) {
    for (const auto& curve : tuple) {
      RootVector r = root_of_curve(curve, cartan).abs();
      if (r.height() <= height_bound) seen.insert(std::move(r));
    }
  }
  out.curves.assign(seen.begin(), seen.end());
  std::sort(out.curves.begin(), out.curves.end(), height_less);
  std::sort(out.prefix.begin(), out.prefix.end(), height_less);

  out.prefix_equals_curves = out.prefix == out.curves;
  if (finite) {
    out.all_positive = in_bound;
    out.prefix_equals_all = out.prefix == in_bound;
    out.curves_equals_all = out.curves == in_bound;
  }
  return out;
}

}  // namespace schur_scope
