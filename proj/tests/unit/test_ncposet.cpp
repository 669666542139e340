#include <doctest.h>

#include <set>

#include "schur_scope/error.hpp"
#include "schur_scope/ncposet.hpp"

using namespace schur_scope;

namespace {

// Carter: in a finite Weyl group the absolute length is rank(w - id).
int carter_length(const WeylElement& w) {
  return static_cast<int>((w.matrix() - IntMatrix::identity(w.rank())).rank());
}

std::set<WeylElement> brute_force_nc(const Orientation& o) {
  std::set<WeylElement> out;
  const int n = static_cast<int>(o.rank());
  for (const auto& w : enumerate_group(o.cartan())) {
    if (carter_length(w) + carter_length(compose(inverse(w), o.coxeter())) == n) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("absolute order") {
  const auto a2 = preset("A2");
  const auto c = coxeter_element(a2);
  const auto s1 = simple_reflection(a2, 0).element;
  const auto e = WeylElement::identity(2);
  CHECK(absolute_leq(s1, c, a2) == Verdict::Yes);
  CHECK(absolute_leq(c, s1, a2) == Verdict::No);
  CHECK(absolute_leq(c, c, a2) == Verdict::Yes);
  for (const auto& w : enumerate_group(a2)) CHECK(absolute_leq(e, w, a2) == Verdict::Yes);
  const auto s2 = simple_reflection(a2, 1).element;
  CHECK(absolute_leq(s1, s2, a2) == Verdict::No);
  // Infinite types: the Coxeter element sits above each simple reflection.
  const auto u = preset("universal:3:2");
  CHECK(absolute_leq(simple_reflection(u, 0).element, coxeter_element(u), u) == Verdict::Yes);
}

TEST_CASE("NC sizes against brute force") {
  const std::pair<const char*, std::size_t> cases[] = {{"A2", 5}, {"B2", 6}, {"G2", 8}, {"A3", 14},
                                                       {"B3", 20}, {"A4", 42}};
  for (const auto& [name, size] : cases) {
    const Orientation o(preset(name));
    const auto poset = enumerate_nc(o);
    CHECK_MESSAGE(poset.size() == size, name);
    const std::set<WeylElement> got(poset.elements.begin(), poset.elements.end());
    CHECK(got == brute_force_nc(o));
    CHECK(poset.elements[poset.bottom].is_identity());
    CHECK(poset.elements[poset.top] == o.coxeter());
    CHECK(poset.ranks[poset.top] == static_cast<int>(o.rank()));
    for (std::size_t i = 0; i < poset.size(); ++i) CHECK(poset.ranks[i] == carter_length(poset.elements[i]));
    for (const auto& [lo, hi] : poset.covers) {
      CHECK(poset.ranks[hi] == poset.ranks[lo] + 1);
      CHECK(poset.leq(lo, hi));
    }
  }
  CHECK_THROWS_AS(enumerate_nc(Orientation(preset("affine-A2"))), Error);
}

TEST_CASE("chains match Hurwitz orbits") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    const Orientation o(preset(name));
    const auto props = poset_properties(enumerate_nc(o));
    const auto orbit = hurwitz_orbit(canonical_factorization(o), 1'000'000);
    CHECK_MESSAGE(props.maximal_chains == static_cast<Int>(orbit.members.size()), name);
    CHECK(props.rank_symmetric);
    CHECK(props.is_lattice);
  }
  const auto a2 = poset_properties(enumerate_nc(Orientation(preset("A2"))));
  CHECK(a2.rank_sizes == std::vector<std::size_t>{1, 3, 1});
  CHECK(a2.atoms == 3);
  CHECK(poset_properties(enumerate_nc(Orientation(preset("B2")))).atoms == 4);
  CHECK(poset_properties(enumerate_nc(Orientation(preset("A3")))).rank_sizes == std::vector<std::size_t>{1, 6, 6, 1});
}

TEST_CASE("atoms are exactly the prefixes of c") {
  for (const char* name : {"A3", "B3", "D4"}) {
    const Orientation o(preset(name));
    const auto poset = enumerate_nc(o);
    std::set<RootVector> atoms;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (poset.ranks[i] == 1) atoms.insert(root_of_reflection(poset.elements[i]));
    }
    std::set<RootVector> prefixes;
    for (const auto& beta : positive_real_roots(o.cartan(), 0)) {
      if (is_prefix_of_coxeter(reflection_for_root(o.cartan(), beta), o).verdict == Verdict::Yes) {
        prefixes.insert(beta);
      }
    }
    CHECK(atoms == prefixes);
  }
}

TEST_CASE("interval factorizations") {
  const Orientation a2(preset("A2"));
  const auto e = WeylElement::identity(2);
  const auto full = interval_factorization(e, a2.coxeter(), a2);
  CHECK(full.steps.size() == 2);
  std::vector<WeylElement> parts;
  for (const auto& r : full.steps) parts.push_back(r.element);
  CHECK(product(parts, 2) == a2.coxeter());
  CHECK(full.full.product() == a2.coxeter());
  CHECK(interval_factorization(a2.coxeter(), a2.coxeter(), a2).steps.empty());

  const Orientation a3(preset("A3"));
  const auto s2 = simple_reflection(a3.cartan(), 1).element;
  const auto f = interval_factorization(s2, a3.coxeter(), a3);
  CHECK(f.steps.size() == 2);
  CHECK(compose(compose(s2, f.steps[0].element), f.steps[1].element) == a3.coxeter());

  const auto poset = enumerate_nc(a3);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (!poset.leq(i, j)) continue;
      const auto g = interval_factorization(poset.elements[i], poset.elements[j], a3);
      CHECK(static_cast<int>(g.steps.size()) == poset.ranks[j] - poset.ranks[i]);
      WeylElement w = poset.elements[i];
      for (const auto& r : g.steps) w = compose(w, r.element);
      CHECK(w == poset.elements[j]);
      CHECK(g.full.product() == a3.coxeter());
      CHECK(g.full.size() == 3);
    }
  }
  const auto s1 = simple_reflection(a3.cartan(), 0).element;
  CHECK_THROWS_AS(interval_factorization(s1, s2, a3), Error);
}

TEST_CASE("dot output") {
  const auto dot = to_dot(enumerate_nc(Orientation(preset("A2"))));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("1,1") != std::string::npos);
}
