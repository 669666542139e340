#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "schur_scope/error.hpp"
#include "schur_scope/orientation.hpp"
#include "schur_scope/weyl.hpp"

using namespace schur_scope;

namespace {

const char* const kFinite[] = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"};

// Standard group orders.
std::size_t known_order(const std::string& name) {
  if (name == "A1") return 2;
  if (name == "A2") return 6;
  if (name == "A3") return 24;
  if (name == "A4") return 120;
  if (name == "B2") return 8;
  if (name == "B3" || name == "C3") return 48;
  if (name == "D4") return 192;
  if (name == "G2") return 12;
  if (name == "F4") return 1152;
  return 0;
}

}  // namespace

TEST_CASE("simple reflections follow s_i(a_j) = a_j - a_ij a_i") {
  for (const char* name : {"A3", "B3", "G2", "F4", "affine-A2", "universal:3:2", "D4"}) {
    const auto c = preset(name);
    const std::size_t n = c.rank();
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = simple_reflection(c, i);
      CHECK(s.root == RootVector::simple(n, i));
      for (std::size_t j = 0; j < n; ++j) {
        RootVector expect = RootVector::simple(n, j);
        expect[i] -= c(i, j);
        CHECK(apply(s.element, RootVector::simple(n, j)) == expect);
      }
      CHECK(compose(s.element, s.element).is_identity());
    }
  }
  CHECK(apply(simple_reflection(preset("A2"), 0).element, RootVector{0, 1}) == RootVector{1, 1});
  CHECK(apply(simple_reflection(preset("universal:2:2"), 1).element, RootVector{1, 0}) == RootVector{1, 2});
  CHECK_THROWS_AS(simple_reflection(preset("A2"), 2), Error);
}

TEST_CASE("composition and action") {
  const auto a2 = preset("A2");
  const WeylElement c = coxeter_element(a2);
  CHECK(apply(c, RootVector{1, 0}) == RootVector{0, 1});
  CHECK(apply(WeylElement::identity(2), RootVector{1, 0}) == RootVector{1, 0});
  CHECK(element_order(c, 10) == 3);
  CHECK(compose(c, inverse(c)).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, 4) == c);
  CHECK(coxeter_element(preset("A1")).matrix() == IntMatrix(1, {-1}));
  const auto a3 = preset("A3");
  CHECK(coxeter_element(a3, parse_order("2,1,3", 3)) == word_element(a3, std::vector<std::size_t>{1, 0, 2}));
  CHECK_THROWS_AS(parse_order("1,1,3", 3), Error);
  CHECK_THROWS_AS(coxeter_element(a3, std::vector<std::size_t>{0, 1}), Error);

  std::mt19937 rng(11);
  for (const char* name : {"A3", "B3", "universal:3:2"}) {
    const auto cm = preset(name);
    std::uniform_int_distribution<std::size_t> letter(0, cm.rank() - 1);
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::size_t> w1(5), w2(4);
      for (auto& l : w1) l = letter(rng);
      for (auto& l : w2) l = letter(rng);
      const auto u = word_element(cm, w1);
      const auto w = word_element(cm, w2);
      RootVector x(cm.rank()), y(cm.rank());
      for (std::size_t i = 0; i < cm.rank(); ++i) {
        x[i] = coord(rng);
        y[i] = coord(rng);
      }
      CHECK(apply(compose(u, w), x) == apply(u, apply(w, x)));
      // The invariant form is preserved.
      CHECK(cm.form(apply(u, x), apply(u, y)) == cm.form(x, y));
      CHECK(std::abs(u.determinant()) == 1);
    }
  }
}

TEST_CASE("reflections and their roots") {
  const auto a2 = preset("A2");
  const auto s1 = simple_reflection(a2, 0).element;
  const auto s2 = simple_reflection(a2, 1).element;
  const auto s121 = compose(compose(s1, s2), s1);
  CHECK(is_reflection(s1));
  CHECK_FALSE(is_reflection(WeylElement::identity(2)));
  CHECK(is_reflection(s121));
  CHECK_FALSE(is_reflection(compose(s1, s2)));
  CHECK(reflection_for_root(a2, RootVector{1, 1}).element == s121);
  CHECK(reflection_for_root(a2, RootVector{-1, -1}).root == RootVector{1, 1});
  CHECK(root_of_reflection(s121) == RootVector{1, 1});
  CHECK(root_of_reflection(s2) == RootVector{0, 1});
  const auto a3 = preset("A3");
  CHECK(root_of_reflection(word_element(a3, std::vector<std::size_t>{1, 2, 1})) == RootVector{0, 1, 1});
  CHECK_THROWS_AS(root_of_reflection(compose(s1, s2)), Error);

  try {
    reflection_for_root(a2, RootVector{2, 1});
    FAIL("(2,1) is not a root of A2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRealRoot);
  }
  CHECK_THROWS_AS(reflection_for_root(a2, RootVector{1, -1}), Error);
  CHECK_THROWS_AS(reflection_for_root(preset("universal:2:2"), RootVector{1, 1}), Error);
  // Norm-compatible but not a real root: (1,1,1) in affine A2 is the null root.
  CHECK_THROWS_AS(reflection_for_root(preset("affine-A2"), RootVector{1, 1, 1}), Error);
  CHECK(reflection_for_root(preset("universal:2:2"), RootVector{1, 2}).root == RootVector{1, 2});
}

TEST_CASE("real root enumeration") {
  CHECK(enumerate_real_roots(preset("A2"), 0).size() == 6);
  CHECK(enumerate_real_roots(preset("A3"), 0).size() == 12);
  const auto u = positive_real_roots(preset("universal:2:2"), 8);
  const std::set<RootVector> got(u.begin(), u.end());
  const std::set<RootVector> want{{1, 0}, {0, 1}, {1, 2}, {2, 1}, {3, 2}, {2, 3}, {3, 4}, {4, 3}};
  CHECK(got == want);

  for (const char* name : {"A4", "B3", "G2", "F4", "affine-A2", "universal:3:2", "universal:3:3"}) {
    const auto c = preset(name);
    const auto roots = enumerate_real_roots(c, 12);
    const std::set<RootVector> all(roots.begin(), roots.end());
    for (const auto& r : roots) {
      CHECK((r.is_positive() || r.is_negative()));
      CHECK(all.contains(-r));
      const auto t = reflection_for_root(c, r);
      CHECK(root_of_reflection(t.element) == r.abs());
      CHECK(apply(t.element, r) == -r);
    }
    CHECK(std::is_sorted(roots.begin(), roots.end(),
                         [](const RootVector& a, const RootVector& b) { return a.height() < b.height(); }));
  }
}

TEST_CASE("finite group enumeration matches the standard orders") {
  for (const char* name : kFinite) {
    CHECK_MESSAGE(enumerate_group(preset(name)).size() == known_order(name), name);
  }
  CHECK_THROWS_AS(enumerate_group(preset("affine-A2")), Error);
}

TEST_CASE("absolute length") {
  const auto a2 = preset("A2");
  CHECK(absolute_length(a2, WeylElement::identity(2), 2).length == 0);
  CHECK(absolute_length(a2, coxeter_element(a2), 2).length == 2);
  CHECK(absolute_length(a2, word_element(a2, std::vector<std::size_t>{0, 1, 0}), 2).length == 1);

  // Finite Weyl groups: absolute length equals the codimension of the fixed space.
  for (const char* name : {"A3", "B3", "G2", "D4"}) {
    const auto c = preset(name);
    for (const auto& w : enumerate_group(c)) {
      const auto l = absolute_length(c, w, static_cast<int>(c.rank()));
      REQUIRE(l.length.has_value());
      CHECK(l.exact);
      CHECK(*l.length == static_cast<int>((w.matrix() - IntMatrix::identity(c.rank())).rank()));
      std::vector<WeylElement> parts;
      for (const auto& r : l.factors) parts.push_back(r.element);
      CHECK(product(parts, c.rank()) == w);
    }
  }

  for (const char* name : {"universal:3:2", "affine-A2", "universal:4:2"}) {
    const auto c = preset(name);
    const auto l = absolute_length(c, coxeter_element(c), static_cast<int>(c.rank()));
    CHECK(l.length == static_cast<int>(c.rank()));
    CHECK(l.exact);
  }
  CHECK(fixed_space_codimension(coxeter_element(preset("A3"))) == 3);
}

TEST_CASE("reflection pools and factor search") {
  const auto a3 = preset("A3");
  const ReflectionPool pool(a3, 1);
  CHECK(pool.complete());
  CHECK(pool.reflections().size() == 6);
  const auto c = coxeter_element(a3);
  CHECK(factor_into_reflections(c, 3, pool).has_value());
  CHECK_FALSE(factor_into_reflections(c, 1, pool).has_value());
  const ReflectionPool partial(preset("universal:3:2"), 3);
  CHECK_FALSE(partial.complete());
  for (const auto& r : partial.reflections()) CHECK(r.root.height() <= 3);
}

TEST_CASE("element text form") {
  CHECK(to_string(WeylElement::identity(2)) == "[[1,0],[0,1]]");
}
