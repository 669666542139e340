#include <doctest.h>

#include <set>

#include "schur_scope/curves.hpp"
#include "schur_scope/error.hpp"

using namespace schur_scope;

namespace {

// sign * s_{j1} ... s_{jk} alpha_end, applying the simple-reflection formula directly.
RootVector naive_root(const std::vector<std::size_t>& letters, std::size_t end, int sign,
                      const CartanMatrix& c) {
  RootVector v = RootVector::simple(c.rank(), end);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t i = *it;
    Int pairing = 0;
    for (std::size_t j = 0; j < c.rank(); ++j) pairing += c(i, j) * v[j];
    v[i] -= pairing;
  }
  return sign < 0 ? -v : v;
}

}  // namespace

TEST_CASE("canonical form") {
  // 2,3 ending at 3: the trailing 3 winds once around the endpoint.
  const auto beta = canonicalize(std::vector<std::size_t>{1, 2}, 2);
  CHECK(beta.letters == std::vector<std::size_t>{1});
  CHECK(beta.end == 2);
  CHECK(beta.sign == -1);
  CHECK(beta.to_string() == "-(2|3)");
  CHECK(parse_curve("2,3", 3) == beta);
  CHECK(parse_curve("2", 3, true) == beta);
  CHECK(parse_curve("", 2).to_string() == "|2");
  CHECK(parse_curve("2,1", 3).to_string() == "2,1|3");
  CHECK(canonicalize(std::vector<std::size_t>{0, 1, 1, 0, 2}, 2) == CurveWord{{}, 2, -1});
  CHECK(canonicalize(std::vector<std::size_t>{2, 2, 2}, 2) == CurveWord{{}, 2, -1});
  CHECK(canonicalize(std::vector<std::size_t>{2, 2}, 2) == CurveWord{{}, 2, 1});
  CHECK(free_reduce(std::vector<std::size_t>{0, 1, 1, 0, 2}) == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(parse_curve("2", 0), Error);
  CHECK_THROWS_AS(parse_curve("0", 2), Error);
}

TEST_CASE("loops, roots and reflections of curves") {
  const auto a3 = preset("A3");
  const auto gamma = parse_curve("2", 3);
  CHECK(loop_of_curve(gamma).letters == std::vector<std::size_t>{1, 2, 1});
  CHECK(loop_of_curve(gamma).to_string() == "2,3,2");
  CHECK(loop_of_curve(parse_curve("", 1)).letters == std::vector<std::size_t>{0});
  CHECK(root_of_curve(gamma, a3) == RootVector{0, 1, 1});
  CHECK(root_of_curve(parse_curve("2", 3, true), a3) == RootVector{0, -1, -1});
  CHECK(root_of_curve(parse_curve("2,3", 3), a3) == RootVector{0, -1, -1});
  const auto r = reflection_of_curve(gamma, a3);
  CHECK(r.element == word_element(a3, std::vector<std::size_t>{1, 2, 1}));
  CHECK(r.root == RootVector{0, 1, 1});

  for (const char* name : {"A3", "B3", "G2", "affine-A2", "universal:3:2", "D4"}) {
    const auto c = preset(name);
    for (const auto& w : canonical_words(c.rank(), 4)) {
      const auto root = root_of_curve(w, c);
      CHECK(root == naive_root(w.letters, w.end, w.sign, c));
      const auto t = reflection_of_curve(w, c);
      CHECK(t.element == reflection_for_root(c, root).element);
      CHECK(t.element == evaluate(loop_of_curve(w), c));
    }
  }
}

TEST_CASE("canonical word enumeration") {
  for (std::size_t n : {2u, 3u, 4u}) {
    std::set<std::string> brute;
    // Every sequence of up to 4 letters, kept when reduced and not ending at the endpoint.
    std::vector<std::vector<std::size_t>> words{{}};
    for (std::size_t len = 1; len <= 4; ++len) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& w : words) {
        if (w.size() + 1 != len) continue;
        for (std::size_t l = 0; l < n; ++l) {
          auto x = w;
          x.push_back(l);
          next.push_back(x);
        }
      }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words) {
      bool reduced = true;
      for (std::size_t k = 1; k < w.size(); ++k) reduced = reduced && w[k] != w[k - 1];
      for (std::size_t e = 0; e < n; ++e) {
        if (reduced && (w.empty() || w.back() != e)) brute.insert(CurveWord{w, e, 1}.to_string());
      }
    }
    std::set<std::string> got;
    for (const auto& w : canonical_words(n, 4)) got.insert(w.to_string());
    CHECK(got == brute);
  }
  CHECK(canonical_words(3, 4).size() == 93);
}

TEST_CASE("fan") {
  const auto f = fan(2);
  CHECK(f == std::vector<CurveWord>{CurveWord{{}, 0, 1}, CurveWord{{}, 1, 1}});
  const Orientation o(preset("A3"));
  const auto tuple = fan(o);
  CHECK(curves_factorization(tuple, o.cartan()) == canonical_factorization(o));
  CHECK(curves_factorization(tuple, o.cartan()).product() == o.coxeter());
  const Orientation twisted(preset("A3"), parse_order("2,3,1", 3));
  CHECK(curves_factorization(fan(twisted), twisted.cartan()).product() == twisted.coxeter());
}

TEST_CASE("braid moves on curve tuples") {
  const auto a2 = preset("A2");
  const auto moved = braid_move_curves(fan(2), 1, false);
  CHECK(moved == std::vector<CurveWord>{CurveWord{{0}, 1, 1}, CurveWord{{}, 0, 1}});
  CHECK(root_of_curve(moved[0], a2) == RootVector{1, 1});
  CHECK(loop_of_curve(moved[0]).letters == std::vector<std::size_t>{0, 1, 0});
  CHECK(braid_move_curves(moved, 1, true) == fan(2));
  CHECK_THROWS_AS(braid_move_curves(fan(2), 2, false), Error);

  const Orientation o(preset("universal:4:2"));
  auto tuple = fan(o);
  auto factors = canonical_factorization(o);
  const auto word = BraidWord::parse("1,-2,3,3,-1,2,-3,1");
  for (int l : word.letters()) {
    tuple = braid_move_curves(tuple, l < 0 ? -l : l, l < 0);
    factors = braid_move(factors, l < 0 ? -l : l, l < 0);
    CHECK(curves_factorization(tuple, o.cartan()) == factors);
  }
  CHECK(apply_braid_word_curves(fan(o), word) == tuple);
  CHECK(apply_braid_word_curves(tuple, word.inverse()) == fan(o));
}

TEST_CASE("spiral") {
  const Orientation a2(preset("A2"));
  const auto s = spiral(parse_curve("", 1), a2, 1);
  CHECK(s == CurveWord{{0, 1}, 0, 1});
  CHECK(root_of_curve(s, a2.cartan()) == RootVector{0, 1});
  const auto w = parse_curve("2,1", 3);
  const Orientation u(preset("universal:3:2"));
  CHECK(spiral(w, u, 0) == w);
  CHECK(spiral(spiral(w, u, 1), u, -1) == w);
  for (int k = -3; k <= 3; ++k) {
    CHECK(root_of_curve(spiral(w, u, k), u.cartan()) == apply(power(u.coxeter(), k), root_of_curve(w, u.cartan())));
  }
}

TEST_CASE("mutation word maps") {
  const Orientation o(preset("A3"));
  const auto beta = parse_curve("2,3", 2);
  CHECK(root_of_curve(beta, o.cartan()) == RootVector{0, 0, 1});
  const auto src = mutation_word_map(beta, MutationSide::Source, o);
  CHECK(src == parse_curve("1,2,3", 2));
  CHECK(mutation_word_map(src, MutationSide::Source, o) == beta);
  const auto sink = mutation_word_map(beta, MutationSide::Sink, o);
  CHECK(sink == parse_curve("3,2,3", 2));
  CHECK(root_of_curve(sink, o.cartan()) == apply(word_element(o.cartan(), std::vector<std::size_t>{2, 1, 2}),
                                                 RootVector{0, 1, 0}));
}

TEST_CASE("simplicity") {
  for (std::size_t k = 0; k < 3; ++k) CHECK(is_simple(CurveWord{{}, k, 1}, 3).verdict == Verdict::Yes);
  const auto gamma = parse_curve("2", 3);
  const auto r = is_simple(gamma, 3);
  CHECK(r.verdict == Verdict::Yes);
  REQUIRE(r.certificate.has_value());
  const auto universal = preset("universal:3:2");
  CHECK(r.certificate->parts.front().element == reflection_of_curve(gamma, universal).element);
  CHECK(r.certificate->product() == coxeter_element(universal));
  // The shortest canonical word that is not simple.
  CHECK(is_simple(parse_curve("2,1", 3), 3).verdict == Verdict::NoWithinBound);
  // Sign does not affect simplicity.
  CHECK(is_simple(parse_curve("2", 3, true), 3).verdict == Verdict::Yes);

  std::size_t yes = 0;
  std::size_t bounded = 0;
  for (const auto& w : canonical_words(3, 4)) {
    const auto v = is_simple(w, 3).verdict;
    if (v == Verdict::Yes) ++yes;
    if (v == Verdict::NoWithinBound) ++bounded;
    // Nothing shorter than 2,1|3 fails.
    if (w.letters.size() < 2) CHECK(v == Verdict::Yes);
  }
  CHECK(yes == 57);
  CHECK(bounded == 36);
}

TEST_CASE("harvest from the fan") {
  const Orientation o(preset("A2"));
  const auto h = harvest_curve_tuples(o, 1000, 0);
  CHECK(h.complete);
  CHECK(h.tuples.size() == 3);
  for (const auto& t : h.tuples) CHECK(curves_factorization(t, o.cartan()).product() == o.coxeter());
  const Orientation u(preset("universal:3:2"));
  const auto hu = harvest_curve_tuples(u, 200, 10);
  CHECK_FALSE(hu.complete);
  for (const auto& t : hu.tuples) {
    for (const auto& w : t) CHECK(root_of_curve(w, u.cartan()).abs().height() <= 10);
    CHECK(curves_factorization(t, u.cartan()).product() == u.coxeter());
  }
}
