#include <doctest.h>

#include <functional>
#include <random>

#include "schur_scope/error.hpp"

#include "schur_scope/curves.hpp"

using namespace schur_scope;

namespace {

const char* const kPresets[] = {"A1",        "A2",        "A3",        "A4",            "B2",
                                "B3",        "B4",        "C3",        "C4",            "D4",
                                "G2",        "F4",        "affine-A1", "affine-A2",     "affine-A3",
                                "universal:2:2", "universal:3:2", "universal:3:3", "universal:4:2"};

constexpr int kCases = 120;

// Runs body until kCases cases complete. Cases whose elements leave 64-bit range
// are resampled; at most a quarter of the attempts may be lost that way.
void for_cases(const char* name, const std::function<void()>& body) {
  int done = 0;
  int skipped = 0;
  while (done < kCases) {
    try {
      body();
      ++done;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
      ++skipped;
    }
    REQUIRE_MESSAGE(skipped * 3 <= done + kCases, name);
  }
}

BraidWord random_braid(std::mt19937& rng, std::size_t strands, int max_len) {
  std::vector<int> letters;
  if (strands < 2) return BraidWord{};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, static_cast<int>(strands) - 1);
  std::bernoulli_distribution inv(0.5);
  const int k = len(rng);
  for (int i = 0; i < k; ++i) letters.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return BraidWord(std::move(letters));
}

std::vector<std::size_t> random_letters(std::mt19937& rng, std::size_t n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, n - 1);
  std::vector<std::size_t> out(static_cast<std::size_t>(len(rng)));
  for (auto& l : out) l = letter(rng);
  return out;
}

}  // namespace

TEST_CASE("loop words follow the Hurwitz action") {
  std::mt19937 rng(2024);
  for (const char* name : kPresets) {
    const Orientation o(preset(name));
    const std::size_t n = o.rank();
    if (n < 2) continue;
    for_cases(name, [&] {
      auto tuple = apply_braid_word_curves(fan(o), random_braid(rng, n, 6));
      const auto f = curves_factorization(tuple, o.cartan());
      const int i = std::uniform_int_distribution<int>(1, static_cast<int>(n) - 1)(rng);
      const bool inv = std::bernoulli_distribution(0.5)(rng);
      const auto lhs = curves_factorization(braid_move_curves(tuple, i, inv), o.cartan());
      const auto rhs = braid_move(f, i, inv);
      CHECK_MESSAGE(lhs == rhs, name);
      CHECK(lhs.parts[static_cast<std::size_t>(i) - 1].element == rhs.parts[static_cast<std::size_t>(i) - 1].element);
    });
  }
}

TEST_CASE("products of reachable tuples stay equal to c") {
  std::mt19937 rng(7);
  for (const char* name : kPresets) {
    const Orientation o(preset(name));
    for_cases(name, [&] {
      const auto word = random_braid(rng, o.rank(), 10);
      const auto by_curves = curves_factorization(apply_braid_word_curves(fan(o), word), o.cartan());
      const auto by_moves = apply_braid_word(canonical_factorization(o), word);
      CHECK_MESSAGE(by_curves.multiplies_to(o.coxeter()), name);
      CHECK(by_moves.multiplies_to(o.coxeter()));
      CHECK(by_curves == by_moves);
    });
  }
}

TEST_CASE("canonicalize is idempotent and keeps the root") {
  std::mt19937 rng(99);
  for (const char* name : kPresets) {
    const auto c = preset(name);
    const std::size_t n = c.rank();
    for (int trial = 0; trial < kCases; ++trial) {
      const auto raw = random_letters(rng, n, 7);
      const std::size_t end = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const int sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
      const auto once = canonicalize(raw, end, sign);
      CHECK(canonicalize(once.letters, once.end, once.sign) == once);
      // The raw word, read with the raw sign, presents the same root.
      RootVector v = RootVector::simple(n, end);
      for (auto it = raw.rbegin(); it != raw.rend(); ++it) v = apply(simple_reflection(c, *it).element, v);
      CHECK_MESSAGE(root_of_curve(once, c) == (sign < 0 ? -v : v), name);
    }
  }
}

TEST_CASE("curve reflections match root reflections") {
  std::mt19937 rng(5);
  for (const char* name : kPresets) {
    const auto c = preset(name);
    for (int trial = 0; trial < 200; ++trial) {
      const auto raw = random_letters(rng, c.rank(), 6);
      const std::size_t end = std::uniform_int_distribution<std::size_t>(0, c.rank() - 1)(rng);
      const auto w = canonicalize(raw, end);
      CHECK_MESSAGE(reflection_of_curve(w, c).element ==
                        reflection_for_root(c, root_of_curve(w, c).abs()).element,
                    name);
    }
  }
}

TEST_CASE("spiral agrees with the action of c") {
  std::mt19937 rng(31);
  for (const char* name : kPresets) {
    const Orientation o(preset(name));
    const std::size_t n = o.rank();
    for (int trial = 0; trial < kCases; ++trial) {
      const auto w = canonicalize(random_letters(rng, n, 4),
                                  std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
      const int k = std::uniform_int_distribution<int>(-3, 3)(rng);
      CHECK_MESSAGE(root_of_curve(spiral(w, o, k), o.cartan()) ==
                        apply(power(o.coxeter(), k), root_of_curve(w, o.cartan())),
                    name);
    }
  }
}

TEST_CASE("curves reachable from the fan are certified simple") {
  std::mt19937 rng(77);
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto fan_n = fan(n);
    for (int trial = 0; trial < kCases; ++trial) {
      const auto tuple = apply_braid_word_curves(fan_n, random_braid(rng, n, 4));
      for (const auto& w : tuple) CHECK(is_simple(w, n).verdict == Verdict::Yes);
    }
  }
}
