#include "schur_scope/curves.hpp"

#include <algorithm>
#include <unordered_map>

#include "schur_scope/error.hpp"

namespace schur_scope {

namespace {

std::string one_based(std::span<const std::size_t> letters) {
  std::vector<Int> v;
  for (std::size_t l : letters) v.push_back(static_cast<Int>(l) + 1);
  return join_ints(v);
}

}  // namespace

std::string CurveWord::to_string() const {
  std::string body = one_based(letters) + "|" + std::to_string(end + 1);
  return sign < 0 ? "-(" + body + ")" : body;
}

std::string LoopWord::to_string() const { return one_based(letters); }

std::vector<std::size_t> free_reduce(std::span<const std::size_t> letters) {
  std::vector<std::size_t> out;
  out.reserve(letters.size());
  for (std::size_t l : letters) {
    if (!out.empty() && out.back() == l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

CurveWord canonicalize(std::span<const std::size_t> raw_letters, std::size_t end, int sign) {
  CurveWord out{free_reduce(raw_letters), end, sign < 0 ? -1 : 1};
  // s_end alpha_end = -alpha_end: one winding around the endpoint flips the sign.
  while (!out.letters.empty() && out.letters.back() == end) {
    out.letters.pop_back();
    out.sign = -out.sign;
  }
  return out;
}

CurveWord parse_curve(std::string_view letters, std::size_t end_one_based, bool negative) {
  if (end_one_based == 0) throw Error(ErrorKind::Parse, "curve endpoint is 1-based");
  std::vector<std::size_t> raw;
  for (Int v : parse_int_list(letters)) {
    if (v < 1) throw Error(ErrorKind::Parse, "curve letters are 1-based");
    raw.push_back(static_cast<std::size_t>(v - 1));
  }
  return canonicalize(raw, end_one_based - 1, negative ? -1 : 1);
}

LoopWord loop_of_curve(const CurveWord& curve) {
  std::vector<std::size_t> raw = curve.letters;
  raw.push_back(curve.end);
  raw.insert(raw.end(), curve.letters.rbegin(), curve.letters.rend());
  return LoopWord{free_reduce(raw)};
}

WeylElement evaluate(const LoopWord& loop, const CartanMatrix& cartan) {
  return word_element(cartan, loop.letters);
}

RootVector root_of_curve(const CurveWord& curve, const CartanMatrix& cartan) {
  const std::size_t n = cartan.rank();
  if (curve.end >= n) throw Error(ErrorKind::IndexOutOfRange, "curve endpoint out of range");
  RootVector v = RootVector::simple(n, curve.end);
  for (auto it = curve.letters.rbegin(); it != curve.letters.rend(); ++it) {
    v = apply(simple_reflection(cartan, *it).element, v);
  }
  return curve.sign < 0 ? -v : v;
}

Reflection reflection_of_curve(const CurveWord& curve, const CartanMatrix& cartan) {
  const WeylElement t = evaluate(loop_of_curve(curve), cartan);
  return Reflection{t, root_of_curve(curve, cartan).abs()};
}

std::vector<CurveWord> fan(const Orientation& orientation) {
  std::vector<CurveWord> out;
  for (std::size_t v : orientation.order()) out.push_back(CurveWord{{}, v, 1});
  return out;
}

std::vector<CurveWord> fan(std::size_t n) {
  std::vector<CurveWord> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(CurveWord{{}, k, 1});
  return out;
}

std::vector<CurveWord> braid_move_curves(std::span<const CurveWord> tuple, int i, bool inverse) {
  const std::size_t n = tuple.size();
  if (i < 1 || static_cast<std::size_t>(i) + 1 > n) {
    throw Error(ErrorKind::IndexOutOfRange, "braid generator " + std::to_string(i) + " out of range");
  }
  std::vector<CurveWord> out(tuple.begin(), tuple.end());
  const CurveWord& left = tuple[static_cast<std::size_t>(i) - 1];
  const CurveWord& right = tuple[static_cast<std::size_t>(i)];
  if (!inverse) {
    // The left loop followed by the right curve, then the old left curve.
    std::vector<std::size_t> raw = loop_of_curve(left).letters;
    raw.insert(raw.end(), right.letters.begin(), right.letters.end());
    out[i - 1] = canonicalize(raw, right.end, right.sign);
    out[i] = left;
  } else {
    // The old right curve, then the reversed right loop followed by the left curve.
    std::vector<std::size_t> raw = loop_of_curve(right).letters;
    std::reverse(raw.begin(), raw.end());
    raw.insert(raw.end(), left.letters.begin(), left.letters.end());
    out[i - 1] = right;
    out[i] = canonicalize(raw, left.end, left.sign);
  }
  return out;
}

std::vector<CurveWord> apply_braid_word_curves(std::span<const CurveWord> tuple, const BraidWord& word) {
  word.validate(tuple.size());
  std::vector<CurveWord> out(tuple.begin(), tuple.end());
  for (int l : word.letters()) out = braid_move_curves(out, l < 0 ? -l : l, l < 0);
  return out;
}

Factorization curves_factorization(std::span<const CurveWord> tuple, const CartanMatrix& cartan) {
  Factorization f;
  for (const auto& c : tuple) f.parts.push_back(reflection_of_curve(c, cartan));
  return f;
}

CurveWord spiral(const CurveWord& curve, const Orientation& orientation, int k) {
  std::vector<std::size_t> turn(orientation.order().begin(), orientation.order().end());
  if (k < 0) std::reverse(turn.begin(), turn.end());
  std::vector<std::size_t> raw;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) raw.insert(raw.end(), turn.begin(), turn.end());
  raw.insert(raw.end(), curve.letters.begin(), curve.letters.end());
  return canonicalize(raw, curve.end, curve.sign);
}

CurveWord mutation_word_map(const CurveWord& curve, MutationSide which, const Orientation& orientation) {
  std::vector<std::size_t> raw{which == MutationSide::Source ? orientation.first_letter()
                                                             : orientation.last_letter()};
  raw.insert(raw.end(), curve.letters.begin(), curve.letters.end());
  return canonicalize(raw, curve.end, curve.sign);
}

SimplicityResult is_simple(const CurveWord& curve, std::size_t rank, std::span<const std::size_t> order,
                           const SearchBounds& bounds) {
  if (curve.end >= rank) throw Error(ErrorKind::IndexOutOfRange, "curve endpoint out of range");
  for (std::size_t l : curve.letters) {
    if (l >= rank) throw Error(ErrorKind::IndexOutOfRange, "curve letter out of range");
  }
  const CartanMatrix universal = preset("universal:" + std::to_string(rank) + ":2");
  const Orientation orientation =
      order.empty() ? Orientation(universal)
                    : Orientation(universal, std::vector<std::size_t>(order.begin(), order.end()));
  const Reflection t = reflection_of_curve(curve, universal);
  PrefixResult prefix = is_prefix_of_coxeter(t, orientation, bounds);
  return SimplicityResult{prefix.verdict, std::move(prefix.certificate)};
}

std::vector<CurveWord> canonical_words(std::size_t rank, std::size_t max_letters) {
  std::vector<std::vector<std::size_t>> words{{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t len = 1; len <= max_letters; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      for (std::size_t l = 0; l < rank; ++l) {
        if (!w.empty() && w.back() == l) continue;
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<CurveWord> out;
  for (const auto& w : words) {
    for (std::size_t e = 0; e < rank; ++e) {
      if (!w.empty() && w.back() == e) continue;
      out.push_back(CurveWord{w, e, 1});
    }
  }
  return out;
}

CurveHarvest harvest_curve_tuples(const Orientation& orientation, std::size_t node_cap,
                                  Int height_limit) {
  struct KeyHash {
    std::size_t operator()(const std::vector<Int>& k) const noexcept { return hash_ints(k); }
  };
  const CartanMatrix& cartan = orientation.cartan();
  const std::size_t n = orientation.rank();
  CurveHarvest out;
  out.complete = true;
  // Tuples are identified by the factorization they present in the session group.
  std::unordered_map<std::vector<Int>, std::size_t, KeyHash> seen;
  out.tuples.push_back(fan(orientation));
  seen.emplace(curves_factorization(out.tuples.front(), cartan).key(), 0);
  for (std::size_t head = 0; head < out.tuples.size(); ++head) {
    for (std::size_t i = 1; i < n; ++i) {
      for (bool inv : {false, true}) {
        auto next = braid_move_curves(out.tuples[head], static_cast<int>(i), inv);
        const Factorization f = curves_factorization(next, cartan);
        if (height_limit > 0 &&
            std::any_of(f.parts.begin(), f.parts.end(),
                        [&](const Reflection& r) { return r.root.height() > height_limit; })) {
          out.complete = false;
          continue;
        }
        auto key = f.key();
        if (seen.contains(key)) continue;
        if (out.tuples.size() >= node_cap) {
          out.complete = false;
          return out;
        }
        seen.emplace(std::move(key), out.tuples.size());
        out.tuples.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace schur_scope
