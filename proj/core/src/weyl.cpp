#include "schur_scope/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "schur_scope/error.hpp"

namespace schur_scope {

WeylElement compose(const WeylElement& u, const WeylElement& w) {
  if (u.rank() != w.rank()) throw Error(ErrorKind::RankMismatch, "compose: rank mismatch");
  return WeylElement(u.matrix() * w.matrix());
}

WeylElement inverse(const WeylElement& w) { return WeylElement(w.matrix().unimodular_inverse()); }

RootVector apply(const WeylElement& w, const RootVector& v) {
  if (v.size() != w.rank()) throw Error(ErrorKind::RankMismatch, "apply: rank mismatch");
  return w.matrix() * v;
}

WeylElement power(const WeylElement& w, int k) {
  WeylElement base = k < 0 ? inverse(w) : w;
  WeylElement out = WeylElement::identity(w.rank());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

WeylElement product(std::span<const WeylElement> factors, std::size_t rank) {
  WeylElement out = WeylElement::identity(rank);
  for (const auto& f : factors) out = compose(out, f);
  return out;
}

WeylElement conjugate(const WeylElement& by, const WeylElement& w) {
  return compose(compose(by, w), inverse(by));
}

Reflection simple_reflection(const CartanMatrix& cartan, std::size_t i) {
  const std::size_t n = cartan.rank();
  if (i >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "simple reflection index " + std::to_string(i + 1) + " out of range 1.." +
                    std::to_string(n));
  }
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan(i, j);
  return Reflection{WeylElement(std::move(s)), RootVector::simple(n, i)};
}

WeylElement word_element(const CartanMatrix& cartan, std::span<const std::size_t> word) {
  WeylElement out = WeylElement::identity(cartan.rank());
  for (std::size_t letter : word) out = compose(out, simple_reflection(cartan, letter).element);
  return out;
}

int fixed_space_codimension(const WeylElement& w) {
  return static_cast<int>((w.matrix() - IntMatrix::identity(w.rank())).rank());
}

bool is_reflection(const WeylElement& w) {
  if (!compose(w, w).is_identity()) return false;
  return fixed_space_codimension(w) == 1;
}

RootVector root_of_reflection(const WeylElement& t) {
  if (!is_reflection(t)) throw Error(ErrorKind::NotReflection, "element is not a reflection");
  const IntMatrix moved = t.matrix() - IntMatrix::identity(t.rank());
  for (std::size_t c = 0; c < t.rank(); ++c) {
    RootVector v = moved.column(c);
    if (v.is_zero()) continue;
    Int g = 0;
    for (Int x : v.coords()) g = std::gcd(g, x);
    RootVector primitive(t.rank());
    for (std::size_t i = 0; i < t.rank(); ++i) primitive[i] = v[i] / g;
    if (!primitive.is_positive() && !primitive.is_negative()) {
      throw Error(ErrorKind::NotReflection, "reflection moves a mixed-sign vector");
    }
    return primitive.abs();
  }
  throw Error(ErrorKind::Internal, "reflection with no moved column");
}

Reflection as_reflection(const WeylElement& t) { return Reflection{t, root_of_reflection(t)}; }

namespace {

// Descends a positive vector by simple reflections that lower its height; a
// real root reaches a simple root, anything else gets stuck or leaves the cone.
bool descends_to_simple(const CartanMatrix& cartan, RootVector beta) {
  const std::size_t n = cartan.rank();
  while (true) {
    if (!beta.is_positive()) return false;
    if (beta.height() == 1) return true;
    bool moved = false;
    for (std::size_t i = 0; i < n && !moved; ++i) {
      // <beta, alpha_i^vee> = sum_j a_ij beta_j
      Int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing = checked_add(pairing, checked_mul(cartan(i, j), beta[j]));
      if (pairing > 0) {
        beta[i] -= pairing;
        moved = true;
      }
    }
    if (!moved) return false;
  }
}

}  // namespace

Reflection reflection_for_root(const CartanMatrix& cartan, const RootVector& beta_in) {
  const std::size_t n = cartan.rank();
  if (beta_in.size() != n) throw Error(ErrorKind::RankMismatch, "root has wrong rank");
  if (!beta_in.is_positive() && !beta_in.is_negative()) {
    throw Error(ErrorKind::NotRealRoot, "vector " + beta_in.to_string() + " is not sign-coherent");
  }
  const RootVector beta = beta_in.abs();
  if (!descends_to_simple(cartan, beta)) {
    throw Error(ErrorKind::NotRealRoot, "vector " + beta.to_string() + " is not a real root");
  }
  const Int norm = cartan.form(beta, beta);
  if (norm <= 0) throw Error(ErrorKind::NotRealRoot, "vector " + beta.to_string() + " has non-positive norm");
  IntMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Int twice = checked_mul(2, cartan.form(RootVector::simple(n, j), beta));
    if (twice % norm != 0) {
      throw Error(ErrorKind::NotRealRoot, "reflection along " + beta.to_string() + " is not integral");
    }
    const Int coeff = twice / norm;
    for (std::size_t i = 0; i < n; ++i) m(i, j) = (i == j ? 1 : 0) - checked_mul(coeff, beta[i]);
  }
  WeylElement t(std::move(m));
  if (!is_reflection(t)) {
    throw Error(ErrorKind::NotRealRoot, "vector " + beta.to_string() + " does not give a reflection");
  }
  return Reflection{std::move(t), beta};
}

std::vector<RootVector> positive_real_roots(const CartanMatrix& cartan, Int height_bound) {
  const std::size_t n = cartan.rank();
  const bool finite = classify_type(cartan) == TypeClass::Finite;
  const Int bound = finite ? std::numeric_limits<Int>::max() : height_bound;
  std::set<RootVector> seen;
  std::queue<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    if (bound < 1) break;
    auto a = RootVector::simple(n, i);
    seen.insert(a);
    frontier.push(a);
  }
  std::vector<Reflection> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(simple_reflection(cartan, i));
  while (!frontier.empty()) {
    const RootVector beta = frontier.front();
    frontier.pop();
    for (const auto& s : simple) {
      RootVector next = apply(s.element, beta);
      if (!next.is_positive() || next.height() > bound) continue;
      if (seen.insert(next).second) frontier.push(std::move(next));
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), height_less);
  return out;
}

std::vector<RootVector> enumerate_real_roots(const CartanMatrix& cartan, Int height_bound) {
  auto positive = positive_real_roots(cartan, height_bound);
  std::vector<RootVector> out;
  out.reserve(2 * positive.size());
  for (const auto& r : positive) {
    out.push_back(r);
    out.push_back(-r);
  }
  std::sort(out.begin(), out.end(), height_less);
  return out;
}

std::vector<WeylElement> enumerate_group(const CartanMatrix& cartan) {
  if (classify_type(cartan) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "group enumeration requires a finite type");
  }
  const std::size_t n = cartan.rank();
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection(cartan, i).element);
  std::vector<WeylElement> out{WeylElement::identity(n)};
  std::unordered_set<WeylElement> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = compose(out[head], s);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::optional<int> element_order(const WeylElement& w, int max_order) {
  WeylElement p = w;
  for (int k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = compose(p, w);
  }
  return std::nullopt;
}

ReflectionPool::ReflectionPool(const CartanMatrix& cartan, Int height_bound)
    : height_bound_(height_bound), complete_(classify_type(cartan) == TypeClass::Finite) {
  for (const auto& beta : positive_real_roots(cartan, height_bound)) {
    reflections_.push_back(reflection_for_root(cartan, beta));
  }
}

namespace {

struct IntsHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept { return hash_ints(v); }
};

struct Searcher {
  const ReflectionPool& pool;
  std::unordered_set<std::vector<Int>, IntsHash> dead;  // (element, length) pairs known to fail

  static std::vector<Int> key(const WeylElement& w, int k) {
    std::vector<Int> out(w.matrix().data().begin(), w.matrix().data().end());
    out.push_back(k);
    return out;
  }

  bool search(const WeylElement& w, int k, std::vector<Reflection>& out) {
    if (k == 0) return w.is_identity();
    const int codim = fixed_space_codimension(w);
    if (codim > k || (w.determinant() == 1) != (k % 2 == 0)) return false;
    if (k == 1) {
      if (!is_reflection(w)) return false;
      out.push_back(as_reflection(w));
      return true;
    }
    if (dead.contains(key(w, k))) return false;
    for (const auto& r : pool.reflections()) {
      WeylElement rest = compose(r.element, w);  // w = r * rest
      const int c = fixed_space_codimension(rest);
      if (c > k - 1) continue;
      out.push_back(r);
      if (search(rest, k - 1, out)) return true;
      out.pop_back();
    }
    dead.insert(key(w, k));
    return false;
  }
};

}  // namespace

std::optional<std::vector<Reflection>> factor_into_reflections(const WeylElement& w, int length,
                                                               const ReflectionPool& pool) {
  if (length < 0) return std::nullopt;
  Searcher s{pool, {}};
  std::vector<Reflection> out;
  if (s.search(w, length, out)) return out;
  return std::nullopt;
}

AbsoluteLength absolute_length(const CartanMatrix& cartan, const WeylElement& w, int cap,
                               const SearchBounds& bounds) {
  if (w.rank() != cartan.rank()) throw Error(ErrorKind::RankMismatch, "absolute_length: rank mismatch");
  if (w.is_identity()) return AbsoluteLength{0, {}, true};
  // det(w) = (-1)^l(w), and l(w) >= codim of the fixed space.
  const int lower = fixed_space_codimension(w);
  const int parity = w.determinant() == 1 ? 0 : 1;
  const int first = lower % 2 == parity ? lower : lower + 1;

  const bool finite = classify_type(cartan) == TypeClass::Finite;
  Int height = 0;
  if (!finite) {
    const IntMatrix moved = w.matrix() - IntMatrix::identity(w.rank());
    for (std::size_t c = 0; c < w.rank(); ++c) height = std::max(height, moved.column(c).height());
    height = std::max<Int>(2 * height, 2);
  }
  while (true) {
    ReflectionPool pool(cartan, finite ? 0 : std::min(height, bounds.pool_ceiling));
    for (int k = first; k <= cap; k += 2) {
      if (auto found = factor_into_reflections(w, k, pool)) {
        const bool exact = k == first || pool.complete();
        if (exact) return AbsoluteLength{k, std::move(*found), true};
        break;
      }
    }
    if (finite || height >= bounds.pool_ceiling) break;
    height *= 2;
  }
  return AbsoluteLength{std::nullopt, {}, false};
}

std::string to_string(const WeylElement& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < w.rank(); ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < w.rank(); ++c) {
      if (c) os << ",";
      os << w.matrix()(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace schur_scope
