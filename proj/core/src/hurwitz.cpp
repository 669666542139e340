#include "schur_scope/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur_scope/error.hpp"

namespace schur_scope {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::NoWithinBound: return "No-within-bound";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

WeylElement Factorization::product() const {
  if (parts.empty()) throw Error(ErrorKind::Precondition, "empty factorization");
  WeylElement out = parts.front().element;
  for (std::size_t i = 1; i < parts.size(); ++i) out = compose(out, parts[i].element);
  return out;
}

bool Factorization::multiplies_to(const WeylElement& target) const {
  using Big = boost::multiprecision::cpp_int;
  if (parts.empty()) throw Error(ErrorKind::Precondition, "empty factorization");
  const std::size_t n = target.rank();
  std::vector<Big> acc(n * n);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  std::vector<Big> next(n * n);
  for (const auto& p : parts) {
    if (p.element.rank() != n) throw Error(ErrorKind::RankMismatch, "factor has the wrong rank");
    const IntMatrix& m = p.element.matrix();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Big sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (m(k, c) != 0) sum += acc[r * n + k] * m(k, c);
        }
        next[r * n + c] = std::move(sum);
      }
    }
    acc.swap(next);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (acc[r * n + c] != target.matrix()(r, c)) return false;
    }
  }
  return true;
}

std::vector<Int> Factorization::key() const {
  std::vector<Int> out;
  for (const auto& p : parts) out.insert(out.end(), p.root.coords().begin(), p.root.coords().end());
  return out;
}

Factorization canonical_factorization(const Orientation& orientation) {
  return Factorization{orientation.canonical_tuple()};
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0) throw Error(ErrorKind::Parse, "braid letters must be nonzero");
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<int> letters;
  for (Int v : parse_int_list(text)) letters.push_back(static_cast<int>(v));
  return BraidWord(std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return BraidWord(std::move(out));
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(std::move(out));
}

void BraidWord::validate(std::size_t strands) const {
  for (int l : letters_) {
    const int a = l < 0 ? -l : l;
    if (a < 1 || static_cast<std::size_t>(a) + 1 > strands) {
      throw Error(ErrorKind::IndexOutOfRange, "braid letter " + std::to_string(l) +
                                                  " out of range for " + std::to_string(strands) +
                                                  " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  std::vector<Int> v(letters_.begin(), letters_.end());
  return join_ints(v);
}

// ---------------------------------------------------------------------------
// Action

namespace {

// g t g for a reflection t = id - beta phi: the reflection id - (g beta)(phi g).
// Avoids the triple matrix product, whose middle factor can leave 64-bit range.
Reflection conjugate_reflection(const Reflection& g, const Reflection& t) {
  const std::size_t n = t.root.size();
  std::size_t pivot = 0;
  while (t.root[pivot] == 0) ++pivot;
  std::vector<Int> phi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Int moved = t.element.matrix()(pivot, j) - (pivot == j ? 1 : 0);
    phi[j] = -moved / t.root[pivot];
  }
  const RootVector u = apply(g.element, t.root);
  std::vector<Int> psi(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) psi[j] = checked_add(psi[j], checked_mul(phi[k], g.element.matrix()(k, j)));
  }
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = checked_add(m(r, c), -checked_mul(u[r], psi[c]));
  }
  return Reflection{WeylElement(std::move(m)), u.abs()};
}

}  // namespace

Factorization braid_move(const Factorization& f, int i, bool inverse_move) {
  const std::size_t n = f.size();
  if (i < 1 || static_cast<std::size_t>(i) + 1 > n) {
    throw Error(ErrorKind::IndexOutOfRange, "braid generator " + std::to_string(i) +
                                                " out of range for " + std::to_string(n) +
                                                " strands");
  }
  Factorization out = f;
  const Reflection& left = f.parts[static_cast<std::size_t>(i) - 1];
  const Reflection& right = f.parts[static_cast<std::size_t>(i)];
  // Reflections are involutions, so g^{-1} = g in both formulas.
  if (!inverse_move) {
    // (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^{-1}, g_i)
    out.parts[i - 1] = conjugate_reflection(left, right);
    out.parts[i] = left;
  } else {
    // (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1})
    out.parts[i - 1] = right;
    out.parts[i] = conjugate_reflection(right, left);
  }
  return out;
}

Factorization apply_braid_word(const Factorization& f, const BraidWord& word) {
  word.validate(f.size());
  Factorization out = f;
  for (int l : word.letters()) out = braid_move(out, l < 0 ? -l : l, l < 0);
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Int>& k) const noexcept { return hash_ints(k); }
};

Int max_height(const Factorization& f) {
  Int h = 0;
  for (const auto& p : f.parts) h = std::max(h, p.root.height());
  return h;
}

struct SearchOutcome {
  std::optional<Factorization> hit;
  bool exhausted = false;  // the admissible space was fully explored
};

// Breadth-first search over the Hurwitz orbit restricted to tuples with all
// root heights <= height_limit (0 = unlimited), stopping at `goal`.
template <class Goal>
SearchOutcome bounded_orbit_search(const Factorization& start, std::size_t node_cap,
                                   Int height_limit, Goal goal,
                                   std::vector<Factorization>* visited = nullptr) {
  const WeylElement target = start.product();
  std::unordered_map<std::vector<Int>, std::size_t, KeyHash> index;
  std::vector<Factorization> nodes{start};
  index.emplace(start.key(), 0);
  if (goal(start)) return {start, false};
  const std::size_t n = start.size();
  bool overflowed = false;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t i = 1; i < n; ++i) {
      for (bool inv : {false, true}) {
        Factorization next;
        bool same_product = true;
        try {
          next = braid_move(nodes[head], static_cast<int>(i), inv);
          if (height_limit > 0 && max_height(next) > height_limit) continue;
          if (index.contains(next.key())) continue;
          same_product = next.multiplies_to(target);
        } catch (const Error& e) {
          // Entries past 64 bits: the branch is dropped and the search is no longer exhaustive.
          if (e.kind() != ErrorKind::Overflow) throw;
          overflowed = true;
          continue;
        }
        if (!same_product) throw Error(ErrorKind::Internal, "Hurwitz move changed the product");
        auto key = next.key();
        if (goal(next)) return {next, false};
        if (nodes.size() >= node_cap) {
          if (visited) *visited = std::move(nodes);
          return {std::nullopt, false};
        }
        index.emplace(std::move(key), nodes.size());
        nodes.push_back(std::move(next));
      }
    }
  }
  if (visited) *visited = std::move(nodes);
  return {std::nullopt, !overflowed};
}

// Moves the part at `position` to the front with sigma_{j-1}^{-1} ... sigma_1^{-1}.
Factorization move_to_front(Factorization f, std::size_t position) {
  for (std::size_t j = position; j > 0; --j) f = braid_move(f, static_cast<int>(j), true);
  return f;
}

}  // namespace

OrbitResult hurwitz_orbit(const Factorization& start, std::size_t node_cap) {
  if (node_cap == 0) throw Error(ErrorKind::Precondition, "node cap must be positive");
  OrbitResult out;
  auto outcome = bounded_orbit_search(start, node_cap, 0, [](const Factorization&) { return false; },
                                      &out.members);
  out.complete = outcome.exhausted;
  return out;
}

Int factorization_count_formula(const CartanMatrix& cartan) {
  if (classify_type(cartan) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "factorization count formula requires a finite type");
  }
  const Int n = static_cast<Int>(cartan.rank());
  const Int h = coxeter_number(cartan);
  const Int order = static_cast<Int>(enumerate_group(cartan).size());
  Int numerator = 1;
  for (Int k = 2; k <= n; ++k) numerator = checked_mul(numerator, k);
  for (Int k = 0; k < n; ++k) numerator = checked_mul(numerator, h);
  if (numerator % order != 0) {
    throw Error(ErrorKind::Internal, "n! h^n is not divisible by the group order");
  }
  return numerator / order;
}

bool validate_prefix_certificate(const Factorization& f, const Reflection& t,
                                 const Orientation& orientation) {
  if (f.size() != orientation.rank()) return false;
  if (f.parts.front().element != t.element) return false;
  for (const auto& p : f.parts) {
    if (!is_reflection(p.element)) return false;
  }
  return f.multiplies_to(orientation.coxeter());
}

PrefixResult is_prefix_of_coxeter(const WeylElement& t, const Orientation& orientation,
                                  const SearchBounds& bounds, PrefixRoutes routes) {
  if (!is_reflection(t)) throw Error(ErrorKind::NotReflection, "query element is not a reflection");
  return is_prefix_of_coxeter(as_reflection(t), orientation, bounds, routes);
}

PrefixResult is_prefix_of_coxeter(const Reflection& t, const Orientation& orientation,
                                  const SearchBounds& bounds, PrefixRoutes routes) {
  if (!is_reflection(t.element)) throw Error(ErrorKind::NotReflection, "query element is not a reflection");
  const CartanMatrix& cartan = orientation.cartan();
  const std::size_t n = orientation.rank();
  const bool finite = classify_type(cartan) == TypeClass::Finite;
  PrefixResult out;

  if (routes != PrefixRoutes::OrbitOnly) {
    // t r_2 ... r_n = c  <=>  t c is a product of n-1 reflections.
    const WeylElement rest = compose(t.element, orientation.coxeter());
    const int want = static_cast<int>(n) - 1;
    Int height = std::max<Int>(2 * t.root.height(), 2);
    while (true) {
      ReflectionPool pool(cartan, finite ? 0 : std::min(height, bounds.pool_ceiling));
      if (auto factors = factor_into_reflections(rest, want, pool)) {
        Factorization cert;
        cert.parts.push_back(t);
        cert.parts.insert(cert.parts.end(), factors->begin(), factors->end());
        out.by_length = Verdict::Yes;
        out.certificate = std::move(cert);
        break;
      }
      if (pool.complete()) {
        out.by_length = Verdict::No;
        break;
      }
      if (height >= bounds.pool_ceiling) break;
      height *= 2;
    }
  }

  if (routes != PrefixRoutes::LengthOnly) {
    const Int limit = finite ? 0 : bounds.prune_multiple * std::max<Int>(t.root.height(), 1);
    auto outcome = bounded_orbit_search(
        canonical_factorization(orientation), bounds.orbit_cap, limit,
        [&](const Factorization& f) {
          return std::any_of(f.parts.begin(), f.parts.end(),
                             [&](const Reflection& r) { return r.root == t.root; });
        });
    if (outcome.hit) {
      const auto& parts = outcome.hit->parts;
      const auto pos = static_cast<std::size_t>(
          std::find_if(parts.begin(), parts.end(), [&](const Reflection& r) { return r.root == t.root; }) -
          parts.begin());
      out.by_orbit = Verdict::Yes;
      if (!out.certificate) out.certificate = move_to_front(*outcome.hit, pos);
    } else if (outcome.exhausted) {
      out.by_orbit = finite ? Verdict::No : Verdict::NoWithinBound;
    }
  }

  const bool a_known = out.by_length == Verdict::Yes || out.by_length == Verdict::No;
  const bool b_known = out.by_orbit == Verdict::Yes || out.by_orbit == Verdict::No;
  if (a_known && b_known && out.by_length != out.by_orbit) {
    throw Error(ErrorKind::Internal, "prefix routes disagree for root " + t.root.to_string());
  }
  if (out.by_length == Verdict::Yes || out.by_orbit == Verdict::Yes) {
    out.verdict = Verdict::Yes;
  } else if (out.by_length == Verdict::No || out.by_orbit == Verdict::No) {
    out.verdict = Verdict::No;
  } else if (out.by_orbit == Verdict::NoWithinBound) {
    out.verdict = Verdict::NoWithinBound;
  } else {
    out.verdict = Verdict::Unknown;
  }
  if (out.certificate && !validate_prefix_certificate(*out.certificate, t, orientation)) {
    throw Error(ErrorKind::Internal, "prefix certificate failed validation");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stabilizers

bool stabilizer_check(const BraidWord& word, const Orientation& orientation) {
  const Factorization start = canonical_factorization(orientation);
  return apply_braid_word(start, word) == start;
}

BraidWord full_twist(std::size_t strands, int k) {
  std::vector<int> turn;
  for (std::size_t i = strands - 1; i >= 1; --i) turn.push_back(static_cast<int>(i));
  return BraidWord(std::move(turn)).power(static_cast<int>(strands) * k);
}

bool full_twist_identity_check(const Orientation& orientation, int k) {
  const std::size_t n = orientation.rank();
  const Factorization start = canonical_factorization(orientation);
  const Factorization twisted = n > 1 ? apply_braid_word(start, full_twist(n, k)) : start;
  const WeylElement ck = power(orientation.coxeter(), k);
  const WeylElement ck_inv = power(orientation.coxeter(), -k);
  for (std::size_t i = 0; i < n; ++i) {
    const WeylElement expected = compose(compose(ck, start.parts[i].element), ck_inv);
    if (twisted.parts[i].element != expected) return false;
  }
  return true;
}

StabilizerSurvey stabilizer_elements(const Orientation& orientation) {
  const CartanMatrix& cartan = orientation.cartan();
  const auto order = orientation.order();
  const std::size_t n = orientation.rank();
  StabilizerSurvey out;

  for (std::size_t i = 1; i < n; ++i) {
    const auto m = coxeter_exponent(cartan, order[i - 1], order[i]);
    const std::string name = "sigma_" + std::to_string(i);
    if (m) {
      out.elements.push_back({BraidWord({static_cast<int>(i)}).power(*m),
                              name + "^" + std::to_string(*m) + " (m_ij)"});
    } else {
      out.skipped.push_back(name + ": m_ij is infinite");
    }
  }

  // Subdiagram on positions i..j (0-based here); its twist conjugates slots i..j by c_ij.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t size = j - i + 1;
      IntMatrix sub(size);
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
          sub(r, c) = cartan.symmetrized()(order[i + r], order[i + c]);
      std::ostringstream label;
      label << "twist on positions " << i + 1 << ".." << j + 1;
      if (classify_symmetric(sub) != TypeClass::Finite) {
        out.skipped.push_back(label.str() + ": subdiagram is not of finite type");
        continue;
      }
      std::vector<std::size_t> word(order.begin() + static_cast<std::ptrdiff_t>(i),
                                    order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      const auto h = element_order(word_element(cartan, word), 1000);
      if (!h) {
        out.skipped.push_back(label.str() + ": Coxeter element order not found");
        continue;
      }
      std::vector<int> turn;
      for (std::size_t k = j; k > i; --k) turn.push_back(static_cast<int>(k));
      label << ", h=" << *h;
      out.elements.push_back(
          {BraidWord(std::move(turn)).power(static_cast<int>(size) * *h), label.str()});
    }
  }
  return out;
}

std::optional<NormalityWitness> normality_probe(const Orientation& orientation, int search_depth) {
  if (classify_type(orientation.cartan()) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "normality probe requires a finite type");
  }
  const std::size_t n = orientation.rank();
  if (n < 2) return std::nullopt;
  const auto survey = stabilizer_elements(orientation);

  std::vector<BraidWord> taus;
  for (const auto& e : survey.elements) taus.push_back(e.word);
  std::vector<BraidWord> layer = taus;
  for (int depth = 2; depth <= search_depth; ++depth) {
    std::vector<BraidWord> next;
    for (const auto& a : layer)
      for (const auto& b : survey.elements) next.push_back(a * b.word);
    taus.insert(taus.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  for (const auto& tau : taus) {
    if (!stabilizer_check(tau, orientation)) continue;
    for (int g = 1; g < static_cast<int>(n); ++g) {
      for (int sigma : {g, -g}) {
        const BraidWord s({sigma});
        BraidWord conj = s * tau * s.inverse();
        if (!stabilizer_check(conj, orientation)) {
          return NormalityWitness{tau, sigma, std::move(conj)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace schur_scope
