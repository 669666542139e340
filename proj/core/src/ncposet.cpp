#include "schur_scope/ncposet.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "schur_scope/error.hpp"

namespace schur_scope {

std::optional<std::size_t> NCPoset::index_of(const WeylElement& w) const {
  auto it = std::find(elements.begin(), elements.end(), w);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

Verdict absolute_leq(const WeylElement& u, const WeylElement& w, const CartanMatrix& cartan,
                     const SearchBounds& bounds) {
  const int cap = bounds.length_cap > 0 ? bounds.length_cap : static_cast<int>(cartan.rank());
  const auto lu = absolute_length(cartan, u, cap, bounds);
  const auto lw = absolute_length(cartan, w, cap, bounds);
  const auto ld = absolute_length(cartan, compose(inverse(u), w), cap, bounds);
  if (!lu.exact || !lw.exact || !ld.exact) return Verdict::Unknown;
  return *lu.length + *ld.length == *lw.length ? Verdict::Yes : Verdict::No;
}

namespace {

// Absolute length of every group element: distances in the Cayley graph on all reflections.
std::unordered_map<WeylElement, int, WeylElementHash> reflection_distances(const CartanMatrix& cartan) {
  std::vector<WeylElement> reflections;
  for (const auto& r : positive_real_roots(cartan, 0)) {
    reflections.push_back(reflection_for_root(cartan, r).element);
  }
  std::unordered_map<WeylElement, int, WeylElementHash> dist;
  std::deque<WeylElement> queue;
  const auto e = WeylElement::identity(cartan.rank());
  dist.emplace(e, 0);
  queue.push_back(e);
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    const int d = dist.at(w);
    for (const auto& t : reflections) {
      WeylElement next = compose(w, t);
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    }
  }
  return dist;
}

}  // namespace

NCPoset enumerate_nc(const Orientation& orientation) {
  const CartanMatrix& cartan = orientation.cartan();
  if (classify_type(cartan) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "NC enumeration requires a finite type");
  }
  const auto dist = reflection_distances(cartan);
  const WeylElement& c = orientation.coxeter();
  const int n = static_cast<int>(cartan.rank());

  NCPoset p;
  for (const auto& [w, d] : dist) {
    if (d + dist.at(compose(inverse(w), c)) == n) p.elements.push_back(w);
  }
  std::sort(p.elements.begin(), p.elements.end(), [&](const WeylElement& a, const WeylElement& b) {
    const int da = dist.at(a);
    const int db = dist.at(b);
    return da != db ? da < db : a < b;
  });
  for (const auto& w : p.elements) p.ranks.push_back(dist.at(w));

  const std::size_t m = p.size();
  p.order.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const WeylElement ui = inverse(p.elements[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const int gap = p.ranks[j] - p.ranks[i];
      if (gap < 0) continue;
      const int d = dist.at(compose(ui, p.elements[j]));
      if (d == gap) {
        p.order[i * m + j] = 1;
        if (gap == 1) p.covers.emplace_back(i, j);
      }
    }
  }
  p.bottom = *p.index_of(WeylElement::identity(cartan.rank()));
  p.top = *p.index_of(c);
  return p;
}

IntervalFactorization interval_factorization(const WeylElement& u, const WeylElement& w,
                                             const Orientation& orientation, const SearchBounds& bounds) {
  const CartanMatrix& cartan = orientation.cartan();
  const WeylElement& c = orientation.coxeter();
  if (absolute_leq(u, w, cartan, bounds) != Verdict::Yes ||
      absolute_leq(w, c, cartan, bounds) != Verdict::Yes) {
    throw Error(ErrorKind::Precondition, "interval factorization needs u <= w <= c");
  }
  const int n = static_cast<int>(cartan.rank());
  auto factor = [&](const WeylElement& x) {
    auto len = absolute_length(cartan, x, n, bounds);
    if (!len.exact) throw Error(ErrorKind::Internal, "length certified earlier but not now");
    return std::move(len.factors);
  };

  IntervalFactorization out;
  out.steps = factor(compose(inverse(u), w));
  const auto head = factor(u);
  const auto tail = factor(compose(inverse(w), c));
  out.full.parts = head;
  out.full.parts.insert(out.full.parts.end(), out.steps.begin(), out.steps.end());
  out.full.parts.insert(out.full.parts.end(), tail.begin(), tail.end());

  std::vector<WeylElement> step_elements;
  for (const auto& t : out.steps) step_elements.push_back(t.element);
  if (compose(u, product(step_elements, cartan.rank())) != w || out.full.product() != c) {
    throw Error(ErrorKind::Internal, "interval factorization failed to re-multiply");
  }
  return out;
}

PosetProperties poset_properties(const NCPoset& p) {
  PosetProperties out;
  const std::size_t m = p.size();
  const int top_rank = p.ranks.empty() ? 0 : *std::max_element(p.ranks.begin(), p.ranks.end());
  out.rank_sizes.assign(static_cast<std::size_t>(top_rank) + 1, 0);
  for (int r : p.ranks) ++out.rank_sizes[static_cast<std::size_t>(r)];
  out.rank_symmetric = std::equal(out.rank_sizes.begin(), out.rank_sizes.end(), out.rank_sizes.rbegin());
  out.atoms = out.rank_sizes.size() > 1 ? out.rank_sizes[1] : 0;

  // Elements are sorted by rank, so covers can be swept in index order.
  std::vector<Int> chains(m, 0);
  chains[p.bottom] = 1;
  std::vector<std::vector<std::size_t>> up(m);
  for (const auto& [lo, hi] : p.covers) up[lo].push_back(hi);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : up[i]) chains[j] = checked_add(chains[j], chains[i]);
  }
  out.maximal_chains = chains[p.top];

  auto has_extremum = [&](std::size_t a, std::size_t b, bool meet) {
    std::vector<std::size_t> bounds;
    for (std::size_t x = 0; x < m; ++x) {
      const bool ok = meet ? p.leq(x, a) && p.leq(x, b) : p.leq(a, x) && p.leq(b, x);
      if (ok) bounds.push_back(x);
    }
    return std::any_of(bounds.begin(), bounds.end(), [&](std::size_t cand) {
      return std::all_of(bounds.begin(), bounds.end(),
                         [&](std::size_t x) { return meet ? p.leq(x, cand) : p.leq(cand, x); });
    });
  };
  out.is_lattice = true;
  for (std::size_t a = 0; a < m && out.is_lattice; ++a) {
    for (std::size_t b = a + 1; b < m && out.is_lattice; ++b) {
      out.is_lattice = has_extremum(a, b, true) && has_extremum(a, b, false);
    }
  }
  return out;
}

std::string to_dot(const NCPoset& p) {
  std::ostringstream os;
  os << "digraph nc {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string label = "r" + std::to_string(p.ranks[i]);
    if (p.ranks[i] == 1) label = root_of_reflection(p.elements[i]).to_string();
    if (i == p.bottom) label = "e";
    if (i == p.top) label = "c";
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace schur_scope
