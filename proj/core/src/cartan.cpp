#include "schur_scope/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "schur_scope/error.hpp"

namespace schur_scope {

const char* to_string(TypeClass t) noexcept {
  switch (t) {
    case TypeClass::Finite: return "finite";
    case TypeClass::Affine: return "affine";
    case TypeClass::Indefinite: return "indefinite";
  }
  return "unknown";
}

namespace {

std::string cell(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

bool connected(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && a(i, j) != 0) {
        seen[j] = true;
        ++count;
        frontier.push(j);
      }
    }
  }
  return count == n;
}

// Minimal positive integer d with d_i a_ij = d_j a_ji, propagated along a
// spanning tree as fractions num/den and checked on every edge afterwards.
std::vector<Int> solve_symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Int> num(n, 0), den(n, 0);
  num[0] = 1;
  den[0] = 1;
  std::queue<std::size_t> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0 || den[j] != 0) continue;
      // d_j = d_i * a_ij / a_ji
      Int p = checked_mul(num[i], -a(i, j));
      Int q = checked_mul(den[i], -a(j, i));
      const Int g = std::gcd(p, q);
      num[j] = p / g;
      den[j] = q / g;
      frontier.push(j);
    }
  }
  Int common = 1;
  for (std::size_t i = 0; i < n; ++i) common = std::lcm(common, den[i]);
  std::vector<Int> d(n);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = checked_mul(num[i], common / den[i]);
    g = std::gcd(g, d[i]);
  }
  for (auto& x : d) x /= g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (checked_mul(d[i], a(i, j)) != checked_mul(d[j], a(j, i))) {
        throw Error(ErrorKind::Symmetrizability,
                    "matrix is not symmetrizable (cycle condition fails at " + cell(i, j) + ")");
      }
    }
  }
  return d;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::vector<Int>> blank(std::size_t n) {
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 2;
  return rows;
}

void link(std::vector<std::vector<Int>>& rows, std::size_t i, std::size_t j, Int aij = -1,
          Int aji = -1) {
  rows[i][j] = aij;
  rows[j][i] = aji;
}

std::vector<std::vector<Int>> chain(std::size_t n) {
  auto rows = blank(n);
  for (std::size_t i = 0; i + 1 < n; ++i) link(rows, i, i + 1);
  return rows;
}

std::size_t parse_size(std::string_view digits, std::string_view label) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::UnknownName, "unknown preset '" + std::string(label) + "'");
  }
  return value;
}

}  // namespace

CartanMatrix CartanMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                                     std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::Parse, "Cartan matrix must have positive rank");
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2) {
      throw Error(ErrorKind::Diagonal, "diagonal entry " + cell(i, i) + " is " +
                                           std::to_string(a(i, i)) + ", expected 2");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) {
        throw Error(ErrorKind::Sign, "off-diagonal entry " + cell(i, j) + " is positive");
      }
      if ((a(i, j) == 0) != (a(j, i) == 0)) {
        throw Error(ErrorKind::Sign, "entries " + cell(i, j) + " and " + cell(j, i) +
                                         " must vanish together");
      }
    }
  }
  if (!connected(a)) throw Error(ErrorKind::Irreducibility, "Dynkin graph is not connected");
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorKind::Parse, "label count does not match rank");
  }

  CartanMatrix out;
  out.symmetrizer_ = solve_symmetrizer(a);
  out.entries_ = std::move(a);
  out.labels_ = std::move(labels);
  return out;
}

IntMatrix CartanMatrix::symmetrized() const {
  const std::size_t n = rank();
  IntMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = checked_mul(symmetrizer_[i], entries_(i, j));
  return g;
}

Int CartanMatrix::form(const RootVector& u, const RootVector& v) const {
  const std::size_t n = rank();
  if (u.size() != n || v.size() != n) throw Error(ErrorKind::RankMismatch, "form: rank mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      acc = checked_add(acc, checked_mul(checked_mul(symmetrizer_[i], entries_(i, j)),
                                         checked_mul(u[i], v[j])));
    }
  }
  return acc;
}

CartanMatrix parse_cartan(std::string_view text) {
  std::vector<std::vector<Int>> lines;
  std::string current;
  auto flush = [&]() {
    std::istringstream is(current);
    std::vector<Int> row;
    std::string token;
    while (is >> token) {
      Int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::Parse, "not an integer: '" + token + "'");
      }
      row.push_back(value);
    }
    if (!row.empty()) lines.push_back(std::move(row));
    current.clear();
  };
  for (char ch : text) {
    if (ch == '/' || ch == '\n' || ch == ';') {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty matrix text");
  if (lines.front().size() != 1 || lines.front().front() <= 0) {
    throw Error(ErrorKind::Parse, "matrix text must start with the rank n on its own row");
  }
  const auto n = static_cast<std::size_t>(lines.front().front());
  if (lines.size() - 1 != n) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " rows, found " +
                                      std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Int>> rows(lines.begin() + 1, lines.end());
  return CartanMatrix::from_rows(rows);
}

std::vector<Int> symmetrizer(const CartanMatrix& cartan) {
  auto d = cartan.symmetrizer();
  return {d.begin(), d.end()};
}

std::optional<int> coxeter_exponent(const CartanMatrix& cartan, std::size_t i, std::size_t j) {
  const std::size_t n = cartan.rank();
  if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "coxeter_exponent: index out of range");
  if (i == j) throw Error(ErrorKind::Precondition, "coxeter_exponent: indices must differ");
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return std::nullopt;
  }
}

TypeClass classify_symmetric(const IntMatrix& g) {
  const std::size_t n = g.size();
  bool leading_positive = true;
  for (std::size_t k = 1; k <= n && leading_positive; ++k) {
    std::vector<Int> sub;
    sub.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub.push_back(g(i, j));
    leading_positive = bareiss_determinant(k, sub) > 0;
  }
  if (leading_positive) return TypeClass::Finite;

  // Positive semidefinite iff every principal minor is >= 0.
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    std::vector<Int> sub;
    for (auto r : idx)
      for (auto c : idx) sub.push_back(g(r, c));
    if (bareiss_determinant(idx.size(), sub) < 0) return TypeClass::Indefinite;
  }
  return g.rank() + 1 == n ? TypeClass::Affine : TypeClass::Indefinite;
}

TypeClass classify_type(const CartanMatrix& cartan) {
  return classify_symmetric(cartan.symmetrized());
}

int coxeter_number(const CartanMatrix& cartan) {
  if (classify_type(cartan) != TypeClass::Finite) {
    throw Error(ErrorKind::NotFinite, "Coxeter number requires a finite type");
  }
  const std::size_t n = cartan.rank();
  IntMatrix c = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    // s_i(alpha_j) = alpha_j - a_ij alpha_i
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan(i, j);
    c = c * s;
  }
  IntMatrix power = c;
  int order = 1;
  while (!power.is_identity()) {
    power = power * c;
    ++order;
    if (order > 1000) throw Error(ErrorKind::Internal, "Coxeter element order exceeds 1000");
  }
  return order;
}

std::vector<std::string> preset_patterns() {
  return {"A<n>",  "B<n> (n>=2)", "C<n> (n>=2)", "D<n> (n>=4)",       "E6",
          "E7",    "E8",          "F4",          "G2",                "affine-A<n> (n>=2)",
          "affine-A1", "universal:<rank>:<weight> (weight>=2)"};
}

CartanMatrix preset(std::string_view name) {
  const std::string key = lower(name);
  std::vector<std::vector<Int>> rows;

  if (key.rfind("universal:", 0) == 0) {
    const std::string_view rest = std::string_view(key).substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::UnknownName, "universal preset needs universal:<rank>:<weight>");
    }
    const std::size_t k = parse_size(rest.substr(0, colon), name);
    const std::size_t m = parse_size(rest.substr(colon + 1), name);
    if (k == 0) throw Error(ErrorKind::UnknownName, "universal preset needs rank >= 1");
    if (m < 2) throw Error(ErrorKind::Precondition, "universal preset needs weight m >= 2");
    rows = std::vector<std::vector<Int>>(k, std::vector<Int>(k, -static_cast<Int>(m)));
    for (std::size_t i = 0; i < k; ++i) rows[i][i] = 2;
  } else if (key == "affine-a1") {
    rows = {{2, -2}, {-2, 2}};
  } else if (key.rfind("affine-a", 0) == 0) {
    const std::size_t n = parse_size(std::string_view(key).substr(8), name);
    if (n < 1) throw Error(ErrorKind::UnknownName, "affine-A<n> needs n >= 1");
    rows = chain(n + 1);
    link(rows, 0, n);
  } else if (key == "g2") {
    rows = {{2, -1}, {-3, 2}};
  } else if (key == "f4") {
    rows = chain(4);
    link(rows, 1, 2, -2, -1);
  } else if (key == "e6" || key == "e7" || key == "e8") {
    const std::size_t n = static_cast<std::size_t>(key[1] - '0');
    rows = blank(n);
    // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
    link(rows, 0, 2);
    link(rows, 1, 3);
    for (std::size_t i = 2; i + 1 < n; ++i) link(rows, i, i + 1);
  } else if (!key.empty() && (key[0] == 'a' || key[0] == 'b' || key[0] == 'c' || key[0] == 'd')) {
    const std::size_t n = parse_size(std::string_view(key).substr(1), name);
    switch (key[0]) {
      case 'a':
        if (n < 1) throw Error(ErrorKind::UnknownName, "A<n> needs n >= 1");
        rows = chain(n);
        break;
      case 'b':
        if (n < 2) throw Error(ErrorKind::UnknownName, "B<n> needs n >= 2");
        rows = chain(n);
        link(rows, n - 2, n - 1, -2, -1);
        break;
      case 'c':
        if (n < 2) throw Error(ErrorKind::UnknownName, "C<n> needs n >= 2");
        rows = chain(n);
        link(rows, n - 2, n - 1, -1, -2);
        break;
      default:
        if (n < 4) throw Error(ErrorKind::UnknownName, "D<n> needs n >= 4");
        rows = blank(n);
        for (std::size_t i = 0; i + 2 < n; ++i) link(rows, i, i + 1);
        link(rows, n - 3, n - 1);
        break;
    }
  } else {
    throw Error(ErrorKind::UnknownName, "unknown preset '" + std::string(name) + "'");
  }

  CartanMatrix out = CartanMatrix::from_rows(rows);
  out.set_name(std::string(name));
  return out;
}

}  // namespace schur_scope
