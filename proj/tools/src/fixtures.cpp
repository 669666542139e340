#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schur_scope/error.hpp"
#include "schur_scope/schur.hpp"
#include "svg.hpp"

namespace schur_scope::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string example_2_6() {
  std::ostringstream os;
  const CartanMatrix a3 = preset("A3");
  const Orientation o(a3);
  const CurveWord gamma = parse_curve("2", 3);
  const RootVector root = root_of_curve(gamma, a3);
  const Reflection r = reflection_of_curve(gamma, a3);
  os << "fixture example-2.6 (A3, order " << o.order_string() << ")\n";
  os << "coxeter loop: " << loop_expression(LoopWord{{0, 1, 2}}) << "\n";
  os << "gamma: word " << gamma.to_string() << ", root " << root_expression(gamma) << " = (" << root.to_string()
     << ")\n";
  os << "gamma loop: " << loop_expression(loop_of_curve(gamma)) << ", reflection of its root: "
     << yes_no(r.element == reflection_for_root(a3, root).element) << "\n";

  // beta winds once around p_3 before ending there.
  const CurveWord beta = parse_curve("2,3", 3);
  const RootVector beta_root = root_of_curve(beta, a3);
  os << "beta: raw 2,3|3, canonical " << beta.to_string() << ", sign " << beta.sign << ", root "
     << root_expression(beta) << " = (" << beta_root.to_string() << ")\n";
  os << "s_2s_3α_3 = -α_γ: " << yes_no(beta_root == -root) << "\n";
  os << "same reflection: " << yes_no(reflection_of_curve(beta, a3).element == r.element) << "\n";
  os << "gamma simple (universal rank 3): " << to_string(is_simple(gamma, 3).verdict) << "\n";
  return os.str();
}

void mutation_triple(std::ostream& os, const std::string& type) {
  const CartanMatrix cartan = preset(type);
  const Orientation o(cartan);
  const SchurOptions generic{false, PrefixRoutes::Both};
  const CurveWord beta = parse_curve("2,3", 2);
  struct Row {
    std::string label;
    CurveWord word;
    Orientation orientation;
  };
  const Row rows[] = {
      {"beta", beta, o},
      {"s(c)beta", mutation_word_map(beta, MutationSide::Source, o), mutate(o, MutationSide::Source)},
      {"t(c)beta", mutation_word_map(beta, MutationSide::Sink, o), mutate(o, MutationSide::Sink)},
  };
  os << "[" << type << "]\n";
  for (const auto& row : rows) {
    const RootVector root = root_of_curve(row.word, cartan);
    const auto verdict = is_schur_root(root, row.orientation, {}, generic);
    os << row.label << ": word " << row.word.to_string() << ", root " << root_expression(row.word) << " = ("
       << root.to_string() << "), order " << row.orientation.order_string() << ", Schur "
       << to_string(verdict.answer) << "\n";
  }
  const RootVector b = root_of_curve(beta, cartan);
  const auto& s = simple_reflection(cartan, o.first_letter()).element;
  const auto& t = simple_reflection(cartan, o.last_letter()).element;
  os << "word map matches s(c), t(c): "
     << yes_no(root_of_curve(rows[1].word, cartan) == apply(s, b) && root_of_curve(rows[2].word, cartan) == apply(t, b))
     << "\n";
  os << "c-bar = s(c) c s(c): " << yes_no(rows[1].orientation.coxeter() == compose(compose(s, o.coxeter()), s))
     << "\n";
}

std::string example_3_6() {
  std::ostringstream os;
  os << "fixture example-3.6 (c = s_1s_2s_3, s(c) = s_1, t(c) = s_3)\n";
  mutation_triple(os, "A3");
  mutation_triple(os, "universal:3:2");
  return os.str();
}

std::string example_4_8() {
  std::ostringstream os;
  os << "fixture example-4.8\n";
  for (const char* type : {"A2", "G2"}) {
    const Orientation o(preset(type));
    const auto orbit = hurwitz_orbit(canonical_factorization(o), 1000);
    os << type << ": orbit " << orbit.members.size() << ", sigma_1^k fixes the tuple for k in 1..12:";
    int least = 0;
    for (int k = 1; k <= 12; ++k) {
      if (stabilizer_check(BraidWord({1}).power(k), o)) {
        os << " " << k;
        if (least == 0) least = k;
      }
    }
    os << "; index " << least << "\n";
  }
  return os.str();
}

std::string table_4() {
  std::ostringstream os;
  os << "fixture table-4\n";
  for (const char* type : {"A2", "B2", "G2", "A3", "B3", "A4", "D4"}) {
    const CartanMatrix cartan = preset(type);
    const Orientation o(cartan);
    const auto orbit = hurwitz_orbit(canonical_factorization(o), 1'000'000);
    os << type << ": h " << coxeter_number(cartan) << ", |G| " << enumerate_group(cartan).size() << ", orbit "
       << orbit.members.size() << ", n!h^n/|G| " << factorization_count_formula(cartan) << "\n";
  }
  return os.str();
}

const std::map<std::string, std::string, std::less<>>& expected_texts() {
  static const std::map<std::string, std::string, std::less<>> texts{
      {"example-2.6", R"(fixture example-2.6 (A3, order 1,2,3)
coxeter loop: s_1s_2s_3
gamma: word 2|3, root s_2α_3 = (0,1,1)
gamma loop: s_2s_3s_2, reflection of its root: yes
beta: raw 2,3|3, canonical -(2|3), sign -1, root -s_2α_3 = (0,-1,-1)
s_2s_3α_3 = -α_γ: yes
same reflection: yes
gamma simple (universal rank 3): Yes
)"},
      {"example-3.6", R"(fixture example-3.6 (c = s_1s_2s_3, s(c) = s_1, t(c) = s_3)
[A3]
beta: word 2,3|2, root s_2s_3α_2 = (0,0,1), order 1,2,3, Schur Yes
s(c)beta: word 1,2,3|2, root s_1s_2s_3α_2 = (0,0,1), order 2,3,1, Schur Yes
t(c)beta: word 3,2,3|2, root s_3s_2s_3α_2 = (0,0,-1), order 3,1,2, Schur Yes
word map matches s(c), t(c): yes
c-bar = s(c) c s(c): yes
[universal:3:2]
beta: word 2,3|2, root s_2s_3α_2 = (0,3,2), order 1,2,3, Schur Yes
s(c)beta: word 1,2,3|2, root s_1s_2s_3α_2 = (10,3,2), order 2,3,1, Schur Yes
t(c)beta: word 3,2,3|2, root s_3s_2s_3α_2 = (0,3,4), order 3,1,2, Schur Yes
word map matches s(c), t(c): yes
c-bar = s(c) c s(c): yes
)"},
      {"example-4.8", R"(fixture example-4.8
A2: orbit 3, sigma_1^k fixes the tuple for k in 1..12: 3 6 9 12; index 3
G2: orbit 6, sigma_1^k fixes the tuple for k in 1..12: 6 12; index 6
)"},
      {"table-4", R"(fixture table-4
A2: h 3, |G| 6, orbit 3, n!h^n/|G| 3
B2: h 4, |G| 8, orbit 4, n!h^n/|G| 4
G2: h 6, |G| 12, orbit 6, n!h^n/|G| 6
A3: h 4, |G| 24, orbit 16, n!h^n/|G| 16
B3: h 6, |G| 48, orbit 27, n!h^n/|G| 27
A4: h 5, |G| 120, orbit 125, n!h^n/|G| 125
D4: h 6, |G| 192, orbit 162, n!h^n/|G| 162
)"},
  };
  return texts;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"example-2.6", "example-3.6", "example-4.8", "table-4"}; }

std::string compute_fixture(std::string_view name) {
  if (name == "example-2.6") return example_2_6();
  if (name == "example-3.6") return example_3_6();
  if (name == "example-4.8") return example_4_8();
  if (name == "table-4") return table_4();
  throw Error(ErrorKind::UnknownName, "unknown fixture '" + std::string(name) + "'");
}

std::string expected_fixture(std::string_view name) {
  const auto& texts = expected_texts();
  auto it = texts.find(name);
  if (it == texts.end()) throw Error(ErrorKind::UnknownName, "unknown fixture '" + std::string(name) + "'");
  return it->second;
}

FixtureOutcome reproduce_fixture(std::string_view name) {
  FixtureOutcome out;
  out.report = compute_fixture(name);
  const auto want = lines_of(expected_fixture(name));
  const auto got = lines_of(out.report);
  for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
    const std::string* w = i < want.size() ? &want[i] : nullptr;
    const std::string* g = i < got.size() ? &got[i] : nullptr;
    if (w && g && *w == *g) continue;
    if (w) out.diff.push_back("-" + *w);
    if (g) out.diff.push_back("+" + *g);
  }
  return out;
}

}  // namespace schur_scope::cli
