#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fixtures.hpp"
#include "schur_scope/error.hpp"
#include "schur_scope/ncposet.hpp"
#include "schur_scope/schur.hpp"
#include "schur_scope/serialize.hpp"
#include "svg.hpp"

namespace schur_scope::cli {

using nlohmann::json;

namespace {

struct Outcome {
  std::string text;
  json data;
  int code = kOk;
};

int code_for(Verdict v) { return v == Verdict::Yes || v == Verdict::No ? kOk : kUndecided; }

std::vector<Int> coords(const RootVector& r) { return {r.coords().begin(), r.coords().end()}; }

std::string paren(const RootVector& r) { return "(" + r.to_string() + ")"; }

std::string roots_line(const Factorization& f) {
  std::string out;
  for (const auto& r : f.parts) out += (out.empty() ? "" : " ") + paren(r.root);
  return out;
}

json roots_json(const Factorization& f) {
  json out = json::array();
  for (const auto& r : f.parts) out.push_back(coords(r.root));
  return out;
}

json parse_report(const std::string& text) { return json::parse(text); }

// SCHUR_SCOPE_CAPS="orbit=...,height=...,len=..."
void apply_caps_env(SearchBounds& bounds) {
  const char* env = std::getenv("SCHUR_SCOPE_CAPS");
  if (env == nullptr || *env == '\0') return;
  std::istringstream is(env);
  for (std::string item; std::getline(is, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "SCHUR_SCOPE_CAPS entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const auto values = parse_int_list(item.substr(eq + 1));
    if (values.size() != 1 || values[0] <= 0) {
      throw Error(ErrorKind::Parse, "SCHUR_SCOPE_CAPS value for '" + key + "' must be a positive integer");
    }
    if (key == "orbit") {
      bounds.orbit_cap = static_cast<std::size_t>(values[0]);
    } else if (key == "height") {
      bounds.height = values[0];
    } else if (key == "len") {
      bounds.length_cap = static_cast<int>(values[0]);
    } else {
      throw Error(ErrorKind::Parse, "unknown SCHUR_SCOPE_CAPS key '" + key + "'");
    }
  }
}

struct Session {
  std::optional<CartanMatrix> cartan;
  std::vector<std::size_t> order;
  SearchBounds bounds;

  const CartanMatrix& matrix() const {
    if (!cartan) throw Error(ErrorKind::Precondition, "this command needs --type or --cartan");
    return *cartan;
  }
  Orientation orientation() const {
    return order.empty() ? Orientation(matrix()) : Orientation(matrix(), order);
  }
};

CartanMatrix load_cartan_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::stringstream buf;
  buf << file.rdbuf();
  CartanMatrix m = parse_cartan(buf.str());
  m.set_name(path);
  return m;
}

std::vector<std::size_t> letters_of(const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  for (Int v : parse_int_list(text)) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

// "c" is the Coxeter element; otherwise a word in the simple reflections, "" for the identity.
WeylElement element_of(const std::string& text, const Orientation& o) {
  if (text == "c") return o.coxeter();
  return word_element(o.cartan(), letters_of(text, o.rank()));
}

std::string element_label(const WeylElement& w, int rank) {
  if (rank == 0) return "e";
  if (rank == 1) return "t" + paren(root_of_reflection(w));
  return to_string(w);
}

json curve_json(const CurveWord& cw) { return parse_report(emit_json(cw, -1)); }

struct CurveArgs {
  std::string word;
  std::size_t end = 0;
  bool negative = false;

  CurveWord curve(std::size_t n) const {
    if (end < 1 || end > n) throw Error(ErrorKind::IndexOutOfRange, "--end must lie in 1.." + std::to_string(n));
    letters_of(word, n);
    return parse_curve(word, end, negative);
  }
};

// ---------------------------------------------------------------------------
// Handlers

Outcome roots_list(const Session& s) {
  const auto roots = positive_real_roots(s.matrix(), s.bounds.height);
  Outcome out;
  out.data = {{"type", s.matrix().name()}, {"height_bound", s.bounds.height}, {"roots", json::array()}};
  for (const auto& r : roots) {
    out.text += std::to_string(r.height()) + " " + paren(r) + "\n";
    out.data["roots"].push_back(coords(r));
  }
  return out;
}

Outcome group_order(const Session& s) {
  Outcome out;
  const TypeClass t = classify_type(s.matrix());
  if (t == TypeClass::Finite) {
    const auto n = enumerate_group(s.matrix()).size();
    out.text = std::to_string(n) + "\n";
    out.data = {{"finite", true}, {"order", n}};
  } else {
    out.text = std::string("infinite (") + to_string(t) + ")\n";
    out.data = {{"finite", false}, {"class", to_string(t)}};
  }
  return out;
}

Outcome orbit_count(const Session& s) {
  const auto result = hurwitz_orbit(canonical_factorization(s.orientation()), s.bounds.orbit_cap);
  Outcome out;
  const auto n = result.members.size();
  out.data = {{"count", n}, {"complete", result.complete}};
  if (result.complete) {
    out.text = std::to_string(n) + "\n";
  } else {
    out.text = ">= " + std::to_string(n) + " (orbit cap reached)\n";
    out.code = kUndecided;
  }
  return out;
}

Outcome orbit_dump(const Session& s) {
  const auto result = hurwitz_orbit(canonical_factorization(s.orientation()), s.bounds.orbit_cap);
  Outcome out;
  out.data = {{"complete", result.complete}, {"members", json::array()}};
  for (const auto& f : result.members) {
    out.text += roots_line(f) + "\n";
    out.data["members"].push_back(roots_json(f));
  }
  if (!result.complete) {
    out.text += "# orbit cap reached\n";
    out.code = kUndecided;
  }
  return out;
}

Outcome schur_check(const Session& s, const std::string& root_text, bool generic) {
  const RootVector beta = RootVector::parse(root_text);
  if (beta.size() != s.matrix().rank()) throw Error(ErrorKind::RankMismatch, "root has the wrong length");
  SchurOptions options;
  options.fast_path = !generic;
  const auto v = is_schur_root(beta, s.orientation(), s.bounds, options);
  Outcome out;
  out.text = std::string(to_string(v.answer)) + "\n";
  if (v.certificate) out.text += "certificate: " + roots_line(*v.certificate) + "\n";
  out.data = parse_report(emit_json(v, -1));
  out.code = code_for(v.answer);
  return out;
}

Outcome schur_list(const Session& s) {
  const Orientation o = s.orientation();
  Outcome out;
  out.data = {{"height_bound", s.bounds.height}, {"roots", json::array()}};
  for (const auto& r : positive_real_roots(s.matrix(), s.bounds.height)) {
    const auto v = is_schur_root(r, o, s.bounds);
    out.text += paren(r) + " " + to_string(v.answer) + "\n";
    out.data["roots"].push_back({{"root", coords(r)}, {"verdict", to_string(v.answer)}});
    if (code_for(v.answer) != kOk) out.code = kUndecided;
  }
  return out;
}

std::string roots_text(const std::vector<RootVector>& roots) {
  std::string out;
  for (const auto& r : roots) out += (out.empty() ? "" : " ") + paren(r);
  return out.empty() ? "-" : out;
}

Outcome schur_verify(const Session& s) {
  const auto r = verify_conjecture(s.orientation(), s.bounds.height, s.bounds);
  Outcome out;
  std::ostringstream os;
  os << "height bound " << r.height_bound << "\n";
  os << "P (prefix): " << r.prefix.size() << "\n";
  os << "S (curves): " << r.curves.size() << (r.truncated ? " (harvest truncated)" : "") << "\n";
  if (r.all_positive) os << "F (positive): " << r.all_positive->size() << "\n";
  os << "P = S: " << (r.prefix_equals_curves ? "yes" : "no") << "\n";
  if (r.prefix_equals_all) os << "P = F: " << (*r.prefix_equals_all ? "yes" : "no") << "\n";
  if (r.curves_equals_all) os << "S = F: " << (*r.curves_equals_all ? "yes" : "no") << "\n";
  os << "unknown: " << roots_text(r.unknowns) << "\n";
  os << "no within bound: " << roots_text(r.bounded_no) << "\n";
  out.text = os.str();
  out.data = parse_report(emit_json(r, -1));
  if (r.truncated || !r.unknowns.empty() || !r.bounded_no.empty()) out.code = kUndecided;
  return out;
}

Outcome nc_list(const Session& s) {
  const auto p = enumerate_nc(s.orientation());
  const auto props = poset_properties(p);
  Outcome out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.text += std::to_string(p.ranks[i]) + " " + element_label(p.elements[i], p.ranks[i]) + "\n";
  }
  out.text += "size " + std::to_string(p.size()) + ", maximal chains " + std::to_string(props.maximal_chains) +
              ", lattice " + (props.is_lattice ? "yes" : "no") + "\n";
  out.data = {{"poset", parse_report(emit_json(p, -1))}, {"properties", parse_report(emit_json(props, -1))}};
  return out;
}

Outcome nc_leq(const Session& s, const std::string& u, const std::string& w) {
  const Orientation o = s.orientation();
  const Verdict v = absolute_leq(element_of(u, o), element_of(w, o), o.cartan(), s.bounds);
  Outcome out;
  out.text = std::string(to_string(v)) + "\n";
  out.data = {{"u", u}, {"w", w}, {"leq", to_string(v)}};
  out.code = code_for(v);
  return out;
}

Outcome nc_chain(const Session& s, const std::string& u, const std::string& w) {
  const Orientation o = s.orientation();
  const auto f = interval_factorization(element_of(u, o), element_of(w, o), o, s.bounds);
  Outcome out;
  Factorization steps{f.steps};
  out.text = "steps: " + (steps.parts.empty() ? std::string("-") : roots_line(steps)) + "\n";
  out.text += "full: " + roots_line(f.full) + "\n";
  out.data = {{"steps", roots_json(steps)}, {"full", roots_json(f.full)}};
  if (classify_type(o.cartan()) == TypeClass::Finite && u.empty() && w == "c") {
    const auto props = poset_properties(enumerate_nc(o));
    out.text += "maximal chains: " + std::to_string(props.maximal_chains) + "\n";
    out.data["maximal_chains"] = props.maximal_chains;
  }
  return out;
}

Outcome braid_apply(const Session& s, const std::string& word_text, bool curves) {
  const Orientation o = s.orientation();
  const BraidWord word = BraidWord::parse(word_text);
  Outcome out;
  const Factorization f = apply_braid_word(canonical_factorization(o), word);
  out.text = roots_line(f) + "\n";
  out.data = {{"word", word.to_string()}, {"roots", roots_json(f)}};
  if (curves) {
    const auto tuple = apply_braid_word_curves(fan(o), word);
    out.data["curves"] = json::array();
    std::string line;
    for (const auto& cw : tuple) {
      line += (line.empty() ? "" : " ") + cw.to_string();
      out.data["curves"].push_back(curve_json(cw));
    }
    out.text += line + "\n";
  }
  return out;
}

Outcome braid_stab(const Session& s, const std::optional<std::string>& word_text) {
  const Orientation o = s.orientation();
  Outcome out;
  if (word_text) {
    const bool fixed = stabilizer_check(BraidWord::parse(*word_text), o);
    out.text = fixed ? "Yes\n" : "No\n";
    out.data = {{"word", *word_text}, {"stabilizes", fixed}};
    return out;
  }
  const auto survey = stabilizer_elements(o);
  out.data = {{"elements", json::array()}, {"skipped", survey.skipped}};
  for (const auto& e : survey.elements) {
    const bool fixed = stabilizer_check(e.word, o);
    out.text += e.label + ": " + (fixed ? "Yes" : "No") + "\n";
    out.data["elements"].push_back({{"label", e.label}, {"word", e.word.to_string()}, {"stabilizes", fixed}});
  }
  for (const auto& skipped : survey.skipped) out.text += skipped + ": skipped\n";
  return out;
}

Outcome curve_root(const Session& s, const CurveArgs& a) {
  const CurveWord cw = a.curve(s.matrix().rank());
  const RootVector r = root_of_curve(cw, s.matrix());
  Outcome out;
  out.text = cw.to_string() + "\n" + root_expression(cw) + " = " + paren(r) + "\n";
  out.data = {{"curve", curve_json(cw)}, {"expression", root_expression(cw)}, {"root", coords(r)}};
  return out;
}

Outcome curve_loop(const Session& s, const CurveArgs& a) {
  const CurveWord cw = a.curve(s.matrix().rank());
  const LoopWord loop = loop_of_curve(cw);
  const Reflection t = reflection_of_curve(cw, s.matrix());
  Outcome out;
  out.text = loop.to_string() + "\n" + loop_expression(loop) + " = reflection of " + paren(t.root) + "\n";
  out.data = {{"loop", loop.to_string()}, {"expression", loop_expression(loop)}, {"root", coords(t.root)},
              {"matrix", to_string(t.element)}};
  return out;
}

Outcome curve_simple(const Session& s, const CurveArgs& a) {
  const std::size_t n = s.matrix().rank();
  const CurveWord cw = a.curve(n);
  const auto result = is_simple(cw, n, s.order, s.bounds);
  Outcome out;
  out.text = std::string(to_string(result.verdict)) + "\n";
  if (result.certificate) out.text += "certificate: " + roots_line(*result.certificate) + "\n";
  out.data = {{"curve", curve_json(cw)}, {"simple", to_string(result.verdict)}};
  if (result.certificate) out.data["certificate"] = roots_json(*result.certificate);
  out.code = code_for(result.verdict);
  return out;
}

Outcome curve_spiral(const Session& s, const CurveArgs& a, int k) {
  const Orientation o = s.orientation();
  const CurveWord cw = a.curve(o.rank());
  const CurveWord sp = spiral(cw, o, k);
  const RootVector r = root_of_curve(sp, o.cartan());
  const bool agrees = r == apply(power(o.coxeter(), k), root_of_curve(cw, o.cartan()));
  Outcome out;
  out.text = sp.to_string() + "\n" + root_expression(sp) + " = " + paren(r) + "\n" +
             "c^" + std::to_string(k) + " agrees: " + (agrees ? "yes" : "no") + "\n";
  out.data = {{"curve", curve_json(sp)}, {"root", coords(r)}, {"agrees", agrees}};
  return out;
}

Outcome curve_render(const Session& s, const CurveArgs& a, const std::string& path) {
  const CurveWord cw = a.curve(s.matrix().rank());
  write_curve_svg(cw, s.matrix(), path);
  Outcome out;
  out.text = path + "\n";
  out.data = {{"written", path}, {"curve", curve_json(cw)}};
  return out;
}

Outcome mutate_cmd(const Session& s, MutationSide side, const std::optional<std::string>& root_text) {
  const Orientation o = s.orientation();
  const Orientation m = mutate(o, side);
  Outcome out;
  out.text = "order " + m.order_string() + "\n";
  out.data = {{"order", m.order_string()}};
  if (root_text) {
    const auto agreement = mutation_equivalence_check(RootVector::parse(*root_text), o, s.bounds, side);
    out.text += "mapped " + paren(agreement.mapped) + "\n";
    out.text += std::string("before ") + to_string(agreement.before) + ", after " + to_string(agreement.after) +
                ", agree " + (agreement.agree ? "yes" : "no") + (agreement.resolved ? "" : " (unresolved)") + "\n";
    out.data["agreement"] = parse_report(emit_json(agreement, -1));
    if (!agreement.resolved) out.code = kUndecided;
  }
  return out;
}

Outcome repro(const std::string& fixture, std::ostream& err) {
  const auto outcome = reproduce_fixture(fixture);
  Outcome out;
  out.text = outcome.report;
  out.data = {{"fixture", fixture}, {"report", outcome.report}, {"matches", outcome.diff.empty()},
              {"diff", outcome.diff}};
  if (!outcome.diff.empty()) {
    err << "fixture " << fixture << " differs from the checked-in values:\n";
    for (const auto& line : outcome.diff) err << line << "\n";
    out.code = kUsage;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on reflection factorizations, Schur roots and curve words", "schur-scope"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also follow the subcommand

  std::string type_name;
  std::string cartan_file;
  std::string order_text;
  bool as_json = false;
  std::optional<std::size_t> orbit_cap;
  std::optional<Int> height;
  std::optional<int> length_cap;
  auto* type_opt = app.add_option("--type", type_name, "Preset Cartan type, e.g. A3, G2, affine-A2, universal:3:2");
  app.add_option("--cartan", cartan_file, "File with a Cartan matrix: 'n / row / row ...'")->excludes(type_opt);
  app.add_option("--order", order_text, "Coxeter order as a 1-based permutation, e.g. 2,3,1");
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_option("--orbit-cap", orbit_cap, "Node cap for orbit searches (default 1000000)");
  app.add_option("--height", height, "Root height bound (default 20)");
  app.add_option("--length-cap", length_cap, "Absolute length cap (default: rank)");

  std::string root_text;
  bool generic = false;
  std::string u_text;
  std::string w_text = "c";
  std::string braid_text;
  std::optional<std::string> stab_word;
  std::optional<std::string> mutate_root;
  bool with_curves = false;
  CurveArgs curve;
  int spiral_k = 1;
  std::string svg_path;
  std::string fixture;

  auto* roots = app.add_subcommand("roots", "Real roots");
  auto* roots_list_cmd = roots->add_subcommand("list", "Positive real roots up to --height");
  roots->require_subcommand(1);

  auto* group = app.add_subcommand("group", "Weyl group");
  auto* group_order_cmd = group->add_subcommand("order", "Group order, or 'infinite'");
  group->require_subcommand(1);

  auto* orbit = app.add_subcommand("orbit", "Hurwitz orbit of the canonical factorization");
  auto* orbit_count_cmd = orbit->add_subcommand("count", "Orbit size");
  auto* orbit_dump_cmd = orbit->add_subcommand("dump", "Orbit members as root tuples");
  orbit->require_subcommand(1);

  auto* schur = app.add_subcommand("schur", "Real Schur roots");
  auto* schur_check_cmd = schur->add_subcommand("check", "Is the root a real Schur root");
  schur_check_cmd->add_option("--root", root_text, "Root in simple coordinates, e.g. 1,1")->required();
  schur_check_cmd->add_flag("--generic", generic, "Skip the finite and rank-2 shortcuts");
  auto* schur_list_cmd = schur->add_subcommand("list", "Verdicts for positive real roots up to --height");
  auto* schur_verify_cmd = schur->add_subcommand("verify", "Compare prefix, curve and positive root sets");
  schur->require_subcommand(1);

  auto* nc = app.add_subcommand("nc", "Noncrossing partitions [1, c]");
  auto* nc_list_cmd = nc->add_subcommand("list", "Elements with their ranks");
  auto* nc_leq_cmd = nc->add_subcommand("leq", "Absolute order test u <= w");
  nc_leq_cmd->add_option("--u", u_text, "Word in simple reflections, 'c' or empty")->required();
  nc_leq_cmd->add_option("--w", w_text, "Word in simple reflections, 'c' or empty")->required();
  auto* nc_chain_cmd = nc->add_subcommand("chain", "Reflections from u up to w, extended to c");
  nc_chain_cmd->add_option("--u", u_text, "Lower element (default identity)");
  nc_chain_cmd->add_option("--w", w_text, "Upper element (default c)");
  nc->require_subcommand(1);

  auto* braid = app.add_subcommand("braid", "Braid group action");
  auto* braid_apply_cmd = braid->add_subcommand("apply", "Apply a braid word to the canonical tuple");
  braid_apply_cmd->add_option("--word", braid_text, "Letters i or -i, e.g. 1,-2")->required();
  braid_apply_cmd->add_flag("--curves", with_curves, "Also act on the fan of curve words");
  auto* braid_stab_cmd = braid->add_subcommand("stab", "Stabilizer test, or survey without --word");
  braid_stab_cmd->add_option("--word", stab_word, "Braid word to test");
  braid->require_subcommand(1);

  auto* curve_cmd = app.add_subcommand("curve", "Curve words");
  auto add_curve_opts = [&](CLI::App* sub) {
    sub->add_option("--word", curve.word, "Crossed rays, 1-based, e.g. 2,1 (empty for a straight curve)");
    sub->add_option("--end", curve.end, "Endpoint puncture, 1-based")->required();
    sub->add_flag("--neg,--negative", curve.negative, "Negative orientation");
  };
  auto* curve_root_cmd = curve_cmd->add_subcommand("root", "Root presented by the curve");
  auto* curve_loop_cmd = curve_cmd->add_subcommand("loop", "Loop word and its reflection");
  auto* curve_simple_cmd = curve_cmd->add_subcommand("simple", "Is the curve in the braid orbit of the fan");
  auto* curve_spiral_cmd = curve_cmd->add_subcommand("spiral", "Prepend the Coxeter word k times");
  curve_spiral_cmd->add_option("--k", spiral_k, "Number of turns (negative reverses)");
  auto* curve_render_cmd = curve_cmd->add_subcommand("render", "Schematic SVG");
  curve_render_cmd->add_option("--out", svg_path, "Output file")->required();
  for (auto* sub : {curve_root_cmd, curve_loop_cmd, curve_simple_cmd, curve_spiral_cmd, curve_render_cmd}) {
    add_curve_opts(sub);
  }
  curve_cmd->require_subcommand(1);

  auto* mutate_group = app.add_subcommand("mutate", "Source or sink mutation");
  auto* mutate_source = mutate_group->add_subcommand("source", "Rotate the order left");
  auto* mutate_sink = mutate_group->add_subcommand("sink", "Rotate the order right");
  for (auto* sub : {mutate_source, mutate_sink}) {
    sub->add_option("--root", mutate_root, "Also compare Schur verdicts of the root and its image");
  }
  mutate_group->require_subcommand(1);

  auto* repro_cmd = app.add_subcommand("repro", "Reproduce a checked-in fixture");
  repro_cmd->add_option("fixture", fixture, "example-2.6, example-3.6, example-4.8 or table-4")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Session s;
    apply_caps_env(s.bounds);
    if (orbit_cap) s.bounds.orbit_cap = *orbit_cap;
    if (height) s.bounds.height = *height;
    if (length_cap) s.bounds.length_cap = *length_cap;
    if (s.bounds.orbit_cap == 0 || s.bounds.height <= 0 || s.bounds.length_cap < 0) {
      throw Error(ErrorKind::Precondition, "caps must be positive");
    }
    if (!type_name.empty()) s.cartan = preset(type_name);
    if (!cartan_file.empty()) s.cartan = load_cartan_file(cartan_file);
    if (!order_text.empty()) s.order = parse_order(order_text, s.matrix().rank());

    Outcome result;
    if (roots_list_cmd->parsed()) {
      result = roots_list(s);
    } else if (group_order_cmd->parsed()) {
      result = group_order(s);
    } else if (orbit_count_cmd->parsed()) {
      result = orbit_count(s);
    } else if (orbit_dump_cmd->parsed()) {
      result = orbit_dump(s);
    } else if (schur_check_cmd->parsed()) {
      result = schur_check(s, root_text, generic);
    } else if (schur_list_cmd->parsed()) {
      result = schur_list(s);
    } else if (schur_verify_cmd->parsed()) {
      result = schur_verify(s);
    } else if (nc_list_cmd->parsed()) {
      result = nc_list(s);
    } else if (nc_leq_cmd->parsed()) {
      result = nc_leq(s, u_text, w_text);
    } else if (nc_chain_cmd->parsed()) {
      result = nc_chain(s, u_text, w_text);
    } else if (braid_apply_cmd->parsed()) {
      result = braid_apply(s, braid_text, with_curves);
    } else if (braid_stab_cmd->parsed()) {
      result = braid_stab(s, stab_word);
    } else if (curve_root_cmd->parsed()) {
      result = curve_root(s, curve);
    } else if (curve_loop_cmd->parsed()) {
      result = curve_loop(s, curve);
    } else if (curve_simple_cmd->parsed()) {
      result = curve_simple(s, curve);
    } else if (curve_spiral_cmd->parsed()) {
      result = curve_spiral(s, curve, spiral_k);
    } else if (curve_render_cmd->parsed()) {
      result = curve_render(s, curve, svg_path);
    } else if (mutate_source->parsed()) {
      result = mutate_cmd(s, MutationSide::Source, mutate_root);
    } else if (mutate_sink->parsed()) {
      result = mutate_cmd(s, MutationSide::Sink, mutate_root);
    } else if (repro_cmd->parsed()) {
      result = repro(fixture, err);
    }

    if (as_json) {
      out << result.data.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return result.code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace schur_scope::cli
