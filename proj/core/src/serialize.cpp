#include "schur_scope/serialize.hpp"

#include <json.hpp>

#include "schur_scope/error.hpp"

using nlohmann::json;

namespace schur_scope {

void to_json(json& j, const RootVector& v) { j = std::vector<Int>(v.coords().begin(), v.coords().end()); }
void from_json(const json& j, RootVector& v) { v = RootVector(j.get<std::vector<Int>>()); }

void to_json(json& j, Verdict v) { j = to_string(v); }
void from_json(const json& j, Verdict& v) {
  const auto s = j.get<std::string>();
  for (Verdict x : {Verdict::Yes, Verdict::No, Verdict::NoWithinBound, Verdict::Unknown}) {
    if (s == to_string(x)) {
      v = x;
      return;
    }
  }
  throw Error(ErrorKind::Parse, "unknown verdict '" + s + "'");
}

void to_json(json& j, const WeylElement& w) {
  std::vector<std::vector<Int>> rows(w.rank());
  for (std::size_t r = 0; r < w.rank(); ++r) {
    for (std::size_t c = 0; c < w.rank(); ++c) rows[r].push_back(w.matrix()(r, c));
  }
  j = rows;
}
void from_json(const json& j, WeylElement& w) {
  const auto rows = j.get<std::vector<std::vector<Int>>>();
  std::vector<Int> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::Parse, "matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  w = WeylElement(IntMatrix(rows.size(), std::move(flat)));
}

void to_json(json& j, const Reflection& r) { j = json{{"root", r.root}, {"matrix", r.element}}; }
void from_json(const json& j, Reflection& r) {
  r.root = j.at("root").get<RootVector>();
  r.element = j.at("matrix").get<WeylElement>();
}

void to_json(json& j, const Factorization& f) { j = f.parts; }
void from_json(const json& j, Factorization& f) { f.parts = j.get<std::vector<Reflection>>(); }

void to_json(json& j, const CurveWord& c) {
  std::vector<std::size_t> letters;
  for (std::size_t l : c.letters) letters.push_back(l + 1);
  j = json{{"letters", letters}, {"end", c.end + 1}, {"sign", c.sign}, {"text", c.to_string()}};
}
void from_json(const json& j, CurveWord& c) {
  c.letters.clear();
  for (std::size_t l : j.at("letters").get<std::vector<std::size_t>>()) {
    if (l == 0) throw Error(ErrorKind::Parse, "curve letters are 1-based");
    c.letters.push_back(l - 1);
  }
  const auto end = j.at("end").get<std::size_t>();
  if (end == 0) throw Error(ErrorKind::Parse, "curve endpoint is 1-based");
  c.end = end - 1;
  c.sign = j.at("sign").get<int>();
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

void to_json(json& j, const OrbitResult& o) { j = json{{"members", o.members}, {"complete", o.complete}}; }
void from_json(const json& j, OrbitResult& o) {
  o.members = j.at("members").get<std::vector<Factorization>>();
  o.complete = j.at("complete").get<bool>();
}

void to_json(json& j, const SchurVerdict& v) {
  j = json{{"answer", v.answer}, {"fast_path", v.fast_path}};
  put_optional(j, "certificate", v.certificate);
}
void from_json(const json& j, SchurVerdict& v) {
  v.answer = j.at("answer").get<Verdict>();
  v.fast_path = j.at("fast_path").get<bool>();
  v.certificate = get_optional<Factorization>(j, "certificate");
}

void to_json(json& j, const TransversalRoot& t) {
  j = json{{"name", t.name}, {"root", t.root}, {"word", t.word}, {"verdict", t.verdict}};
}
void from_json(const json& j, TransversalRoot& t) {
  t.name = j.at("name").get<std::string>();
  t.root = j.at("root").get<RootVector>();
  t.word = j.at("word").get<CurveWord>();
  t.verdict = j.at("verdict").get<Verdict>();
}

void to_json(json& j, const COrbit& o) { j = json{{"roots", o.roots}, {"closed", o.closed}}; }
void from_json(const json& j, COrbit& o) {
  o.roots = j.at("roots").get<std::vector<RootVector>>();
  o.closed = j.at("closed").get<bool>();
}

void to_json(json& j, const OrbitCensus& c) {
  j = json{{"orbits", c.orbits},
           {"coxeter_number", c.coxeter_number},
           {"root_count", c.root_count},
           {"transversal_orbit", c.transversal_orbit},
           {"valid", c.valid}};
}
void from_json(const json& j, OrbitCensus& c) {
  c.orbits = j.at("orbits").get<std::vector<COrbit>>();
  c.coxeter_number = j.at("coxeter_number").get<int>();
  c.root_count = j.at("root_count").get<std::size_t>();
  c.transversal_orbit = j.at("transversal_orbit").get<std::vector<std::size_t>>();
  c.valid = j.at("valid").get<bool>();
}

void to_json(json& j, const MutationAgreement& m) {
  j = json{{"mapped", m.mapped}, {"before", m.before}, {"after", m.after},
           {"agree", m.agree},   {"resolved", m.resolved}};
}
void from_json(const json& j, MutationAgreement& m) {
  m.mapped = j.at("mapped").get<RootVector>();
  m.before = j.at("before").get<Verdict>();
  m.after = j.at("after").get<Verdict>();
  m.agree = j.at("agree").get<bool>();
  m.resolved = j.at("resolved").get<bool>();
}

void to_json(json& j, const ConjectureReport& r) {
  json sets{{"prefix", r.prefix}, {"curves", r.curves}};
  put_optional(sets, "all_positive", r.all_positive);
  json equal{{"prefix_curves", r.prefix_equals_curves}};
  put_optional(equal, "prefix_all", r.prefix_equals_all);
  put_optional(equal, "curves_all", r.curves_equals_all);
  j = json{{"cartan", r.cartan_name}, {"order", r.order},         {"height_bound", r.height_bound},
           {"sets", sets},            {"unknowns", r.unknowns},   {"bounded_no", r.bounded_no},
           {"truncated", r.truncated}, {"equal", equal}};
}
void from_json(const json& j, ConjectureReport& r) {
  r.cartan_name = j.at("cartan").get<std::string>();
  r.order = j.at("order").get<std::string>();
  r.height_bound = j.at("height_bound").get<Int>();
  const json& sets = j.at("sets");
  r.prefix = sets.at("prefix").get<std::vector<RootVector>>();
  r.curves = sets.at("curves").get<std::vector<RootVector>>();
  r.all_positive = get_optional<std::vector<RootVector>>(sets, "all_positive");
  r.unknowns = j.at("unknowns").get<std::vector<RootVector>>();
  r.bounded_no = j.at("bounded_no").get<std::vector<RootVector>>();
  r.truncated = j.at("truncated").get<bool>();
  const json& equal = j.at("equal");
  r.prefix_equals_curves = equal.at("prefix_curves").get<bool>();
  r.prefix_equals_all = get_optional<bool>(equal, "prefix_all");
  r.curves_equals_all = get_optional<bool>(equal, "curves_all");
}

void to_json(json& j, const NCPoset& p) {
  json nodes = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json node{{"id", i}, {"rank", p.ranks[i]}, {"matrix", p.elements[i]}};
    if (p.ranks[i] == 1) node["root"] = root_of_reflection(p.elements[i]);
    nodes.push_back(std::move(node));
  }
  j = json{{"nodes", nodes}, {"covers", p.covers}, {"bottom", p.bottom}, {"top", p.top}};
}
void from_json(const json& j, NCPoset& p) {
  p = NCPoset{};
  for (const auto& node : j.at("nodes")) {
    if (node.at("id").get<std::size_t>() != p.elements.size()) {
      throw Error(ErrorKind::Parse, "poset node ids must be consecutive");
    }
    p.elements.push_back(node.at("matrix").get<WeylElement>());
    p.ranks.push_back(node.at("rank").get<int>());
  }
  p.covers = j.at("covers").get<std::vector<std::pair<std::size_t, std::size_t>>>();
  p.bottom = j.at("bottom").get<std::size_t>();
  p.top = j.at("top").get<std::size_t>();
  const std::size_t m = p.size();
  for (const auto& [lo, hi] : p.covers) {
    if (lo >= m || hi >= m) throw Error(ErrorKind::Parse, "cover index out of range");
  }
  // The order is the reflexive-transitive closure of the covers.
  p.order.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) p.order[i * m + i] = 1;
  for (const auto& [lo, hi] : p.covers) p.order[lo * m + hi] = 1;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!p.order[i * m + k]) continue;
      for (std::size_t t = 0; t < m; ++t) {
        if (p.order[k * m + t]) p.order[i * m + t] = 1;
      }
    }
  }
}

void to_json(json& j, const PosetProperties& p) {
  j = json{{"rank_sizes", p.rank_sizes}, {"rank_symmetric", p.rank_symmetric},
           {"maximal_chains", p.maximal_chains}, {"is_lattice", p.is_lattice}, {"atoms", p.atoms}};
}
void from_json(const json& j, PosetProperties& p) {
  p.rank_sizes = j.at("rank_sizes").get<std::vector<std::size_t>>();
  p.rank_symmetric = j.at("rank_symmetric").get<bool>();
  p.maximal_chains = j.at("maximal_chains").get<Int>();
  p.is_lattice = j.at("is_lattice").get<bool>();
  p.atoms = j.at("atoms").get<std::size_t>();
}

template <class T>
std::string emit_json(const T& value, int indent) {
  return json(value).dump(indent);
}

template <class T>
T parse_json(std::string_view text) {
  try {
    return json::parse(text).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("json: ") + e.what());
  }
}

#define SCHUR_SCOPE_JSON(T)                               \
  template std::string emit_json<T>(const T&, int); \
  template T parse_json<T>(std::string_view);

SCHUR_SCOPE_JSON(RootVector)
SCHUR_SCOPE_JSON(CurveWord)
SCHUR_SCOPE_JSON(Factorization)
SCHUR_SCOPE_JSON(OrbitResult)
SCHUR_SCOPE_JSON(SchurVerdict)
SCHUR_SCOPE_JSON(TransversalRoot)
SCHUR_SCOPE_JSON(COrbit)
SCHUR_SCOPE_JSON(OrbitCensus)
SCHUR_SCOPE_JSON(MutationAgreement)
SCHUR_SCOPE_JSON(ConjectureReport)
SCHUR_SCOPE_JSON(NCPoset)
SCHUR_SCOPE_JSON(PosetProperties)

#undef SCHUR_SCOPE_JSON

}  // namespace schur_scope
