#include "cluster/io.hpp"


#include "cluster/errors.hpp"

namespace cluster::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > n) {
    throw InvalidInput(std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(v - 1);
}

IntegerRows rows_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  IntegerRows rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& x : row) out.push_back(integer_from_json(x));
  }
  return rows;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Json word_to_json(const MutationWord& w) {
  Json out = Json::array();
  for (std::size_t k : w) out.push_back(k + 1);
  return out;
}

const char* reason_name(Justification::Reason r) {
  switch (r) {
    case Justification::Reason::Negated: return "negated";
    case Justification::Reason::LeftEven: return "left-even";
    case Justification::Reason::RightEven: return "right-even";
  }
  return "";
}

Justification::Reason reason_from_name(const std::string& s) {
  if (s == "negated") return Justification::Reason::Negated;
  if (s == "left-even") return Justification::Reason::LeftEven;
  if (s == "right-even") return Justification::Reason::RightEven;
  throw ParseError("unknown justification reason \"" + s + "\"");
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                  : Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string \"" + j.get<std::string>() + "\"");
    return out;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

ParsedInput parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input_json(j);
}

ParsedInput parse_input_json(const Json& j) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  if (j.contains("matrix")) return {ExchangeMatrix(rows_from_json(j.at("matrix"))), std::nullopt};

  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 0) throw ParseError("\"n\" must be a non-negative integer");
  const auto n = nj.get<std::size_t>();
  ArrowMap arrows;
  const Json& aj = field(j, "arrows");
  if (!aj.is_array()) throw ParseError("\"arrows\" must be an array");
  for (const auto& a : aj) {
    const std::size_t from = index_from_json(field(a, "from"), n, "arrow source");
    const std::size_t to = index_from_json(field(a, "to"), n, "arrow target");
    const Json& v = field(a, "v");
    if (!v.is_array() || v.size() != 2) throw ParseError("\"v\" must be a pair [v_ij, v_ji]");
    if (!arrows.emplace(std::pair{from, to}, Valuation{integer_from_json(v[0]), integer_from_json(v[1])}).second) {
      throw InvalidInput("duplicate arrow " + std::to_string(from + 1) + " -> " + std::to_string(to + 1));
    }
  }
  std::optional<ValuedQuiver> q;
  if (j.contains("d")) {
    const Json& dj = j.at("d");
    if (!dj.is_array()) throw ParseError("\"d\" must be an array");
    std::vector<Integer> d;
    for (const auto& x : dj) d.push_back(integer_from_json(x));
    q.emplace(n, std::move(arrows), std::move(d));
  } else {
    q.emplace(n, std::move(arrows));
  }
  return {matrix_from_quiver(*q), std::move(q)};
}

Json matrix_to_json(const ExchangeMatrix& b) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < b.rank(); ++j) row.push_back(integer_to_json(b(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", std::move(rows)}};
}

Json quiver_to_json(const ValuedQuiver& q) {
  Json arrows = Json::array();
  for (const auto& [ij, v] : q.arrows()) {
    arrows.push_back({{"from", ij.first + 1},
                      {"to", ij.second + 1},
                      {"v", Json::array({integer_to_json(v.forward), integer_to_json(v.backward)})}});
  }
  Json d = Json::array();
  for (const auto& x : q.symmetrizer()) d.push_back(integer_to_json(x));
  return Json{{"n", q.rank()}, {"arrows", std::move(arrows)}, {"d", std::move(d)}};
}

Json laurent_to_json(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) out.push_back({{"e", t.exponents}, {"c", t.coefficient.get_str()}});
  return out;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t variables) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    const Json& e = field(t, "e");
    if (!e.is_array() || e.size() != variables) throw ParseError("term exponent vector has the wrong length");
    Exponents exps;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw ParseError("exponents must be integers");
      exps.push_back(x.get<int>());
    }
    terms.push_back({std::move(exps), integer_from_json(field(t, "c"))});
  }
  return LaurentPoly::from_terms(variables, std::move(terms));
}

Json seed_to_json(const Seed& s) {
  Json cluster = Json::array();
  for (const auto& x : s.cluster) cluster.push_back(laurent_to_json(x));
  return Json{{"matrix", matrix_to_json(s.matrix).at("matrix")}, {"cluster", std::move(cluster)}};
}

Json graph_to_json(const MutationClassGraph& g) {
  Json seeds = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json s = seed_to_json(g.seed(i));
    s["index"] = i;
    s["word"] = word_to_json(g.word_to(i));
    seeds.push_back(std::move(s));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    if (e.from < e.to) edges.push_back({{"from", e.from}, {"to", e.to}, {"direction", e.direction + 1}});
  }
  return Json{{"rank", g.rank()},
              {"complete", g.complete()},
              {"truncation", g.complete() ? Json(nullptr) : Json(g.truncation_reason())},
              {"seeds", std::move(seeds)},
              {"edges", std::move(edges)}};
}

std::string graph_to_dot(const MutationClassGraph& g, bool verbose_labels) {
  std::string out = "graph mutation_class {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::string label = std::to_string(i);
    if (verbose_labels) {
      for (const auto& x : g.seed(i).cluster) label += "\\n" + escape_dot(normal_form(x).to_string());
    }
    out += "  " + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& e : g.edges()) {
    if (e.from < e.to) {
      out += "  " + std::to_string(e.from) + " -- " + std::to_string(e.to) + " [label=\"" +
             std::to_string(e.direction + 1) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

Json certificate_to_json(const UnreachabilityCertificate& c) {
  Json pattern = Json::array();
  for (std::size_t i = 0; i < c.pattern.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.pattern.rank(); ++j) row.push_back(c.pattern.even(i, j) ? "E" : "O");
    pattern.push_back(std::move(row));
  }
  Json just = Json::array();
  for (const auto& s : c.closure_proof) {
    just.push_back({{"k", s.k + 1}, {"i", s.i + 1}, {"j", s.j + 1}, {"reason", reason_name(s.reason)}});
  }
  return Json{{"pattern", std::move(pattern)},
              {"start", matrix_to_json(c.start).at("matrix")},
              {"target", matrix_to_json(c.target).at("matrix")},
              {"justifications", std::move(just)}};
}

UnreachabilityCertificate certificate_from_json(const Json& j) {
  std::vector<std::vector<Parity>> rows;
  const Json& pj = field(j, "pattern");
  if (!pj.is_array()) throw ParseError("\"pattern\" must be an array of rows");
  for (const auto& row : pj) {
    if (!row.is_array()) throw ParseError("pattern rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& x : row) {
      if (x == "E") out.push_back(Parity::Even);
      else if (x == "O") out.push_back(Parity::Odd);
      else throw ParseError("pattern entries must be \"E\" or \"O\"");
    }
  }
  UnreachabilityCertificate c;
  c.pattern = ParityPattern::from_rows(rows);
  c.start = ExchangeMatrix(rows_from_json(field(j, "start")));
  c.target = ExchangeMatrix(rows_from_json(field(j, "target")));
  const std::size_t n = c.pattern.rank();
  const Json& js = field(j, "justifications");
  if (!js.is_array()) throw ParseError("\"justifications\" must be an array");
  for (const auto& s : js) {
    const Json& reason = field(s, "reason");
    if (!reason.is_string()) throw ParseError("\"reason\" must be a string");
    c.closure_proof.push_back({index_from_json(field(s, "k"), n, "k"), index_from_json(field(s, "i"), n, "i"),
                               index_from_json(field(s, "j"), n, "j"), reason_from_name(reason.get<std::string>())});
  }
  c.start_check = c.pattern.matches(c.start);
  c.target_check = !c.pattern.matches(c.target);
  return c;
}

Json group_to_json(const GroupTable& g) {
  Json elements = Json::array();
  for (const auto& e : g.elements) {
    Json images = Json::array();
    Json text = Json::array();
    for (const auto& x : e.images) {
      images.push_back(laurent_to_json(x));
      text.push_back(normal_form(x).to_string());
    }
    elements.push_back({{"images", std::move(images)}, {"text", std::move(text)}});
  }
  Json generators = Json::object();
  for (const auto& gen : g.generators) generators[gen.name] = gen.element;
  return Json{{"order", g.order()},
              {"identity", g.identity},
              {"generators", std::move(generators)},
              {"relations", detect_relations(g)},
              {"elements", std::move(elements)},
              {"composition", g.composition}};
}

}  // namespace cluster::io
