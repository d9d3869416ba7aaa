#include "linfinf/serialize.hpp"

#include <fstream>
#include <sstream>

namespace linfinf {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path, what);
}

void expect_object(const Json& j, const std::string& path,
                   std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) fail(path, std::string("missing field '") + key + "'");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : required) known = known || it.key() == key;
    for (const char* key : optional) known = known || it.key() == key;
    if (!known) fail(path, "unknown field '" + it.key() + "'");
  }
}

const Json& field(const Json& j, const char* key) { return j.at(key); }

std::string idx(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(origin, "malformed JSON");
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Rat rat_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  auto r = parse_rat(j.get<std::string>());
  if (!r) fail(path, "malformed rational '" + j.get<std::string>() + "'");
  return *r;
}

Interval interval_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"lo", "hi", "lo_closed", "hi_closed"});
  Rat lo = rat_from_json(field(j, "lo"), path + ".lo");
  Rat hi = rat_from_json(field(j, "hi"), path + ".hi");
  if (!field(j, "lo_closed").is_boolean()) fail(path + ".lo_closed", "expected a boolean");
  if (!field(j, "hi_closed").is_boolean()) fail(path + ".hi_closed", "expected a boolean");
  try {
    return Interval(lo, hi, j["lo_closed"].get<bool>(), j["hi_closed"].get<bool>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Set1D set1d_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of intervals");
  std::vector<Interval> parts;
  for (size_t i = 0; i < j.size(); ++i) parts.push_back(interval_from_json(j[i], idx(path, i)));
  return Set1D(std::move(parts));
}

Figure2D figure_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"boxes"});
  const Json& boxes = field(j, "boxes");
  if (!boxes.is_array()) fail(path + ".boxes", "expected an array");
  std::vector<Box> out;
  for (size_t i = 0; i < boxes.size(); ++i) {
    std::string bp = idx(path + ".boxes", i);
    expect_object(boxes[i], bp, {"x", "y"});
    out.push_back(Box{interval_from_json(boxes[i]["x"], bp + ".x"),
                      interval_from_json(boxes[i]["y"], bp + ".y")});
  }
  return Figure2D(std::move(out));
}

SimpleFunc simple_func_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"terms"});
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  std::vector<Term> out;
  for (size_t i = 0; i < terms.size(); ++i) {
    std::string tp = idx(path + ".terms", i);
    expect_object(terms[i], tp, {"coeff", "figure"});
    out.push_back(Term{rat_from_json(terms[i]["coeff"], tp + ".coeff"),
                       figure_from_json(terms[i]["figure"], tp + ".figure")});
  }
  return SimpleFunc(std::move(out));
}

namespace {

std::vector<Rat> breaks_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  std::vector<Rat> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(rat_from_json(j[i], idx(path, i)));
  return out;
}

}  // namespace

LineFunc line_func_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"breaks", "pieces"});
  std::vector<Rat> breaks = breaks_from_json(field(j, "breaks"), path + ".breaks");
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) fail(path + ".pieces", "expected an array");
  std::vector<AffinePiece> out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    std::string pp = idx(path + ".pieces", i);
    expect_object(pieces[i], pp, {"a", "b"});
    out.push_back(AffinePiece{rat_from_json(pieces[i]["a"], pp + ".a"),
                              rat_from_json(pieces[i]["b"], pp + ".b")});
  }
  try {
    return LineFunc(std::move(breaks), std::move(out));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

LineRule line_rule_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"breaks", "pieces"});
  std::vector<Rat> breaks = breaks_from_json(field(j, "breaks"), path + ".breaks");
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) fail(path + ".pieces", "expected an array");
  std::vector<RulePiece> out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    std::string pp = idx(path + ".pieces", i);
    expect_object(pieces[i], pp, {"a0", "a1", "b0", "b1"});
    out.push_back(RulePiece{rat_from_json(pieces[i]["a0"], pp + ".a0"),
                            rat_from_json(pieces[i]["a1"], pp + ".a1"),
                            rat_from_json(pieces[i]["b0"], pp + ".b0"),
                            rat_from_json(pieces[i]["b1"], pp + ".b1")});
  }
  try {
    return LineRule(std::move(breaks), std::move(out));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

namespace {

LineMap line_map_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of {at, fn}");
  LineMap out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string ep = idx(path, i);
    expect_object(j[i], ep, {"at", "fn"});
    Rat at = rat_from_json(j[i]["at"], ep + ".at");
    if (out.count(at)) fail(ep + ".at", "duplicate line " + rat_str(at));
    out.emplace(std::move(at), line_func_from_json(j[i]["fn"], ep + ".fn"));
  }
  return out;
}

}  // namespace

Germ germ_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"vertical", "horizontal"});
  auto side = [&](const char* key) {
    std::string sp = path + "." + key;
    expect_object(j[key], sp, {"default"}, {"exceptions"});
    LineRule rule = line_rule_from_json(j[key]["default"], sp + ".default");
    LineMap exc;
    if (j[key].contains("exceptions"))
      exc = line_map_from_json(j[key]["exceptions"], sp + ".exceptions");
    return std::make_pair(std::move(rule), std::move(exc));
  };
  auto [vr, ve] = side("vertical");
  auto [hr, he] = side("horizontal");
  try {
    return Germ(std::move(vr), std::move(hr), std::move(ve), std::move(he));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

RawGermTable table_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"entries"});
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail(path + ".entries", "expected an array");
  RawGermTable out;
  for (size_t i = 0; i < entries.size(); ++i) {
    std::string ep = idx(path + ".entries", i);
    expect_object(entries[i], ep, {"set", "fn"});
    std::string fp = ep + ".fn";
    expect_object(entries[i]["fn"], fp, {"vertical", "horizontal"});
    RestrictedGerm fn;
    fn.vertical = line_map_from_json(entries[i]["fn"]["vertical"], fp + ".vertical");
    fn.horizontal = line_map_from_json(entries[i]["fn"]["horizontal"], fp + ".horizontal");
    out.entries.push_back(
        GermTableEntry{figure_from_json(entries[i]["set"], ep + ".set"), std::move(fn)});
  }
  return out;
}

CandidateGlobal candidate_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"x_cuts", "y_cuts", "cells"},
                {"vertical_overrides", "horizontal_overrides"});
  std::vector<Rat> xc = breaks_from_json(field(j, "x_cuts"), path + ".x_cuts");
  std::vector<Rat> yc = breaks_from_json(field(j, "y_cuts"), path + ".y_cuts");
  AxisAtoms xa, ya;
  try {
    xa = AxisAtoms::from_values(std::move(xc));
    ya = AxisAtoms::from_values(std::move(yc));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  const Json& rows = field(j, "cells");
  if (!rows.is_array()) fail(path + ".cells", "expected an array of rows");
  std::vector<std::vector<CellAffine>> cells;
  for (size_t r = 0; r < rows.size(); ++r) {
    std::string rp = idx(path + ".cells", r);
    if (!rows[r].is_array()) fail(rp, "expected an array of cells");
    std::vector<CellAffine> row;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      std::string cp = idx(rp, c);
      expect_object(rows[r][c], cp, {"a", "b", "c"});
      row.push_back(CellAffine{rat_from_json(rows[r][c]["a"], cp + ".a"),
                               rat_from_json(rows[r][c]["b"], cp + ".b"),
                               rat_from_json(rows[r][c]["c"], cp + ".c")});
    }
    cells.push_back(std::move(row));
  }
  LineMap vo, ho;
  if (j.contains("vertical_overrides"))
    vo = line_map_from_json(j["vertical_overrides"], path + ".vertical_overrides");
  if (j.contains("horizontal_overrides"))
    ho = line_map_from_json(j["horizontal_overrides"], path + ".horizontal_overrides");
  try {
    return CandidateGlobal(std::move(xa), std::move(ya), std::move(cells), std::move(vo),
                           std::move(ho));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::vector<Figure2D> figure_list_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of figures");
  std::vector<Figure2D> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(figure_from_json(j[i], idx(path, i)));
  return out;
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

Json interval_to_json(const Interval& iv) {
  return Json{{"lo", rat_to_json(iv.lo())},
              {"hi", rat_to_json(iv.hi())},
              {"lo_closed", iv.lo_closed()},
              {"hi_closed", iv.hi_closed()}};
}

Json set1d_to_json(const Set1D& s) {
  Json out = Json::array();
  for (const Interval& iv : s.components()) out.push_back(interval_to_json(iv));
  return out;
}

Json figure_to_json(const Figure2D& f) {
  Json boxes = Json::array();
  for (const Box& b : f.boxes())
    boxes.push_back(Json{{"x", interval_to_json(b.x)}, {"y", interval_to_json(b.y)}});
  return Json{{"boxes", std::move(boxes)}};
}

Json simple_func_to_json(const SimpleFunc& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms())
    terms.push_back(Json{{"coeff", rat_to_json(t.coeff)}, {"figure", figure_to_json(t.figure)}});
  return Json{{"terms", std::move(terms)}};
}

Json line_func_to_json(const LineFunc& f) {
  Json breaks = Json::array();
  for (const Rat& b : f.breaks()) breaks.push_back(rat_to_json(b));
  Json pieces = Json::array();
  for (const AffinePiece& p : f.pieces())
    pieces.push_back(Json{{"a", rat_to_json(p.a)}, {"b", rat_to_json(p.b)}});
  return Json{{"breaks", std::move(breaks)}, {"pieces", std::move(pieces)}};
}

Json line_rule_to_json(const LineRule& r) {
  Json breaks = Json::array();
  for (const Rat& b : r.breaks()) breaks.push_back(rat_to_json(b));
  Json pieces = Json::array();
  for (const RulePiece& p : r.pieces())
    pieces.push_back(Json{{"a0", rat_to_json(p.a0)},
                          {"a1", rat_to_json(p.a1)},
                          {"b0", rat_to_json(p.b0)},
                          {"b1", rat_to_json(p.b1)}});
  return Json{{"breaks", std::move(breaks)}, {"pieces", std::move(pieces)}};
}

namespace {

Json line_map_to_json(const LineMap& m) {
  Json out = Json::array();
  for (const auto& [at, fn] : m)
    out.push_back(Json{{"at", rat_to_json(at)}, {"fn", line_func_to_json(fn)}});
  return out;
}

}  // namespace

Json germ_to_json(const Germ& g) {
  auto side = [&](Orientation o) {
    return Json{{"default", line_rule_to_json(g.rule(o))},
                {"exceptions", line_map_to_json(g.exceptions(o))}};
  };
  return Json{{"vertical", side(Orientation::Vertical)},
              {"horizontal", side(Orientation::Horizontal)}};
}

Json restricted_germ_to_json(const RestrictedGerm& r) {
  return Json{{"vertical", line_map_to_json(r.vertical)},
              {"horizontal", line_map_to_json(r.horizontal)}};
}

Json table_to_json(const RawGermTable& t) {
  Json entries = Json::array();
  for (const GermTableEntry& e : t.entries)
    entries.push_back(
        Json{{"set", figure_to_json(e.set)}, {"fn", restricted_germ_to_json(e.fn)}});
  return Json{{"entries", std::move(entries)}};
}

Json candidate_to_json(const CandidateGlobal& g) {
  auto cuts = [](const AxisAtoms& a) {
    Json out = Json::array();
    for (size_t k = 1; k + 1 < a.values().size(); ++k)
      out.push_back(rat_to_json(a.values()[k]));
    return out;
  };
  Json rows = Json::array();
  for (size_t j = 0; j < g.yatoms().count(); ++j) {
    Json row = Json::array();
    for (size_t i = 0; i < g.xatoms().count(); ++i) {
      const CellAffine& c = g.cell(i, j);
      row.push_back(Json{{"a", rat_to_json(c.a)},
                         {"b", rat_to_json(c.b)},
                         {"c", rat_to_json(c.c)}});
    }
    rows.push_back(std::move(row));
  }
  return Json{{"x_cuts", cuts(g.xatoms())},
              {"y_cuts", cuts(g.yatoms())},
              {"cells", std::move(rows)},
              {"vertical_overrides", line_map_to_json(g.overrides(Orientation::Vertical))},
              {"horizontal_overrides", line_map_to_json(g.overrides(Orientation::Horizontal))}};
}

Json ext_rat_to_json(const ExtRat& v) {
  return v.is_finite ? Json(rat_str(v.value)) : Json("inf");
}

Json wrap_manifest(const std::string& kind, Json payload) {
  return Json{{"schema_version", 1}, {"kind", kind}, {"payload", std::move(payload)}};
}

Json unwrap_manifest(const Json& j, const std::string& expected_kind,
                     const std::string& origin) {
  expect_object(j, origin, {"schema_version", "kind", "payload"});
  if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != 1)
    fail(origin + ".schema_version", "unsupported schema version");
  if (!j["kind"].is_string() || j["kind"].get<std::string>() != expected_kind)
    fail(origin + ".kind", "expected kind '" + expected_kind + "'");
  return j["payload"];
}

Json load_manifest_payload(const std::string& path, const std::string& expected_kind) {
  return unwrap_manifest(parse_json_text(read_text_file(path), path), expected_kind, path);
}

}  // namespace linfinf
