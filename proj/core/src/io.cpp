#include "hpt/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hpt {

using Json = nlohmann::ordered_json;

ParseError::ParseError(std::string location, const std::string& message)
    : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

namespace {

[[noreturn]] void fail(const std::string& loc, const std::string& msg) {
  throw ParseError(loc, msg);
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-')
      return false;
  return true;
}

void check_label(const std::string& label, const std::string& loc) {
  if (!valid_label(label)) fail(loc, "labels match [A-Za-z0-9_.-]+, got '" + label + "'");
}

const Json& member(const Json& j, const char* key, const std::string& loc) {
  auto it = j.find(key);
  if (it == j.end()) fail(loc, std::string("missing required key '") + key + "'");
  return *it;
}

int int_member(const Json& j, const char* key, const std::string& loc) {
  const Json& v = member(j, key, loc);
  if (!v.is_number_integer()) fail(loc + "/" + key, "expected an integer");
  return v.get<int>();
}

std::string string_member(const Json& j, const char* key, const std::string& loc) {
  const Json& v = member(j, key, loc);
  if (!v.is_string()) fail(loc + "/" + key, "expected a string");
  return v.get<std::string>();
}

void expect_object(const Json& j, const std::string& loc) {
  if (!j.is_object()) fail(loc, "expected an object");
}

void expect_array(const Json& j, const std::string& loc) {
  if (!j.is_array()) fail(loc, "expected an array");
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys,
                    const std::string& loc) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) fail((loc == "/" ? "" : loc) + "/" + item.key(), "unknown key");
  }
}

/* "C", "C^3", "s(C)", "s(C)^2" */
struct SpaceRef {
  std::string label;
  bool suspended = false;
  int power = 1;
};

bool parse_space_ref(const std::string& ref, SpaceRef& out) {
  std::string body = ref;
  out = SpaceRef{};
  auto caret = body.rfind('^');
  if (caret != std::string::npos) {
    const std::string num = body.substr(caret + 1);
    if (num.empty() || num.size() > 6) return false;
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out.power = std::stoi(num);
    if (out.power < 1) return false;
    body = body.substr(0, caret);
  }
  if (body.size() >= 3 && body.compare(0, 2, "s(") == 0 && body.back() == ')') {
    out.suspended = true;
    body = body.substr(2, body.size() - 3);
  }
  if (!valid_label(body)) return false;
  out.label = body;
  return true;
}

SpacePtr shifted_space(const SpacePtr& s) {
  std::vector<BasisElement> basis;
  basis.reserve(s->dim());
  for (const BasisElement& e : s->basis()) basis.push_back({e.name, e.degree - 1, e.weight});
  return make_space(s->field(), std::move(basis));
}

/* Candidate tensor exponent with base^k possibly equal to target; 0 if none.
   The caller verifies structurally, so a wrong guess is harmless. */
int infer_power(const SpacePtr& base, const SpacePtr& target) {
  const int bd = base->dim(), td = target->dim();
  if (bd == 0) return td == 0 ? 2 : 0;
  if (bd == 1) {
    if (td != 1) return 0;
    const std::string& name = target->at(0).name;
    return 1 + static_cast<int>(std::count(name.begin(), name.end(), '|'));
  }
  long long acc = bd;
  int k = 1;
  while (acc < td && k < 16) {
    acc *= bd;
    ++k;
  }
  return acc == td ? k : 0;
}

/* Express a space as a reference over the registered spaces, or throw. */
std::string space_ref_in(const Document& doc, const SpacePtr& s) {
  for (const auto& [label, base] : doc.spaces)
    if (same_space(base, s)) return label;
  for (const auto& [label, base] : doc.spaces) {
    const int k = infer_power(base, s);
    if (k >= 2 && same_space(power_space(base, k), s)) return label + "^" + std::to_string(k);
  }
  for (const auto& [label, base] : doc.spaces) {
    SpacePtr sh = shifted_space(base);
    if (same_space(sh, s)) return "s(" + label + ")";
    const int k = infer_power(sh, s);
    if (k >= 2 && same_space(power_space(sh, k), s))
      return "s(" + label + ")^" + std::to_string(k);
  }
  throw std::invalid_argument(
      "a space is not expressible from the registered spaces; register it first");
}

std::string bidegree_text(const Bidegree& b) {
  return "(" + std::to_string(b.r) + ", " + std::to_string(b.s) + ")";
}

/* ---------------------------------------------------------------- reading */

Field read_field(const Json& j) {
  const std::string loc = "/field";
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field();
    fail(loc, "unknown field '" + j.get<std::string>() + "' (use \"Q\" or {\"Fp\": p})");
  }
  if (j.is_object()) {
    reject_unknown(j, {"Fp"}, loc);
    const Json& p = member(j, "Fp", loc);
    if (!p.is_number_integer()) fail(loc + "/Fp", "expected an integer");
    try {
      return Field(p.get<long long>());
    } catch (const std::invalid_argument& e) {
      fail(loc + "/Fp", e.what());
    }
  }
  fail(loc, "expected \"Q\" or {\"Fp\": p}");
}

void read_spaces(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/spaces/" + item.key();
    check_label(item.key(), loc);
    expect_array(item.value(), loc);
    std::vector<BasisElement> basis;
    int idx = 0;
    for (const Json& e : item.value()) {
      const std::string eloc = loc + "/" + std::to_string(idx++);
      expect_object(e, eloc);
      reject_unknown(e, {"name", "degree", "weight"}, eloc);
      BasisElement b{string_member(e, "name", eloc), int_member(e, "degree", eloc),
                     int_member(e, "weight", eloc)};
      if (b.name.empty()) fail(eloc + "/name", "empty basis name");
      basis.push_back(std::move(b));
    }
    try {
      doc.spaces.emplace(item.key(), make_space(doc.field, std::move(basis)));
    } catch (const std::invalid_argument& e) {
      fail(loc, e.what());
    }
  }
}

SpacePtr resolve_or_fail(const Document& doc, const std::string& ref, const std::string& loc) {
  try {
    return doc.resolve_space(ref);
  } catch (const std::invalid_argument& e) {
    fail(loc, e.what());
  }
}

void read_maps(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/maps/" + item.key();
    check_label(item.key(), loc);
    const Json& mj = item.value();
    expect_object(mj, loc);
    reject_unknown(mj, {"source", "target", "bidegree", "entries"}, loc);
    SpacePtr src = resolve_or_fail(doc, string_member(mj, "source", loc), loc + "/source");
    SpacePtr tgt = resolve_or_fail(doc, string_member(mj, "target", loc), loc + "/target");
    const Json& bd = member(mj, "bidegree", loc);
    if (!bd.is_array() || bd.size() != 2 || !bd[0].is_number_integer() ||
        !bd[1].is_number_integer())
      fail(loc + "/bidegree", "expected [r, s] with integer entries");
    GradedMap m(src, tgt, {bd[0].get<int>(), bd[1].get<int>()});
    const Json& entries = member(mj, "entries", loc);
    expect_array(entries, loc + "/entries");
    int idx = 0;
    for (const Json& e : entries) {
      const std::string eloc = loc + "/entries/" + std::to_string(idx++);
      expect_object(e, eloc);
      reject_unknown(e, {"from", "to", "coeff"}, eloc);
      const std::string from = string_member(e, "from", eloc);
      const std::string to = string_member(e, "to", eloc);
      const int fi = src->index_of(from);
      const int ti = tgt->index_of(to);
      if (fi < 0) fail(eloc + "/from", "no basis element named '" + from + "' in the source");
      if (ti < 0) fail(eloc + "/to", "no basis element named '" + to + "' in the target");
      Scalar c;
      try {
        c = doc.field.parse(string_member(e, "coeff", eloc));
      } catch (const std::invalid_argument& ex) {
        fail(eloc + "/coeff", ex.what());
      }
      if (doc.field.is_zero(c)) fail(eloc + "/coeff", "zero coefficient");
      try {
        m.add_term(fi, ti, c);
      } catch (const std::invalid_argument& ex) {
        fail(eloc, ex.what());
      }
    }
    doc.maps.emplace(item.key(), std::move(m));
  }
}

void read_vectors(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/vectors/" + item.key();
    check_label(item.key(), loc);
    const Json& vj = item.value();
    expect_object(vj, loc);
    reject_unknown(vj, {"space", "entries"}, loc);
    SpacePtr space = resolve_or_fail(doc, string_member(vj, "space", loc), loc + "/space");
    const Json& entries = member(vj, "entries", loc);
    expect_array(entries, loc + "/entries");
    std::vector<Entry> acc;
    int idx = 0;
    for (const Json& e : entries) {
      const std::string eloc = loc + "/entries/" + std::to_string(idx++);
      expect_object(e, eloc);
      reject_unknown(e, {"to", "coeff"}, eloc);
      const std::string to = string_member(e, "to", eloc);
      const int ti = space->index_of(to);
      if (ti < 0) fail(eloc + "/to", "no basis element named '" + to + "'");
      for (const Entry& prev : acc)
        if (prev.to == ti) fail(eloc + "/to", "duplicate entry for '" + to + "'");
      Scalar c;
      try {
        c = doc.field.parse(string_member(e, "coeff", eloc));
      } catch (const std::invalid_argument& ex) {
        fail(eloc + "/coeff", ex.what());
      }
      if (doc.field.is_zero(c)) fail(eloc + "/coeff", "zero coefficient");
      acc.push_back({ti, std::move(c)});
    }
    std::sort(acc.begin(), acc.end(), [](const Entry& a, const Entry& b) { return a.to < b.to; });
    try {
      doc.vectors.emplace(item.key(), make_vec(space, std::move(acc)));
    } catch (const std::invalid_argument& e) {
      fail(loc, e.what());
    }
  }
}

const GradedMap& map_ref(const Document& doc, const std::string& label, const std::string& loc) {
  auto it = doc.maps.find(label);
  if (it == doc.maps.end()) fail(loc, "no map named '" + label + "'");
  return it->second;
}

void read_complexes(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/complexes/" + item.key();
    check_label(item.key(), loc);
    const Json& cj = item.value();
    expect_object(cj, loc);
    reject_unknown(cj, {"space", "d"}, loc);
    ComplexRecord rec{string_member(cj, "space", loc), string_member(cj, "d", loc)};
    SpacePtr space = resolve_or_fail(doc, rec.space, loc + "/space");
    const GradedMap& d = map_ref(doc, rec.d, loc + "/d");
    if (!same_space(d.source(), space) || !same_space(d.target(), space))
      fail(loc + "/d", "d must be an endomorphism of the named space");
    if (d.bidegree() != Bidegree{1, 0})
      fail(loc + "/d", "d must have bidegree (1, 0), got " + bidegree_text(d.bidegree()));
    doc.complexes.emplace(item.key(), std::move(rec));
  }
}

const ComplexRecord& complex_ref(const Document& doc, const std::string& label,
                                 const std::string& loc) {
  auto it = doc.complexes.find(label);
  if (it == doc.complexes.end()) fail(loc, "no complex named '" + label + "'");
  return it->second;
}

void read_dgas(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/dgas/" + item.key();
    check_label(item.key(), loc);
    const Json& aj = item.value();
    expect_object(aj, loc);
    reject_unknown(aj, {"complex", "product", "unit"}, loc);
    DgaRecord rec{string_member(aj, "complex", loc), string_member(aj, "product", loc),
                  string_member(aj, "unit", loc)};
    SpacePtr space = doc.resolve_space(complex_ref(doc, rec.complex, loc + "/complex").space);
    const GradedMap& mu = map_ref(doc, rec.product, loc + "/product");
    if (!same_space(mu.source(), power_space(space, 2)) || !same_space(mu.target(), space))
      fail(loc + "/product", "the product must map space^2 to space");
    if (mu.bidegree() != Bidegree{0, 0})
      fail(loc + "/product",
           "the product must have bidegree (0, 0), got " + bidegree_text(mu.bidegree()));
    auto vit = doc.vectors.find(rec.unit);
    if (vit == doc.vectors.end()) fail(loc + "/unit", "no vector named '" + rec.unit + "'");
    const Vec& unit = vit->second;
    if (!same_space(unit.space, space)) fail(loc + "/unit", "the unit lives in the wrong space");
    if (!unit.is_zero()) {
      int deg = 0, w = 0;
      if (!vec_bidegree(unit, deg, w) || deg != 0 || w != 0)
        fail(loc + "/unit", "the unit must be homogeneous of bidegree (0, 0)");
    } else if (space->dim() > 0) {
      fail(loc + "/unit", "the unit of a nonzero algebra cannot be zero");
    }
    doc.dgas.emplace(item.key(), std::move(rec));
  }
}

void read_ainfty(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/ainfty/" + item.key();
    check_label(item.key(), loc);
    const Json& aj = item.value();
    expect_object(aj, loc);
    reject_unknown(aj, {"complex", "max_arity", "operations"}, loc);
    AinftyRecord rec;
    rec.complex = string_member(aj, "complex", loc);
    rec.max_arity = int_member(aj, "max_arity", loc);
    if (rec.max_arity < 1) fail(loc + "/max_arity", "max_arity must be at least 1");
    const ComplexRecord& crec = complex_ref(doc, rec.complex, loc + "/complex");
    SpacePtr space = doc.resolve_space(crec.space);
    const Json& ops = member(aj, "operations", loc);
    expect_array(ops, loc + "/operations");
    int idx = 0;
    for (const Json& oj : ops) {
      const std::string oloc = loc + "/operations/" + std::to_string(idx++);
      expect_object(oj, oloc);
      reject_unknown(oj, {"arity", "bidegree", "map"}, oloc);
      const int n = int_member(oj, "arity", oloc);
      if (n < 1 || n > rec.max_arity) fail(oloc + "/arity", "arity must lie in [1, max_arity]");
      if (rec.operations.count(n)) fail(oloc + "/arity", "duplicate arity");
      const std::string label = string_member(oj, "map", oloc);
      const GradedMap& m = map_ref(doc, label, oloc + "/map");
      const Json& bd = member(oj, "bidegree", oloc);
      if (!bd.is_array() || bd.size() != 2 || !bd[0].is_number_integer() ||
          !bd[1].is_number_integer())
        fail(oloc + "/bidegree", "expected [r, s] with integer entries");
      if (Bidegree{bd[0].get<int>(), bd[1].get<int>()} != m.bidegree())
        fail(oloc + "/bidegree", "declared bidegree disagrees with the map");
      if (m.bidegree() != Bidegree{2 - n, 0})
        fail(oloc + "/bidegree", "an arity-" + std::to_string(n) +
                                     " operation has bidegree (2 - n, 0), got " +
                                     bidegree_text(m.bidegree()));
      if (!same_space(m.source(), power_space(space, n)) || !same_space(m.target(), space))
        fail(oloc + "/map", "the operation must map space^" + std::to_string(n) + " to space");
      if (n == 1) {
        if (m != map_ref(doc, crec.d, oloc))
          fail(oloc + "/map", "the arity-1 operation must equal the differential");
        continue;  // implied; not stored
      }
      rec.operations.emplace(n, label);
    }
    doc.ainfty.emplace(item.key(), std::move(rec));
  }
}

void read_sdrs(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/sdrs/" + item.key();
    check_label(item.key(), loc);
    const Json& sj = item.value();
    expect_object(sj, loc);
    reject_unknown(sj, {"big", "small", "alpha", "r", "h"}, loc);
    SdrRecord rec{string_member(sj, "big", loc), string_member(sj, "small", loc),
                  string_member(sj, "alpha", loc), string_member(sj, "r", loc),
                  string_member(sj, "h", loc)};
    SpacePtr big = doc.resolve_space(complex_ref(doc, rec.big, loc + "/big").space);
    SpacePtr small = doc.resolve_space(complex_ref(doc, rec.small, loc + "/small").space);
    const GradedMap& alpha = map_ref(doc, rec.alpha, loc + "/alpha");
    const GradedMap& r = map_ref(doc, rec.r, loc + "/r");
    const GradedMap& h = map_ref(doc, rec.h, loc + "/h");
    if (!same_space(alpha.source(), small) || !same_space(alpha.target(), big) ||
        alpha.bidegree() != Bidegree{0, 0})
      fail(loc + "/alpha", "alpha must map small to big with bidegree (0, 0)");
    if (!same_space(r.source(), big) || !same_space(r.target(), small) ||
        r.bidegree() != Bidegree{0, 0})
      fail(loc + "/r", "r must map big to small with bidegree (0, 0)");
    if (!same_space(h.source(), big) || !same_space(h.target(), big) ||
        h.bidegree() != Bidegree{-1, 0})
      fail(loc + "/h", "h must be a bidegree (-1, 0) endomorphism of big");
    doc.sdrs.emplace(item.key(), std::move(rec));
  }
}

void read_barmaps(const Json& section, Document& doc) {
  for (const auto& item : section.items()) {
    const std::string loc = "/barmaps/" + item.key();
    check_label(item.key(), loc);
    const Json& bj = item.value();
    expect_object(bj, loc);
    reject_unknown(bj, {"source", "target", "source_arity", "target_arity", "total_degree",
                        "blocks"},
                   loc);
    BarMapRecord rec;
    rec.source = string_member(bj, "source", loc);
    rec.target = string_member(bj, "target", loc);
    rec.source_arity = int_member(bj, "source_arity", loc);
    rec.target_arity = int_member(bj, "target_arity", loc);
    rec.total_degree = int_member(bj, "total_degree", loc);
    if (rec.source_arity < 1 || rec.target_arity < 1)
      fail(loc, "truncation arities must be at least 1");
    SpacePtr ssusp =
        shifted_space(doc.resolve_space(complex_ref(doc, rec.source, loc + "/source").space));
    SpacePtr tsusp =
        shifted_space(doc.resolve_space(complex_ref(doc, rec.target, loc + "/target").space));
    const Json& blocks = member(bj, "blocks", loc);
    expect_object(blocks, loc + "/blocks");
    for (const auto& block : blocks.items()) {
      const std::string bloc = loc + "/blocks/" + block.key();
      int j = 0, k = 0;
      char arrow1 = 0, arrow2 = 0;
      std::istringstream keystream(block.key());
      if (!(keystream >> j >> arrow1 >> arrow2 >> k) || arrow1 != '-' || arrow2 != '>' ||
          !keystream.eof() || j < 1 || k < 1)
        fail(bloc, "block keys look like \"j->k\" with positive arities");
      if (j > rec.source_arity || k > rec.target_arity)
        fail(bloc, "block arity exceeds the declared truncation");
      if (!block.value().is_string()) fail(bloc, "expected a map label");
      const std::string label = block.value().get<std::string>();
      const GradedMap& m = map_ref(doc, label, bloc);
      if (!same_space(m.source(), power_space(ssusp, j)) ||
          !same_space(m.target(), power_space(tsusp, k)))
        fail(bloc, "the block must map s(source)^" + std::to_string(j) + " to s(target)^" +
                       std::to_string(k));
      if (m.bidegree().total() != rec.total_degree)
        fail(bloc, "block total degree disagrees with the bar map");
      rec.blocks.emplace(std::make_pair(j, k), label);
    }
    doc.barmaps.emplace(item.key(), std::move(rec));
  }
}

/* ---------------------------------------------------------------- writing */

Json field_json(const Field& f) {
  if (f.kind() == FieldKind::rationals) return "Q";
  Json j = Json::object();
  j["Fp"] = f.characteristic();
  return j;
}

Json map_json(const Document& doc, const GradedMap& m) {
  Json mj = Json::object();
  mj["source"] = space_ref_in(doc, m.source());
  mj["target"] = space_ref_in(doc, m.target());
  mj["bidegree"] = Json::array({m.bidegree().r, m.bidegree().s});
  Json entries = Json::array();
  for (int i = 0; i < m.source()->dim(); ++i)
    for (const Entry& e : m.column(i)) {
      Json ej = Json::object();
      ej["from"] = m.source()->at(i).name;
      ej["to"] = m.target()->at(e.to).name;
      ej["coeff"] = doc.field.print(e.coeff);
      entries.push_back(std::move(ej));
    }
  mj["entries"] = std::move(entries);
  return mj;
}

}  // namespace

/* ------------------------------------------------------------- document */

SpacePtr Document::resolve_space(const std::string& ref) const {
  SpaceRef r;
  if (!parse_space_ref(ref, r))
    throw std::invalid_argument("malformed space reference '" + ref + "'");
  auto it = spaces.find(r.label);
  if (it == spaces.end())
    throw std::invalid_argument("space reference '" + ref + "' names no registered space");
  SpacePtr s = it->second;
  if (r.suspended) s = shifted_space(s);
  return r.power == 1 ? s : power_space(s, r.power);
}

const GradedMap& Document::map_named(const std::string& label) const {
  auto it = maps.find(label);
  if (it == maps.end()) throw std::out_of_range("no map named '" + label + "'");
  return it->second;
}

const Vec& Document::vector_named(const std::string& label) const {
  auto it = vectors.find(label);
  if (it == vectors.end()) throw std::out_of_range("no vector named '" + label + "'");
  return it->second;
}

Document read_document(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail("/", e.what());
  }
  expect_object(j, "/");
  reject_unknown(j,
                 {"field", "spaces", "maps", "vectors", "complexes", "dgas", "ainfty", "sdrs",
                  "barmaps"},
                 "/");

  Document doc;
  doc.field = read_field(member(j, "field", "/"));

  const auto section = [&](const char* key, bool object = true) -> const Json* {
    auto it = j.find(key);
    if (it == j.end()) return nullptr;
    if (object) expect_object(*it, std::string("/") + key);
    return &*it;
  };
  if (const Json* s = section("spaces")) read_spaces(*s, doc);
  if (const Json* s = section("maps")) read_maps(*s, doc);
  if (const Json* s = section("vectors")) read_vectors(*s, doc);
  if (const Json* s = section("complexes")) read_complexes(*s, doc);
  if (const Json* s = section("dgas")) read_dgas(*s, doc);
  if (const Json* s = section("ainfty")) read_ainfty(*s, doc);
  if (const Json* s = section("sdrs")) read_sdrs(*s, doc);
  if (const Json* s = section("barmaps")) read_barmaps(*s, doc);
  return doc;
}

Document read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_document(buf.str());
}

std::string write_document(const Document& doc) {
  for (const auto& [label, space] : doc.spaces)
    if (space->field() != doc.field)
      throw std::invalid_argument("space '" + label + "' uses a different field");

  Json j = Json::object();
  j["field"] = field_json(doc.field);

  Json spaces = Json::object();
  for (const auto& [label, space] : doc.spaces) {
    Json arr = Json::array();
    for (const BasisElement& e : space->basis()) {
      Json ej = Json::object();
      ej["name"] = e.name;
      ej["degree"] = e.degree;
      ej["weight"] = e.weight;
      arr.push_back(std::move(ej));
    }
    spaces[label] = std::move(arr);
  }
  j["spaces"] = std::move(spaces);

  Json maps = Json::object();
  for (const auto& [label, m] : doc.maps) maps[label] = map_json(doc, m);
  j["maps"] = std::move(maps);

  Json vectors = Json::object();
  for (const auto& [label, v] : doc.vectors) {
    Json vj = Json::object();
    vj["space"] = space_ref_in(doc, v.space);
    Json entries = Json::array();
    for (const Entry& e : v.entries) {
      Json ej = Json::object();
      ej["to"] = v.space->at(e.to).name;
      ej["coeff"] = doc.field.print(e.coeff);
      entries.push_back(std::move(ej));
    }
    vj["entries"] = std::move(entries);
    vectors[label] = std::move(vj);
  }
  j["vectors"] = std::move(vectors);

  Json complexes = Json::object();
  for (const auto& [label, rec] : doc.complexes) {
    Json cj = Json::object();
    cj["space"] = rec.space;
    cj["d"] = rec.d;
    complexes[label] = std::move(cj);
  }
  j["complexes"] = std::move(complexes);

  Json dgas = Json::object();
  for (const auto& [label, rec] : doc.dgas) {
    Json aj = Json::object();
    aj["complex"] = rec.complex;
    aj["product"] = rec.product;
    aj["unit"] = rec.unit;
    dgas[label] = std::move(aj);
  }
  j["dgas"] = std::move(dgas);

  Json ainfty = Json::object();
  for (const auto& [label, rec] : doc.ainfty) {
    Json aj = Json::object();
    aj["complex"] = rec.complex;
    aj["max_arity"] = rec.max_arity;
    Json ops = Json::array();
    for (const auto& [n, maplabel] : rec.operations) {
      Json oj = Json::object();
      oj["arity"] = n;
      oj["bidegree"] = Json::array({2 - n, 0});
      oj["map"] = maplabel;
      ops.push_back(std::move(oj));
    }
    aj["operations"] = std::move(ops);
    ainfty[label] = std::move(aj);
  }
  j["ainfty"] = std::move(ainfty);

  Json sdrs = Json::object();
  for (const auto& [label, rec] : doc.sdrs) {
    Json sj = Json::object();
    sj["big"] = rec.big;
    sj["small"] = rec.small;
    sj["alpha"] = rec.alpha;
    sj["r"] = rec.r;
    sj["h"] = rec.h;
    sdrs[label] = std::move(sj);
  }
  j["sdrs"] = std::move(sdrs);

  Json barmaps = Json::object();
  for (const auto& [label, rec] : doc.barmaps) {
    Json bj = Json::object();
    bj["source"] = rec.source;
    bj["target"] = rec.target;
    bj["source_arity"] = rec.source_arity;
    bj["target_arity"] = rec.target_arity;
    bj["total_degree"] = rec.total_degree;
    Json blocks = Json::object();
    for (const auto& [jk, maplabel] : rec.blocks)
      blocks[std::to_string(jk.first) + "->" + std::to_string(jk.second)] = maplabel;
    bj["blocks"] = std::move(blocks);
    barmaps[label] = std::move(bj);
  }
  j["barmaps"] = std::move(barmaps);

  return j.dump(2) + "\n";
}

void write_document_file(const Document& doc, const std::string& path) {
  const std::string text = write_document(doc);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::invalid_argument("short write to '" + path + "'");
}

/* ------------------------------------------------------------- assembly */

namespace {

const ComplexRecord& complex_record(const Document& doc, const std::string& label) {
  auto it = doc.complexes.find(label);
  if (it == doc.complexes.end()) throw std::out_of_range("no complex named '" + label + "'");
  return it->second;
}

}  // namespace

Complex assemble_complex(const Document& doc, const std::string& label) {
  const ComplexRecord& rec = complex_record(doc, label);
  return make_complex(doc.resolve_space(rec.space), doc.map_named(rec.d));
}

DgAlgebra assemble_dga(const Document& doc, const std::string& label) {
  auto it = doc.dgas.find(label);
  if (it == doc.dgas.end()) throw std::out_of_range("no algebra named '" + label + "'");
  Complex c = assemble_complex(doc, it->second.complex);
  return DgAlgebra{std::move(c), doc.map_named(it->second.product),
                   doc.vector_named(it->second.unit)};
}

SdrDatum assemble_sdr(const Document& doc, const std::string& label) {
  auto it = doc.sdrs.find(label);
  if (it == doc.sdrs.end()) throw std::out_of_range("no SDR named '" + label + "'");
  const SdrRecord& rec = it->second;
  return SdrDatum{assemble_complex(doc, rec.big), assemble_complex(doc, rec.small),
                  doc.map_named(rec.alpha), doc.map_named(rec.r), doc.map_named(rec.h)};
}

AInfinityStructure assemble_ainfty(const Document& doc, const std::string& label, int max_arity) {
  auto it = doc.ainfty.find(label);
  if (it == doc.ainfty.end())
    throw std::out_of_range("no A-infinity structure named '" + label + "'");
  const AinftyRecord& rec = it->second;
  const int arity = max_arity == 0 ? rec.max_arity : max_arity;
  BarContextPtr ctx = make_bar_context(assemble_complex(doc, rec.complex), arity);
  std::map<int, GradedMap> ops;
  for (const auto& [n, maplabel] : rec.operations) ops.emplace(n, doc.map_named(maplabel));
  return AInfinityStructure(std::move(ctx), std::move(ops));
}

BarMap assemble_barmap(const Document& doc, const std::string& label) {
  auto it = doc.barmaps.find(label);
  if (it == doc.barmaps.end()) throw std::out_of_range("no bar map named '" + label + "'");
  const BarMapRecord& rec = it->second;
  BarContextPtr src = make_bar_context(assemble_complex(doc, rec.source), rec.source_arity);
  BarContextPtr tgt = make_bar_context(assemble_complex(doc, rec.target), rec.target_arity);
  BarMap f(std::move(src), std::move(tgt), rec.total_degree);
  for (const auto& [jk, maplabel] : rec.blocks)
    f.set_block(jk.first, jk.second, doc.map_named(maplabel));
  return f;
}

/* --------------------------------------------------------- registration */

namespace {

void require_free(const Document& doc, const std::string& label, bool taken,
                  const char* section) {
  if (!valid_label(label))
    throw std::invalid_argument("labels match [A-Za-z0-9_.-]+, got '" + label + "'");
  if (taken)
    throw std::invalid_argument(std::string(section) + " label '" + label + "' is already used");
}

const ComplexRecord& matching_complex(const Document& doc, const std::string& label,
                                      const Complex& value, const char* who) {
  const ComplexRecord& rec = complex_record(doc, label);
  if (!same_space(doc.resolve_space(rec.space), value.space) ||
      doc.map_named(rec.d) != value.d)
    throw std::invalid_argument(std::string(who) + " does not live on complex '" + label + "'");
  return rec;
}

}  // namespace

void put_space(Document& doc, const std::string& label, SpacePtr space) {
  require_free(doc, label, doc.spaces.count(label) > 0, "space");
  if (!space) throw std::invalid_argument("null space");
  if (space->field() != doc.field)
    throw std::invalid_argument("space field differs from the document field");
  doc.spaces.emplace(label, std::move(space));
}

void put_map(Document& doc, const std::string& label, GradedMap m) {
  require_free(doc, label, doc.maps.count(label) > 0, "map");
  space_ref_in(doc, m.source());  // throws when not expressible
  space_ref_in(doc, m.target());
  doc.maps.emplace(label, std::move(m));
}

void put_vector(Document& doc, const std::string& label, Vec v) {
  require_free(doc, label, doc.vectors.count(label) > 0, "vector");
  space_ref_in(doc, v.space);
  doc.vectors.emplace(label, std::move(v));
}

void put_complex(Document& doc, const std::string& label, const Complex& c) {
  require_free(doc, label, doc.complexes.count(label) > 0, "complex");
  require_free(doc, label, doc.spaces.count(label) > 0, "space");
  require_free(doc, label + ".d", doc.maps.count(label + ".d") > 0, "map");
  put_space(doc, label, c.space);
  put_map(doc, label + ".d", c.d);
  doc.complexes.emplace(label, ComplexRecord{label, label + ".d"});
}

void put_dga(Document& doc, const std::string& label, const DgAlgebra& a,
             const std::string& complex_label) {
  require_free(doc, label, doc.dgas.count(label) > 0, "algebra");
  require_free(doc, label + ".product", doc.maps.count(label + ".product") > 0, "map");
  require_free(doc, label + ".unit", doc.vectors.count(label + ".unit") > 0, "vector");
  matching_complex(doc, complex_label, a.complex, "the algebra");
  put_map(doc, label + ".product", a.product);
  put_vector(doc, label + ".unit", a.unit);
  doc.dgas.emplace(label, DgaRecord{complex_label, label + ".product", label + ".unit"});
}

void put_sdr(Document& doc, const std::string& label, const SdrDatum& s,
             const std::string& big_label, const std::string& small_label) {
  require_free(doc, label, doc.sdrs.count(label) > 0, "SDR");
  for (const char* leaf : {".alpha", ".r", ".h"})
    require_free(doc, label + leaf, doc.maps.count(label + leaf) > 0, "map");
  matching_complex(doc, big_label, s.big, "the SDR's big side");
  matching_complex(doc, small_label, s.small, "the SDR's small side");
  put_map(doc, label + ".alpha", s.alpha);
  put_map(doc, label + ".r", s.r);
  put_map(doc, label + ".h", s.h);
  doc.sdrs.emplace(label,
                   SdrRecord{big_label, small_label, label + ".alpha", label + ".r", label + ".h"});
}

void put_ainfty(Document& doc, const std::string& label, const AInfinityStructure& A,
                const std::string& complex_label) {
  require_free(doc, label, doc.ainfty.count(label) > 0, "A-infinity structure");
  AinftyRecord rec;
  rec.complex = complex_label;
  rec.max_arity = A.max_arity();
  matching_complex(doc, complex_label, A.context()->base(), "the structure");
  for (const auto& [n, m] : A.ops()) {
    if (n == 1) continue;  // always the differential; re-added on assembly
    const std::string maplabel = label + ".m" + std::to_string(n);
    require_free(doc, maplabel, doc.maps.count(maplabel) > 0, "map");
    rec.operations.emplace(n, maplabel);
  }
  for (const auto& [n, maplabel] : rec.operations) put_map(doc, maplabel, *A.op(n));
  doc.ainfty.emplace(label, std::move(rec));
}

void put_barmap(Document& doc, const std::string& label, const BarMap& f,
                const std::string& source_label, const std::string& target_label) {
  require_free(doc, label, doc.barmaps.count(label) > 0, "bar map");
  matching_complex(doc, source_label, f.source()->base(), "the bar map's source");
  matching_complex(doc, target_label, f.target()->base(), "the bar map's target");
  BarMapRecord rec;
  rec.source = source_label;
  rec.target = target_label;
  rec.source_arity = f.source()->max_arity();
  rec.target_arity = f.target()->max_arity();
  rec.total_degree = f.total_degree();
  for (const auto& [jk, m] : f.blocks()) {
    const std::string maplabel =
        label + ".b" + std::to_string(jk.first) + "_" + std::to_string(jk.second);
    require_free(doc, maplabel, doc.maps.count(maplabel) > 0, "map");
    rec.blocks.emplace(jk, maplabel);
  }
  for (const auto& [jk, maplabel] : rec.blocks) put_map(doc, maplabel, *f.block(jk.first, jk.second));
  doc.barmaps.emplace(label, std::move(rec));
}

}  // namespace hpt
