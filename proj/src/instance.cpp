#include "qcat/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcat/continuity.hpp"

namespace qcat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw schema_error(pointer, what);
}

const json& expect(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object() || !j.contains(key)) fail(pointer + "/" + key, "missing field");
  return j.at(key);
}

std::vector<std::string> parse_names(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) fail(pointer, "expected a nonempty array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(pointer + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

template <class T>
Matrix<T> parse_matrix(const json& j, int rows, int cols, const std::string& pointer,
                       int value_bound) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(pointer, "expected " + std::to_string(rows) + " rows");
  Matrix<T> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(pointer + "/" + std::to_string(r),
           "ragged row, expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      const json& cell = row[c];
      std::string cell_ptr = pointer + "/" + std::to_string(r) + "/" + std::to_string(c);
      long v;
      if (cell.is_boolean())
        v = cell.get<bool>() ? 1 : 0;
      else if (cell.is_number_integer())
        v = cell.get<long>();
      else
        fail(cell_ptr, "expected an integer or boolean");
      if (v < 0 || v >= value_bound)
        fail(cell_ptr, "index " + std::to_string(v) + " out of range");
      m(r, c) = static_cast<T>(v);
    }
  }
  return m;
}

QuantaleTable parse_quantale(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail(pointer, "expected a quantale object");
  if (j.contains("builtin")) {
    std::string name = j.at("builtin").get<std::string>();
    std::optional<int> n;
    if (j.contains("n")) n = j.at("n").get<int>();
    try {
      return builtin_quantale(name, n);
    } catch (const structural_error& e) {
      fail(pointer + "/builtin", e.what());
    }
  }
  QuantaleTable t;
  t.elements = parse_names(expect(j, "elements", pointer), pointer + "/elements");
  const int n = static_cast<int>(t.elements.size());
  t.leq = parse_matrix<uint8_t>(expect(j, "leq", pointer), n, n, pointer + "/leq", 2);
  t.tensor = parse_matrix<Elem>(expect(j, "tensor", pointer), n, n, pointer + "/tensor", n);
  const json& unit = expect(j, "unit", pointer);
  if (!unit.is_number_integer()) fail(pointer + "/unit", "expected an element index");
  t.unit = unit.get<int>();
  if (t.unit < 0 || t.unit >= n) fail(pointer + "/unit", "element index out of range");
  if (j.contains("display"))
    t.display = parse_names(j.at("display"), pointer + "/display");
  return t;
}

}  // namespace

const InstanceFile::NamedCategory* InstanceFile::find_category(const std::string& n) const {
  for (const auto& c : categories)
    if (c.name == n) return &c;
  return nullptr;
}
const InstanceFile::NamedDistributor* InstanceFile::find_distributor(
    const std::string& n) const {
  for (const auto& d : distributors)
    if (d.name == n) return &d;
  return nullptr;
}
const InstanceFile::NamedSpace* InstanceFile::find_space(const std::string& n) const {
  for (const auto& s : spaces)
    if (s.name == n) return &s;
  return nullptr;
}

IdealClass parse_ideal_class(const std::string& name, BelowFlavor fsw_below) {
  if (name == "all") return IdealClass::all();
  if (name == "order") return IdealClass::order_ideal();
  if (name == "fsw") return IdealClass::fsw(fsw_below);
  if (name == "radj") return IdealClass::right_adjoint();
  if (name.rfind("custom:", 0) == 0) {
    std::string custom = name.substr(7);
    if (!ideal_class_registered(custom)) {
      std::string known;
      for (const auto& k : registered_ideal_classes()) known += " custom:" + k;
      throw structural_error("unknown ideal class '" + name +
                             "'; valid: all order fsw radj" + known);
    }
    return IdealClass::custom(custom);
  }
  std::string known;
  for (const auto& k : registered_ideal_classes()) known += " custom:" + k;
  throw structural_error("unknown ideal class '" + name + "'; valid: all order fsw radj" +
                         known);
}

InstanceFile parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "expected a JSON object");
  if (j.contains("schema") && j.at("schema").get<std::string>() != "qcat-instance/1")
    fail("/schema", "unsupported schema version, expected qcat-instance/1");

  InstanceFile file;
  if (j.contains("quantale")) {
    QuantaleTable t = parse_quantale(j.at("quantale"), "/quantale");
    ValidationReport rep = validate_quantale(t);
    file.reports.emplace_back("quantale", rep);
    if (rep.ok()) file.quantale = make_quantale(t);
  }

  if (j.contains("categories")) {
    const json& cats = j.at("categories");
    if (!cats.is_array()) fail("/categories", "expected an array");
    for (std::size_t i = 0; i < cats.size(); ++i) {
      std::string ptr = "/categories/" + std::to_string(i);
      const json& cj = cats[i];
      InstanceFile::NamedCategory nc;
      nc.name = expect(cj, "name", ptr).get<std::string>();
      QuantalePtr q = file.quantale;
      if (cj.contains("quantale")) {
        QuantaleTable t = parse_quantale(cj.at("quantale"), ptr + "/quantale");
        ValidationReport rep = validate_quantale(t);
        file.reports.emplace_back(nc.name + ".quantale", rep);
        if (!rep.ok()) continue;
        q = make_quantale(t);
      }
      if (!q) fail(ptr, "no quantale given, neither inline nor at the top level");
      nc.cat.q = q;
      nc.cat.objects = parse_names(expect(cj, "objects", ptr), ptr + "/objects");
      nc.cat.hom = parse_matrix<Elem>(expect(cj, "structure", ptr),
                                      static_cast<int>(nc.cat.objects.size()),
                                      static_cast<int>(nc.cat.objects.size()),
                                      ptr + "/structure", q->size());
      file.reports.emplace_back(nc.name, validate_vcategory(nc.cat));
      file.categories.push_back(std::move(nc));
    }
  }

  if (j.contains("distributors")) {
    const json& ds = j.at("distributors");
    if (!ds.is_array()) fail("/distributors", "expected an array");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      std::string ptr = "/distributors/" + std::to_string(i);
      const json& dj = ds[i];
      InstanceFile::NamedDistributor nd;
      nd.name = expect(dj, "name", ptr).get<std::string>();
      std::string src = expect(dj, "source", ptr).get<std::string>();
      std::string dst = expect(dj, "target", ptr).get<std::string>();
      const auto* s = file.find_category(src);
      const auto* t = file.find_category(dst);
      if (!s) fail(ptr + "/source", "unknown category '" + src + "'");
      if (!t) fail(ptr + "/target", "unknown category '" + dst + "'");
      nd.dist.source = s->cat;
      nd.dist.target = t->cat;
      nd.dist.m = parse_matrix<Elem>(expect(dj, "matrix", ptr), s->cat.size(),
                                     t->cat.size(), ptr + "/matrix", s->cat.q->size());
      file.reports.emplace_back(nd.name, validate_distributor(nd.dist));
      file.distributors.push_back(std::move(nd));
    }
  }

  if (j.contains("spaces")) {
    const json& ss = j.at("spaces");
    if (!ss.is_array()) fail("/spaces", "expected an array");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      std::string ptr = "/spaces/" + std::to_string(i);
      const json& sj = ss[i];
      InstanceFile::NamedSpace ns;
      ns.name = expect(sj, "name", ptr).get<std::string>();
      ns.space.points = parse_names(expect(sj, "points", ptr), ptr + "/points");
      const json& opens = expect(sj, "opens", ptr);
      if (!opens.is_array()) fail(ptr + "/opens", "expected an array of point-index sets");
      std::vector<uint64_t> masks;
      for (std::size_t a = 0; a < opens.size(); ++a) {
        const json& open = opens[a];
        std::string optr = ptr + "/opens/" + std::to_string(a);
        if (!open.is_array()) fail(optr, "expected an array of point indices");
        uint64_t mask = 0;
        for (std::size_t k = 0; k < open.size(); ++k) {
          if (!open[k].is_number_integer())
            fail(optr + "/" + std::to_string(k), "expected a point index");
          long p = open[k].get<long>();
          if (p < 0 || p >= static_cast<long>(ns.space.points.size()))
            fail(optr + "/" + std::to_string(k), "point index out of range");
          mask |= (1ull << p);
        }
        masks.push_back(mask);
      }
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
      ns.space.opens = masks;
      file.reports.emplace_back(ns.name, validate_fintop(ns.space));
      file.spaces.push_back(std::move(ns));
    }
  }

  if (j.contains("ideals")) {
    BelowFlavor flavor = BelowFlavor::Totally;
    if (j.contains("fsw_below")) {
      std::string f = j.at("fsw_below").get<std::string>();
      if (f == "directed")
        flavor = BelowFlavor::Directed;
      else if (f != "totally")
        fail("/fsw_below", "expected totally or directed");
    }
    try {
      file.ideals = parse_ideal_class(j.at("ideals").get<std::string>(), flavor);
    } catch (const structural_error& e) {
      fail("/ideals", e.what());
    }
  }
  return file;
}

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

// --- report rendering --------------------------------------------------------

namespace {

json report_to_json(const ValidationReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  json out;
  out["checks"] = checks;
  out["ok"] = rep.ok();
  return out;
}

json matrix_to_json(const ElemMatrix& m, const Quantale& q) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(q.name_of(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_to_text(const ElemMatrix& m, const Quantale& q) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "    ";
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << q.name_of(m(i, j));
    os << "\n";
  }
  return os.str();
}

json presheaf_to_json(const Presheaf& p, const Quantale& q) {
  json out = json::array();
  for (Elem v : p) out.push_back(q.name_of(v));
  return out;
}

json filter_to_json(const FinTop& s, const OpenFilter& f) {
  json out = json::array();
  for (std::size_t a = 0; a < s.opens.size(); ++a) {
    if (!f.contains(static_cast<int>(a))) continue;
    json open = json::array();
    for (int p = 0; p < s.size(); ++p)
      if ((s.opens[a] >> p) & 1ull) open.push_back(s.points[p]);
    out.push_back(open);
  }
  return out;
}

}  // namespace

std::string render_validation_json(const InstanceFile& file) {
  json out;
  out["schema"] = "qcat-report/1";
  out["command"] = "validate";
  out["ok"] = file.all_valid();
  json objs = json::array();
  for (const auto& [name, rep] : file.reports) {
    json e = report_to_json(rep);
    e["subject"] = name.empty() ? rep.subject : name;
    objs.push_back(e);
  }
  out["objects"] = objs;
  return out.dump(2) + "\n";
}

std::string render_validation_text(const InstanceFile& file) {
  std::ostringstream os;
  for (const auto& [name, rep] : file.reports) {
    os << (rep.ok() ? "ok   " : "FAIL ") << (name.empty() ? rep.subject : name) << "\n";
    for (const CheckResult& c : rep.checks)
      if (!c.passed) os << "      " << c.name << ": " << c.witness << "\n";
  }
  os << (file.all_valid() ? "all objects valid\n" : "validation failed\n");
  return os.str();
}

WayBelowRender render_waybelow(const VCategory& x, const IdealClass& cls,
                               const Limits& limits) {
  ContinuityContext ctx = make_context(x, cls, limits);
  json out;
  out["schema"] = "qcat-report/1";
  out["command"] = "waybelow";
  out["class"] = cls.label();
  out["objects"] = x.objects;
  out["way_below"] = matrix_to_json(ctx.wb, *x.q);
  out["ideals"] = static_cast<int>(ctx.jx.members.size());
  out["ideals_with_sups"] = static_cast<int>(ctx.js.js.members.size());
  json sups = json::array();
  for (std::size_t i = 0; i < ctx.js.js.members.size(); ++i) {
    json e;
    e["presheaf"] = presheaf_to_json(ctx.js.js.members[i], *x.q);
    e["sup"] = x.objects[ctx.js.sup[i]];
    sups.push_back(e);
  }
  out["suprema"] = sups;

  std::ostringstream os;
  os << "way-below matrix (rows approximate columns), class " << cls.label() << ":\n"
     << matrix_to_text(ctx.wb, *x.q) << "ideals: " << ctx.jx.members.size()
     << ", with suprema: " << ctx.js.js.members.size() << "\n";
  return {out.dump(2) + "\n", os.str()};
}

WayBelowRender render_continuity(const VCategory& x, const IdealClass& cls,
                                 const std::optional<Distributor>& probe,
                                 const Limits& limits) {
  ContinuityContext ctx = make_context(x, cls, limits);
  ContinuityReport rep = is_j_continuous(x, cls, limits);
  TheoremContReport wb_vec = theorem_cont_check(ctx, rep.wb.as_dist());

  json out;
  out["schema"] = "qcat-report/1";
  out["command"] = "continuity";
  out["class"] = cls.label();
  out["objects"] = x.objects;
  out["continuous"] = rep.continuous;
  out["adjoint_found"] = rep.adjoint_found;
  out["way_below"] = matrix_to_json(rep.wb.m, *x.q);
  {
    json v = json::array();
    for (bool b : wb_vec.conditions()) v.push_back(b);
    out["way_below_conditions"] = v;
  }
  if (rep.adjoint_found) {
    json adj = json::array();
    for (std::size_t i = 0; i < rep.adjoint_presheaves.size(); ++i) {
      json e;
      e["object"] = x.objects[i];
      e["ideal"] = presheaf_to_json(rep.adjoint_presheaves[i], *x.q);
      adj.push_back(e);
    }
    out["adjoint"] = adj;
  } else {
    // counterexample dump: where the extension of the structure along the
    // way-below distributor disagrees with the structure
    Distributor ext = right_extension(identity_dist(x), rep.wb.as_dist());
    json bad = json::array();
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < x.size(); ++b)
        if (ext.m(a, b) != x.hom(a, b)) {
          json e;
          e["at"] = json::array({x.objects[a], x.objects[b]});
          e["structure"] = x.q->name_of(x.hom(a, b));
          e["extension"] = x.q->name_of(ext.m(a, b));
          bad.push_back(e);
        }
    out["approximation_gaps"] = bad;
  }
  if (probe) {
    TheoremContReport pr = theorem_cont_check(ctx, *probe);
    json v = json::array();
    for (bool b : pr.conditions()) v.push_back(b);
    out["probe_conditions"] = v;
    out["probe_in_class"] = pr.hypothesis_member;
    out["probe_conditions_agree"] = pr.all_equal();
  }

  std::ostringstream os;
  os << "class " << cls.label() << ": " << (rep.continuous ? "continuous" : "not continuous")
     << " (adjoint search " << (rep.adjoint_found ? "agrees" : "agrees: none") << ")\n"
     << "way-below matrix:\n"
     << matrix_to_text(rep.wb.m, *x.q);
  os << "condition vector for the way-below distributor: ";
  for (bool b : wb_vec.conditions()) os << (b ? '1' : '0');
  os << "\n";
  if (probe) {
    TheoremContReport pr = theorem_cont_check(ctx, *probe);
    os << "probe distributor conditions: ";
    for (bool b : pr.conditions()) os << (b ? '1' : '0');
    os << (pr.all_equal() ? " (agree)" : " (SPLIT)") << "\n";
  }
  return {out.dump(2) + "\n", os.str()};
}

WayBelowRender render_cocomplete(const VCategory& x, const IdealClass& cls,
                                 const Limits& limits) {
  PresheafCategory jx = build_jx(x, cls, limits);
  json out;
  out["schema"] = "qcat-report/1";
  out["command"] = "cocomplete";
  out["class"] = cls.label();
  out["objects"] = x.objects;
  bool cocomplete = true;
  json members = json::array();
  for (const Presheaf& p : jx.members) {
    SupremumResult s = supremum(x, p);
    json e;
    e["presheaf"] = presheaf_to_json(p, *x.q);
    json w = json::array();
    for (int wit : s.witnesses) w.push_back(x.objects[wit]);
    e["witnesses"] = w;
    if (s.canonical) e["sup"] = x.objects[*s.canonical];
    members.push_back(e);
    if (!s.canonical) cocomplete = false;
  }
  out["ideals"] = members;
  out["cocomplete"] = cocomplete;

  std::ostringstream os;
  os << "class " << cls.label() << ": " << jx.members.size() << " ideals, "
     << (cocomplete ? "cocomplete" : "not cocomplete") << "\n";
  for (const auto& e : members) {
    os << "  " << e["presheaf"].dump() << " -> ";
    os << (e.contains("sup") ? e["sup"].get<std::string>() : std::string("(no sup)"))
       << "\n";
  }
  return {out.dump(2) + "\n", os.str()};
}

WayBelowRender render_topo(const FinTop& space, FilterClass cls, const Limits& limits) {
  CocompleteTopReport coc = is_cocomplete_top(space, cls, limits);
  ContinuousTopReport cont = is_continuous_top(space, cls, limits);
  LocalWayBelowReport local = local_waybelow_consistency(space, cls, limits);

  json out;
  out["schema"] = "qcat-report/1";
  out["command"] = "topo";
  out["class"] = cls == FilterClass::All ? "all" : "proper";
  out["points"] = space.points;
  out["cocomplete"] = coc.ok();
  out["cocomplete_pointwise"] = coc.pointwise;
  out["sup_continuous"] = coc.sup_continuous;
  out["continuous"] = cont.ok();
  out["points_recovered"] = cont.points_recovered;
  out["assignment_continuous"] = cont.assignment_continuous;
  out["filters_in_class"] = cont.filters_in_class;
  out["waybelow_monotone"] = local.monotone;

  json filters = json::array();
  for (const OpenFilter& f : enumerate_filters(space, limits)) {
    json e;
    e["filter"] = filter_to_json(space, f);
    e["proper"] = filter_proper(space, f);
    FilterSup sup = sup_filter(space, f);
    json w = json::array();
    for (int wit : sup.witnesses) w.push_back(space.points[wit]);
    e["witnesses"] = w;
    filters.push_back(e);
  }
  out["filters"] = filters;

  json wbs = json::array();
  for (int x = 0; x < space.size(); ++x) {
    OpenFilter wb = waybelow_filter(space, x, cls, limits);
    json e;
    e["point"] = space.points[x];
    e["filter"] = filter_to_json(space, wb);
    e["proper"] = filter_proper(space, wb);
    wbs.push_back(e);
  }
  out["way_below_filters"] = wbs;

  std::ostringstream os;
  os << "class " << (cls == FilterClass::All ? "all" : "proper") << ": "
     << (coc.ok() ? "cocomplete" : "not cocomplete") << " (pointwise "
     << (coc.pointwise ? "yes" : "no") << ", sup continuous "
     << (coc.sup_continuous ? "yes" : "no") << "), "
     << (cont.ok() ? "continuous" : "not continuous") << "\n"
     << "filters: " << filters.size() << ", way-below assignment monotone: "
     << (local.monotone ? "yes" : "no")
     << ", topologically continuous: " << (local.topologically_continuous ? "yes" : "no")
     << "\n";
  return {out.dump(2) + "\n", os.str()};
}

}  // namespace qcat
