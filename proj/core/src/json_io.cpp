#include "ttg/json_io.hpp"

namespace ttg {

json class_set_json(const ClassSet& s) {
  json out;
  out["isolated"] = json::array();
  for (SubgroupClass k : s.specials) out["isolated"].push_back(class_name(k));
  json series = json::object();
  auto emit = [&](ClassKind kind, const SeriesPart& part, const char* name) {
    if (!has_series(s.group, kind)) return;
    json p;
    p["kind"] = part.cofinite ? "cofinite" : "finite";
    p["indices"] = json::array();
    for (int n : part.idx) p["indices"].push_back(n);
    series[name] = std::move(p);
  };
  emit(ClassKind::C, s.c, "C");
  emit(ClassKind::D, s.d, "D");
  out["series"] = std::move(series);
  return out;
}

json clopen_json(const ClopenSet& u) { return class_set_json(u.set); }

json phi_json(const PhiSpace& p) {
  json out;
  out["group"] = group_name(p.group);
  json comps = json::array();
  for (SubgroupClass k : p.isolated) {
    json c;
    c["type"] = "isolated";
    c["class"] = class_name(k);
    comps.push_back(std::move(c));
  }
  if (p.sequence) {
    json c;
    c["type"] = "sequence";
    c["series"] = p.sequence->series == ClassKind::D ? "D" : "C";
    c["start"] = p.sequence->start;
    c["limit"] = class_name(p.sequence->limit);
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  return out;
}

json marks_json(const MarksMatrix& m) {
  json out;
  out["classes"] = json::array();
  for (SubgroupClass k : m.basis) out["classes"].push_back(class_name(k));
  json rows = json::array();
  for (std::size_t i = 0; i < m.m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.m.cols(); ++j) row.push_back(rat_str(m.m[i][j]));
    rows.push_back(std::move(row));
  }
  out["marks"] = std::move(rows);
  return out;
}

json burnside_element_json(const BurnsideElement& e) {
  json cells = json::array();
  for (const auto& [v, cell] : e.chart) {
    json c;
    c["value"] = rat_str(v);
    c["cell"] = clopen_json(cell);
    cells.push_back(std::move(c));
  }
  json out;
  out["group"] = group_name(e.space.group);
  out["chart"] = std::move(cells);
  return out;
}

namespace {

json part_json(const semifree::Part& p) {
  json out;
  json vd = json::object();
  for (auto& [d, v] : p.v_dims) vd[std::to_string(d)] = v;
  out["v_dims"] = std::move(vd);
  if (!p.filt.empty()) {
    out["window"] = json::array({p.filt.begin()->first, p.filt.rbegin()->first});
    json filt = json::object();
    for (auto& [d, m] : p.filt) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m[r][c]));
        rows.push_back(std::move(row));
      }
      filt[std::to_string(d)] = std::move(rows);
    }
    out["filtration"] = std::move(filt);
  }
  return out;
}

semifree::Part part_from_json(int parity, const json& j) {
  semifree::Part p;
  p.parity = parity;
  if (j.is_null()) return p;
  if (!j.is_object()) fail(Errc::MalformedDescriptor, "part must be an object");
  if (j.contains("v_dims")) {
    for (auto it = j["v_dims"].begin(); it != j["v_dims"].end(); ++it) {
      int d = std::stoi(it.key());
      int v = it.value().get<int>();
      p.v_dims[d] = v;
    }
  }
  if (p.v_dims.empty()) return p;
  if (!j.contains("window") || !j["window"].is_array() || j["window"].size() != 2)
    fail(Errc::MalformedDescriptor, "nonzero part needs a window [lo, hi]");
  int lo = j["window"][0].get<int>();
  int hi = j["window"][1].get<int>();
  if (hi < lo) fail(Errc::MalformedDescriptor, "empty window");
  std::map<int, Matrix> given;
  int dim = p.dim();
  if (j.contains("filtration")) {
    for (auto it = j["filtration"].begin(); it != j["filtration"].end(); ++it) {
      int d = std::stoi(it.key());
      if (d < lo || d > hi) fail(Errc::MalformedDescriptor, "filtration degree outside window");
      Matrix m(static_cast<std::size_t>(dim));
      for (const json& row : it.value()) {
        RatVec r;
        for (const json& x : row) r.push_back(parse_rat(x.get<std::string>()));
        if (r.size() != static_cast<std::size_t>(dim))
          fail(Errc::MalformedDescriptor, "filtration row has wrong width");
        m.push_row(std::move(r));
      }
      given.emplace(d, std::move(m));
    }
  }
  // an omitted degree takes the value of the nearest specified degree above it
  Matrix current(static_cast<std::size_t>(dim));  // zero space above the window
  for (int d = hi; d >= lo; d -= 2) {
    auto it = given.find(d);
    if (it != given.end()) current = it->second;
    p.filt.emplace(d, current);
  }
  return p;
}

}  // namespace

json wide_sphere_json(const semifree::WideSphere& w) {
  json out = json::object();
  if (!w.even.empty()) out["even"] = part_json(w.even);
  if (!w.odd.empty()) out["odd"] = part_json(w.odd);
  return out;
}

semifree::WideSphere wide_sphere_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::MalformedDescriptor, "wide sphere must be a JSON object");
  semifree::WideSphere w;
  if (j.contains("even")) w.even = part_from_json(0, j["even"]);
  if (j.contains("odd")) w.odd = part_from_json(1, j["odd"]);
  return w;
}

}  // namespace ttg
