#include "taulam/json_io.hpp"

#include <fstream>
#include <sstream>

namespace taulam {

IoError::IoError(const std::string& msg, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + msg
                                  : msg),
      line(line),
      column(column) {}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    size_t upto = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, col = 1;
    for (size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.rfind(": ");
    throw IoError(pos == std::string::npos ? what : what.substr(pos + 2), line, col);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) {
  try {
    return parse_json_text(read_text_file(path));
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw IoError(where + ": missing field '" + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key, const std::string& where) {
  try {
    return field(j, key, where).get<T>();
  } catch (const Json::exception& e) {
    throw IoError(where + ": field '" + key + "' has the wrong type");
  }
}

void read_block(const Json& j, const std::string& where, std::vector<Vertex>& vs,
                std::vector<ArrowSpec>& as) {
  for (const auto& v : field(j, "vertices", where)) {
    Vertex x;
    x.id = get<std::string>(v, "id", where + " vertex");
    x.special = v.value("special", false);
    vs.push_back(x);
  }
  for (const auto& a : field(j, "arrows", where)) {
    ArrowSpec s;
    s.id = get<std::string>(a, "id", where + " arrow");
    std::string aw = where + " arrow '" + s.id + "'";
    s.special = a.value("special", false);
    const Json& f = field(a, "from", aw);
    const Json& t = field(a, "to", aw);
    s.from_v = get<std::string>(f, "v", aw + " from");
    s.from_sign = get<int>(f, "sign", aw + " from");
    s.to_v = get<std::string>(t, "v", aw + " to");
    s.to_sign = get<int>(t, "sign", aw + " to");
    as.push_back(s);
  }
}

Json block_to_json(const std::vector<Vertex>& vs, const std::vector<ArrowSpec>& as) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : vs) j["vertices"].push_back({{"id", v.id}, {"special", v.special}});
  j["arrows"] = Json::array();
  for (const auto& a : as)
    j["arrows"].push_back({{"id", a.id},
                           {"special", a.special},
                           {"from", {{"v", a.from_v}, {"sign", a.from_sign}}},
                           {"to", {{"v", a.to_v}, {"sign", a.to_sign}}}});
  return j;
}

}  // namespace

QuiverFile quiver_from_json(const Json& j) {
  std::vector<Vertex> vs;
  std::vector<ArrowSpec> as;
  read_block(j, "quiver", vs, as);
  QuiverFile out;
  try {
    out.base = PolarizedQuiver(vs, as);
    if (j.contains("fringe")) {
      std::vector<Vertex> fv = vs, extra;
      std::vector<ArrowSpec> fa = as, extra_a;
      read_block(j.at("fringe"), "fringe", extra, extra_a);
      Fringing f;
      for (const auto& v : extra) f.fringe_vertices.push_back(v.id);
      fv.insert(fv.end(), extra.begin(), extra.end());
      fa.insert(fa.end(), extra_a.begin(), extra_a.end());
      f.base = out.base;
      f.fringed = PolarizedQuiver(fv, fa);
      out.fringing = f;
    }
  } catch (const QuiverError& e) {
    throw IoError(std::string("quiver: ") + e.what());
  }
  return out;
}

Json quiver_to_json(const PolarizedQuiver& q) { return block_to_json(q.vertices(), q.arrow_specs()); }

Json fringing_to_json(const Fringing& f) {
  Json j = quiver_to_json(f.base);
  std::vector<Vertex> fv;
  std::vector<ArrowSpec> fa;
  for (const auto& v : f.fringed.vertices())
    if (!f.base.find_vertex(v.id)) fv.push_back(v);
  for (const auto& a : f.fringed.arrow_specs())
    if (!f.base.find_arrow(a.id)) fa.push_back(a);
  j["fringe"] = block_to_json(fv, fa);
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  const std::string w = "triangulation";
  Triangulation t;
  const Json& s = field(j, "surface", w);
  t.surface.genus = get<int>(s, "genus", w + " surface");
  t.surface.marked_per_component = get<std::vector<int>>(s, "marked_per_component", w + " surface");
  t.surface.punctures = s.value("punctures", std::vector<std::string>{});
  t.boundary_segments = get<std::vector<std::string>>(j, "boundary_segments", w);
  for (const auto& a : field(j, "arcs", w)) {
    TaggedArc arc;
    arc.id = get<std::string>(a, "id", w + " arc");
    std::string aw = w + " arc '" + arc.id + "'";
    auto ends = get<std::vector<std::string>>(a, "ends", aw);
    if (ends.size() != 2) throw IoError(aw + ": 'ends' needs two entries");
    arc.from = ends[0];
    arc.to = ends[1];
    auto tags = a.value("tags", std::vector<int>{1, 1});
    if (tags.size() != 2) throw IoError(aw + ": 'tags' needs two entries");
    arc.tag_from = tags[0];
    arc.tag_to = tags[1];
    arc.orientation = a.value("orientation", 1);
    t.arcs.push_back(arc);
  }
  int k = 0;
  for (const auto& tr : field(j, "triangles", w)) {
    std::string tw = w + " triangle " + std::to_string(k++);
    Triangle x;
    for (const auto& side : field(tr, "sides", tw)) {
      TriangleSide ts;
      if (side.is_string()) {
        ts.id = side.get<std::string>();
      } else {
        ts.id = get<std::string>(side, "arc", tw + " side");
        std::string on = side.value("on", std::string("left"));
        if (on != "left" && on != "right") throw IoError(tw + ": side 'on' must be left or right");
        ts.left = on == "left";
      }
      x.sides.push_back(ts);
    }
    x.self_folded = tr.value("self_folded", false);
    x.puncture = tr.value("puncture", std::string());
    t.triangles.push_back(x);
  }
  return t;
}

Seed seed_from_json(const Json& j) {
  Seed s;
  s.index = get<std::vector<std::string>>(j, "index", "seed");
  s.beta = get<IntMatrix>(j, "B", "seed");
  if (j.contains("rows"))
    s.rows = get<std::map<std::string, std::vector<int>>>(j, "rows", "seed");
  try {
    validate_seed(s);
  } catch (const MutationError& e) {
    throw IoError(std::string("seed: ") + e.what());
  }
  return s;
}

Json seed_to_json(const Seed& s) {
  Json j;
  j["index"] = s.index;
  j["B"] = s.beta;
  j["rows"] = Json::object();
  for (const auto& [k, r] : s.rows) j["rows"][k] = r;
  return j;
}

std::map<std::string, int> lamination_from_json(const Json& j) {
  auto m = get<std::map<std::string, int>>(j, "classes", "lamination");
  for (const auto& [k, v] : m)
    if (v < 0) throw IoError("lamination: negative multiplicity for '" + k + "'");
  return m;
}

}  // namespace taulam
