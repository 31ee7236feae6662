#include <fstream>
#include <sstream>

#include "json.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/io.hpp"

namespace selfcover {
namespace {

using nlohmann::json;

Rational rational_from(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  throw ParseError(what + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

Point2 point_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(what + ": expected a coordinate pair, got " + j.dump());
  return {rational_from(j[0], what), rational_from(j[1], what)};
}

std::vector<Point2> points_from(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected a list of coordinate pairs");
  std::vector<Point2> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json(const Point2& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const std::vector<Point2>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

InstanceFile instance_from(const json& j) {
  InstanceFile inst{ConvexPolygon(points_from(field(j, "shape"), "shape")), {}, {}, {}};
  if (j.contains("points")) inst.points = points_from(j["points"], "points");
  if (j.contains("dummies")) inst.dummies = points_from(j["dummies"], "dummies");
  if (j.contains("metadata")) {
    const json& m = j["metadata"];
    if (!m.is_object()) throw ParseError("metadata: expected an object");
    for (const auto& [k, v] : m.items()) inst.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return inst;
}

json instance_to(const InstanceFile& inst) {
  json j;
  j["shape"] = to_json(inst.shape.vertices());
  j["points"] = to_json(inst.points);
  if (!inst.dummies.empty()) j["dummies"] = to_json(inst.dummies);
  j["metadata"] = json::object();
  for (const auto& [k, v] : inst.metadata) j["metadata"][k] = v;
  return j;
}

// Scale and offset relative to the container's own vertex list.
std::pair<Rational, Point2> rebase(const Homothet& h, const ConvexPolygon& container) {
  const ConvexPolygon real = h.realize();
  const Rational lambda = (real.max_x() - real.min_x()) / (container.max_x() - container.min_x());
  return {lambda, Point2(real.min_x() - lambda * container.min_x(), real.min_y() - lambda * container.min_y())};
}

}  // namespace

InstanceFile parse_instance(const std::string& text) { return instance_from(parse_json(text)); }

CoverFile parse_cover(const std::string& text) {
  const json j = parse_json(text);
  CoverFile cover{instance_from(field(j, "instance")), {}, 0};
  const ShapePtr shape = make_shape(cover.instance.shape);
  const json& hs = field(j, "homothets");
  if (!hs.is_array()) throw ParseError("homothets: expected a list");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string what = "homothets[" + std::to_string(i) + "]";
    const Rational scale = rational_from(field(hs[i], "scale"), what + ".scale");
    if (scale <= 0) throw ParseError(what + ": scale must be positive");
    cover.homothets.emplace_back(shape, scale, point_from(field(hs[i], "offset"), what + ".offset"));
  }
  const json& b = field(j, "bound");
  if (!b.is_number_unsigned()) throw ParseError("bound: expected a nonnegative integer");
  cover.bound = b.get<std::size_t>();
  return cover;
}

std::string emit_instance(const InstanceFile& inst) { return instance_to(inst).dump(2) + "\n"; }

std::string emit_cover(const CoverFile& cover) {
  json j;
  j["instance"] = instance_to(cover.instance);
  j["homothets"] = json::array();
  for (const auto& h : cover.homothets) {
    const auto [scale, offset] = rebase(h, cover.instance.shape);
    j["homothets"].push_back({{"scale", to_string(scale)}, {"offset", to_json(offset)}});
  }
  j["bound"] = cover.bound;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace selfcover
