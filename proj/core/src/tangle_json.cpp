#include "json.hpp"
#include "plancalc/tangle.hpp"

namespace plancalc {

using nlohmann::json;

namespace {

Color color_from(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("eps")) throw SchemaError("colour needs k and eps");
  const auto& e = j.at("eps");
  if (!e.is_string() || (e != "+" && e != "-")) throw SchemaError("eps must be \"+\" or \"-\"");
  if (!j.at("k").is_number_integer()) throw SchemaError("k must be an integer");
  return {j.at("k").get<int>(), e == "+" ? 1 : -1};
}

json color_to(const Color& c) { return {{"k", c.k}, {"eps", c.eps > 0 ? "+" : "-"}}; }

Dart dart_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw SchemaError("dart must be [disc, position]");
  return {j[0].get<int>(), j[1].get<int>() - 1};
}

json dart_to(const Dart& d) { return json::array({d.disc, d.pos + 1}); }

RawFace face_from(const json& j) {
  if (j.is_object() && j.contains("arc")) {
    Dart a = dart_from(j.at("arc"));
    return RawFace::arc(a.disc, a.pos);
  }
  if (j.is_object() && j.contains("loop") && j.at("loop").is_number_integer())
    return RawFace::inside(j.at("loop").get<int>() - 1);
  throw SchemaError("face must be {\"arc\":[d,pos]} or {\"loop\":j}");
}

json face_to(const RawFace& f) {
  if (f.is_loop) return {{"loop", f.loop + 1}};
  return {{"arc", json::array({f.disc, f.pos + 1})}};
}

}  // namespace

RawTangle raw_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("tangle document must be an object");
  if (j.contains("format") && j.at("format") != "plancalc/1") throw SchemaError("unsupported format version");
  RawTangle raw;
  if (!j.contains("external")) throw SchemaError("missing external colour");
  raw.external = color_from(j.at("external"));
  if (j.contains("internal")) {
    if (!j.at("internal").is_array()) throw SchemaError("internal must be an array");
    for (const auto& c : j.at("internal")) raw.internal.push_back(color_from(c));
  }
  if (j.contains("strings")) {
    if (!j.at("strings").is_array()) throw SchemaError("strings must be an array");
    for (const auto& s : j.at("strings")) {
      if (!s.is_array() || s.size() != 2) throw SchemaError("string must be a pair of darts");
      raw.strings.push_back({dart_from(s[0]), dart_from(s[1])});
    }
  }
  if (j.contains("loops")) {
    if (!j.at("loops").is_array()) throw SchemaError("loops must be an array");
    for (const auto& l : j.at("loops")) {
      if (!l.is_object() || !l.contains("face")) throw SchemaError("loop needs a face");
      std::string o = l.value("orientation", "");
      if (o != "cw" && o != "ccw") throw SchemaError("loop orientation must be cw or ccw");
      raw.loops.push_back({face_from(l.at("face")), o == "cw"});
    }
  }
  if (j.contains("placement")) {
    if (!j.at("placement").is_array()) throw SchemaError("placement must be an array");
    for (const auto& p : j.at("placement")) {
      if (!p.is_object() || !p.contains("disc") || !p.contains("outer") || !p.contains("face"))
        throw SchemaError("placement needs disc, outer and face");
      Dart o = dart_from(p.at("outer"));
      raw.placements.push_back({p.at("disc").get<int>(), o, face_from(p.at("face"))});
    }
  }
  return raw;
}

std::string raw_to_json(const RawTangle& raw) {
  json j;
  j["format"] = "plancalc/1";
  j["external"] = color_to(raw.external);
  j["internal"] = json::array();
  for (const auto& c : raw.internal) j["internal"].push_back(color_to(c));
  j["strings"] = json::array();
  for (const auto& [a, b] : raw.strings) j["strings"].push_back(json::array({dart_to(a), dart_to(b)}));
  j["loops"] = json::array();
  for (const auto& l : raw.loops) j["loops"].push_back({{"face", face_to(l.face)}, {"orientation", l.cw ? "cw" : "ccw"}});
  j["placement"] = json::array();
  for (const auto& p : raw.placements)
    j["placement"].push_back({{"disc", p.disc}, {"outer", dart_to(p.outer)}, {"face", face_to(p.face)}});
  return j.dump(2);
}

PlanarTangle tangle_from_json(const std::string& text) { return PlanarTangle::from_raw(raw_from_json(text)); }
std::string tangle_to_json(const PlanarTangle& T) { return raw_to_json(T.to_raw()); }

}  // namespace plancalc
