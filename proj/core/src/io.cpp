#include "pasting/io.hpp"

#include "pasting/error.hpp"
#include "pasting/glue.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace pasting {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &message) {
  throw Error(ErrorKind::ParseError, message);
}

void onlyKeys(const json &obj, std::initializer_list<const char *> allowed,
              const std::string &where) {
  if (!obj.is_object())
    fail(where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto &item : obj.items())
    if (!ok.count(item.key()))
      fail("unknown key '" + item.key() + "' in " + where);
}

const json &field(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

std::string text(const json &j, const std::string &where) {
  if (!j.is_string())
    fail(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> texts(const json &j, const std::string &where) {
  if (!j.is_array())
    fail(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto &item : j)
    out.push_back(text(item, where));
  return out;
}

RawScheme schemeFrom(const json &doc) {
  onlyKeys(doc, {"vertices", "edges", "faces", "top", "bottom"}, "scheme");
  RawScheme raw;
  raw.vertices = texts(field(doc, "vertices", "scheme"), "vertices");
  const json &edges = field(doc, "edges", "scheme");
  if (!edges.is_array())
    fail("edges must be an array");
  for (const auto &e : edges) {
    onlyKeys(e, {"id", "src", "tgt"}, "edge");
    raw.edges.push_back({text(field(e, "id", "edge"), "edge id"),
                         text(field(e, "src", "edge"), "edge src"),
                         text(field(e, "tgt", "edge"), "edge tgt")});
  }
  const json &faces = field(doc, "faces", "scheme");
  if (!faces.is_array())
    fail("faces must be an array");
  for (const auto &f : faces) {
    onlyKeys(f, {"id", "top", "bottom"}, "face");
    raw.faces.push_back({text(field(f, "id", "face"), "face id"),
                         texts(field(f, "top", "face"), "face top"),
                         texts(field(f, "bottom", "face"), "face bottom")});
  }
  raw.top = texts(field(doc, "top", "scheme"), "top");
  raw.bottom = texts(field(doc, "bottom", "scheme"), "bottom");
  return raw;
}

json parse(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    fail(e.what());
  }
}

} // namespace

RawScheme parseScheme(const std::string &text) { return schemeFrom(parse(text)); }

std::string writeScheme(const RawScheme &input) {
  RawScheme raw = input;
  std::sort(raw.vertices.begin(), raw.vertices.end());
  std::sort(raw.edges.begin(), raw.edges.end(),
            [](const Edge &a, const Edge &b) { return a.id < b.id; });
  std::sort(raw.faces.begin(), raw.faces.end(),
            [](const Face &a, const Face &b) { return a.id < b.id; });
  // Keys follow the documented order; nlohmann would sort them.
  std::ostringstream out;
  out << "{\n  \"vertices\": " << json(raw.vertices).dump() << ",\n";
  out << "  \"edges\": [";
  for (std::size_t i = 0; i < raw.edges.size(); ++i)
    out << (i ? ",\n    " : "\n    ") << "{\"id\": " << json(raw.edges[i].id)
        << ", \"src\": " << json(raw.edges[i].src)
        << ", \"tgt\": " << json(raw.edges[i].tgt) << "}";
  out << (raw.edges.empty() ? "],\n" : "\n  ],\n");
  out << "  \"faces\": [";
  for (std::size_t i = 0; i < raw.faces.size(); ++i)
    out << (i ? ",\n    " : "\n    ") << "{\"id\": " << json(raw.faces[i].id)
        << ", \"top\": " << json(raw.faces[i].top).dump()
        << ", \"bottom\": " << json(raw.faces[i].bottom).dump() << "}";
  out << (raw.faces.empty() ? "],\n" : "\n  ],\n");
  out << "  \"top\": " << json(raw.top).dump() << ",\n";
  out << "  \"bottom\": " << json(raw.bottom).dump() << "\n}\n";
  return out.str();
}

Labelling parseLabelling(const std::string &input, const std::string &baseDir) {
  json doc = parse(input);
  if (doc.is_object() && !doc.contains("scheme"))
    return Labelling(requireValid(schemeFrom(doc)));
  onlyKeys(doc, {"scheme", "generators", "threecells"}, "labelling");

  const json &s = field(doc, "scheme", "labelling");
  RawScheme raw;
  if (s.is_string())
    raw = loadScheme((std::filesystem::path(baseDir) / s.get<std::string>())
                         .string());
  else
    raw = schemeFrom(s);

  std::map<FaceId, std::string> names;
  if (doc.contains("generators")) {
    const json &g = doc["generators"];
    if (!g.is_object())
      fail("generators must map face ids to names");
    for (const auto &item : g.items())
      names[item.key()] = text(item.value(), "generator name");
  }
  Labelling lab(requireValid(raw), names);

  if (doc.contains("threecells")) {
    const json &cells = doc["threecells"];
    if (!cells.is_array())
      fail("threecells must be an array");
    for (const auto &c : cells) {
      std::string kind = text(field(c, "kind", "threecell"), "kind");
      if (kind == "1to1") {
        onlyKeys(c, {"name", "kind", "face", "target"}, "1to1 threecell");
        lab.declareOneToOne(text(field(c, "name", "threecell"), "name"),
                            text(field(c, "face", "threecell"), "face"),
                            text(field(c, "target", "threecell"), "target"));
      } else if (kind == "2to1") {
        onlyKeys(c, {"name", "kind", "faces", "target", "top", "bottom"},
                 "2to1 threecell");
        auto faces = texts(field(c, "faces", "threecell"), "faces");
        if (faces.size() != 2)
          fail("2to1 threecell needs exactly two faces");
        std::optional<CellType> declared;
        if (c.contains("top") || c.contains("bottom"))
          declared = CellType{texts(field(c, "top", "threecell"), "top"),
                              texts(field(c, "bottom", "threecell"), "bottom")};
        declarePair(lab, text(field(c, "name", "threecell"), "name"), faces[0],
                    faces[1], text(field(c, "target", "threecell"), "target"),
                    declared);
      } else {
        fail("unknown threecell kind '" + kind + "'");
      }
    }
  }
  return lab;
}

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RawScheme loadScheme(const std::string &path) {
  return parseScheme(readFile(path));
}

Labelling loadLabelling(const std::string &path) {
  return parseLabelling(readFile(path),
                        std::filesystem::path(path).parent_path().string());
}

} // namespace pasting
