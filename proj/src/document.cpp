#include "saddlecalc/document.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace saddlecalc {
namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1;
  int col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ParseError("expected a number", path);
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError("number is not finite", path);
  }
  return v;
}

Vector vector_at(const json& j, int dim, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("expected a nonempty array of numbers", path);
  }
  if (dim > 0 && static_cast<int>(j.size()) != dim) {
    throw ParseError("expected " + std::to_string(dim) + " coordinates, found " +
                         std::to_string(j.size()),
                     path);
  }
  std::vector<double> coords;
  coords.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    coords.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return Vector(std::move(coords));
}

PointSet point_set_at(const json& j, int dim, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("expected a nonempty array of vectors", path);
  }
  std::vector<Vector> pts;
  pts.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    pts.push_back(vector_at(j[i], dim, path + "[" + std::to_string(i) + "]"));
  }
  return PointSet(std::move(pts));
}

DCPair dc_at(const json& j, int dim, const std::string& path) {
  if (!j.is_object() || !j.contains("plus") || !j.contains("minus")) {
    throw ParseError("dc payload needs \"plus\" and \"minus\" generator lists", path);
  }
  return DCPair(MaxOfLinear(point_set_at(j["plus"], dim, path + ".plus")),
                MaxOfLinear(point_set_at(j["minus"], dim, path + ".minus")));
}

SaddleFamily saddle_at(const json& j, int dim, const std::string& path) {
  if (!j.is_object() || !j.contains("entries")) {
    throw ParseError("saddle payload needs an \"entries\" grid", path);
  }
  const json& grid = j["entries"];
  if (!grid.is_array() || grid.empty()) {
    throw ParseError("expected a nonempty array of rows", path + ".entries");
  }
  std::vector<Vector> entries;
  const int cols = grid[0].is_array() ? static_cast<int>(grid[0].size()) : 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const std::string row_path = path + ".entries[" + std::to_string(i) + "]";
    if (!grid[i].is_array() || grid[i].empty()) {
      throw ParseError("expected a nonempty row of vectors", row_path);
    }
    if (static_cast<int>(grid[i].size()) != cols) {
      throw ParseError("ragged grid: row has " + std::to_string(grid[i].size()) +
                           " entries, row 0 has " + std::to_string(cols),
                       row_path);
    }
    for (size_t s = 0; s < grid[i].size(); ++s) {
      entries.push_back(
          vector_at(grid[i][s], dim, row_path + "[" + std::to_string(s) + "]"));
    }
  }
  return SaddleFamily(dim, static_cast<int>(grid.size()), cols, std::move(entries));
}

ApproximationFamilies families_at(const json& j, int dim, const std::string& path) {
  if (!j.is_object() || !j.contains("upper") || !j.contains("lower")) {
    throw ParseError("families payload needs \"upper\" and \"lower\" lists", path);
  }
  const json& up = j["upper"];
  const json& lo = j["lower"];
  if (!up.is_array() || up.empty()) {
    throw ParseError("expected a nonempty array of generator lists", path + ".upper");
  }
  if (!lo.is_array() || lo.empty()) {
    throw ParseError("expected a nonempty array of generator lists", path + ".lower");
  }
  std::vector<MaxOfLinear> upper;
  for (size_t i = 0; i < up.size(); ++i) {
    upper.emplace_back(point_set_at(up[i], dim, path + ".upper[" + std::to_string(i) + "]"));
  }
  std::vector<MinOfLinear> lower;
  for (size_t i = 0; i < lo.size(); ++i) {
    lower.emplace_back(point_set_at(lo[i], dim, path + ".lower[" + std::to_string(i) + "]"));
  }
  return ApproximationFamilies(std::move(upper), std::move(lower));
}

void write_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void write_string(std::string& out, const std::string& s) {
  out += json(s).dump();  // handles escaping
}

void write_vector(std::string& out, const Vector& v) {
  out += '[';
  for (int i = 0; i < v.dim(); ++i) {
    if (i > 0) out += ", ";
    write_number(out, v[i]);
  }
  out += ']';
}

void write_point_set(std::string& out, const PointSet& ps,
                     const std::string& indent) {
  out += "[\n";
  for (int i = 0; i < ps.size(); ++i) {
    out += indent + "  ";
    write_vector(out, ps[i]);
    if (i + 1 < ps.size()) out += ',';
    out += '\n';
  }
  out += indent + "]";
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " at line " + std::to_string(line) +
                         ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

ParseError::ParseError(const std::string& message, const std::string& path)
    : std::runtime_error(message + " at " + path), path_(path) {}

Document make_dc_document(DCPair payload, std::string name,
                          std::string description) {
  Document d;
  d.dim = payload.dim();
  d.kind = Document::Kind::kDc;
  d.payload = std::move(payload);
  d.name = std::move(name);
  d.description = std::move(description);
  return d;
}

Document make_saddle_document(SaddleFamily payload, std::string name,
                              std::string description) {
  Document d;
  d.dim = payload.dim();
  d.kind = Document::Kind::kSaddle;
  d.payload = std::move(payload);
  d.name = std::move(name);
  d.description = std::move(description);
  return d;
}

Document make_families_document(ApproximationFamilies payload, std::string name,
                                std::string description) {
  Document d;
  d.dim = payload.dim();
  d.kind = Document::Kind::kFamilies;
  d.payload = std::move(payload);
  d.name = std::move(name);
  d.description = std::move(description);
  return d;
}

const char* kind_name(Document::Kind kind) {
  switch (kind) {
    case Document::Kind::kDc:
      return "dc";
    case Document::Kind::kSaddle:
      return "saddle";
    case Document::Kind::kFamilies:
      return "families";
  }
  return "?";
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("JSON syntax error: ") + e.what(), line, col);
  } catch (const json::exception& e) {
    // e.g. out_of_range for literals like 1e999 that overflow a double.
    throw ParseError(std::string("JSON error: ") + e.what(), "$");
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object", "$");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
    throw ParseError("missing integer \"format_version\"", "format_version");
  }
  const int version = j["format_version"].get<int>();
  if (version != 1) {
    throw ParseError("unsupported format_version " + std::to_string(version),
                     "format_version");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("missing integer \"dim\"", "dim");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("\"dim\" must be >= 1", "dim");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("missing string \"kind\"", "kind");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("payload")) throw ParseError("missing \"payload\"", "payload");

  Document d;
  d.format_version = version;
  d.dim = dim;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string", "name");
    d.name = j["name"].get<std::string>();
  }
  if (j.contains("description")) {
    if (!j["description"].is_string()) {
      throw ParseError("\"description\" must be a string", "description");
    }
    d.description = j["description"].get<std::string>();
  }
  if (kind == "dc") {
    d.kind = Document::Kind::kDc;
    d.payload = dc_at(j["payload"], dim, "payload");
  } else if (kind == "saddle") {
    d.kind = Document::Kind::kSaddle;
    d.payload = saddle_at(j["payload"], dim, "payload");
  } else if (kind == "families") {
    d.kind = Document::Kind::kFamilies;
    d.payload = families_at(j["payload"], dim, "payload");
  } else {
    throw ParseError("unknown kind \"" + kind + "\"", "kind");
  }
  return d;
}

std::string serialize_document(const Document& doc) {
  std::string out = "{\n";
  out += "  \"format_version\": " + std::to_string(doc.format_version) + ",\n";
  out += "  \"kind\": \"" + std::string(kind_name(doc.kind)) + "\",\n";
  out += "  \"dim\": " + std::to_string(doc.dim) + ",\n";
  if (!doc.name.empty()) {
    out += "  \"name\": ";
    write_string(out, doc.name);
    out += ",\n";
  }
  if (!doc.description.empty()) {
    out += "  \"description\": ";
    write_string(out, doc.description);
    out += ",\n";
  }
  out += "  \"payload\": {\n";
  switch (doc.kind) {
    case Document::Kind::kDc: {
      const DCPair& p = doc.dc();
      out += "    \"plus\": ";
      write_point_set(out, p.plus().generators(), "    ");
      out += ",\n    \"minus\": ";
      write_point_set(out, p.minus().generators(), "    ");
      out += '\n';
      break;
    }
    case Document::Kind::kSaddle: {
      const SaddleFamily& F = doc.saddle();
      out += "    \"entries\": [\n";
      for (int i = 0; i < F.rows(); ++i) {
        out += "      [";
        for (int s = 0; s < F.cols(); ++s) {
          if (s > 0) out += ", ";
          write_vector(out, F.entry(i, s));
        }
        out += ']';
        if (i + 1 < F.rows()) out += ',';
        out += '\n';
      }
      out += "    ]\n";
      break;
    }
    case Document::Kind::kFamilies: {
      const ApproximationFamilies& fams = doc.families();
      out += "    \"upper\": [\n";
      for (size_t i = 0; i < fams.upper().size(); ++i) {
        out += "      ";
        write_point_set(out, fams.upper()[i].generators(), "      ");
        if (i + 1 < fams.upper().size()) out += ',';
        out += '\n';
      }
      out += "    ],\n    \"lower\": [\n";
      for (size_t i = 0; i < fams.lower().size(); ++i) {
        out += "      ";
        write_point_set(out, fams.lower()[i].generators(), "      ");
        if (i + 1 < fams.lower().size()) out += ',';
        out += '\n';
      }
      out += "    ]\n";
      break;
    }
  }
  out += "  }\n}\n";
  return out;
}

}  // namespace saddlecalc
