#include "cyclefam/family_json.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace cyclefam {

using nlohmann::ordered_json;

std::string to_json(const FamilyDocument& doc) {
  ordered_json j;
  j["format"] = kFormatVersion;
  j["k"] = doc.k;
  j["t"] = doc.t ? ordered_json(*doc.t) : ordered_json(nullptr);
  auto& points = j["points"] = ordered_json::array();
  for (const auto& p : ground_set(doc.family)) points.push_back(p.str());
  auto& blocks = j["blocks"] = ordered_json::array();
  for (const auto& b : doc.family) {
    auto& row = blocks.emplace_back(ordered_json::array());
    for (const auto& p : b) row.push_back(p.str());
  }
  return j.dump();
}

FamilyDocument family_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw FormatError("family document must be a JSON object");
    if (j.contains("format") && j.at("format").get<int>() != kFormatVersion) {
      throw FormatError("unsupported format version " + j.at("format").dump());
    }
    FamilyDocument doc;
    doc.k = j.at("k").get<int>();
    if (doc.k < 1) throw FormatError("\"k\" must be >= 1");
    if (j.contains("t") && !j.at("t").is_null()) doc.t = j.at("t").get<int>();

    std::vector<Block> blocks;
    for (const auto& row : j.at("blocks")) {
      std::vector<Point> points;
      for (const auto& p : row) points.push_back(Point::parse(p.get<std::string>()));
      blocks.emplace_back(std::move(points));
    }
    doc.family = Family(std::move(blocks), doc.k);

    std::vector<Point> listed;
    for (const auto& p : j.at("points")) listed.push_back(Point::parse(p.get<std::string>()));
    if (make_point_set(std::move(listed)) != ground_set(doc.family)) {
      throw FormatError("\"points\" does not match the union of the blocks");
    }
    return doc;
  } catch (const ordered_json::exception& e) {
    throw FormatError(std::string("malformed family document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed family document: ") + e.what());
  }
}

FamilyDocument read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return family_from_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
  if (!out) throw FormatError("failed writing " + path);
}

}  // namespace cyclefam
