#include "fivec/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fivec {

using nlohmann::json;

RotationSystem rotation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  RotationSystem rs;
  try {
    const int n = j.at("vertices").get<int>();
    rs.rot = j.at("rot").get<std::vector<std::vector<VertexId>>>();
    rs.outer = j.at("outer").get<std::vector<VertexId>>();
    if (static_cast<int>(rs.rot.size()) != n)
      fail(Errc::parse_error, "rot length does not match vertices");
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  return rs;
}

RotationSystem rotation_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rotation_from_json(buf.str());
}

std::string rotation_to_json(const RotationSystem& rs) {
  json j;
  j["vertices"] = rs.rot.size();
  j["rot"] = rs.rot;
  j["outer"] = rs.outer;
  return j.dump(2) + "\n";
}

void rotation_to_file(const RotationSystem& rs, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << rotation_to_json(rs);
}

RotationSystem rotation_of(const PlanarMap& m) {
  return {m.rotation_system(), m.outer_cycle()};
}

}  // namespace fivec
