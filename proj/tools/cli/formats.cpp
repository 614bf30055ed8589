#include "formats.hpp"

#include <fstream>

namespace polysse::cli {

std::string_view flag_name(RingTag ring) {
  switch (ring) {
    case RingTag::Zx:
      return "Zx";
    case RingTag::Qx:
      return "Qx";
    case RingTag::Sphere:
      return "sphere";
  }
  return "";
}

std::string_view file_name(RingTag ring) {
  switch (ring) {
    case RingTag::Zx:
      return "Z[x]";
    case RingTag::Qx:
      return "Q[x]";
    case RingTag::Sphere:
      return "Q[x,y,z]/(x^2+y^2+z^2-1)";
  }
  return "";
}

RingTag ring_from_flag(std::string_view flag) {
  for (RingTag r : {RingTag::Zx, RingTag::Qx, RingTag::Sphere}) {
    if (flag == flag_name(r)) return r;
  }
  throw UsageError("unknown ring '" + std::string(flag) + "', expected Zx, Qx or sphere");
}

RingTag ring_from_file(std::string_view name) {
  for (RingTag r : {RingTag::Zx, RingTag::Qx, RingTag::Sphere}) {
    if (name == file_name(r)) return r;
  }
  throw UsageError("unknown ring '" + std::string(name) + "'");
}

RingTag ring_of(const json& doc, std::string_view what) {
  if (!doc.is_object() || !doc.contains("ring") || !doc["ring"].is_string()) {
    throw UsageError(std::string(what) + ": missing ring field");
  }
  return ring_from_file(doc["ring"].get<std::string>());
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw UsageError("write to " + path.string() + " failed");
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const Check& c : report.checks) {
    json j = {{"identity", c.identity}, {"passed", c.passed}};
    if (c.step) j["step"] = *c.step;
    if (c.entry) j["entry"] = {c.entry->first, c.entry->second};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"ok", report.ok()}, {"checks", std::move(checks)}};
}

}  // namespace polysse::cli
