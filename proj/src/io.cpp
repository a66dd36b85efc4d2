#include "hyperdet/io.hpp"

#include "hyperdet/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hdet {

using nlohmann::json;

MultiMatrix parse_tensor_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("entries")) {
    throw ParseError("tensor document must be an object with \"dims\" and \"entries\"");
  }
  const json& jdims = doc["dims"];
  const json& jentries = doc["entries"];
  if (!jdims.is_array() || !jentries.is_array()) {
    throw ParseError("\"dims\" and \"entries\" must be arrays");
  }
  std::vector<std::size_t> dims;
  for (const auto& d : jdims) {
    if (!d.is_number_integer() || d.get<long long>() <= 0) {
      throw ParseError("dims must be positive integers, got " + d.dump());
    }
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<Scalar> entries;
  entries.reserve(jentries.size());
  for (const auto& e : jentries) {
    if (e.is_string()) {
      entries.push_back(parse_scalar(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      entries.push_back(parse_scalar(e.dump()));
    } else {
      throw ParseError("entries must be integer or \"p/q\" strings, got " + e.dump());
    }
  }
  try {
    return MultiMatrix::from_entries(Format(std::move(dims)), std::move(entries));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::string to_tensor_json(const MultiMatrix& a) {
  json doc;
  doc["dims"] = std::vector<std::size_t>(a.format().dims().begin(), a.format().dims().end());
  json entries = json::array();
  for (const auto& x : a.entries()) entries.push_back(to_string(x));
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

MultiMatrix read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tensor_json(buf.str());
}

void write_tensor_file(const std::filesystem::path& path, const MultiMatrix& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_tensor_json(a);
}

}  // namespace hdet
