#include "pancyclic/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pancyclic::io {

using nlohmann::json;

Arrangement parse_tuple(std::string_view text, int ambient) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || end == text.data() + i) {
      throw InvalidArgument("bad tuple \"" + std::string(text) + "\"");
    }
    if (v < 1 || v > ambient) {
      throw InvalidArgument("value " + std::to_string(v) + " outside [1, " + std::to_string(ambient) + "]");
    }
    values.push_back(v - 1);
    i = static_cast<std::size_t>(end - text.data());
  }
  if (values.empty()) throw InvalidArgument("empty tuple");
  return Arrangement(values, ambient);
}

std::string format_tuple(const Arrangement& x) {
  std::string out;
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(x[i] + 1);
  }
  return out;
}

oracle::Edge parse_edge(std::string_view text, const GraphSpec& spec) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw InvalidArgument("edge must look like \"u|v\"");
  }
  oracle::Edge e{parse_tuple(text.substr(0, bar), spec.ambient()), parse_tuple(text.substr(bar + 1), spec.ambient())};
  if (!is_vertex(spec, e.first) || !is_vertex(spec, e.second)) {
    throw InvalidArgument("edge endpoints are not vertices of " + spec.to_string());
  }
  return e;
}

std::string format_edge(const oracle::Edge& e) { return format_tuple(e.first) + "|" + format_tuple(e.second); }

std::string witness_to_json(const CycleWitness& w, const std::optional<oracle::Edge>& target, int indent) {
  json j;
  j["spec"] = w.spec.to_string();
  j["length"] = w.length();
  json vertices = json::array();
  for (const auto& v : w.vertices) vertices.push_back(format_tuple(v));
  j["vertices"] = std::move(vertices);
  if (target) j["target_edge"] = {format_tuple(target->first), format_tuple(target->second)};
  return j.dump(indent);
}

WitnessFile witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("witness is not valid JSON: ") + e.what());
  }
  try {
    const GraphSpec spec = GraphSpec::parse(j.at("spec").get<std::string>());
    WitnessFile out{CycleWitness{spec, {}}, std::nullopt};
    for (const auto& v : j.at("vertices")) out.witness.vertices.push_back(parse_tuple(v.get<std::string>(), spec.ambient()));
    if (j.contains("length") && j["length"].get<int>() != out.witness.length()) {
      throw InvalidArgument("\"length\" does not match the vertex count");
    }
    if (j.contains("target_edge")) {
      const auto& t = j["target_edge"];
      if (!t.is_array() || t.size() != 2) throw InvalidArgument("\"target_edge\" must hold two tuples");
      out.target_edge = oracle::Edge{parse_tuple(t[0].get<std::string>(), spec.ambient()),
                                     parse_tuple(t[1].get<std::string>(), spec.ambient())};
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed witness: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace pancyclic::io
