#include "cpeb/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpeb {
namespace {

using nlohmann::json;

json spec_to_json(const DecisionClassSpec& spec) {
  json out;
  out["kind"] = to_string(spec.kind);
  if (spec.kind == ClassKind::TopK) {
    out["k"] = spec.k;
    return out;
  }
  out["num_vertices"] = spec.num_vertices;
  json edges = json::array();
  for (const GraphEdge& e : spec.edges) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (spec.kind == ClassKind::STPath) {
    out["source"] = spec.source;
    out["sink"] = spec.sink;
  }
  return out;
}

DecisionClassSpec spec_from_json(const json& in) {
  DecisionClassSpec spec;
  spec.kind = class_kind_from_string(in.at("kind").get<std::string>());
  if (spec.kind == ClassKind::TopK) {
    spec.k = in.at("k").get<int>();
    return spec;
  }
  spec.num_vertices = in.at("num_vertices").get<int>();
  for (const json& e : in.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("edges must be [u, v] pairs");
    spec.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  if (spec.kind == ClassKind::STPath) {
    spec.source = in.at("source").get<int>();
    spec.sink = in.at("sink").get<int>();
  }
  return spec;
}

}  // namespace

Instance instance_from_json_text(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& err) {
    throw ValidationError(std::string("instance JSON parse error: ") +
                          err.what());
  }
  Instance instance;
  try {
    instance.n = in.at("n").get<int>();
    instance.means = in.at("means").get<WeightVector>();
    instance.noise_scale = in.at("noise_scale").get<double>();
    instance.class_spec = spec_from_json(in.at("class"));
  } catch (const json::exception& err) {
    throw ValidationError(std::string("instance JSON field error: ") +
                          err.what());
  }
  check_instance(instance);
  return instance;
}

std::string instance_to_json_text(const Instance& instance) {
  json out;
  out["n"] = instance.n;
  out["means"] = instance.means;
  out["noise_scale"] = instance.noise_scale;
  out["class"] = spec_to_json(instance.class_spec);
  return out.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json_text(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json_text(instance);
}

}  // namespace cpeb
