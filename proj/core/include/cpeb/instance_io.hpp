#pragma once

#include <string>

#include "cpeb/types.hpp"

namespace cpeb {

// On-disk instance format: a JSON object
//   {"n": int, "means": [..], "noise_scale": x, "class": {"kind": ..}}
// with 0-based arm and vertex indices. See README for the per-kind payloads.

Instance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace cpeb
