// Copyright 2026 The rydqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rydqw/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace rydqw::io {

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    body(out);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Manifest::add(const std::string& file, const std::string& stage, double seconds) {
    entries.push_back({file, stage, seconds});
}

void Manifest::write(const std::filesystem::path& path) const {
    nlohmann::json j;
    j["config"] = config_path;
    j["config_hash"] = config_hash;
    j["tool_version"] = tool_version;
    j["outputs"] = nlohmann::json::array();
    for (const auto& e : entries)
        j["outputs"].push_back({{"file", e.file}, {"stage", e.stage}, {"seconds", e.seconds}});
    write_file(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

}  // namespace rydqw::io
