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

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace rydqw::io {

/// Writes a file atomically enough for our purposes: stream into the final
/// path, throw std::runtime_error on failure.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

std::string format_full(double v);  // 17 significant digits

/// Run manifest: one entry per output file, keyed by the config hash so
/// identical configs can be recognized as identical runs.
struct ManifestEntry {
    std::string file;
    std::string stage;
    double seconds = 0.0;
};

struct Manifest {
    std::string config_path;
    std::string config_hash;
    std::string tool_version;
    std::vector<ManifestEntry> entries;

    void add(const std::string& file, const std::string& stage, double seconds);
    void write(const std::filesystem::path& path) const;
};

}  // namespace rydqw::io
