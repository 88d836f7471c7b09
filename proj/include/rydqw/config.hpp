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

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rydqw::config {

/// Raised for malformed or invalid configuration; the CLI maps it to exit 2.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Minimal INI dialect: [section] headers, key = value lines, '#' or ';'
/// comments, whitespace-separated value lists.
class Ini {
  public:
    static Ini parse_file(const std::string& path);
    static Ini parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key, double fallback) const;
    long get_int(const std::string& section, const std::string& key) const;
    long get_int_or(const std::string& section, const std::string& key, long fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
    std::vector<long> get_ints(const std::string& section, const std::string& key) const;

    /// Sorted section/key serialization; identical settings hash identically
    /// regardless of order or comments.
    std::string canonical() const;
    std::string hash_hex() const;

  private:
    std::map<std::string, std::map<std::string, std::string>> data_;
    std::string origin_;
};

/// Parse an angle value: plain radians, or "pi/10"-style fractions
/// (also "4pi/10", "pi", "-pi/2").
double parse_angle(const std::string& text);

}  // namespace rydqw::config
