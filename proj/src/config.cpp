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

#include "rydqw/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rydqw/common.hpp"

namespace rydqw::config {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

Ini Ini::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

Ini Ini::parse_string(const std::string& text, const std::string& origin) {
    Ini ini;
    ini.origin_ = origin;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error(origin + ":" + std::to_string(lineno) + ": unterminated section");
            section = lower(trim(line.substr(1, line.size() - 2)));
            if (section.empty())
                throw config_error(origin + ":" + std::to_string(lineno) + ": empty section name");
            ini.data_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        ini.data_[section][key] = value;
    }
    return ini;
}

bool Ini::has(const std::string& section, const std::string& key) const {
    const auto s = data_.find(lower(section));
    return s != data_.end() && s->second.count(lower(key)) > 0;
}

std::string Ini::get(const std::string& section, const std::string& key) const {
    const auto s = data_.find(lower(section));
    if (s == data_.end())
        throw config_error(origin_ + ": missing section [" + section + "]");
    const auto k = s->second.find(lower(key));
    if (k == s->second.end())
        throw config_error(origin_ + ": missing key '" + key + "' in [" + section + "]");
    return k->second;
}

std::string Ini::get_or(const std::string& section, const std::string& key,
                        const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double Ini::get_double(const std::string& section, const std::string& key) const {
    const std::string v = get(section, key);
    try {
        return parse_angle(v);
    } catch (const std::exception&) {
        throw config_error(origin_ + ": bad number for '" + key + "': " + v);
    }
}

double Ini::get_double_or(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

long Ini::get_int(const std::string& section, const std::string& key) const {
    const std::string v = get(section, key);
    long out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw config_error(origin_ + ": bad integer for '" + key + "': " + v);
    return out;
}

long Ini::get_int_or(const std::string& section, const std::string& key, long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

bool Ini::get_bool_or(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = lower(get(section, key));
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw config_error(origin_ + ": bad boolean for '" + key + "': " + v);
}

std::vector<double> Ini::get_doubles(const std::string& section, const std::string& key) const {
    std::istringstream in(get(section, key));
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        try {
            out.push_back(parse_angle(tok));
        } catch (const std::exception&) {
            throw config_error(origin_ + ": bad number in list '" + key + "': " + tok);
        }
    }
    if (out.empty()) throw config_error(origin_ + ": empty list for '" + key + "'");
    return out;
}

std::vector<long> Ini::get_ints(const std::string& section, const std::string& key) const {
    std::istringstream in(get(section, key));
    std::vector<long> out;
    std::string tok;
    while (in >> tok) {
        long v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw config_error(origin_ + ": bad integer in list '" + key + "': " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw config_error(origin_ + ": empty list for '" + key + "'");
    return out;
}

std::string Ini::canonical() const {
    std::ostringstream out;
    for (const auto& [section, kv] : data_) {
        out << '[' << section << "]\n";
        for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
    }
    return out.str();
}

std::string Ini::hash_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical())));
    return buf;
}

double parse_angle(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty number");
    double sign = 1.0;
    if (s.front() == '-') {
        sign = -1.0;
        s.erase(0, 1);
    } else if (s.front() == '+') {
        s.erase(0, 1);
    }
    const auto p = s.find("pi");
    if (p != std::string::npos) {
        const std::string pre = trim(s.substr(0, p));
        std::string post = trim(s.substr(p + 2));
        double value = pre.empty() ? 1.0 : std::stod(pre);
        if (!post.empty()) {
            if (post.front() != '/') throw std::invalid_argument("bad angle: " + text);
            value /= std::stod(post.substr(1));
        }
        return sign * value * pi;
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number: " + text);
    return sign * v;
}

}  // namespace rydqw::config
