#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wcl/report.hpp"

namespace wcl {

// Config file grammar, one entry per line:
//   # comment
//   key = value
//   [section]          keys below are read as section.key
// Lists are comma separated.
class Config {
public:
    static Config parse(std::string_view text);
    static Config load(const std::string& path);

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    bool contains(const std::string& key) const { return values_.count(key) != 0; }

    std::string get(const std::string& key, const std::string& fallback) const;
    int get_int(const std::string& key, int fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;

private:
    std::map<std::string, std::string> values_;
};

enum class Profile { quick, full };

Profile profile_from_string(std::string_view s);
std::string_view to_string(Profile p);

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(std::string_view name);

// Runs one suite (or "all", in suite_names() order). Keys are read from the
// section named after the suite, e.g. [ccr] N = 64.
VerificationReport run_suite(std::string_view name, const Config& cfg, Profile profile);

}  // namespace wcl
