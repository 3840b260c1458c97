#include "wcl/report.hpp"

#include <cmath>
#include <cstdio>

namespace wcl {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void VerificationReport::set(std::string key, std::string value) {
    lines_.push_back({std::move(key), std::move(value)});
}

void VerificationReport::set(std::string key, double value) { set(std::move(key), format_double(value)); }

void VerificationReport::set(std::string key, long long value) { set(std::move(key), std::to_string(value)); }

void VerificationReport::set(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }

bool VerificationReport::check(const std::string& key, double measured, double limit) {
    bool ok = measured < limit;  // NaN fails
    set(key, measured);
    set(key + ".limit", limit);
    set(key + ".pass", ok);
    if (!ok) failures_.push_back(key + " = " + format_double(measured) + " (limit " + format_double(limit) + ")");
    return ok;
}

bool VerificationReport::check_le(const std::string& key, double measured, double limit) {
    bool ok = measured <= limit;
    set(key, measured);
    set(key + ".limit", limit);
    set(key + ".pass", ok);
    if (!ok) failures_.push_back(key + " = " + format_double(measured) + " (limit " + format_double(limit) + ")");
    return ok;
}

bool VerificationReport::require(const std::string& key, bool ok, std::string detail) {
    set(key + ".pass", ok);
    if (!ok) failures_.push_back(detail.empty() ? key : key + ": " + detail);
    return ok;
}

void VerificationReport::merge(const VerificationReport& other, std::string_view prefix) {
    std::string p(prefix);
    for (const auto& l : other.lines_) lines_.push_back({p + "." + l.key, l.value});
    for (const auto& f : other.failures_) failures_.push_back(p + "." + f);
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const auto& l : lines_) {
        if (!name_.empty()) out += name_ + ".";
        out += l.key + " = " + l.value + "\n";
    }
    return out;
}

}  // namespace wcl
