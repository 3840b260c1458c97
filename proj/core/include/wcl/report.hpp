#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wcl {

// Named values and checks, rendered as `key = value` lines in insertion order.
class VerificationReport {
public:
    explicit VerificationReport(std::string name = {}) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    void set(std::string key, std::string value);
    void set(std::string key, double value);
    void set(std::string key, long long value);
    void set(std::string key, int value) { set(std::move(key), static_cast<long long>(value)); }
    void set(std::string key, bool value);

    // Records `key` (the measured value), its limit and a verdict.
    // `pass` is computed as measured < limit unless given explicitly.
    bool check(const std::string& key, double measured, double limit);
    bool check_le(const std::string& key, double measured, double limit);
    bool require(const std::string& key, bool ok, std::string detail = {});

    bool passed() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }

    // Appends another report's lines under `prefix.`; failures propagate.
    void merge(const VerificationReport& other, std::string_view prefix);

    std::string to_text() const;

    struct Line {
        std::string key;
        std::string value;
    };
    const std::vector<Line>& lines() const { return lines_; }

private:
    std::string name_;
    std::vector<Line> lines_;
    std::vector<std::string> failures_;
};

// %.10g; nan/inf spelled out.
std::string format_double(double x);

}  // namespace wcl
