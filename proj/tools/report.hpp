#pragma once

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace backorb::cli {

inline constexpr const char* kArtifactVersion = "backorb 0.1.0";

// One experiment = deterministic result rows + wall-clock timings.  The
// results section is byte-stable across runs with equal inputs; timings
// live in a separate section.
class ExperimentReport {
public:
    ExperimentReport(std::string id, nlohmann::ordered_json inputs)
        : id_(std::move(id)), inputs_(std::move(inputs)), start_(clock_t::now()) {}

    void add_row(nlohmann::ordered_json row, bool ok) {
        rows_.push_back(std::move(row));
        ok_ = ok_ && ok;
        ++(ok ? passed_ : failed_);
    }

    void checkpoint(const std::string& label) {
        auto now = clock_t::now();
        double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        timings_.push_back({label, ms});
    }

    bool all_ok() const { return ok_; }
    size_t passed() const { return passed_; }
    size_t failed() const { return failed_; }
    const std::vector<nlohmann::ordered_json>& rows() const { return rows_; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["experiment"] = id_;
        j["version"] = kArtifactVersion;
        j["inputs"] = inputs_;
        j["results"] = rows_;
        j["passed"] = passed_;
        j["failed"] = failed_;
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (auto& [label, ms] : timings_) t[label] = ms;
        j["timings"] = t;
        return j;
    }

private:
    using clock_t = std::chrono::steady_clock;
    std::string id_;
    nlohmann::ordered_json inputs_;
    std::vector<nlohmann::ordered_json> rows_;
    std::vector<std::pair<std::string, double>> timings_;
    clock_t::time_point start_;
    bool ok_ = true;
    size_t passed_ = 0, failed_ = 0;
};

// aligned plain-text table
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const {
        std::vector<size_t> w(header_.size(), 0);
        for (size_t i = 0; i < header_.size(); ++i) w[i] = header_[i].size();
        for (const auto& r : rows_)
            for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < w.size(); ++i)
                os << std::left << std::setw(static_cast<int>(w[i]) + 2)
                   << (i < r.size() ? r[i] : "");
            os << "\n";
        };
        line(header_);
        std::string sep;
        for (size_t i = 0; i < w.size(); ++i) sep += std::string(w[i], '-') + "  ";
        os << sep << "\n";
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline std::string fmt_double(double v, int prec = 12) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

}  // namespace backorb::cli
