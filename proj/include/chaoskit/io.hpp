#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace chaoskit {

inline constexpr const char* kVersion = "0.1.0";

/// %.16e — scientific notation with 17 significant digits, the format
/// every CSV artifact uses.
std::string format_sci(double v);

/// Minimal CSV emitter with the project-wide numeric format.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void header(const std::vector<std::string>& names);
    CsvWriter& field(long long v);
    CsvWriter& field(double v);
    CsvWriter& field(const std::string& v);
    void endrow();

private:
    std::ofstream out_;
    bool first_ = true;
    void sep();
};

/// Parses "a,b,c" or the geometric doubling range "a..b".
std::vector<long long> parse_n_list(const std::string& text);

} // namespace chaoskit
