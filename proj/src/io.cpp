#include "chaoskit/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace chaoskit {

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
}

void CsvWriter::header(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out_ << ',';
        out_ << names[i];
    }
    out_ << '\n';
}

void CsvWriter::sep() {
    if (!first_) out_ << ',';
    first_ = false;
}

CsvWriter& CsvWriter::field(long long v) {
    sep();
    out_ << v;
    return *this;
}

CsvWriter& CsvWriter::field(double v) {
    sep();
    out_ << format_sci(v);
    return *this;
}

CsvWriter& CsvWriter::field(const std::string& v) {
    sep();
    out_ << v;
    return *this;
}

void CsvWriter::endrow() {
    out_ << '\n';
    first_ = true;
}

std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> out;
    auto range = text.find("..");
    try {
        if (range != std::string::npos) {
            long long a = std::stoll(text.substr(0, range));
            long long b = std::stoll(text.substr(range + 2));
            if (a < 1 || b < a) throw std::invalid_argument("bad range");
            for (long long n = a; n <= b; n *= 2) out.push_back(n);
            return out;
        }
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            out.push_back(std::stoll(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("N-list must be 'a,b,c' or a geometric range 'a..b': got '" +
                                    text + "'");
    }
    if (out.empty()) throw std::invalid_argument("N-list is empty");
    for (long long n : out)
        if (n < 1) throw std::invalid_argument("N-list entries must be >= 1");
    return out;
}

} // namespace chaoskit
