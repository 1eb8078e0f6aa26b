#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

// Minimal CSV emitter: '#'-prefixed metadata lines, a header row, then
// fixed-format data rows. No timestamps, so reruns are byte-identical.
namespace qdt::csv {

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("csv: cannot open " + path);
        out_ << "# generated-by: qdt 1.0\n";
    }
    void meta(const std::string& key, const std::string& value) {
        out_ << "# " << key << ": " << value << "\n";
    }
    void meta(const std::string& key, double value) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", value);
        out_ << "# " << key << ": " << buf << "\n";
    }
    void header(const std::vector<std::string>& cols) {
        for (size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
        out_ << "\n";
    }
    void row(const std::vector<double>& vals) {
        char buf[64];
        for (size_t i = 0; i < vals.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12g", vals[i]);
            out_ << (i ? "," : "") << buf;
        }
        out_ << "\n";
    }
    void raw_row(const std::string& line) { out_ << line << "\n"; }

private:
    std::ofstream out_;
};

}  // namespace qdt::csv
