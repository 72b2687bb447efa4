#ifndef TAILSUM_CSV_HPP
#define TAILSUM_CSV_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace tailsum {

// Fixed "%.12g" formatting so identical runs emit identical bytes.
inline std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    }

    void raw_row(const std::string& line) { out_ << line << '\n'; }

    template <class... Cols>
    void row(const Cols&... cols) {
        bool first = true;
        ((out_ << (first ? "" : ","), first = false, put(cols)), ...);
        out_ << '\n';
    }

private:
    void put(double v) { out_ << fmt_num(v); }
    void put(long long v) { out_ << v; }
    void put(long v) { out_ << v; }
    void put(int v) { out_ << v; }
    void put(const std::string& v) { out_ << v; }
    void put(const char* v) { out_ << v; }

    std::ofstream out_;
};

}  // namespace tailsum

#endif
