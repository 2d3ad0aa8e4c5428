#include "wqed/csv.hpp"

#include <cstdio>

namespace wqed::io {

namespace {
std::FILE* handle(void* p) { return static_cast<std::FILE*>(p); }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path) {
    file_ = std::fopen(path.c_str(), "w");
    if (!file_) throw io_error("cannot open for writing: " + path);
}

CsvWriter::~CsvWriter() {
    if (file_) std::fclose(handle(file_));
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    if (columns_written_) throw io_error("CSV metadata must precede the column header");
    std::fprintf(handle(file_), "# %s=%s\n", key.c_str(), value.c_str());
}

void CsvWriter::meta(const std::string& key, double value) { meta(key, format_double(value)); }

void CsvWriter::meta(const std::string& key, int value) { meta(key, std::to_string(value)); }

void CsvWriter::columns(const std::vector<std::string>& names) {
    std::string line;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) line += ',';
        line += names[i];
    }
    std::fprintf(handle(file_), "%s\n", line.c_str());
    columns_written_ = true;
}

void CsvWriter::row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += format_double(values[i]);
    }
    std::fprintf(handle(file_), "%s\n", line.c_str());
}

void CsvWriter::close() {
    if (!file_) return;
    if (std::fclose(handle(file_)) != 0) {
        file_ = nullptr;
        throw io_error("write failure on: " + path_);
    }
    file_ = nullptr;
}

}  // namespace wqed::io
