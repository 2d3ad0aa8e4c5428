#pragma once

// Deterministic CSV emission: "#" comment header recording every parameter,
// then comma-separated rows with "." decimal points. Complex quantities are
// written as two adjacent columns by the callers.

#include "wqed/types.hpp"

#include <string>
#include <vector>

namespace wqed::io {

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);
    void meta(const std::string& key, int value);
    void columns(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void close();

private:
    void* file_ = nullptr;
    std::string path_;
    bool columns_written_ = false;
};

std::string format_double(double v);

}  // namespace wqed::io
