#pragma once

#include "skdv/config.hpp"

#include <string>
#include <vector>

namespace skdv {

// Deterministic CSV writer: fixed header, rows of pre-formatted cells.
class CsvWriter {
public:
    CsvWriter(std::string path, std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    void close();
    ~CsvWriter();

private:
    std::string path_;
    std::string body_;
    size_t ncols_;
    bool closed_ = false;
};

// %.17g, locale-free; round trips doubles exactly.
std::string fmt_g17(double x);

void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);

// MANIFEST: canonical config dump, its hash, the seed, the library version,
// and a timestamp (the one non-reproducible field).
void write_manifest(const std::string& out_dir, const ExperimentConfig& cfg);

void ensure_dir(const std::string& path);

} // namespace skdv
