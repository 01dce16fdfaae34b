#include "skdv/report.hpp"

#include "skdv/errors.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace skdv {

CsvWriter::CsvWriter(std::string path, std::vector<std::string> header)
    : path_(std::move(path)), ncols_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i)
            body_ += ",";
        body_ += header[i];
    }
    body_ += "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_)
        throw Error("CSV row arity mismatch in " + path_);
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i)
            body_ += ",";
        body_ += cells[i];
    }
    body_ += "\n";
}

void CsvWriter::close() {
    if (closed_)
        return;
    write_text_file(path_, body_);
    closed_ = true;
}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (...) {
    }
}

std::string fmt_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot open " + path + " for writing");
    os << body;
    if (!os)
        throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void ensure_dir(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec)
        throw Error("cannot create directory " + path + ": " + ec.message());
}

void write_manifest(const std::string& out_dir, const ExperimentConfig& cfg) {
    std::string canon;
    for (const auto& [k, v] : cfg.as_map())
        canon += k + "=" + v + "\n";
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    std::string body;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon)));
    body += "config_hash=" + std::string(hash) + "\n";
    body += "seed=" + std::to_string(cfg.seed) + "\n";
    body += "version=skdv-1.0\n";
    body += "timestamp=" + std::to_string(secs) + "\n";
    body += "# --- config ---\n";
    body += canon;
    write_text_file(out_dir + "/MANIFEST", body);
}

} // namespace skdv
