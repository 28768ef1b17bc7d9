#pragma once

// Shared test scaffolding: unique temp directories and small file helpers.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

// Unique per-instance directory under the system temp dir, removed on scope
// exit.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        auto base = std::filesystem::temp_directory_path();
        path = base / ("polarqa-test-" + std::to_string(::getpid()) + "-" +
                       std::to_string(++counter));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
