#pragma once
// Shared bits for the unit suites: fixture locations, an exception probe, and
// throwaway files/directories for loader error-path tests.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>

#include "clca/error.hpp"

inline std::string paris_dir() { return CLCA_PARIS_DIR; }
inline std::string minicity_dir() { return CLCA_MINICITY_DIR; }

// A scratch directory removed on scope exit. write() drops a file into it.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("clca-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string write(const std::string& name, const std::string& content) const {
    std::filesystem::path p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

// Runs f and reports the error class it threw (errc::ok = no throw), so tests
// can assert both that a call fails and *how* it fails.
template <typename F>
clca::errc error_kind(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const clca::Error& e) {
    return e.kind();
  }
  return clca::errc::ok;
}

// Message of the thrown Error ("" when f does not throw).
template <typename F>
std::string error_text(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const clca::Error& e) {
    return e.what();
  }
  return "";
}
