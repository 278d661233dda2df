#pragma once
// Error kinds shared between the C++ core and the C API status codes.
// Keep the numeric values stable: they are re-exported through clca.h.

#include <stdexcept>
#include <string>

namespace clca {

enum class errc : int {
  ok = 0,
  io = 1,        // file missing or unreadable
  parse = 2,     // malformed number / config syntax
  schema = 3,    // missing column, key, or field
  link = 4,      // dangling cross-reference (mode, scenario, mix, infra)
  domain = 5,    // value outside its mathematical domain
  empty = 6,     // empty input where at least one record is required
  argument = 7,  // bad argument at an API boundary
};

class Error : public std::runtime_error {
public:
  Error(errc kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace clca
