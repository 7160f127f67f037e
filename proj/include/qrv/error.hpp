#pragma once

#include <stdexcept>
#include <string>

namespace qrv {

// Every validation or contract failure in the library throws this; the CLI
// turns it into {"status":"error",...} with exit code 1.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

}  // namespace qrv
