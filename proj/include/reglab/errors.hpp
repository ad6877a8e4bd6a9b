#pragma once

#include <stdexcept>
#include <string>

namespace reglab {

// Machine-readable failure classes. The numeric value doubles as the CLI
// exit status, so keep it in sync with the README.
enum class ErrorCode {
    ok = 0,
    parse = 2,        // malformed input, invalid domain data, non-split factors
    unreachable = 3,  // polylog argument outside the series-reachable locus
    window = 4,       // truncated coefficient needed, or precision exhausted
    condition = 5,    // a symbol-element condition check failed
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string tag, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? tag : tag + ": " + detail),
          code_(code),
          tag_(std::move(tag)) {}

    ErrorCode code() const { return code_; }
    // Stable short identifier, e.g. "window exhausted".
    const std::string& tag() const { return tag_; }

  private:
    ErrorCode code_;
    std::string tag_;
};

[[noreturn]] inline void throw_parse(const std::string& tag, const std::string& detail = "") {
    throw Error(ErrorCode::parse, tag, detail);
}
[[noreturn]] inline void throw_unreachable(const std::string& tag, const std::string& detail = "") {
    throw Error(ErrorCode::unreachable, tag, detail);
}
[[noreturn]] inline void throw_window(const std::string& tag, const std::string& detail = "") {
    throw Error(ErrorCode::window, tag, detail);
}
[[noreturn]] inline void throw_condition(const std::string& tag, const std::string& detail = "") {
    throw Error(ErrorCode::condition, tag, detail);
}

}  // namespace reglab
