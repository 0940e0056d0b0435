#pragma once

#include <stdexcept>
#include <string>

namespace coneseries {

// Every failure carries a stable machine-readable code (e.g. "NotSimpleRoot")
// reported verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  enum class Kind { Usage, Domain };

  Error(std::string code, const std::string& detail, Kind kind = Kind::Domain)
      : std::runtime_error(code + ": " + detail),
        code_(std::move(code)),
        detail_(detail),
        kind_(kind) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  Kind kind() const noexcept { return kind_; }

 private:
  std::string code_;
  std::string detail_;
  Kind kind_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
  throw Error(std::move(code), detail);
}

inline void require(bool cond, const char* code, const std::string& detail) {
  if (!cond) throw Error(code, detail);
}

}  // namespace coneseries
