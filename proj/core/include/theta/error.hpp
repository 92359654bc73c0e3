#pragma once

#include <stdexcept>
#include <string>

namespace theta {

// All library failures carry a stable rule name ("ShapeError", "ParityError",
// ...) next to the human-readable message. The CLI prints the name on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
  throw Error(std::move(name), what);
}

inline void require(bool cond, const char* name, const std::string& what) {
  if (!cond) fail(name, what);
}

}  // namespace theta
