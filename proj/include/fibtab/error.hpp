#pragma once

#include <stdexcept>
#include <string>

namespace fibtab {

// Library-wide error. `index()` carries a 1-based step/token position when
// the failure is tied to one (parse errors, chain steps, uninsert stages);
// it is -1 otherwise.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what, int index = -1)
      : std::runtime_error(what), index_(index) {}

  int index() const { return index_; }

private:
  int index_;
};

}  // namespace fibtab
