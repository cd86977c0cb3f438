#ifndef TEXTCLF_ERROR_HPP
#define TEXTCLF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace textclf {

// Data / runtime failures. The CLI maps these to exit code 1;
// flag misuse is handled by the argument parser (exit code 2).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace textclf

#endif  // TEXTCLF_ERROR_HPP
