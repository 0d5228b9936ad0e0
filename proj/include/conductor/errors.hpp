#pragma once

#include <stdexcept>
#include <string>

namespace conductor {

// Input data that fails a structural check. `path` names the offending field,
// e.g. "extensions[2].embeddings[1]".
class ValidationError : public std::invalid_argument {
  public:
    ValidationError(std::string path, const std::string& what)
        : std::invalid_argument(path.empty() ? what : path + ": " + what), path_(std::move(path)), message_(what) {}

    const std::string& path() const { return path_; }
    const std::string& message() const { return message_; }

    // The same error reported under `prefix` (joined with '.').
    ValidationError nested_in(const std::string& prefix) const {
        return ValidationError(path_.empty() ? prefix : prefix + "." + path_, message_);
    }

  private:
    std::string path_;
    std::string message_;
};

}  // namespace conductor
