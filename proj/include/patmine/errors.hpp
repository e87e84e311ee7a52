#ifndef PATMINE_ERRORS_HPP
#define PATMINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace patmine {

// Input errors map to CLI exit code 2, validation errors to exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileUnreadable : InputError {
    explicit FileUnreadable(const std::string& path)
        : InputError("file unreadable: " + path) {}
};

struct EmptyDocument : InputError {
    explicit EmptyDocument(const std::string& id)
        : InputError("empty document: " + id) {}
};

} // namespace patmine

#endif
