#ifndef BHCUT_ERROR_HPP
#define BHCUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bhcut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// n < 1, n above the configured cap, or an operation that needs n >= 2.
class DimensionError : public Error {
public:
    using Error::Error;
};

class UnknownVertexError : public Error {
public:
    using Error::Error;
};

class IdenticalVerticesError : public Error {
public:
    using Error::Error;
};

// Graph or enumeration larger than the configured cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

// Search gave up; last_level_cleared is the largest family size proven to contain no cut.
class BudgetExhaustedError : public Error {
public:
    BudgetExhaustedError(const std::string& what, int last_level_cleared)
        : Error(what), last_level_cleared_(last_level_cleared) {}

    int last_level_cleared() const noexcept { return last_level_cleared_; }

private:
    int last_level_cleared_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace bhcut

#endif  // BHCUT_ERROR_HPP
