#ifndef WITT_ERRORS_HPP
#define WITT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace witt {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};
struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct LaurentViolation : std::runtime_error {
    explicit LaurentViolation(const std::string& m) : std::runtime_error(m) {}
};
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& m) : std::runtime_error(m) {}
};
struct ModeError : std::runtime_error {
    explicit ModeError(const std::string& m) : std::runtime_error(m) {}
};
struct SeriesError : std::runtime_error {
    explicit SeriesError(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidSyzygy : std::runtime_error {
    explicit InvalidSyzygy(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace witt

#endif
