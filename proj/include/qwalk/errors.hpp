#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Error families map to process exit codes:
//   2  rejected inputs (validation, parameters, ranges, shapes, capacity)
//   3  numerical integrity broken mid-computation (trace drift, boundary
//      leakage, defective channel)
//   4  filesystem failures
class error : public std::runtime_error {
public:
    error(const std::string& msg, int exit_code)
        : std::runtime_error(msg), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

class validation_error : public error {
public:
    explicit validation_error(const std::string& msg) : error(msg, 2) {}
};

class parameter_error : public validation_error {
public:
    explicit parameter_error(const std::string& msg) : validation_error(msg) {}
};

class range_error : public validation_error {
public:
    explicit range_error(const std::string& msg) : validation_error(msg) {}
};

class shape_error : public validation_error {
public:
    explicit shape_error(const std::string& msg) : validation_error(msg) {}
};

class capacity_error : public validation_error {
public:
    explicit capacity_error(const std::string& msg) : validation_error(msg) {}
};

class integrity_error : public error {
public:
    explicit integrity_error(const std::string& msg) : error(msg, 3) {}
};

// Amplitude reached a line-lattice edge; the lattice was sized too small.
class boundary_error : public integrity_error {
public:
    explicit boundary_error(const std::string& msg) : integrity_error(msg) {}
};

// Kraus set failed its completeness check.
class channel_error : public integrity_error {
public:
    explicit channel_error(const std::string& msg) : integrity_error(msg) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg, 4) {}
};

}  // namespace qwalk
