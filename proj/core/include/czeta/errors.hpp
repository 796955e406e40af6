#pragma once

#include <stdexcept>
#include <string>

namespace czeta {

// Argument outside the domain of an operation (wrong half plane, shift
// outside (0,1], rectangle with inverted bounds, and so on).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested at (or too close to) a pole of the function.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

// An iterative scheme (Newton, bisection, adaptive subdivision) exhausted
// its budget without meeting the target.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A zero or pole sits too close to a contour for argument tracking to
// resolve; the caller should perturb the rectangle.
class boundary_error : public convergence_error {
public:
    using convergence_error::convergence_error;
};

// Construction preconditions hold but the numerical object came out
// inconsistent (empty kernel, generated weights off the reference values).
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document; line is 1-based, 0 when not line-oriented.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, long line_no = 0)
        : std::runtime_error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
    long line;
};

} // namespace czeta
