#pragma once

#include <stdexcept>
#include <string>

namespace droneplan {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Domain invariant violated (bad coordinates, weight over capacity, ...).
class validation_error : public error {
  public:
    using error::error;
};

// Instance/route document does not match the expected schema or version.
class schema_error : public error {
  public:
    using error::error;
};

// File could not be read or written.
class io_error : public error {
  public:
    using error::error;
};

// A route sequence that cannot be scored (depot in the middle, duplicate ids).
class malformed_route_error : public error {
  public:
    using error::error;
};

// A customer cannot be served even as a sole delivery.
class infeasible_error : public error {
  public:
    infeasible_error(int customer_id, const std::string& what)
        : error(what), customer_id(customer_id) {}

    int customer_id;
};

}  // namespace droneplan
