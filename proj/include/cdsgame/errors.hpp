#pragma once

#include <stdexcept>
#include <string>

namespace cds {

// Malformed textual input (permutations, favorable sets, graph JSON, cache files).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An integer argument outside its admissible range (pointer codes, family indices).
class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// cds requested on a pointer pair that does not interlock.
class NotApplicable : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// gcds family requested on a vertex pair that is not an edge.
class NotAnEdge : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Operation called on a state it is not defined for (e.g. a terminal evaluation with moves left).
class StateError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Exhaustive procedures refuse instances above their configured size bound.
class BoundExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace cds
