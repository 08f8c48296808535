#pragma once

#include <stdexcept>

namespace multidfa {

/// Malformed, unreadable or inconsistent input data (sample files, DFA text,
/// labeled samples). Programming errors use std::invalid_argument instead.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace multidfa
