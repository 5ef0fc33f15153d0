// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace keccak {

/// Malformed pad10*1 structure found while unpadding.
class padding_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A hashing context was used after finalization.
class state_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A known-answer-test file could not be read or parsed.
class kat_format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A benchmark workload was too small for the clock resolution.
class measurement_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace keccak
