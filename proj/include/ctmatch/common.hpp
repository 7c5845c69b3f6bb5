#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctmatch {

// Values of a text or pattern. Positions handed across the public API are
// 1-based; storage is an ordinary 0-based vector, so element k describes
// position k+1.
using Value = std::int64_t;
using IntSeq = std::vector<Value>;
using SeqView = std::span<const Value>;

// 1-based position or index value.
using Index = std::size_t;

using Fingerprint = std::uint64_t;

// Malformed input data: unparsable files, empty pattern lists, ...
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Incompatible or out-of-range options: non-prime modulus, exact mode that
// does not fit a word, rolling with parent-distance encoding, ...
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ctmatch
