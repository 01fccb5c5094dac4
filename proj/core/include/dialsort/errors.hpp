#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dialsort {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: bad universe, bad interval, mismatched operands.
class argument_error : public error {
public:
    using error::error;
};

/// A key fell outside the universe it was checked against.
class range_error : public error {
public:
    static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

    range_error(std::uint64_t key, std::size_t index, std::uint64_t universe_size);
    range_error(std::uint64_t key, std::uint64_t universe_size);

    std::uint64_t key() const noexcept { return key_; }
    /// Position of the offending key in its input sequence, or no_index for point queries.
    std::size_t index() const noexcept { return index_; }
    std::uint64_t universe_size() const noexcept { return universe_size_; }

private:
    std::uint64_t key_;
    std::size_t index_;
    std::uint64_t universe_size_;
};

/// Buffer length does not match what the operation requires.
class size_error : public error {
public:
    using error::error;
};

/// Requested storage exceeds the library ceiling or could not be allocated.
class capacity_error : public error {
public:
    using error::error;
};

/// A 64-bit count would wrap.
class overflow_error : public error {
public:
    using error::error;
};

/// Encoding produced an index outside the universe, or a codec is not invertible.
class codec_error : public error {
public:
    using error::error;
};

/// One or more parallel workers failed; carries every worker's message.
class parallel_error : public error {
public:
    explicit parallel_error(std::vector<std::string> failures);

    const std::vector<std::string>& failures() const noexcept { return failures_; }

private:
    std::vector<std::string> failures_;
};

} // namespace dialsort
