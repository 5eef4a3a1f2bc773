#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cnsl {

// Base for all library errors. Subclasses let the CLI map failures to
// exit codes (config/usage vs. runtime).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; message carries file and line number.
struct ParseError : Error {
    using Error::Error;
};

// Structural invariant violated (index out of range, duplicate edge, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Incompatible vector/matrix dimensions.
struct ShapeError : Error {
    using Error::Error;
};

// NaN/Inf where a finite value is required.
struct NumericError : Error {
    using Error::Error;
};

// Bad configuration value (maps to CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Shortest round-trip decimal representation, locale independent.
// Used for every float written to disk so reruns are byte identical.
std::string format_double(double v);

// Parses with full precision; throws ParseError on trailing garbage.
double parse_double(std::string_view text, const std::string& context);
long long parse_int(std::string_view text, const std::string& context);

// Resolves the worker count: explicit flag value (>0) wins, then the
// CNSL_THREADS environment variable, then hardware concurrency.
std::size_t resolve_thread_count(long long flag_value);

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is split
// into contiguous blocks; fn must write only to slots owned by i so the
// result is identical for any worker count. Exceptions are rethrown on
// the caller thread.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace cnsl
