#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vcflow {

using TaskId = std::string;
using NodeId = std::string;
using LabelId = std::string;

// Typed constant on the right-hand side of `property <op> constant` and the
// value domain of every registry property.
using PropertyValue = std::variant<std::int64_t, double, bool, std::string>;

std::string to_string(const PropertyValue& v);

// Numeric comparison promotes int64 to double; bool/string support equality only.
bool values_comparable(const PropertyValue& a, const PropertyValue& b);

struct ResourceVector {
    std::int64_t memory_bytes = 0;
    std::int64_t cpu_cores = 0;
    std::int64_t gpu_count = 0;
    std::int64_t disk_bytes = 0;

    bool fits_within(const ResourceVector& capacity) const {
        return memory_bytes <= capacity.memory_bytes && cpu_cores <= capacity.cpu_cores &&
               gpu_count <= capacity.gpu_count && disk_bytes <= capacity.disk_bytes;
    }
    // Name of the first dimension exceeding `capacity`, empty if it fits.
    std::string binding_dimension(const ResourceVector& capacity) const;
};

// Simulated behavior of a task; drives the discrete-event backend.
struct SimOutputSpec {
    std::string filename;       // exchange name of the produced file
    std::int64_t size_bytes = 1;
    std::string content_tag;    // opaque tag folded into the virtual digest
    bool empty = false;         // force a zero-byte file
    bool corrupt = false;       // mark content as corrupted
};

struct SimProfile {
    double nominal_runtime_s = 0.0;
    std::int64_t memory_use_bytes = 0;
    std::vector<SimOutputSpec> outputs;
    int exit_status = 0;
    bool emit_stderr = false;   // nonempty stderr, trips command_logged_no_error
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lex/parse failure; carries a source position and formats as file:line:col: message.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, int col, const std::string& message)
        : Error(format(file, line, col, message)), file_(std::move(file)), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& file() const { return file_; }

private:
    static std::string format(const std::string& f, int l, int c, const std::string& m);
    std::string file_;
    int line_;
    int col_;
};

// Precondition violations on operations (invalid state, missing schedule entry, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// enumerate_executions hit its bound; distinct from structural errors by type.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// "8Gi", "512Ki", "100" -> bytes. Binary suffixes Ki/Mi/Gi/Ti.
std::int64_t parse_bytes(const std::string& text);
// "90s", "5m", "2h", "1.5" -> seconds.
double parse_duration_s(const std::string& text);

std::string format_bytes(std::int64_t bytes);

}  // namespace vcflow
