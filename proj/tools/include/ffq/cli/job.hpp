#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ffq/ff_complex.hpp"
#include "ffq/quaternion.hpp"
#include "ffq/slice_regular.hpp"

namespace ffq::cli {

enum class Command { deriv, qderiv, norm, qnorm, kernel, verify, qverify, table };
enum class OutputFormat { json, csv };

std::string to_string(Command c);
std::string to_string(OutputFormat f);
Command parse_command(std::string_view s);
OutputFormat parse_format(std::string_view s);
NormMethod parse_method(std::string_view s);

/// Malformed job or function text. position is a byte offset into the offending text when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), position_(position) {}
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::optional<std::size_t> position_;
};

/// Polynomial coefficients. Complex functions hold pairs [re, im]; quaternionic ones [w, x, y, z].
struct FunctionSpec {
    bool quaternionic = false;
    std::vector<Quaternion> coeffs;

    CPowerSeries as_complex() const;  ///< throws ParseError for quaternionic input
    QPowerSeries as_quaternion() const;
    bool empty() const noexcept { return coeffs.empty(); }

    friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

/// Accepts [c0, c1, ...] where each entry is a number, [re, im] or [w, x, y, z].
FunctionSpec parse_function(std::string_view json_text);

struct FrameSpec {
    Quaternion i = units::e1;
    Quaternion j = units::e2;

    SliceFrame make() const { return SliceFrame::make(i, j); }
};

struct GridSpec {
    std::vector<double> alpha;
    std::vector<double> sigma;
    std::vector<Order> k;
};

struct JobSpec {
    Command command = Command::norm;
    FunctionSpec function;
    std::optional<FunctionSpec> g;
    FFParams params;
    std::optional<FrameSpec> frame;
    QuadratureSpec quad;
    NormMethod method = NormMethod::quadrature;
    std::vector<Complex> points;   ///< evaluation points (deriv, qderiv, kernel z)
    std::optional<Complex> zeta;   ///< kernel second argument
    std::string suite;             ///< verify / qverify
    GridSpec grid;                 ///< table
    std::uint64_t seed = 20240601;
    std::string output;            ///< empty means stdout
    OutputFormat format = OutputFormat::json;
};

/// Canonical JSON text (fixed key order, two-space indent, trailing newline).
std::string serialize(const JobSpec& job);

/// Inverse of serialize; missing keys take their defaults.
JobSpec parse_job(std::string_view json_text);

/// Overlays keys present in json_text onto base (used for FFQ_CONFIG defaults).
JobSpec merge_job(JobSpec base, std::string_view json_text);

}  // namespace ffq::cli
