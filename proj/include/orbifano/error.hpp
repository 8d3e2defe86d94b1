#ifndef ORBIFANO_ERROR_HPP
#define ORBIFANO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbifano {

/// Failure categories shared by all modules. Each value names the condition
/// that was violated, not the callsite.
enum class Errc {
    bad_argument,              // precondition on a raw input (parse errors, bad flags)
    zero_denominator,          // Rational with denominator 0
    non_coprime,               // canonical_pair: gcd(b mod r, r) != 1 or b == 0 mod r
    not_terminal_type,         // no unit scales the weights into {1, r-1, b}
    ambiguous_type,            // two units (or tangent indices) disagree on the type
    not_an_integer,            // plurigenus came out non-integral
    negative_genus,            // plurigenus came out integral but negative
    non_positive_volume,       // volume_from_genus produced v <= 0
    not_well_formed,           // some 4 of the 5 weights share a factor
    bad_amplitude,             // sum(weights) - degree < 1
    not_quasi_smooth_at_vertex,// vertex on X with no tangent monomial x_i^k x_j
    edge_contained,            // edge lies inside X (no binary monomial of degree d)
    non_integral_orbit_count,  // (q_max - q_min) * r / a_i not an integer
    unsupported,               // edge stabilizer shares a factor with a third weight
    amplitude_not_one,         // O(1) is not the anti-canonical polarization
    malformed_entry,           // catalog entry violates the schema
    duplicate_name,            // two catalog entries share a name
    io_failure,                // file could not be read
};

/// CamelCase tag used in diagnostics, e.g. "NotTerminalType".
const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// "Tag: message" form for user-facing diagnostics.
    std::string tagged() const { return std::string(errc_name(code_)) + ": " + what(); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace orbifano

#endif
