#include "orbifano/rational.hpp"

#include <cctype>

namespace orbifano {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::bad_argument:               return "BadArgument";
        case Errc::zero_denominator:           return "ZeroDenominator";
        case Errc::non_coprime:                return "NonCoprime";
        case Errc::not_terminal_type:          return "NotTerminalType";
        case Errc::ambiguous_type:             return "AmbiguousType";
        case Errc::not_an_integer:             return "NotAnInteger";
        case Errc::negative_genus:             return "NegativeGenus";
        case Errc::non_positive_volume:        return "NonPositiveVolume";
        case Errc::not_well_formed:            return "NotWellFormed";
        case Errc::bad_amplitude:              return "BadAmplitude";
        case Errc::not_quasi_smooth_at_vertex: return "NotQuasiSmoothAtVertex";
        case Errc::edge_contained:             return "EdgeContained";
        case Errc::non_integral_orbit_count:   return "NonIntegralOrbitCount";
        case Errc::unsupported:                return "Unsupported";
        case Errc::amplitude_not_one:          return "AmplitudeNotOne";
        case Errc::malformed_entry:            return "MalformedEntry";
        case Errc::duplicate_name:             return "DuplicateName";
        case Errc::io_failure:                 return "IoFailure";
    }
    return "Error";
}

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = trim(text);
    auto reject = [&] {
        fail(Errc::bad_argument, "not a rational 'p/q': '" + std::string(text) + "'");
    };
    if (body.empty()) reject();

    std::string_view num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = trim(body.substr(0, slash));
        den = trim(body.substr(slash + 1));
    }
    if (!is_integer_token(num) || !is_integer_token(den)) reject();
    return Rational(Int(std::string(num)), Int(std::string(den)));
}

} // namespace orbifano
