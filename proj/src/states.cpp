#include "mzi/states.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mzi {

double normalize_phase(double rad) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(rad, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // guard against fmod rounding to 2pi
    return r;
}

ComplexAmplitude::ComplexAmplitude(double mag, double ph) : magnitude(mag), phase(normalize_phase(ph)) {
    if (!(mag >= 0.0)) throw std::domain_error("ComplexAmplitude: magnitude must be >= 0");
}

std::complex<double> ComplexAmplitude::value() const {
    return std::polar(magnitude, phase);
}

SqueezeParam::SqueezeParam(double s, double ph) : factor(s), phase(normalize_phase(ph)) {
    if (!(s >= 0.0)) throw std::domain_error("SqueezeParam: squeezing factor must be >= 0");
}

std::complex<double> SqueezeParam::value() const {
    return std::polar(factor, phase);
}

PortState PortState::vacuum() {
    return PortState{};
}

PortState PortState::coherent(const ComplexAmplitude& a) {
    if (a.magnitude == 0.0) return vacuum();
    PortState p;
    p.kind = Kind::coherent;
    p.amplitude = a;
    return p;
}

PortState PortState::squeezed_vacuum(const SqueezeParam& s) {
    if (s.factor == 0.0) return vacuum();
    PortState p;
    p.kind = Kind::squeezed_vacuum;
    p.squeeze = s;
    return p;
}

PortState PortState::squeezed_coherent(const ComplexAmplitude& a, const SqueezeParam& s) {
    if (s.factor == 0.0) return coherent(a);
    if (a.magnitude == 0.0) return squeezed_vacuum(s);
    PortState p;
    p.kind = Kind::squeezed_coherent;
    p.amplitude = a;
    p.squeeze = s;
    return p;
}

namespace {

// Splits on ':' and parses each field as a double, tracking character
// positions for error messages.
std::vector<double> parse_fields(const std::string& text, std::size_t from, std::size_t expected) {
    std::vector<double> out;
    std::size_t pos = from;
    while (out.size() < expected) {
        if (pos >= text.size())
            throw std::invalid_argument("parse_state: expected field at position " + std::to_string(pos) +
                                        " in '" + text + "'");
        std::size_t end = text.find(':', pos);
        if (end == std::string::npos) end = text.size();
        const std::string field = text.substr(pos, end - pos);
        char* tail = nullptr;
        const double v = std::strtod(field.c_str(), &tail);
        if (field.empty() || tail == field.c_str() || *tail != '\0')
            throw std::invalid_argument("parse_state: malformed number at position " + std::to_string(pos) +
                                        " in '" + text + "'");
        out.push_back(v);
        pos = end + 1;
    }
    if (pos <= text.size() && text.find(':', pos - 1) != std::string::npos)
        throw std::invalid_argument("parse_state: trailing fields at position " + std::to_string(pos) + " in '" +
                                    text + "'");
    return out;
}

}  // namespace

PortState parse_state(const std::string& text) {
    if (text == "vac") return PortState::vacuum();
    if (text.rfind("coh:", 0) == 0) {
        auto f = parse_fields(text, 4, 2);
        return PortState::coherent(ComplexAmplitude(f[0], f[1]));
    }
    if (text.rfind("sqz:", 0) == 0) {
        auto f = parse_fields(text, 4, 2);
        return PortState::squeezed_vacuum(SqueezeParam(f[0], f[1]));
    }
    if (text.rfind("sqzcoh:", 0) == 0) {
        auto f = parse_fields(text, 7, 4);
        return PortState::squeezed_coherent(ComplexAmplitude(f[0], f[1]), SqueezeParam(f[2], f[3]));
    }
    throw std::invalid_argument("parse_state: unknown state kind at position 0 in '" + text +
                                "' (expected vac|coh|sqz|sqzcoh)");
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(const PortState& p) {
    switch (p.kind) {
        case PortState::Kind::vacuum:
            return "vac";
        case PortState::Kind::coherent:
            return "coh:" + num(p.amplitude.magnitude) + ":" + num(p.amplitude.phase);
        case PortState::Kind::squeezed_vacuum:
            return "sqz:" + num(p.squeeze.factor) + ":" + num(p.squeeze.phase);
        case PortState::Kind::squeezed_coherent:
            return "sqzcoh:" + num(p.amplitude.magnitude) + ":" + num(p.amplitude.phase) + ":" +
                   num(p.squeeze.factor) + ":" + num(p.squeeze.phase);
    }
    return "vac";
}

}  // namespace mzi
