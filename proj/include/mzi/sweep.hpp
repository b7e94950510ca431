#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzi/detection.hpp"
#include "mzi/states.hpp"

namespace mzi {

/// Inclusive linear grid over the named variable.
struct SweepSpec {
    enum class Variable { t_squared, phi };
    Variable variable = Variable::t_squared;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;

    SweepSpec() = default;
    SweepSpec(Variable var, double a, double b, int n);

    double at(int i) const { return start + (stop - start) * i / (points - 1); }
};

/// Columnar numeric table; empty cells render as empty CSV fields.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

/// CSV with 17-significant-digit values (round-trip exact).
std::string to_csv(const Table& t);
/// JSON array of row objects; empty cells become null.
std::string to_json(const Table& t);
Table parse_csv(const std::string& text);

/// QFI sweep over t^2. Emits the requested subset of columns f_2p, f_i, f_ii;
/// the two-parameter column is blank wherever that QFI is undefined.
Table run_qfi(const PortState& p0, const PortState& p1, const SweepSpec& sweep, bool with_2p, bool with_i,
              bool with_ii);

/// Same table over an explicit list of t^2 values.
Table run_qfi_at(const PortState& p0, const PortState& p1, const std::vector<double>& t_squared_values,
                 bool with_2p, bool with_i, bool with_ii);

/// Sensitivity sweep over phi with constant QCRB reference columns computed
/// at cfg.bs1. Divergent sensitivities render as empty cells.
Table run_sensitivity(const PortState& p0, const PortState& p1, const InterferometerConfig& cfg,
                      const DetectorConfig& det, const SweepSpec& sweep);

}  // namespace mzi
