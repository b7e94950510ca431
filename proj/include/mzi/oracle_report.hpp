#pragma once

#include <string>

#include "mzi/fisher.hpp"
#include "mzi/states.hpp"

namespace mzi {

/// Analytic-vs-numeric validation report as a JSON string: the five moments
/// of each port, the three QFIs (with both symmetric-scenario values), and
/// difference-intensity / homodyne statistics at a fixed probe configuration.
/// Relative errors are |a - n| / max(1, |a|). `pass` is true when every error
/// is below 1e-5. Under-truncation propagates as under_truncation_error.
std::string run_oracle_report(const PortState& p0, const PortState& p1, const BeamSplitter& bs, int nmax,
                              bool* pass_out = nullptr);

}  // namespace mzi
