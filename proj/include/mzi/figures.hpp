#pragma once

#include <string>
#include <vector>

namespace mzi {

/// Reproducible data figures. 4-7 are QFI-vs-transmission sweeps, 9-14 are
/// phase-sensitivity sweeps; the remaining numbers are schematics with no
/// data. Each figure writes one CSV per curve set plus a sidecar
/// figure<id>.json recording the parameter manifest and derived optima.
bool figure_id_valid(int id);
std::vector<int> figure_ids();

/// Writes the figure's files into outdir (created if missing) and returns the
/// paths written, sidecar last.
std::vector<std::string> run_figure(int id, const std::string& outdir);

}  // namespace mzi
