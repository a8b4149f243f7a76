#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liouspec/dynamics.hpp"
#include "liouspec/sweeps.hpp"

namespace liouspec {

/// Shortest exact decimal representation of a double (>= 15 significant
/// digits where needed), so emitted tables are not tolerance-limited.
std::string format_double(double value);

std::string frame_name(Frame frame);
Frame frame_from_name(const std::string& name);

std::string trace_kind_name(TraceKind kind);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);

void write_snapshots_csv(std::ostream& out,
                         const std::vector<SpectrumSnapshot>& snapshots);
void write_snapshots_json(std::ostream& out,
                          const std::vector<SpectrumSnapshot>& snapshots);

/// Columns (tau, re, im) after '#' metadata lines naming the model point.
void write_trace_csv(std::ostream& out, const CorrelationTrace& trace);
void write_trace_json(std::ostream& out, const CorrelationTrace& trace);

void write_steady_csv(std::ostream& out, const SteadyState& ss,
                      const ModelSpec& model);
void write_steady_json(std::ostream& out, const SteadyState& ss,
                       const ModelSpec& model);

}  // namespace liouspec
