#include "liouspec/io.hpp"

#include <json.hpp>
#include <cstdio>
#include <ostream>

#include "liouspec/errors.hpp"

namespace liouspec {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string frame_name(Frame frame) {
  return frame == Frame::lab ? "lab" : "rotating";
}

Frame frame_from_name(const std::string& name) {
  if (name == "lab") return Frame::lab;
  if (name == "rotating") return Frame::rotating;
  throw ParameterError("frame must be 'lab' or 'rotating', got '" + name + "'");
}

std::string trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::c1: return "c1";
    case TraceKind::c2: return "c2";
    case TraceKind::field: return "field";
  }
  return "?";
}

namespace {

json base_to_json(const BaseRates& base) {
  return json{{"gamma", base.gamma}, {"xi", base.xi},     {"eta", base.eta},
              {"beta", base.beta},   {"omega_c", base.omega_c}};
}

json row_to_json(const SweepRow& row) {
  return json{{"model", row.model},
              {"xi_over_gamma", row.xi_over_gamma},
              {"N", row.N},
              {"n_max", row.n_max},
              {"n_ss_over_N", row.n_ss_over_N},
              {"re_gap_over_gamma", row.re_gap_over_gamma},
              {"im_gap_over_gamma", row.im_gap_over_gamma},
              {"gap_k", row.gap_k},
              {"tail_weight", row.tail_weight},
              {"wall_s", row.wall_s},
              {"status", row.status}};
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "model,xi_over_gamma,N,n_max,n_ss_over_N,re_gap_over_gamma,"
         "im_gap_over_gamma,gap_k,tail_weight,wall_s,status\n";
  for (const SweepRow& row : rows) {
    out << row.model << ',' << format_double(row.xi_over_gamma) << ',' << row.N
        << ',' << row.n_max << ',' << format_double(row.n_ss_over_N) << ','
        << format_double(row.re_gap_over_gamma) << ','
        << format_double(row.im_gap_over_gamma) << ',' << row.gap_k << ','
        << format_double(row.tail_weight) << ',' << format_double(row.wall_s)
        << ',' << row.status << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  json doc = json::array();
  for (const SweepRow& row : rows) doc.push_back(row_to_json(row));
  out << doc.dump(2) << '\n';
}

void write_snapshots_csv(std::ostream& out,
                         const std::vector<SpectrumSnapshot>& snapshots) {
  out << "model,frame,xi_over_gamma,N,n_max,k_cap,re_over_gamma,im_over_gamma,"
         "k,line_dist_over_gamma,residual\n";
  for (const SpectrumSnapshot& snap : snapshots)
    for (const SnapshotEntry& entry : snap.entries)
      out << snap.model << ',' << frame_name(snap.frame) << ','
          << format_double(snap.xi_over_gamma) << ',' << snap.N << ','
          << snap.n_max << ',' << snap.k_cap << ','
          << format_double(entry.re_over_gamma) << ','
          << format_double(entry.im_over_gamma) << ',' << entry.k << ','
          << format_double(entry.line_dist_over_gamma) << ','
          << format_double(entry.residual) << '\n';
}

void write_snapshots_json(std::ostream& out,
                          const std::vector<SpectrumSnapshot>& snapshots) {
  json doc = json::array();
  for (const SpectrumSnapshot& snap : snapshots) {
    json entries = json::array();
    for (const SnapshotEntry& entry : snap.entries)
      entries.push_back(json{{"re_over_gamma", entry.re_over_gamma},
                             {"im_over_gamma", entry.im_over_gamma},
                             {"k", entry.k},
                             {"line_dist_over_gamma", entry.line_dist_over_gamma},
                             {"residual", entry.residual}});
    doc.push_back(json{{"model", snap.model},
                       {"frame", frame_name(snap.frame)},
                       {"base", base_to_json(snap.base)},
                       {"xi_over_gamma", snap.xi_over_gamma},
                       {"N", snap.N},
                       {"n_max", snap.n_max},
                       {"k_cap", snap.k_cap},
                       {"entries", entries}});
  }
  out << doc.dump(2) << '\n';
}

namespace {

void write_trace_header(std::ostream& out, const CorrelationTrace& trace) {
  out << "# kind=" << trace_kind_name(trace.kind) << " model=" << trace.model_name
      << " frame=" << frame_name(trace.frame)
      << " gamma=" << format_double(trace.base.gamma)
      << " xi=" << format_double(trace.base.xi)
      << " eta=" << format_double(trace.base.eta)
      << " beta=" << format_double(trace.base.beta)
      << " omega_c=" << format_double(trace.base.omega_c) << " N=" << trace.N
      << " n_max=" << trace.n_max << '\n';
}

}  // namespace

void write_trace_csv(std::ostream& out, const CorrelationTrace& trace) {
  write_trace_header(out, trace);
  out << "tau,re,im\n";
  for (size_t i = 0; i < trace.tau.size(); ++i)
    out << format_double(trace.tau[i]) << ','
        << format_double(trace.values[i].real()) << ','
        << format_double(trace.values[i].imag()) << '\n';
}

void write_trace_json(std::ostream& out, const CorrelationTrace& trace) {
  json points = json::array();
  for (size_t i = 0; i < trace.tau.size(); ++i)
    points.push_back(json{{"tau", trace.tau[i]},
                          {"re", trace.values[i].real()},
                          {"im", trace.values[i].imag()}});
  json doc{{"kind", trace_kind_name(trace.kind)},
           {"model", trace.model_name},
           {"frame", frame_name(trace.frame)},
           {"base", base_to_json(trace.base)},
           {"N", trace.N},
           {"n_max", trace.n_max},
           {"points", points}};
  out << doc.dump(2) << '\n';
}

void write_steady_csv(std::ostream& out, const SteadyState& ss,
                      const ModelSpec& model) {
  out << "# model=" << model.name << " frame=" << frame_name(model.frame)
      << " N=" << model.scale_N << " n_max=" << model.n_max
      << " residual=" << format_double(ss.residual)
      << " tail_weight=" << format_double(ss.tail_weight) << '\n';
  out << "n,occupation\n";
  for (int n = 0; n < ss.occupations.size(); ++n)
    out << n << ',' << format_double(ss.occupations[n]) << '\n';
}

void write_steady_json(std::ostream& out, const SteadyState& ss,
                       const ModelSpec& model) {
  json doc{{"model", model.name},
           {"frame", frame_name(model.frame)},
           {"base", base_to_json(model.base)},
           {"N", model.scale_N},
           {"n_max", model.n_max},
           {"residual", ss.residual},
           {"tail_weight", ss.tail_weight},
           {"degenerate", ss.degenerate},
           {"occupations", std::vector<double>(ss.occupations.data(),
                                               ss.occupations.data() +
                                                   ss.occupations.size())}};
  out << doc.dump(2) << '\n';
}

}  // namespace liouspec
