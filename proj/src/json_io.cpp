#include "dfskit/json_io.hpp"

#include <cstdio>

namespace dfskit {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string pair_json(Complex z) {
  return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

std::string matrix_json(const Matrix& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != 0 || c != 0) out += ",";
      out += pair_json(m(r, c));
    }
  out += "]";
  return out;
}

std::string triples_json(const StructureTensors::TripleMap& entries) {
  std::string out = "[";
  bool first = true;
  for (const auto& [t, v] : entries) {
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "," + format_double(v) + "]";
  }
  out += "]";
  return out;
}

}  // namespace

std::string basis_json(const GellMannBasis& basis) {
  std::string out = "{\"d\":" + std::to_string(basis.dim()) + ",\"matrices\":[";
  for (int i = 1; i <= basis.count(); ++i) {
    if (i != 1) out += ",";
    out += matrix_json(basis.op(i));
  }
  out += "],\"diagonal_indices\":[";
  bool first = true;
  for (int idx : basis.diagonal_indices()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(idx);
  }
  out += "]}";
  return out;
}

std::string tensors_json(const StructureTensors& tensors) {
  return "{\"d\":" + std::to_string(tensors.dim()) +
         ",\"f\":" + triples_json(tensors.f_entries()) +
         ",\"dsym\":" + triples_json(tensors.dsym_entries()) + "}";
}

std::string operator_json(const Matrix& m) {
  return "{\"dim\":" + std::to_string(m.rows()) +
         ",\"entries\":" + matrix_json(m) + "}";
}

std::string trajectory_jsonl(const NoiseTrajectory& trajectory) {
  std::string out;
  for (std::size_t k = 0; k < trajectory.record.size(); ++k) {
    const TrajectoryStep& s = trajectory.record[k];
    out += "{\"step\":" + std::to_string(k) +
           ",\"p0\":" + format_double(s.p0) +
           ",\"p1\":" + format_double(s.p1) +
           ",\"leak\":" + format_double(s.leak) + "}\n";
  }
  return out;
}

std::string search_report_json(const CommutantBasis& found,
                               const MatchReport& match) {
  std::string out = "{\"d\":" + std::to_string(found.d) +
                    ",\"n\":" + std::to_string(found.n) +
                    ",\"nullspace_dim\":" +
                    std::to_string(found.elements.size()) + ",\"residuals\":[";
  for (std::size_t i = 0; i < match.residuals.size(); ++i) {
    if (i != 0) out += ",";
    out += format_double(match.residuals[i]);
  }
  out += "],\"decomposition\":[";
  for (Eigen::Index i = 0; i < match.change_of_basis.rows(); ++i) {
    if (i != 0) out += ",";
    out += "[";
    for (Eigen::Index j = 0; j < match.change_of_basis.cols(); ++j) {
      if (j != 0) out += ",";
      out += "[\"" + match.known_names[static_cast<std::size_t>(j)] + "\"," +
             format_double(match.change_of_basis(i, j)) + "]";
    }
    out += "]";
  }
  out += "]}";
  return out;
}

std::string compat_report_json(const CompatReport& report) {
  std::string out = "{\"d\":" + std::to_string(report.d) +
                    ",\"n\":" + std::to_string(report.n) + ",\"tolerance\":" +
                    format_double(report.tolerance) + ",\"entries\":[";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (i != 0) out += ",";
    out += "[\"" + report.entries[i].name + "\"," +
           format_double(report.entries[i].residual) + "]";
  }
  out += "],\"max_residual\":" + format_double(report.max_residual) +
         ",\"pass\":" + (report.pass ? std::string("true") : "false") + "}";
  return out;
}

}  // namespace dfskit
