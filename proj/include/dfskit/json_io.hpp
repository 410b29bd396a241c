#pragma once

#include <string>
#include <vector>

#include "dfskit/compat_search.hpp"
#include "dfskit/noise_sim.hpp"
#include "dfskit/su_algebra.hpp"
#include "dfskit/types.hpp"

namespace dfskit {

// All exports use fixed field order and %.17g floats so reruns are
// byte-identical.

std::string format_double(double v);

// {"d": d, "matrices": [[[re,im], ... row-major], ...],
//  "diagonal_indices": [...]}
std::string basis_json(const GellMannBasis& basis);

// {"d": d, "f": [[i,j,k,value], ...], "dsym": [[i,j,k,value], ...]}
// Canonical (sorted) triples only.
std::string tensors_json(const StructureTensors& tensors);

// {"dim": n, "entries": [[re,im], ... row-major]}
std::string operator_json(const Matrix& m);

// One line per record entry: {"step":k,"p0":...,"p1":...,"leak":...}
std::string trajectory_jsonl(const NoiseTrajectory& trajectory);

std::string search_report_json(const CommutantBasis& found,
                               const MatchReport& match);

std::string compat_report_json(const CompatReport& report);

}  // namespace dfskit
