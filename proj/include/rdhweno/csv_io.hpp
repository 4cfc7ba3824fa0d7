#pragma once

/// CSV emission for solutions, residue histories, convergence tables and
/// per-problem cross-sections. Values are written in scientific notation
/// with 17 significant digits so files reload bit-identically.

#include "rdhweno/error_norms.hpp"
#include "rdhweno/problems.hpp"
#include "rdhweno/steady_driver.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace rdh {

/// Writes solution.csv (x[,y], u.., v..[, w.., z..]) and residue.csv
/// (iter,residue) plus any cross-section files the problem defines.
/// Returns the paths written. I/O failures raise std::runtime_error with
/// the offending path.
std::vector<std::filesystem::path> emit_outputs(const RunReport& report,
                                                const ProblemSpec& spec,
                                                const std::filesystem::path& dir);

/// Writes errors.csv with header N,L1,L1_order,L2,L2_order,Linf,Linf_order.
std::filesystem::path emit_error_table(const std::vector<ErrorTableRow>& rows,
                                       const std::filesystem::path& dir);

/// Reads a solution.csv back into column vectors (header + numeric rows).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable read_csv(const std::filesystem::path& file);

}  // namespace rdh
