#include "rdhweno/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rdh {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

void write_solution_1d(const Solution1D& sol, std::ofstream& out) {
  const int m = sol.components();
  out << "x";
  for (int c = 0; c < m; ++c) out << ",u" << c;
  for (int c = 0; c < m; ++c) out << ",v" << c;
  out << "\n";
  for (int i = 0; i <= sol.grid.cells; ++i) {
    out << fmt(sol.grid.x(i));
    for (int c = 0; c < m; ++c) out << "," << fmt(sol.u.at(i, c));
    for (int c = 0; c < m; ++c) out << "," << fmt(sol.v.at(i, c));
    out << "\n";
  }
}

void write_solution_2d(const Solution2D& sol, std::ofstream& out) {
  const int m = sol.components();
  out << "x,y";
  for (int c = 0; c < m; ++c) out << ",u" << c;
  for (int c = 0; c < m; ++c) out << ",v" << c;
  for (int c = 0; c < m; ++c) out << ",w" << c;
  for (int c = 0; c < m; ++c) out << ",z" << c;
  out << "\n";
  for (int j = 0; j <= sol.grid.ny; ++j)
    for (int i = 0; i <= sol.grid.nx; ++i) {
      out << fmt(sol.grid.x(i)) << "," << fmt(sol.grid.y(j));
      for (int c = 0; c < m; ++c) out << "," << fmt(sol.u.at(i, j, c));
      for (int c = 0; c < m; ++c) out << "," << fmt(sol.v.at(i, j, c));
      for (int c = 0; c < m; ++c) out << "," << fmt(sol.w.at(i, j, c));
      for (int c = 0; c < m; ++c) out << "," << fmt(sol.z.at(i, j, c));
      out << "\n";
    }
}

void write_section(const Solution2D& sol, const Problem2D& pb, const CrossSection& sec,
                   std::ofstream& out) {
  const int m = sol.components();
  if (sec.kind == CrossSection::Kind::fixed_y) {
    // nearest stored nodal row
    const int j = static_cast<int>(std::lround((sec.y - sol.grid.y0) / sol.grid.dy()));
    out << "x";
    for (int c = 0; c < m; ++c) out << ",u" << c;
    if (pb.exact)
      for (int c = 0; c < m; ++c) out << ",exact" << c;
    out << "\n";
    for (int i = 0; i <= sol.grid.nx; ++i) {
      out << fmt(sol.grid.x(i));
      for (int c = 0; c < m; ++c) out << "," << fmt(sol.u.at(i, j, c));
      if (pb.exact) {
        const StateVec e = pb.exact(sol.grid.x(i), sol.grid.y(j));
        for (int c = 0; c < m; ++c) out << "," << fmt(e[c]);
      }
      out << "\n";
    }
  } else {
    // grid diagonal, parameterized by (x+y)/sqrt(2)
    out << "xi";
    for (int c = 0; c < m; ++c) out << ",u" << c;
    if (pb.exact)
      for (int c = 0; c < m; ++c) out << ",exact" << c;
    out << "\n";
    const int n = std::min(sol.grid.nx, sol.grid.ny);
    for (int i = 0; i <= n; ++i) {
      const double x = sol.grid.x(i), y = sol.grid.y(i);
      out << fmt((x + y) / std::sqrt(2.0));
      for (int c = 0; c < m; ++c) out << "," << fmt(sol.u.at(i, i, c));
      if (pb.exact) {
        const StateVec e = pb.exact(x, y);
        for (int c = 0; c < m; ++c) out << "," << fmt(e[c]);
      }
      out << "\n";
    }
  }
}

}  // namespace

std::vector<std::filesystem::path> emit_outputs(const RunReport& report,
                                                const ProblemSpec& spec,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  {
    const auto p = dir / "solution.csv";
    auto out = open_for_write(p);
    if (report.sol1)
      write_solution_1d(*report.sol1, out);
    else
      write_solution_2d(*report.sol2, out);
    written.push_back(p);
  }
  {
    const auto p = dir / "residue.csv";
    auto out = open_for_write(p);
    out << "iter,residue\n";
    for (const auto& [iter, r] : report.residue_history)
      out << iter << "," << fmt(r) << "\n";
    written.push_back(p);
  }
  if (report.sol2 && spec.p2) {
    for (const CrossSection& sec : spec.p2->sections) {
      const auto p = dir / ("section_" + sec.name + ".csv");
      auto out = open_for_write(p);
      write_section(*report.sol2, *spec.p2, sec, out);
      written.push_back(p);
    }
  }
  return written;
}

std::filesystem::path emit_error_table(const std::vector<ErrorTableRow>& rows,
                                       const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto p = dir / "errors.csv";
  auto out = open_for_write(p);
  out << "N,L1,L1_order,L2,L2_order,Linf,Linf_order\n";
  auto ord = [](double o) { return std::isnan(o) ? std::string() : fmt(o); };
  for (const auto& r : rows) {
    if (!r.ok) {
      out << r.n << ",failed,,,,,\n";
      continue;
    }
    out << r.n << "," << fmt(r.e.l1) << "," << ord(r.l1_order) << "," << fmt(r.e.l2) << ","
        << ord(r.l2_order) << "," << fmt(r.e.linf) << "," << ord(r.linf_order) << "\n";
  }
  return p;
}

CsvTable read_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  CsvTable t;
  std::string line;
  if (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(cell.empty() ? NAN : std::stod(cell));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace rdh
