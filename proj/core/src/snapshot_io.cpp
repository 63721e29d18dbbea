#include "dg1d/snapshot_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot open '" + path + "' for writing");
  }
  return out;
}

}  // namespace

void write_snapshot(const DGSolution& sol, const std::string& path) {
  std::ofstream out = open_for_write(path);
  const auto* euler = dynamic_cast<const EulerLaw*>(&sol.law());

  out << "x";
  if (euler != nullptr) {
    out << ",density,momentum,energy,velocity,pressure";
  } else {
    for (int c = 0; c < sol.components(); ++c) out << ",u" << c;
  }
  out << "\n";

  const int p = sol.basis().degree();
  const int points = p + 1;
  for (int k = 0; k < sol.num_elements(); ++k) {
    for (int j = 0; j < points; ++j) {
      const double xi = (p == 0) ? 0.0 : -1.0 + 2.0 * j / p;
      const double x = sol.mesh().to_physical(k, xi);
      const State w = sol.evaluate(k, xi);
      out << full_precision(x);
      for (int c = 0; c < sol.components(); ++c) {
        out << "," << full_precision(w[c]);
      }
      if (euler != nullptr) {
        out << "," << full_precision(euler->velocity(w)) << ","
            << full_precision(euler->pressure(w));
      }
      out << "\n";
    }
  }
}

void write_coefficients(const DGSolution& sol, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "element,index";
  for (int c = 0; c < sol.components(); ++c) out << ",c" << c;
  out << "\n";
  for (int k = 0; k < sol.num_elements(); ++k) {
    for (int j = 0; j < sol.basis_size(); ++j) {
      out << k << "," << j;
      for (int c = 0; c < sol.components(); ++c) {
        out << "," << full_precision(sol.coeff(k, j, c));
      }
      out << "\n";
    }
  }
}

std::vector<double> read_coefficients(const std::string& path, int elements,
                                      int basis_size, int components) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open coefficient file '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("coefficient file '" + path + "' is empty");
  }
  std::vector<double> coeffs(
      static_cast<std::size_t>(elements) * basis_size * components, 0.0);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    auto next = [&]() {
      if (!std::getline(row, cell, ',')) {
        throw ConfigError("coefficient file '" + path + "': short row");
      }
      return std::stod(cell);
    };
    const int k = static_cast<int>(next());
    const int j = static_cast<int>(next());
    if (k < 0 || k >= elements || j < 0 || j >= basis_size) {
      throw ConfigError("coefficient file '" + path +
                        "': row index out of range");
    }
    for (int c = 0; c < components; ++c) {
      coeffs[(static_cast<std::size_t>(k) * basis_size + j) * components + c] =
          next();
    }
    ++rows;
  }
  if (rows != static_cast<std::size_t>(elements) * basis_size) {
    throw ConfigError("coefficient file '" + path + "': expected " +
                      std::to_string(elements * basis_size) + " rows, found " +
                      std::to_string(rows));
  }
  return coeffs;
}

}  // namespace dg1d
