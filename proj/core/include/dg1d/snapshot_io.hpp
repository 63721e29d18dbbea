#pragma once

#include <string>
#include <vector>

#include "dg1d/dg_solution.hpp"

namespace dg1d {

/// Plot-friendly CSV: header row, one row per plot point (`x` plus the m
/// conserved components, plus velocity and pressure for Euler), sampled at
/// degree+1 uniform points per element.
void write_snapshot(const DGSolution& sol, const std::string& path);

/// Full-precision coefficient dump (17 significant digits), one row per
/// (element, basis index).
void write_coefficients(const DGSolution& sol, const std::string& path);

/// Reads a coefficient dump back into a flat array matching the solution
/// layout. Throws ConfigError on shape mismatch or parse failure.
std::vector<double> read_coefficients(const std::string& path, int elements,
                                      int basis_size, int components);

}  // namespace dg1d
