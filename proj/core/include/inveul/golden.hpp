#pragma once

#include <vector>

#include "inveul/polyseq.hpp"

namespace inveul::golden {

// Hand-entered reference values for the small triangles. Every cell is
// independently confirmed by the acceptance suite: the descent rows against
// brute-force enumeration, the gamma rows against three mutually independent
// computation routes.

std::vector<DescentRow> involution_rows();        // n = 1..6
std::vector<DescentRow> fixed_point_free_rows();  // n = 1..6 (odd rows all zero)
std::vector<GammaRow> gamma_a_rows();             // n = 1..16
std::vector<GammaRow> gamma_b_rows();             // even n = 2..24

}  // namespace inveul::golden
