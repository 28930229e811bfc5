#include "inveul/golden.hpp"

#include <initializer_list>

namespace inveul::golden {

namespace {

std::vector<BigCoeff> coeffs(std::initializer_list<long long> values) {
  std::vector<BigCoeff> out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

DescentRow drow(Family f, int n, std::initializer_list<long long> values) {
  return make_descent_row(f, n, coeffs(values));
}

GammaRow grow(GammaFamily f, int n, std::initializer_list<long long> values) {
  return make_gamma_row(f, n, coeffs(values));
}

}  // namespace

std::vector<DescentRow> involution_rows() {
  return {
      drow(Family::Involution, 1, {1}),
      drow(Family::Involution, 2, {1, 1}),
      drow(Family::Involution, 3, {1, 2, 1}),
      drow(Family::Involution, 4, {1, 4, 4, 1}),
      drow(Family::Involution, 5, {1, 6, 12, 6, 1}),
      drow(Family::Involution, 6, {1, 9, 28, 28, 9, 1}),
  };
}

std::vector<DescentRow> fixed_point_free_rows() {
  return {
      drow(Family::FixedPointFree, 1, {0}),
      drow(Family::FixedPointFree, 2, {0, 1}),
      drow(Family::FixedPointFree, 3, {0, 0, 0}),
      drow(Family::FixedPointFree, 4, {0, 1, 1, 1}),
      drow(Family::FixedPointFree, 5, {0, 0, 0, 0, 0}),
      drow(Family::FixedPointFree, 6, {0, 1, 3, 7, 3, 1}),
  };
}

std::vector<GammaRow> gamma_a_rows() {
  return {
      grow(GammaFamily::A, 1, {1}),
      grow(GammaFamily::A, 2, {1}),
      grow(GammaFamily::A, 3, {1, 0}),
      grow(GammaFamily::A, 4, {1, 1}),
      grow(GammaFamily::A, 5, {1, 2, 2}),
      grow(GammaFamily::A, 6, {1, 4, 6}),
      grow(GammaFamily::A, 7, {1, 6, 18, 0}),
      grow(GammaFamily::A, 8, {1, 9, 39, 18}),
      grow(GammaFamily::A, 9, {1, 12, 79, 78, 20}),
      grow(GammaFamily::A, 10, {1, 16, 141, 272, 124}),
      grow(GammaFamily::A, 11, {1, 20, 239, 722, 668, 32}),
      grow(GammaFamily::A, 12, {1, 25, 379, 1716, 2560, 700}),
      grow(GammaFamily::A, 13, {1, 30, 579, 3626, 8360, 4800, 440}),
      grow(GammaFamily::A, 14, {1, 36, 849, 7160, 23536, 24160, 5480}),
      grow(GammaFamily::A, 15, {1, 42, 1211, 13206, 59824, 95680, 44632, 2176}),
      grow(GammaFamily::A, 16, {1, 49, 1680, 23263, 139457, 325572, 257964, 44376}),
  };
}

std::vector<GammaRow> gamma_b_rows() {
  return {
      grow(GammaFamily::B, 2, {1}),
      grow(GammaFamily::B, 4, {1, -1}),
      grow(GammaFamily::B, 6, {1, -1, 3}),
      grow(GammaFamily::B, 8, {1, 0, 12, -7}),
      grow(GammaFamily::B, 10, {1, 2, 36, -10, 25}),
      grow(GammaFamily::B, 12, {1, 5, 91, 91, 219, -65}),
      grow(GammaFamily::B, 14, {1, 9, 201, 652, 1710, 249, 283}),
      grow(GammaFamily::B, 16, {1, 14, 399, 2593, 10532, 11319, 6586, -583}),
      grow(GammaFamily::B, 18,
           {1, 20, 728, 7902, 50165, 122571, 135545, 33188, 4417}),
      grow(GammaFamily::B, 20,
           {1, 27, 1242, 20401, 194139, 841038, 1737505, 1372734, 379029, 1791}),
      grow(GammaFamily::B, 22,
           {1, 35, 2007, 46852, 639968, 4377636, 15219292, 24412940, 16488999,
            3350211, 133107}),
      grow(GammaFamily::B, 24,
           {1, 44, 3102, 98494, 1861215, 18747924, 101116704, 277963127,
            367507439, 203698690, 36903128, 761785}),
  };
}

}  // namespace inveul::golden
