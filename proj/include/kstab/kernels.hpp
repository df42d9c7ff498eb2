// Lattice-point enumeration kernels.
//
// Each kernel has a serial reference path and an OpenMP path that splits the
// enumeration box into slabs along the first coordinate. Both paths return
// identical results; tests compare them and bench/ times them.

#pragma once

#include "kstab/polytope.hpp"

#include <cstdint>
#include <vector>

namespace kstab::kernels {

enum class Exec { Serial, Parallel };

/// Integer description of k*P: <normal_i, u> >= rhs_i together with a
/// bounding box [lo, hi].
struct IntegerSystem {
    int dim = 0;
    std::vector<IntVec> normals;
    std::vector<std::int64_t> rhs;
    IntVec lo, hi;
    bool empty = false;
};

IntegerSystem integer_system(const ratgeom::LatticePolytope& p, const Rational& k);

/// All integer points of k*P in lexicographic order.
std::vector<IntVec> lattice_points(const ratgeom::LatticePolytope& p, const Rational& k, Exec exec = Exec::Serial);

Integer count_lattice_points(const ratgeom::LatticePolytope& p, const Rational& k, Exec exec = Exec::Serial);

/// Sum of <u, w> over the integer points u of k*P.
Integer sum_linear(const ratgeom::LatticePolytope& p, const Rational& k, const IntVec& w, Exec exec = Exec::Serial);

/// Integer data of the concave roof g(u) = ceiling - max_i(<slope_i, u> + offset_i),
/// all scaled by the common denominator `denom`.
struct RoofData {
    std::vector<IntVec> slopes;
    std::vector<std::int64_t> offsets;
    std::int64_t ceiling = 0;
    std::int64_t denom = 1;
};

/// Sum over integer points u of k*P of floor(k * g(u / k)), for integer k >= 1.
Integer roof_weight(const ratgeom::LatticePolytope& p, std::int64_t k, const RoofData& roof, Exec exec = Exec::Serial);

}  // namespace kstab::kernels
