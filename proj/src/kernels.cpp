#include "kstab/kernels.hpp"

#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kstab::kernels {

namespace {

std::int64_t to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw GeometryError("lattice enumeration: coordinate out of range");
    return z.get_si();
}

bool feasible(const IntegerSystem& s, const IntVec& u) {
    for (std::size_t i = 0; i < s.normals.size(); ++i) {
        std::int64_t acc = 0;
        const auto& n = s.normals[i];
        for (int j = 0; j < s.dim; ++j) acc += n[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(j)];
        if (acc < s.rhs[i]) return false;
    }
    return true;
}

// Visits every feasible point whose first coordinate is x0.
template <typename Visit>
void visit_slab(const IntegerSystem& s, std::int64_t x0, Visit&& visit) {
    IntVec u(static_cast<std::size_t>(s.dim));
    u[0] = x0;
    if (s.dim == 1) {
        if (feasible(s, u)) visit(u);
        return;
    }
    for (int j = 1; j < s.dim; ++j) u[static_cast<std::size_t>(j)] = s.lo[static_cast<std::size_t>(j)];
    while (true) {
        if (feasible(s, u)) visit(u);
        int j = s.dim - 1;
        while (j >= 1 && u[static_cast<std::size_t>(j)] == s.hi[static_cast<std::size_t>(j)]) {
            u[static_cast<std::size_t>(j)] = s.lo[static_cast<std::size_t>(j)];
            --j;
        }
        if (j < 1) break;
        ++u[static_cast<std::size_t>(j)];
    }
}

// Reduces sum over slabs of slab_value(x0) with either execution policy.
template <typename SlabValue>
Integer reduce_slabs(const IntegerSystem& s, Exec exec, SlabValue&& slab_value) {
    if (s.empty) return 0;
    const std::int64_t lo = s.lo[0];
    const std::int64_t hi = s.hi[0];
    if (exec == Exec::Serial) {
        Integer total = 0;
        for (std::int64_t x = lo; x <= hi; ++x) total += slab_value(x);
        return total;
    }
    const std::int64_t n = hi - lo + 1;
    std::vector<Integer> partial(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) partial[static_cast<std::size_t>(i)] = slab_value(lo + i);
    Integer total = 0;
    for (const auto& v : partial) total += v;
    return total;
}

}  // namespace

IntegerSystem integer_system(const ratgeom::LatticePolytope& p, const Rational& k) {
    IntegerSystem s;
    s.dim = p.ambient_dim();
    if (p.is_empty() || k < 0) {
        s.empty = true;
        return s;
    }
    auto kp = p.scaled(k);
    for (const auto& h : kp.halfspaces()) {
        if (!is_integral(h.normal)) throw GeometryError("lattice enumeration needs integer facet normals");
        IntVec n;
        for (const auto& x : h.normal) n.push_back(to_i64(x.get_num()));
        s.normals.push_back(std::move(n));
        s.rhs.push_back(to_i64(ceil(h.offset)));
    }
    for (int j = 0; j < s.dim; ++j) {
        Vec e = unit_vec(s.dim, j);
        auto lo = ratgeom::lp_optimize(e, kp, ratgeom::Sense::Minimize).value;
        auto hi = ratgeom::lp_optimize(e, kp, ratgeom::Sense::Maximize).value;
        s.lo.push_back(to_i64(ceil(lo)));
        s.hi.push_back(to_i64(floor(hi)));
        if (s.lo.back() > s.hi.back()) s.empty = true;
    }
    return s;
}

std::vector<IntVec> lattice_points(const ratgeom::LatticePolytope& p, const Rational& k, Exec exec) {
    auto s = integer_system(p, k);
    std::vector<IntVec> out;
    if (s.empty) return out;
    const std::int64_t n = s.hi[0] - s.lo[0] + 1;
    std::vector<std::vector<IntVec>> slabs(static_cast<std::size_t>(n));
    auto fill = [&](std::int64_t i) { visit_slab(s, s.lo[0] + i, [&](const IntVec& u) { slabs[static_cast<std::size_t>(i)].push_back(u); }); };
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) fill(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) fill(i);
    }
    for (auto& slab : slabs)
        for (auto& u : slab) out.push_back(std::move(u));
    return out;
}

Integer count_lattice_points(const ratgeom::LatticePolytope& p, const Rational& k, Exec exec) {
    auto s = integer_system(p, k);
    return reduce_slabs(s, exec, [&](std::int64_t x0) {
        long count = 0;
        visit_slab(s, x0, [&](const IntVec&) { ++count; });
        return Integer(count);
    });
}

Integer sum_linear(const ratgeom::LatticePolytope& p, const Rational& k, const IntVec& w, Exec exec) {
    auto s = integer_system(p, k);
    if (static_cast<int>(w.size()) != s.dim) throw GeometryError("sum_linear: dimension mismatch");
    return reduce_slabs(s, exec, [&](std::int64_t x0) {
        Integer acc = 0;
        long local = 0;
        visit_slab(s, x0, [&](const IntVec& u) {
            long v = 0;
            for (std::size_t j = 0; j < u.size(); ++j) v += w[j] * u[j];
            local += v;
        });
        acc += local;
        return acc;
    });
}

Integer roof_weight(const ratgeom::LatticePolytope& p, std::int64_t k, const RoofData& roof, Exec exec) {
    if (k < 1) throw DomainError("roof_weight: k must be a positive integer");
    auto s = integer_system(p, Rational(static_cast<long>(k)));
    return reduce_slabs(s, exec, [&](std::int64_t x0) {
        Integer acc = 0;
        long local = 0;
        visit_slab(s, x0, [&](const IntVec& u) {
            std::int64_t top = std::numeric_limits<std::int64_t>::min();
            for (std::size_t i = 0; i < roof.slopes.size(); ++i) {
                std::int64_t v = k * roof.offsets[i];
                for (std::size_t j = 0; j < u.size(); ++j) v += roof.slopes[i][j] * u[j];
                if (v > top) top = v;
            }
            std::int64_t num = k * roof.ceiling - top;
            // floor division for positive denominator
            std::int64_t q = num / roof.denom;
            if ((num % roof.denom != 0) && (num < 0)) --q;
            local += q;
        });
        acc += local;
        return acc;
    });
}

}  // namespace kstab::kernels
