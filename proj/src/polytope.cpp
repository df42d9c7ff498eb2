#include "kstab/polytope.hpp"

#include "kstab/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace kstab::ratgeom {

namespace {

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

struct HalfspaceLess {
    bool operator()(const Halfspace& a, const Halfspace& b) const {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    }
};

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Simplicial boundary piece of the incremental hull, oriented inward.
struct SimplexFacet {
    std::vector<int> verts;  // sorted
    Vec normal;
    Rational offset;
    bool alive = true;
};

}  // namespace

// Builds the certified representation of a point set. Friend of
// LatticePolytope so it can fill the private triangulation.
class HullBuilder {
  public:
    static LatticePolytope build(std::vector<Vec> points);

  private:
    static void full_dimensional(LatticePolytope& out, std::vector<Vec> pts, int d);
    static void one_dimensional(LatticePolytope& out, const std::vector<Vec>& pts);
    static void degenerate(LatticePolytope& out, const std::vector<Vec>& pts, int d);
};

namespace {

SimplexFacet make_facet(const std::vector<Vec>& pts, std::vector<int> verts, const Vec& interior, int d) {
    std::sort(verts.begin(), verts.end());
    linalg::Matrix rows;
    rows.reserve(static_cast<std::size_t>(d - 1));
    const Vec& base = pts[static_cast<std::size_t>(verts[0])];
    for (std::size_t i = 1; i < verts.size(); ++i) rows.push_back(pts[static_cast<std::size_t>(verts[i])] - base);
    auto ns = linalg::nullspace(rows, d);
    if (ns.size() != 1) throw GeometryError("internal: degenerate hull facet");
    Vec n = primitive_integer(ns.front());
    Rational off = dot(n, base);
    if (dot(n, interior) < off) {
        n = -n;
        off = -off;
    }
    return SimplexFacet{std::move(verts), std::move(n), std::move(off), true};
}

std::vector<Vec> dedupe_sorted(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), VecLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Indices of an affinely independent subset of maximal size, greedy in order.
std::vector<int> affine_basis(const std::vector<Vec>& pts, int d) {
    std::vector<int> chosen{0};
    linalg::Matrix diffs;
    int r = 0;
    for (std::size_t i = 1; i < pts.size() && r < d; ++i) {
        diffs.push_back(pts[i] - pts[0]);
        int nr = linalg::rank(diffs);
        if (nr > r) {
            r = nr;
            chosen.push_back(static_cast<int>(i));
        } else {
            diffs.pop_back();
        }
    }
    return chosen;
}

}  // namespace

void HullBuilder::one_dimensional(LatticePolytope& out, const std::vector<Vec>& pts) {
    // pts sorted, at least two distinct.
    const Vec& lo = pts.front();
    const Vec& hi = pts.back();
    out.vertices_ = {lo, hi};
    out.halfspaces_ = {Halfspace{Vec{Rational(-1)}, -hi[0]}, Halfspace{Vec{Rational(1)}, lo[0]}};
    out.tri_points_ = {lo, hi};
    out.boundary_ = {{1}, {0}};
    out.boundary_facet_ = {0, 1};
    out.interior_ = Vec{(lo[0] + hi[0]) / 2};
}

void HullBuilder::full_dimensional(LatticePolytope& out, std::vector<Vec> pts, int d) {
    if (d == 1) {
        one_dimensional(out, pts);
        return;
    }
    auto simplex = affine_basis(pts, d);
    Vec interior = zero_vec(d);
    for (int i : simplex) interior = interior + pts[static_cast<std::size_t>(i)];
    interior = frac(1, d + 1) * interior;

    std::vector<SimplexFacet> facets;
    for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
        std::vector<int> verts;
        for (std::size_t j = 0; j < simplex.size(); ++j)
            if (j != omit) verts.push_back(simplex[j]);
        facets.push_back(make_facet(pts, verts, interior, d));
    }

    std::vector<bool> in_simplex(pts.size(), false);
    for (int i : simplex) in_simplex[static_cast<std::size_t>(i)] = true;

    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        if (in_simplex[pi]) continue;
        const Vec& p = pts[pi];
        std::map<std::vector<int>, int> ridge_count;
        bool any_visible = false;
        for (auto& f : facets) {
            if (!f.alive || !(dot(f.normal, p) < f.offset)) continue;
            any_visible = true;
            f.alive = false;
            for (std::size_t j = 0; j < f.verts.size(); ++j) {
                std::vector<int> ridge;
                ridge.reserve(f.verts.size() - 1);
                for (std::size_t k = 0; k < f.verts.size(); ++k)
                    if (k != j) ridge.push_back(f.verts[k]);
                ++ridge_count[ridge];
            }
        }
        if (!any_visible) continue;
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            auto verts = ridge;
            verts.push_back(static_cast<int>(pi));
            facets.push_back(make_facet(pts, std::move(verts), interior, d));
        }
        facets.erase(std::remove_if(facets.begin(), facets.end(), [](const SimplexFacet& f) { return !f.alive; }),
                     facets.end());
    }

    // Merge coplanar simplices into facets.
    std::map<Halfspace, std::size_t, HalfspaceLess> facet_index;
    for (const auto& f : facets) facet_index.emplace(Halfspace{f.normal, f.offset}, 0);
    std::size_t k = 0;
    for (auto& [h, idx] : facet_index) {
        idx = k++;
        out.halfspaces_.push_back(h);
    }

    // A boundary point is a vertex iff the facets through it have normals of full rank.
    std::vector<bool> on_boundary(pts.size(), false);
    for (const auto& f : facets)
        for (int v : f.verts) on_boundary[static_cast<std::size_t>(v)] = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!on_boundary[i]) continue;
        linalg::Matrix tight;
        for (const auto& h : out.halfspaces_)
            if (dot(h.normal, pts[i]) == h.offset) tight.push_back(h.normal);
        if (linalg::rank(tight) == d) out.vertices_.push_back(pts[i]);
    }

    for (const auto& f : facets) {
        out.boundary_.push_back(f.verts);
        out.boundary_facet_.push_back(facet_index.at(Halfspace{f.normal, f.offset}));
    }
    out.tri_points_ = std::move(pts);
    out.interior_ = std::move(interior);
}

void HullBuilder::degenerate(LatticePolytope& out, const std::vector<Vec>& pts, int d) {
    auto basis_idx = affine_basis(pts, d);
    const int k = static_cast<int>(basis_idx.size()) - 1;
    out.dim_ = k;
    const Vec& p0 = pts[static_cast<std::size_t>(basis_idx[0])];
    linalg::Matrix dirs;
    for (std::size_t i = 1; i < basis_idx.size(); ++i) dirs.push_back(pts[static_cast<std::size_t>(basis_idx[i])] - p0);

    std::vector<Halfspace> eqs;
    auto normals = k == 0 ? std::vector<Vec>{} : linalg::nullspace(dirs, d);
    if (k == 0) {
        for (int i = 0; i < d; ++i) normals.push_back(unit_vec(d, i));
    }
    for (auto& eta : normals) {
        Vec n = primitive_integer(eta);
        Rational off = dot(n, p0);
        eqs.push_back(Halfspace{n, off});
        eqs.push_back(Halfspace{-n, -off});
    }
    if (k == 0) {
        out.vertices_ = {p0};
        out.halfspaces_ = std::move(eqs);
        return;
    }

    // Coordinates on which the projection of the affine hull is injective.
    std::vector<int> coords;
    linalg::Matrix cols;
    for (int c = 0; c < d && static_cast<int>(coords.size()) < k; ++c) {
        Vec col;
        for (const auto& dir : dirs) col.push_back(dir[static_cast<std::size_t>(c)]);
        cols.push_back(col);
        if (linalg::rank(cols) > static_cast<int>(coords.size()))
            coords.push_back(c);
        else
            cols.pop_back();
    }
    auto project = [&](const Vec& p) {
        Vec q;
        for (int c : coords) q.push_back(p[static_cast<std::size_t>(c)]);
        return q;
    };
    std::vector<Vec> proj;
    proj.reserve(pts.size());
    for (const auto& p : pts) proj.push_back(project(p));
    LatticePolytope low;
    low.ambient_dim_ = k;
    low.dim_ = k;
    full_dimensional(low, dedupe_sorted(proj), k);

    std::map<Vec, Vec, VecLess> lift;
    for (const auto& p : pts) lift.emplace(project(p), p);
    for (const auto& v : low.vertices_) out.vertices_.push_back(lift.at(v));
    std::sort(out.vertices_.begin(), out.vertices_.end(), VecLess{});

    out.halfspaces_ = std::move(eqs);
    for (const auto& h : low.halfspaces_) {
        Vec n = zero_vec(d);
        for (std::size_t i = 0; i < coords.size(); ++i) n[static_cast<std::size_t>(coords[i])] = h.normal[i];
        out.halfspaces_.push_back(Halfspace{n, h.offset});
    }
}

LatticePolytope HullBuilder::build(std::vector<Vec> points) {
    if (points.empty()) throw GeometryError("hull of an empty point set");
    const std::size_t d = points.front().size();
    if (d == 0) throw GeometryError("hull: zero-dimensional ambient space");
    for (const auto& p : points)
        if (p.size() != d) throw GeometryError("hull: points of mixed dimension");
    auto pts = dedupe_sorted(std::move(points));
    LatticePolytope out;
    out.ambient_dim_ = static_cast<int>(d);
    const int rank = static_cast<int>(affine_basis(pts, static_cast<int>(d)).size()) - 1;
    if (rank == static_cast<int>(d)) {
        out.dim_ = rank;
        full_dimensional(out, std::move(pts), rank);
    } else {
        degenerate(out, pts, static_cast<int>(d));
    }
    return out;
}

LatticePolytope LatticePolytope::hull(std::vector<Vec> points) { return HullBuilder::build(std::move(points)); }

LatticePolytope LatticePolytope::empty(int ambient_dim) {
    LatticePolytope p;
    p.ambient_dim_ = ambient_dim;
    p.dim_ = -1;
    return p;
}

LatticePolytope LatticePolytope::from_halfspaces(int ambient_dim, std::vector<Halfspace> halfspaces) {
    const auto d = static_cast<std::size_t>(ambient_dim);
    // Normalize to primitive normals and keep the tightest offset per normal.
    std::map<Vec, Rational, VecLess> tight;
    for (auto& h : halfspaces) {
        if (h.normal.size() != d) throw GeometryError("half-space of wrong dimension");
        if (is_zero(h.normal)) {
            if (h.offset > 0) return empty(ambient_dim);
            continue;
        }
        Vec n = primitive_integer(h.normal);
        std::size_t nz = 0;
        while (h.normal[nz] == 0) ++nz;
        Rational scale = n[nz] / h.normal[nz];
        Rational off = h.offset * scale;
        auto [it, inserted] = tight.emplace(n, off);
        if (!inserted && off > it->second) it->second = off;
    }
    std::vector<Halfspace> hs;
    for (auto& [n, off] : tight) hs.push_back(Halfspace{n, off});
    if (hs.size() < d) return empty(ambient_dim);

    std::vector<Vec> candidates;
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t m = hs.size();
    while (true) {
        linalg::Matrix rows;
        Vec rhs;
        for (auto i : idx) {
            rows.push_back(hs[i].normal);
            rhs.push_back(hs[i].offset);
        }
        if (auto x = linalg::solve_unique(rows, rhs)) {
            bool feasible = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return dot(h.normal, *x) >= h.offset; });
            if (feasible) candidates.push_back(std::move(*x));
        }
        // next combination
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == m - d + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (candidates.empty()) return empty(ambient_dim);
    return hull(std::move(candidates));
}

std::vector<std::size_t> LatticePolytope::vertices_on_facet(std::size_t facet) const {
    const auto& h = halfspaces_.at(facet);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (dot(h.normal, vertices_[i]) == h.offset) out.push_back(i);
    return out;
}

bool LatticePolytope::contains(const Vec& u) const {
    if (is_empty()) return false;
    if (u.size() != static_cast<std::size_t>(ambient_dim_)) throw GeometryError("contains: dimension mismatch");
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return dot(h.normal, u) >= h.offset; });
}

LatticePolytope LatticePolytope::scaled(const Rational& k) const {
    if (k < 0) throw DomainError("scaled: negative factor");
    if (is_empty()) return *this;
    if (k == 0) return hull({zero_vec(ambient_dim_)});
    LatticePolytope out = *this;
    for (auto& v : out.vertices_) v = k * v;
    for (auto& h : out.halfspaces_) h.offset *= k;
    for (auto& p : out.tri_points_) p = k * p;
    if (!out.interior_.empty()) out.interior_ = k * out.interior_;
    return out;
}

LatticePolytope LatticePolytope::translated(const Vec& t) const {
    if (is_empty()) return *this;
    LatticePolytope out = *this;
    for (auto& v : out.vertices_) v = v + t;
    for (auto& h : out.halfspaces_) h.offset += dot(h.normal, t);
    for (auto& p : out.tri_points_) p = p + t;
    if (!out.interior_.empty()) out.interior_ = out.interior_ + t;
    return out;
}

namespace {

// |det(p_1 - apex, ..., p_d - apex)| for a boundary simplex coned to apex.
Rational cone_determinant(const LatticePolytope& p, const std::vector<int>& simplex) {
    const auto& pts = p.triangulation_points();
    const auto& apex = p.interior_point();
    linalg::Matrix m;
    for (int i : simplex) m.push_back(pts[static_cast<std::size_t>(i)] - apex);
    return abs(linalg::determinant(std::move(m)));
}

}  // namespace

Rational volume(const LatticePolytope& p) {
    if (!p.is_full_dimensional()) return 0;
    Rational total = 0;
    for (const auto& s : p.boundary_simplices()) total += cone_determinant(p, s);
    return total / factorial(p.ambient_dim());
}

Vec barycenter(const LatticePolytope& p) {
    if (!p.is_full_dimensional()) throw GeometryError("barycenter of a degenerate polytope");
    const int d = p.ambient_dim();
    const auto& pts = p.triangulation_points();
    Vec acc = zero_vec(d);
    Rational total = 0;
    for (const auto& s : p.boundary_simplices()) {
        Rational w = cone_determinant(p, s);
        Vec c = p.interior_point();
        for (int i : s) c = c + pts[static_cast<std::size_t>(i)];
        acc = acc + w * c;
        total += w;
    }
    return Rational(1) / (total * (d + 1)) * acc;
}

Rational integrate_linear(const LatticePolytope& p, const Vec& form) {
    if (!p.is_full_dimensional()) return 0;
    return volume(p) * dot(barycenter(p), form);
}

Rational facet_lattice_volume(const LatticePolytope& p, std::size_t facet) {
    if (!p.is_full_dimensional()) throw GeometryError("facet volume of a degenerate polytope");
    const auto& h = p.halfspaces().at(facet);
    if (!is_integral(h.normal)) throw GeometryError("facet normal is not an integer vector");
    const int d = p.ambient_dim();
    const auto& pts = p.triangulation_points();
    const auto& apex = p.interior_point();
    const Rational height = dot(h.normal, apex) - h.offset;
    Rational total = 0;
    for (std::size_t i = 0; i < p.boundary_simplices().size(); ++i) {
        if (p.boundary_facet()[i] != facet) continue;
        const auto& s = p.boundary_simplices()[i];
        const Vec& base = pts[static_cast<std::size_t>(s[0])];
        linalg::Matrix m;
        for (std::size_t j = 1; j < s.size(); ++j) m.push_back(pts[static_cast<std::size_t>(s[j])] - base);
        m.push_back(apex - base);
        total += abs(linalg::determinant(std::move(m)));
    }
    return total / (factorial(d - 1) * height);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw GeometryError("minkowski_sum: dimension mismatch");
    if (p.is_empty() || q.is_empty()) return LatticePolytope::empty(p.ambient_dim());
    std::vector<Vec> pts;
    pts.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) pts.push_back(a + b);
    return LatticePolytope::hull(std::move(pts));
}

Rational mixed_volume(const std::vector<LatticePolytope>& bodies) {
    const int n = static_cast<int>(bodies.size());
    if (n == 0) throw GeometryError("mixed_volume of no bodies");
    for (const auto& b : bodies) {
        if (b.ambient_dim() != n) throw GeometryError("mixed_volume: need n bodies in dimension n");
        if (b.is_empty()) throw GeometryError("mixed_volume: empty body");
    }
    // Group equal bodies; the polarization sum then runs over count vectors.
    std::vector<const LatticePolytope*> distinct;
    std::vector<int> mult;
    for (const auto& b : bodies) {
        auto it = std::find_if(distinct.begin(), distinct.end(), [&](const LatticePolytope* d) { return *d == b; });
        if (it == distinct.end()) {
            distinct.push_back(&b);
            mult.push_back(1);
        } else {
            ++mult[static_cast<std::size_t>(it - distinct.begin())];
        }
    }
    const std::size_t r = distinct.size();
    auto binom = [](int a, int b) {
        Rational c = 1;
        for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
        return c;
    };
    std::vector<int> counts(r, 0);
    Rational total = 0;
    while (true) {
        std::size_t i = 0;
        while (i < r && counts[i] == mult[i]) counts[i++] = 0;
        if (i == r) break;
        ++counts[i];
        int used = std::accumulate(counts.begin(), counts.end(), 0);
        Rational coeff = ((n - used) % 2 == 0) ? 1 : -1;
        std::vector<Vec> acc{zero_vec(n)};
        LatticePolytope sum = LatticePolytope::hull(acc);
        for (std::size_t j = 0; j < r; ++j) {
            if (counts[j] == 0) continue;
            coeff *= binom(mult[j], counts[j]);
            sum = minkowski_sum(sum, distinct[j]->scaled(counts[j]));
        }
        total += coeff * volume(sum);
    }
    return total / factorial(n);
}

LatticePolytope slice(const LatticePolytope& p, const Vec& v, const Rational& c) {
    if (p.is_empty()) return p;
    if (v.size() != static_cast<std::size_t>(p.ambient_dim())) throw GeometryError("slice: dimension mismatch");
    auto hs = p.halfspaces();
    hs.push_back(Halfspace{v, c});
    return LatticePolytope::from_halfspaces(p.ambient_dim(), std::move(hs));
}

LpResult lp_optimize(const Vec& objective, const LatticePolytope& p, Sense sense) {
    if (p.is_empty()) throw GeometryError("lp_optimize over an empty polytope");
    const Vec* best = nullptr;
    Rational best_val;
    for (const auto& v : p.vertices()) {
        Rational val = dot(objective, v);
        bool better = best == nullptr || (sense == Sense::Minimize ? val < best_val : val > best_val);
        if (better) {
            best = &v;
            best_val = val;
        }
    }
    return LpResult{best_val, *best};
}

Rational width(const LatticePolytope& p, const Vec& v) {
    return lp_optimize(v, p, Sense::Maximize).value - lp_optimize(v, p, Sense::Minimize).value;
}

Integer vertex_denominator(const LatticePolytope& p) {
    Integer l = 1;
    for (const auto& v : p.vertices()) {
        Integer d = common_denominator(v);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace kstab::ratgeom
