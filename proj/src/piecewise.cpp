#include "kstab/piecewise.hpp"

#include "kstab/linalg.hpp"

#include <algorithm>

namespace kstab::ratgeom {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw DomainError("interpolate: bad sample sizes");
    linalg::Matrix vander;
    for (const auto& x : xs) {
        Vec row;
        Rational p = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            row.push_back(p);
            p *= x;
        }
        vander.push_back(std::move(row));
    }
    auto c = linalg::solve_unique(vander, ys);
    if (!c) throw DomainError("interpolate: repeated abscissae");
    return Polynomial(std::move(*c));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
    Rational pa = 0, pb = 0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        Rational c = coeffs_[j] / static_cast<long>(j + 1);
        pa = (pa + c) * a;
        pb = (pb + c) * b;
    }
    return pb - pa;
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> polys)
    : breakpoints_(std::move(breakpoints)), polys_(std::move(polys)) {
    if (breakpoints_.empty() || polys_.size() + 1 != breakpoints_.size())
        throw DomainError("piecewise polynomial: need one more breakpoint than pieces");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
        std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end())
        throw DomainError("piecewise polynomial: breakpoints must increase");
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
    if (x < breakpoints_.front()) throw DomainError("piecewise polynomial evaluated left of its domain");
    for (std::size_t i = 0; i < polys_.size(); ++i)
        if (x <= breakpoints_[i + 1]) return polys_[i](x);
    return 0;
}

Rational PiecewisePolynomial::integral() const {
    Rational total = 0;
    for (std::size_t i = 0; i < polys_.size(); ++i) total += polys_[i].integrate(breakpoints_[i], breakpoints_[i + 1]);
    return total;
}

PLFunction PLFunction::upper_envelope(int dim, std::vector<AffinePiece> pieces) {
    if (pieces.empty()) throw GeometryError("PL function with no pieces");
    for (const auto& p : pieces)
        if (static_cast<int>(p.slope.size()) != dim) throw GeometryError("PL piece of wrong dimension");
    PLFunction f;
    f.dim_ = dim;
    f.pieces_ = std::move(pieces);
    return f;
}

PLFunction PLFunction::constant(int dim, const Rational& c) { return upper_envelope(dim, {AffinePiece{zero_vec(dim), c, std::nullopt}}); }

PLFunction PLFunction::lower_convex_envelope(const std::vector<Vec>& points, const std::vector<Rational>& values) {
    if (points.empty() || points.size() != values.size()) throw GeometryError("support points and values differ in count");
    const int n = static_cast<int>(points.front().size());
    std::vector<Vec> lifted;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Vec p = points[i];
        p.push_back(values[i]);
        lifted.push_back(std::move(p));
    }
    auto hull = LatticePolytope::hull(lifted);
    std::vector<AffinePiece> pieces;
    if (hull.is_full_dimensional()) {
        for (const auto& h : hull.halfspaces()) {
            const Rational& beta = h.normal.back();
            if (beta <= 0) continue;
            // <alpha, u> + beta z >= off  <=>  z >= (off - <alpha, u>) / beta
            Vec slope(h.normal.begin(), h.normal.end() - 1);
            pieces.push_back(AffinePiece{Rational(-1) / beta * slope, h.offset / beta, std::nullopt});
        }
    } else {
        linalg::Matrix rows;
        for (const auto& p : points) {
            Vec r = p;
            r.push_back(1);
            rows.push_back(std::move(r));
        }
        auto sol = linalg::solve_any(rows, values);
        if (!sol) throw GeometryError("support points do not span a full-dimensional region");
        pieces.push_back(AffinePiece{Vec(sol->begin(), sol->begin() + n), sol->back(), std::nullopt});
    }
    return upper_envelope(n, std::move(pieces));
}

Rational PLFunction::operator()(const Vec& u) const {
    Rational best = pieces_.front()(u);
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        Rational v = pieces_[i](u);
        if (v > best) best = v;
    }
    return best;
}

void PLFunction::certify_convex_on(const LatticePolytope& domain) const {
    bool any_cell = std::any_of(pieces_.begin(), pieces_.end(), [](const AffinePiece& p) { return p.cell.has_value(); });
    if (!any_cell) return;
    Rational covered = 0;
    for (const auto& p : pieces_) {
        if (!p.cell) throw GeometryError("non-convex PL data: cells must be declared for every piece or none");
        for (const auto& v : p.cell->vertices()) {
            if (!domain.contains(v)) throw GeometryError("non-convex PL data: cell leaves the domain");
            if (p(v) != (*this)(v)) throw GeometryError("non-convex PL data: piece lies below the upper envelope on its cell");
        }
        covered += volume(*p.cell);
    }
    if (covered != volume(domain)) throw GeometryError("non-convex PL data: declared cells do not tile the domain");
}

std::vector<std::pair<std::size_t, LatticePolytope>> PLFunction::linearity_cells(const LatticePolytope& domain) const {
    std::vector<std::pair<std::size_t, LatticePolytope>> out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        bool duplicate = false;
        for (std::size_t j = 0; j < i; ++j)
            if (pieces_[j].slope == pieces_[i].slope && pieces_[j].offset == pieces_[i].offset) duplicate = true;
        if (duplicate) continue;
        auto hs = domain.halfspaces();
        for (std::size_t j = 0; j < pieces_.size(); ++j) {
            if (j == i) continue;
            // piece_i(u) >= piece_j(u)
            hs.push_back(Halfspace{pieces_[i].slope - pieces_[j].slope, pieces_[j].offset - pieces_[i].offset});
        }
        auto cell = LatticePolytope::from_halfspaces(dim_, std::move(hs));
        if (cell.is_full_dimensional()) out.emplace_back(i, std::move(cell));
    }
    return out;
}

Rational PLFunction::min_on(const LatticePolytope& domain) const {
    std::optional<Rational> best;
    for (const auto& [i, cell] : linearity_cells(domain)) {
        for (const auto& v : cell.vertices()) {
            Rational val = pieces_[i](v);
            if (!best || val < *best) best = val;
        }
    }
    if (!best) throw GeometryError("min_on: domain is not full-dimensional");
    return *best;
}

Rational PLFunction::max_on(const LatticePolytope& domain) const {
    if (domain.is_empty()) throw GeometryError("max_on: empty domain");
    Rational best = (*this)(domain.vertices().front());
    for (const auto& v : domain.vertices()) {
        Rational val = (*this)(v);
        if (val > best) best = val;
    }
    return best;
}

Rational PLFunction::integral_over(const LatticePolytope& domain) const {
    Rational total = 0;
    for (const auto& [i, cell] : linearity_cells(domain)) total += volume(cell) * pieces_[i](barycenter(cell));
    return total;
}

PLFunction PLFunction::plus_constant(const Rational& c) const {
    PLFunction g = *this;
    for (auto& p : g.pieces_) p.offset += c;
    return g;
}

}  // namespace kstab::ratgeom
