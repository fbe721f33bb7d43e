#include "cobord/lazard.hpp"

#include <functional>
#include <set>

namespace cobord {

Poly CoefficientLattice::from_coordinates(int degree, const IntVector& coords) const {
    Poly out(ring());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            out += Scalar(coords[i]) * basis_element(degree, i);
    return out;
}

namespace {

std::optional<IntVector> integral(const std::optional<std::vector<Scalar>>& q) {
    if (!q)
        return std::nullopt;
    IntVector out;
    out.reserve(q->size());
    for (const auto& v : *q) {
        if (!is_integer(v))
            return std::nullopt;
        out.push_back(v.get_num());
    }
    return out;
}

} // namespace

IntegerLattice::IntegerLattice() : ring_(make_ring({})) {}

Poly IntegerLattice::basis_element(int degree, std::size_t i) const {
    if (degree != 0 || i != 0)
        throw AlgebraError("IntegerLattice: no basis element in this degree");
    return Poly::constant(ring_, 1);
}

std::optional<std::vector<Scalar>> IntegerLattice::rational_coordinates(const Poly& element,
                                                                        int degree) const {
    Poly e = element.map_into(ring_);
    if (degree != 0)
        return e.is_zero() ? std::optional(std::vector<Scalar>{}) : std::nullopt;
    return std::vector<Scalar>{e.constant_term()};
}

std::optional<IntVector> IntegerLattice::coordinates(const Poly& element, int degree) const {
    return integral(rational_coordinates(element, degree));
}

LaurentLattice::LaurentLattice(int bound)
    : ring_(make_ring({{"beta", -1, GeneratorKind::Coefficient, true}})), bound_(bound) {}

Poly LaurentLattice::basis_element(int degree, std::size_t i) const {
    if (rank(degree) == 0 || i != 0)
        throw AlgebraError("LaurentLattice: no basis element in this degree");
    return Poly::monomial(ring_, {-degree});
}

std::optional<std::vector<Scalar>> LaurentLattice::rational_coordinates(const Poly& element,
                                                                        int degree) const {
    Poly e = element.map_into(ring_);
    if (rank(degree) == 0)
        return e.is_zero() ? std::optional(std::vector<Scalar>{}) : std::nullopt;
    Scalar c = e.coefficient({-degree});
    if (!(e == Poly::monomial(ring_, {-degree}, c)))
        return std::nullopt;
    return std::vector<Scalar>{c};
}

std::optional<IntVector> LaurentLattice::coordinates(const Poly& element, int degree) const {
    return integral(rational_coordinates(element, degree));
}

long partition_count(int n) {
    if (n < 0)
        return 0;
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k)
            p[k] += p[k - part];
    return p[n];
}

namespace {

// Exponent vectors over m_1..m_N of weight n.
std::vector<Exponents> weight_monomials(int n, int N) {
    std::set<Exponents, GradedLexLess> out;
    Exponents e(N, 0);
    std::function<void(int, int)> rec = [&](int part, int rest) {
        if (rest == 0) {
            out.insert(e);
            return;
        }
        if (part > rest || part > N)
            return;
        for (int k = 0; k * part <= rest; ++k) {
            e[part - 1] = k;
            rec(part + 1, rest - k * part);
        }
        e[part - 1] = 0;
    };
    rec(1, n);
    return {out.begin(), out.end()};
}

} // namespace

LazardBasis::LazardBasis(int max_degree)
    : max_degree_(max_degree), ring_(logarithm_coefficient_ring(std::max(max_degree, 0))) {
    if (max_degree < 0)
        throw AlgebraError("lazard_basis: negative degree bound");
    for (int n = 0; n <= max_degree; ++n)
        monomials_.push_back(weight_monomials(n, max_degree));

    // a_{ij}, i <= j, deg = i + j - 1 <= N.
    std::vector<std::pair<int, const Poly*>> gens;
    if (max_degree >= 1) {
        FormalGroupLaw f = fgl_universal(max_degree);
        for (int i = 1; i <= max_degree; ++i)
            for (int j = i; i + j - 1 <= max_degree; ++j)
                aij_.emplace(std::make_pair(i, j), f.coefficient(i, j).map_into(ring_));
        for (const auto& [ij, p] : aij_)
            gens.emplace_back(ij.first + ij.second - 1, &p);
    }

    // Every monomial in the a_{ij}, grouped by degree.
    std::vector<std::vector<Poly>> spanning(max_degree + 1);
    std::function<void(std::size_t, int, const Poly&)> rec = [&](std::size_t from, int deg,
                                                                 const Poly& prod) {
        spanning[deg].push_back(prod);
        for (std::size_t k = from; k < gens.size(); ++k) {
            int d = deg + gens[k].first;
            if (d > max_degree)
                continue;
            rec(k, d, mul(prod, *gens[k].second));
        }
    };
    rec(0, 0, Poly::constant(ring_, 1));

    for (int n = 0; n <= max_degree; ++n) {
        const auto& mons = monomials_[n];
        IntMatrix gram(0, mons.size());
        for (const auto& p : spanning[n]) {
            IntVector row;
            row.reserve(mons.size());
            for (const auto& e : mons) {
                Scalar c = p.coefficient(e);
                if (!is_integer(c))
                    throw InternalError("lazard_basis: non-integral law coefficient");
                row.push_back(c.get_num());
            }
            gram.append_row(row);
        }
        HermiteForm h = hnf(gram);
        if (static_cast<long>(h.rank) != partition_count(n))
            throw InternalError("lazard_basis: rank of L_" + std::to_string(n) +
                                " is not the partition count");
        std::vector<std::size_t> keep(h.rank);
        std::vector<std::size_t> cols(mons.size());
        for (std::size_t i = 0; i < h.rank; ++i)
            keep[i] = i;
        for (std::size_t j = 0; j < mons.size(); ++j)
            cols[j] = j;
        basis_.push_back(h.H.submatrix(keep, cols));
        pivots_.push_back(h.pivot_cols);
    }
}

int LazardBasis::rank(int degree) const {
    if (degree < 0 || degree > max_degree_)
        return 0;
    return static_cast<int>(basis_[degree].rows());
}

Poly LazardBasis::basis_element(int degree, std::size_t i) const {
    const auto& mons = monomials_.at(degree);
    const auto& b = basis_.at(degree);
    Poly out(ring_);
    for (std::size_t j = 0; j < mons.size(); ++j)
        if (b(i, j) != 0)
            out.add_term(mons[j], Scalar(b(i, j)));
    return out;
}

std::vector<Scalar> LazardBasis::monomial_coordinates(const Poly& element, int degree) const {
    Poly e = element.map_into(ring_);
    const auto& mons = monomials_.at(degree);
    std::vector<Scalar> v;
    v.reserve(mons.size());
    std::size_t matched = 0;
    for (const auto& m : mons) {
        Scalar c = e.coefficient(m);
        if (c != 0)
            ++matched;
        v.push_back(c);
    }
    if (matched != e.size())
        throw AlgebraError("element is not homogeneous of degree " + std::to_string(degree));
    return v;
}

std::optional<std::vector<Scalar>> LazardBasis::rational_coordinates(const Poly& element,
                                                                     int degree) const {
    if (degree < 0 || degree > max_degree_) {
        if (element.is_zero())
            return std::vector<Scalar>{};
        throw AlgebraError("Lazard degree " + std::to_string(degree) + " outside basis range");
    }
    return solve_hnf(basis_[degree], pivots_[degree], monomial_coordinates(element, degree));
}

std::optional<IntVector> LazardBasis::coordinates(const Poly& element, int degree) const {
    return integral(rational_coordinates(element, degree));
}

bool LazardBasis::contains(const Poly& element) const {
    Poly e = element.map_into(ring_);
    for (int n = 0; n <= max_degree_; ++n) {
        Poly part = e.homogeneous_component(n);
        if (!part.is_zero() && !coordinates(part, n))
            return false;
        e -= part;
    }
    return e.is_zero();
}

LazardBasis lazard_basis(int max_degree) { return LazardBasis(max_degree); }

Poly pn_class(const LazardBasis& basis, int n) {
    if (n < 0 || n > basis.max_degree())
        throw AlgebraError("pn_class: degree outside basis range");
    const RingPtr& r = basis.ring();
    Poly p = n == 0 ? Poly::constant(r, 1)
                    : Scalar(n + 1) * Poly::variable(r, "m" + std::to_string(n));
    if (!basis.coordinates(p, n))
        throw InternalError("pn_class: [P^" + std::to_string(n) + "] not in the lattice");
    return p;
}

} // namespace cobord
