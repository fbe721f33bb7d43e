#include "cobord/twisted.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace cobord {

namespace {

std::vector<std::string> t_names(std::size_t r) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= r; ++i)
        names.push_back("t" + std::to_string(i));
    return names;
}

std::vector<Exponents> monomials_of_degree(std::size_t r, int f) {
    std::set<Exponents, GradedLexLess> out;
    Exponents e(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i + 1 == r) {
            e[i] = rest;
            out.insert(e);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, rest - k);
        }
    };
    if (r == 0) {
        if (f == 0)
            out.insert(e);
    } else {
        rec(0, f);
    }
    return {out.begin(), out.end()};
}

int weight(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

TwistedContext::TwistedContext(FormalGroupLaw law, RootDatum datum, int order)
    : law_(std::move(law)), datum_(std::move(datum)), weyl_(weyl_enumerate(datum_)),
      order_(order), ring_(series_ring_over(law_, t_names(datum_.rank))) {
    if (order < 1)
        throw AlgebraError("twisted context: order must be >= 1");
    if (law_.order() < order)
        throw AlgebraError("twisted context: law truncated below the context order");
}

Series TwistedContext::t(std::size_t i) const {
    return Series::variable(ring_, "t" + std::to_string(i + 1), order_);
}

Series TwistedContext::one() const { return Series(Poly::constant(ring_, 1), order_); }

Series character_class(const TwistedContext& ctx, const LatticeVector& m) {
    if (m.size() != ctx.rank())
        throw AlgebraError("character_class: lattice vector has wrong length");
    if (m.empty())
        return Series::zero(ctx.ring(), ctx.order());
    std::vector<Series> vars;
    for (std::size_t i = 0; i < m.size(); ++i)
        vars.push_back(ctx.t(i));
    return formal_combination(ctx.law(), m, vars);
}

Series twisted_mul(const TwistedContext& ctx, const Series& u, const Series& v) {
    if (!same_ring(u.ring(), ctx.ring()) || !same_ring(v.ring(), ctx.ring()))
        throw ContextError("twisted_mul: operands outside the context");
    return (u * v).truncated(std::min(ctx.order(), std::min(u.order(), v.order())));
}

bool relations_check(const TwistedContext& ctx, const LatticeVector& m, const LatticeVector& m2) {
    LatticeVector sum(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        sum[i] = m[i] + m2[i];
    Series lhs = formal_sum(ctx.law(), character_class(ctx, m), character_class(ctx, m2));
    return lhs == character_class(ctx, sum);
}

Series weyl_act_series(const TwistedContext& ctx, std::size_t w, const Series& u) {
    const WeylElement& e = ctx.weyl()[w];
    std::vector<Series> images;
    for (std::size_t i = 0; i < ctx.rank(); ++i)
        images.push_back(character_class(ctx, e.matrix.column(i)));
    return compose(u, images, std::min(u.order(), ctx.order()));
}

int TwistedBlock::filtration(std::size_t c) const { return weight(monomials[c]); }

TwistedBlock twisted_block(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                           int total_degree, int cut) {
    TwistedBlock b;
    b.total_degree = total_degree;
    b.cut = std::min({cut, ctx.order(), coeffs.max_degree() - total_degree});
    for (int f = 0; f <= b.cut; ++f) {
        int d = f + total_degree;
        if (d < coeffs.min_degree())
            continue;
        const int rk = coeffs.rank(d);
        for (const auto& k : monomials_of_degree(ctx.rank(), f))
            for (int j = 0; j < rk; ++j) {
                b.monomials.push_back(k);
                b.basis_index.push_back(static_cast<std::size_t>(j));
            }
    }
    return b;
}

IntMatrix block_action(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                       const TwistedBlock& block, std::size_t w) {
    const std::size_t r = ctx.rank();
    const int cut = block.cut;
    const RingPtr& ring = ctx.ring();
    const std::size_t ncoef = ctx.law().coefficient_ring()->size();

    std::map<Exponents, std::size_t> first_coord;
    for (std::size_t c = 0; c < block.dim(); ++c)
        first_coord.try_emplace(block.monomials[c], c);

    std::vector<Series> images;
    for (std::size_t i = 0; i < r; ++i)
        images.push_back(character_class(ctx, ctx.weyl()[w].matrix.column(i)).truncated(cut));

    std::map<Exponents, Poly> powers;
    std::function<const Poly&(const Exponents&)> power = [&](const Exponents& k) -> const Poly& {
        auto it = powers.find(k);
        if (it != powers.end())
            return it->second;
        auto nz = std::find_if(k.begin(), k.end(), [](int v) { return v > 0; });
        Poly p = Poly::constant(ring, 1);
        if (nz != k.end()) {
            Exponents prev = k;
            std::size_t i = static_cast<std::size_t>(nz - k.begin());
            --prev[i];
            p = mul(power(prev), images[i].poly(), cut);
        }
        return powers.emplace(k, std::move(p)).first->second;
    };

    IntMatrix out(block.dim(), block.dim());
    for (std::size_t c = 0; c < block.dim(); ++c) {
        const int d = block.filtration(c) + block.total_degree;
        Poly b = coeffs.basis_element(d, block.basis_index[c]).map_into(ring);
        Poly img = mul(b, power(block.monomials[c]), cut);

        std::map<Exponents, Poly> by_monomial;
        for (const auto& [e, coef] : img.terms()) {
            Exponents k(e.begin() + static_cast<std::ptrdiff_t>(ncoef), e.end());
            Exponents ce(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(ncoef));
            auto [it, _] = by_monomial.try_emplace(k, ctx.law().coefficient_ring());
            it->second.add_term(ce, coef);
        }
        for (const auto& [k, coef] : by_monomial) {
            const int dk = weight(k) + block.total_degree;
            auto where = first_coord.find(k);
            if (where == first_coord.end())
                throw InternalError("block_action: image leaves the block");
            auto coords = coeffs.coordinates(coef, dk);
            if (!coords)
                throw InternalError("block_action: non-integral image coefficient");
            for (std::size_t j = 0; j < coords->size(); ++j)
                out(where->second + j, c) = (*coords)[j];
        }
    }
    return out;
}

Series block_element(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                     const TwistedBlock& block, const IntVector& coords) {
    const RingPtr& ring = ctx.ring();
    const std::size_t ncoef = ctx.law().coefficient_ring()->size();
    Poly out(ring);
    for (std::size_t c = 0; c < block.dim(); ++c) {
        if (coords[c] == 0)
            continue;
        const int d = block.filtration(c) + block.total_degree;
        Poly b = coeffs.basis_element(d, block.basis_index[c]).map_into(ring);
        Exponents e(ring->size(), 0);
        for (std::size_t i = 0; i < ctx.rank(); ++i)
            e[ncoef + i] = block.monomials[c][i];
        out += Scalar(coords[c]) * mul(b, Poly::monomial(ring, e));
    }
    return Series(out, block.cut);
}

namespace {

IntMatrix fixed_lattice(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                        const TwistedBlock& block) {
    const std::size_t n = block.dim();
    IntMatrix stacked(0, n);
    for (std::size_t g = 0; g < ctx.weyl().num_generators(); ++g) {
        IntMatrix a = block_action(ctx, coeffs, block, ctx.weyl().generator(g));
        for (std::size_t i = 0; i < n; ++i)
            a(i, i) -= 1;
        for (std::size_t i = 0; i < n; ++i)
            stacked.append_row(a.row(i));
    }
    return kernel_basis(stacked);
}

std::size_t leading_column(const IntMatrix& m, std::size_t row) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0)
            return j;
    return m.cols();
}

} // namespace

InvariantBlock invariants_block(const TwistedContext& ctx, const CoefficientLattice& coeffs,
                                int total_degree, int cut, bool check_stability) {
    InvariantBlock out;
    out.block = twisted_block(ctx, coeffs, total_degree, cut);
    out.kernel = fixed_lattice(ctx, coeffs, out.block);
    out.graded_ranks.assign(static_cast<std::size_t>(std::max(out.block.cut, -1) + 1), 0);
    for (std::size_t i = 0; i < out.kernel.rows(); ++i)
        ++out.graded_ranks[static_cast<std::size_t>(
            out.block.filtration(leading_column(out.kernel, i)))];

    if (check_stability) {
        const int wider = out.block.cut + 2;
        if (wider <= ctx.order() && (coeffs.bounded_above() || wider + total_degree <= coeffs.max_degree())) {
            TwistedBlock big = twisted_block(ctx, coeffs, total_degree, wider);
            IntMatrix k2 = fixed_lattice(ctx, coeffs, big);
            std::vector<std::size_t> rows(k2.rows()), cols(out.block.dim());
            std::iota(rows.begin(), rows.end(), 0);
            std::iota(cols.begin(), cols.end(), 0);
            out.stable = row_lattice(k2.submatrix(rows, cols)) == out.kernel;
        }
    }
    return out;
}

std::vector<InvariantBlock> invariants_truncated(const TwistedContext& ctx,
                                                 const CoefficientLattice& coeffs,
                                                 int order, int max_coefficient_degree,
                                                 bool check_stability) {
    if (max_coefficient_degree > coeffs.max_degree())
        throw AlgebraError("invariants_truncated: coefficient degree beyond the lattice");
    if (order < 0 || order > ctx.order())
        throw AlgebraError("invariants_truncated: order outside the context");
    std::vector<InvariantBlock> out;
    for (int delta = -order; delta <= max_coefficient_degree; ++delta) {
        const int cut = std::min(order, max_coefficient_degree - delta);
        out.push_back(invariants_block(ctx, coeffs, delta, cut, check_stability));
    }
    return out;
}

} // namespace cobord
