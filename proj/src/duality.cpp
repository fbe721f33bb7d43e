#include "cobord/duality.hpp"

#include "cobord/flag_chow.hpp"

#include <algorithm>
#include <numeric>

namespace cobord {

namespace {

int weight(const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool dominated(const std::vector<int>& k, const std::vector<int>& m) {
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] > m[i])
            return false;
    return true;
}

bool all_units(const IntVector& divisors, const Integer& inverted) {
    return std::all_of(divisors.begin(), divisors.end(),
                       [&](const Integer& d) { return divides_power_of(d, inverted); });
}

std::vector<std::size_t> range(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

IntMatrix stack(const std::vector<IntVector>& rows, std::size_t cols) {
    return IntMatrix::from_rows(rows, cols);
}

// Invariant rows of total degree -e seen through filtration <= n, together
// with whether the cut n + slack agrees with the cut n.
struct InvariantSlice {
    TwistedBlock block;
    IntMatrix rows;
    bool stable = true;
};

InvariantSlice invariant_slice(const TwistedContext& tctx, const LazardBasis& L, int e, int n, int slack) {
    InvariantBlock narrow = invariants_block(tctx, L, -e, n, false);
    InvariantBlock wide = invariants_block(tctx, L, -e, n + slack, false);
    InvariantSlice out;
    out.block = narrow.block;
    IntMatrix proj = wide.kernel.submatrix(range(wide.kernel.rows()), range(narrow.block.dim()));
    out.rows = row_lattice(proj);
    out.stable = out.rows == narrow.kernel;
    return out;
}

DegreeVerdict check_degree(const BTContext& bt, const TwistedContext& tctx, const WeylGroup& W,
                           int n, int slack, const Integer& inverted) {
    const LazardBasis& L = bt.lazard();
    DegreeVerdict v;
    v.degree = n;
    v.coinvariants = coinvariants(bt, W, n);
    const CoinvariantsReport& co = v.coinvariants;
    const BTLattice lat = bt_lattice(bt, n);
    const std::size_t dim = lat.dim();

    std::vector<IntVector> g_rows;
    IntMatrix leading(0, 0);
    for (int e = 0; e <= n; ++e) {
        InvariantSlice slice = invariant_slice(tctx, L, e, n, slack);
        v.stable = v.stable && slice.stable;
        const TwistedBlock& blk = slice.block;
        const int rk = L.rank(n - e);

        // pair[c][col]: L_{n-e} coordinates of <b_c t^k, b' p_m>.
        std::vector<std::vector<IntVector>> pair(blk.dim(), std::vector<IntVector>(dim));
        for (std::size_t c = 0; c < blk.dim(); ++c) {
            const std::vector<int>& k = blk.monomials[c];
            Poly bc = L.basis_element(blk.filtration(c) - e, blk.basis_index[c]);
            for (std::size_t col = 0; col < dim; ++col) {
                const auto& m = lat.tuples[col];
                if (!dominated(k, m)) {
                    pair[c][col].assign(static_cast<std::size_t>(rk), 0);
                    continue;
                }
                std::vector<int> diff(m.size());
                for (std::size_t i = 0; i < m.size(); ++i)
                    diff[i] = m[i] - k[i];
                Poly b2 = L.basis_element(n - weight(m), lat.basis_index[col]);
                auto coords = L.coordinates(bc * b2 * bt.pn_product(diff), n - e);
                if (!coords)
                    throw InternalError("duality_check: pairing value outside the Lazard lattice");
                pair[c][col] = std::move(*coords);
            }
        }
        for (std::size_t a = 0; a < slice.rows.rows(); ++a)
            for (int l = 0; l < rk; ++l) {
                IntVector row(dim);
                for (std::size_t c = 0; c < blk.dim(); ++c) {
                    const Integer& coef = slice.rows(a, c);
                    if (coef == 0)
                        continue;
                    for (std::size_t col = 0; col < dim; ++col)
                        row[col] += coef * pair[c][col][static_cast<std::size_t>(l)];
                }
                g_rows.push_back(std::move(row));
            }

        if (e == n) {
            // Filtration-n coordinates carry coefficient degree 0: one per t^k, |k| = n.
            std::vector<std::size_t> top;
            for (std::size_t c = 0; c < blk.dim(); ++c)
                if (blk.filtration(c) == n)
                    top.push_back(c);
            leading = slice.rows.submatrix(range(slice.rows.rows()), top);
            // Reorder columns to the lattice's top tuples.
            std::vector<std::size_t> lat_top;
            for (std::size_t col = 0; col < dim; ++col)
                if (weight(lat.tuples[col]) == n)
                    lat_top.push_back(col);
            IntMatrix reordered(leading.rows(), lat_top.size());
            for (std::size_t j = 0; j < lat_top.size(); ++j) {
                auto it = std::find_if(top.begin(), top.end(), [&](std::size_t c) {
                    return blk.monomials[c] == lat.tuples[lat_top[j]];
                });
                if (it == top.end())
                    throw InternalError("duality_check: leading coordinates do not match");
                const std::size_t src = static_cast<std::size_t>(it - top.begin());
                for (std::size_t i = 0; i < leading.rows(); ++i)
                    reordered(i, j) = leading(i, src);
            }
            leading = row_lattice(reordered);
        }
    }

    IntMatrix G = stack(g_rows, dim);
    v.invariant_rows = G.rows();
    v.relations_pair_trivially = (G * co.relations).is_zero();
    v.null_space_matches = rank(G) + co.relation_rank == dim;

    IntMatrix M = G * co.lifts.transpose();
    v.pairing_rank = rank(M);
    v.pairing_divisors = smith_diagonal(M);

    // Indecomposables: top coordinates modulo the saturated relations.
    std::vector<std::size_t> lat_top;
    for (std::size_t col = 0; col < dim; ++col)
        if (weight(lat.tuples[col]) == n)
            lat_top.push_back(col);
    IntMatrix sat = kernel_basis(co.projection);
    IntMatrix sat_top = sat.submatrix(range(sat.rows()), lat_top);
    Cokernel ind = cokernel(sat_top.transpose());
    v.indecomposable_rank = ind.free_rank;
    v.indecomposable_torsion = ind.elementary_divisors;
    v.leading_rank = rank(leading);
    v.leading_divisors = smith_diagonal(leading);
    const bool leading_kills = leading.rows() == 0 || sat_top.rows() == 0 ||
                               (leading * sat_top.transpose()).is_zero();

    v.rational_ok = v.relations_pair_trivially && v.null_space_matches &&
                    v.pairing_rank == co.free_rank && leading_kills &&
                    v.leading_rank == v.indecomposable_rank;
    auto integral = [&](const Integer& inv) {
        return v.rational_ok && all_units(v.pairing_divisors, inv) &&
               all_units(v.indecomposable_torsion, inv) && all_units(v.leading_divisors, inv);
    };
    v.unimodular = integral(Integer(1));
    v.integral_ok = integral(inverted);

    if (!v.rational_ok)
        v.verdict = "failed";
    else if (!v.stable)
        v.verdict = "rational-only";
    else if (v.unimodular)
        v.verdict = "perfect over Z";
    else if (v.integral_ok)
        v.verdict = "perfect over Z[1/tau]";
    else
        v.verdict = "failed";
    return v;
}

} // namespace

bool DualityReport::passed() const {
    return std::none_of(degrees.begin(), degrees.end(),
                        [](const DegreeVerdict& d) { return d.verdict == "failed"; });
}

DualityReport duality_check(const RootDatum& rd, int max_degree, const DualityOptions& options) {
    if (max_degree < 0)
        throw AlgebraError("duality_check: negative degree bound");
    if (options.slack < 0)
        throw AlgebraError("duality_check: negative slack");
    rd.validate();
    DualityReport rep;
    rep.datum = rd;
    rep.max_degree = max_degree;
    rep.torsion_index = torsion_index(rd);
    rep.inverted = options.invert.value_or(rep.torsion_index);

    const int D = std::max(max_degree + options.slack, 1);
    BTContext bt(rd.rank, D);
    TwistedContext tctx(bt.law(), rd, D);
    for (int n = 0; n <= max_degree; ++n)
        rep.degrees.push_back(check_degree(bt, tctx, tctx.weyl(), n, options.slack, rep.inverted));
    return rep;
}

} // namespace cobord
