#include "cobord/bt_module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace cobord {

namespace {

int weight(const Tuple& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool dominated(const Tuple& k, const Tuple& m) {
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] > m[i])
            return false;
    return true;
}

Tuple difference(const Tuple& m, const Tuple& k) {
    Tuple d(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        d[i] = m[i] - k[i];
    return d;
}

std::vector<std::string> t_names(std::size_t r) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= r; ++i)
        names.push_back("t" + std::to_string(i));
    return names;
}

using SplitSeries = std::map<Tuple, Poly, GradedLexLess>;

// Terms of A grouped by t-monomial, coefficients moved into the Lazard ring
// by generator name.
SplitSeries split(const BTContext& ctx, const Series& A) {
    const Ring& ar = *A.ring();
    const RingPtr& target = ctx.coefficient_ring();
    const auto& sidx = ar.series_variables();
    if (sidx.size() != ctx.rank())
        throw ContextError("series has " + std::to_string(sidx.size()) +
                           " series variables, expected " + std::to_string(ctx.rank()));
    std::vector<std::optional<std::size_t>> where(ar.size());
    for (std::size_t i : ar.coefficient_generators())
        where[i] = target->index_of(ar[i].name);

    SplitSeries out;
    Tuple k(sidx.size());
    for (const auto& [e, c] : A.poly().terms()) {
        for (std::size_t i = 0; i < sidx.size(); ++i)
            k[i] = e[sidx[i]];
        Exponents ce(target->size(), 0);
        for (std::size_t i : ar.coefficient_generators()) {
            if (e[i] == 0)
                continue;
            if (!where[i])
                throw ContextError("coefficient generator " + ar[i].name +
                                   " is outside the Lazard ring");
            ce[*where[i]] = e[i];
        }
        out.try_emplace(k, target).first->second.add_term(ce, c);
    }
    return out;
}

void require_order(const Series& A, int needed, const char* where) {
    if (A.order() < needed)
        throw AlgebraError(std::string(where) + ": truncation order " + std::to_string(A.order()) +
                           " too small, need N >= " + std::to_string(needed));
}

} // namespace

std::vector<Tuple> tuples_of_weight(std::size_t r, int n) {
    std::vector<Tuple> out;
    if (n < 0)
        return out;
    if (r == 0) {
        if (n == 0)
            out.emplace_back();
        return out;
    }
    Tuple m(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i + 1 == r) {
            m[i] = rest;
            out.push_back(m);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            m[i] = v;
            rec(i + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

// BTClass

BTClass::BTClass(std::size_t rank, RingPtr coefficients) : rank_(rank), ring_(std::move(coefficients)) {}

BTClass BTClass::basis(std::size_t rank, RingPtr coefficients, Tuple m) {
    if (m.size() != rank)
        throw AlgebraError("BTClass: tuple has wrong length");
    BTClass x(rank, coefficients);
    x.add_term(m, Poly::constant(coefficients, 1));
    return x;
}

Poly BTClass::coefficient(const Tuple& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Poly(ring_) : it->second;
}

int BTClass::max_weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_)
        w = std::max(w, weight(m));
    return w;
}

void BTClass::add_term(const Tuple& m, const Poly& c) {
    if (m.size() != rank_)
        throw AlgebraError("BTClass: tuple has wrong length");
    if (std::any_of(m.begin(), m.end(), [](int v) { return v < 0; }))
        throw AlgebraError("BTClass: negative tuple entry");
    if (c.is_zero())
        return;
    Poly cc = same_ring(c.ring(), ring_) ? c : c.map_into(ring_);
    auto [it, inserted] = terms_.try_emplace(m, cc);
    if (!inserted) {
        it->second += cc;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BTClass& BTClass::operator+=(const BTClass& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

BTClass& BTClass::operator-=(const BTClass& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

BTClass operator*(const Poly& c, const BTClass& x) {
    BTClass out(x.rank_, x.ring_);
    Poly cc = same_ring(c.ring(), x.ring_) ? c : c.map_into(x.ring_);
    for (const auto& [m, b] : x.terms_)
        out.add_term(m, cc * b);
    return out;
}

bool BTClass::operator==(const BTClass& other) const {
    if (rank_ != other.rank_ || terms_.size() != other.terms_.size())
        return false;
    for (auto a = terms_.begin(), b = other.terms_.begin(); a != terms_.end(); ++a, ++b)
        if (a->first != b->first || !(a->second == b->second))
            return false;
    return true;
}

std::string BTClass::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*p[";
        for (std::size_t i = 0; i < m.size(); ++i)
            os << (i ? "," : "") << m[i];
        os << "]";
    }
    return os.str();
}

// BTContext

BTContext::BTContext(std::size_t rank, int max_degree)
    : rank_(rank), max_degree_(max_degree), lazard_(std::max(max_degree, 1)),
      law_(fgl_universal(std::max(max_degree, 1))), series_ring_(series_ring_over(law_, t_names(rank))) {
    if (max_degree < 0)
        throw AlgebraError("BTContext: negative degree bound");
    if (!(*law_.coefficient_ring() == *lazard_.ring()))
        throw InternalError("BTContext: law and Lazard ring disagree");
    for (int n = 0; n <= max_degree_; ++n)
        pn_.push_back(pn_class(lazard_, n));
    dual_ = dual_basis(*this);
}

Series BTContext::t_monomial(const Tuple& k) const {
    if (k.size() != rank_)
        throw AlgebraError("t_monomial: tuple has wrong length");
    Exponents e(series_ring_->size(), 0);
    const auto& sidx = series_ring_->series_variables();
    for (std::size_t i = 0; i < rank_; ++i)
        e[sidx[i]] = k[i];
    return Series(Poly::monomial(series_ring_, e), max_degree_);
}

Poly BTContext::pn(int n) const {
    if (n < 0)
        return Poly(lazard_.ring());
    if (n > max_degree_)
        throw AlgebraError("[P^" + std::to_string(n) + "] beyond the degree bound " +
                           std::to_string(max_degree_));
    return pn_[static_cast<std::size_t>(n)];
}

Poly BTContext::pn_product(const Tuple& m) const {
    Poly out = Poly::constant(lazard_.ring(), 1);
    for (int v : m) {
        if (v < 0)
            return Poly(lazard_.ring());
        if (v > 0)
            out = out * pn(v);
    }
    return out;
}

const Series& BTContext::dual(const Tuple& m) const {
    auto it = dual_.find(m);
    if (it == dual_.end())
        throw AlgebraError("dual basis element beyond the degree bound");
    return it->second;
}

BTClass BTContext::basis_class(const Tuple& m) const { return BTClass::basis(rank_, lazard_.ring(), m); }

// Operations

Poly pairing(const BTContext& ctx, const Series& A, const BTClass& x) {
    require_order(A, x.max_weight(), "pairing");
    Poly out(ctx.coefficient_ring());
    for (const auto& [k, a] : split(ctx, A))
        for (const auto& [m, b] : x.terms())
            if (dominated(k, m))
                out += a * b * ctx.pn_product(difference(m, k));
    return out;
}

Poly epsilon(const BTContext& ctx, const BTClass& x) {
    Poly out(ctx.coefficient_ring());
    for (const auto& [m, b] : x.terms())
        out += b * ctx.pn_product(m);
    return out;
}

BTClass chern_op(const BTContext& ctx, const Series& A, const BTClass& x) {
    require_order(A, x.max_weight(), "chern_op");
    BTClass out(ctx.rank(), ctx.coefficient_ring());
    for (const auto& [k, a] : split(ctx, A))
        for (const auto& [m, b] : x.terms())
            if (dominated(k, m))
                out.add_term(difference(m, k), a * b);
    return out;
}

std::map<Tuple, Series, GradedLexLess> dual_basis(const BTContext& ctx) {
    const int D = ctx.max_degree();
    const RingPtr& L = ctx.coefficient_ring();
    std::vector<Tuple> all;
    for (int n = 0; n <= D; ++n)
        for (auto& m : tuples_of_weight(ctx.rank(), n))
            all.push_back(std::move(m));

    std::map<Tuple, Series, GradedLexLess> out;
    for (const Tuple& target : all) {
        // c_m for m >= target, solved in graded order: <d, p_m> = sum_{target <= k <= m} c_k [P^{m-k}].
        std::map<Tuple, Poly, GradedLexLess> c;
        for (const Tuple& m : all) {
            if (!dominated(target, m))
                continue;
            Poly v = m == target ? Poly::constant(L, 1) : Poly(L);
            for (const auto& [k, ck] : c)
                if (dominated(k, m))
                    v -= ck * ctx.pn_product(difference(m, k));
            if (!v.is_zero())
                c.emplace(m, std::move(v));
        }
        Poly d(ctx.series_ring());
        for (const auto& [k, ck] : c)
            d += mul(ck.map_into(ctx.series_ring()), ctx.t_monomial(k).poly());
        out.emplace(target, Series(d, D));
    }
    return out;
}

namespace {

// v_k = <t^k, [P^m, L]> for every |k| <= |m|.
std::map<Tuple, Poly, GradedLexLess> product_class_values(const BTContext& ctx,
                                                          const ProductClassSpec& spec) {
    const std::size_t r = ctx.rank();
    if (spec.m.size() != r || spec.bundles.dim() != r)
        throw AlgebraError("product_class: shape mismatch");
    const int n = weight(spec.m);
    if (n > ctx.max_degree())
        throw AlgebraError("product_class: |m| = " + std::to_string(n) + " exceeds the degree bound " +
                           std::to_string(ctx.max_degree()));
    const RingPtr& ring = ctx.series_ring();
    const auto& sidx = ring->series_variables();
    const int order = std::max(n, 1);

    std::vector<Series> h;
    for (std::size_t i = 0; i < r; ++i)
        h.push_back(Series::variable(ring, (*ring)[sidx[i]].name, order));
    std::vector<Poly> c1;
    for (std::size_t j = 0; j < r; ++j) {
        LatticeVector row(r);
        for (std::size_t k = 0; k < r; ++k)
            row[k] = spec.bundles(j, k);
        c1.push_back(formal_combination(ctx.law(), row, h).poly());
    }

    // Drops monomials outside L[h]/(h_i^{m_i+1}).
    auto reduce = [&](const Poly& p) {
        Poly q(ring);
        for (const auto& [e, c] : p.terms()) {
            bool keep = true;
            for (std::size_t i = 0; i < r; ++i)
                keep = keep && e[sidx[i]] <= spec.m[i];
            if (keep)
                q.add_term(e, c);
        }
        return q;
    };

    std::map<Tuple, Poly, GradedLexLess> powers;
    std::function<const Poly&(const Tuple&)> power = [&](const Tuple& k) -> const Poly& {
        auto it = powers.find(k);
        if (it != powers.end())
            return it->second;
        auto nz = std::find_if(k.begin(), k.end(), [](int v) { return v > 0; });
        Poly p = Poly::constant(ring, 1);
        if (nz != k.end()) {
            Tuple prev = k;
            std::size_t i = static_cast<std::size_t>(nz - k.begin());
            --prev[i];
            p = reduce(mul(power(prev), c1[i], n));
        }
        return powers.emplace(k, std::move(p)).first->second;
    };

    std::map<Tuple, Poly, GradedLexLess> values;
    for (int w = 0; w <= n; ++w)
        for (const Tuple& k : tuples_of_weight(r, w)) {
            Poly v(ctx.coefficient_ring());
            for (const auto& [e, coef] : split_by_series_monomial(power(k), ctx.coefficient_ring()))
                v += coef * ctx.pn_product(difference(spec.m, e));
            values.emplace(k, std::move(v));
        }
    return values;
}

} // namespace

Poly pair_with_product_class(const BTContext& ctx, const Series& A, const ProductClassSpec& spec) {
    require_order(A, weight(spec.m), "pair_with_product_class");
    auto values = product_class_values(ctx, spec);
    Poly out(ctx.coefficient_ring());
    for (const auto& [k, a] : split(ctx, A)) {
        auto it = values.find(k);
        if (it != values.end())
            out += a * it->second;
    }
    return out;
}

BTClass product_class(const BTContext& ctx, const ProductClassSpec& spec) {
    auto values = product_class_values(ctx, spec);
    const int n = weight(spec.m);
    BTClass out(ctx.rank(), ctx.coefficient_ring());
    for (int w = 0; w <= n; ++w)
        for (const Tuple& target : tuples_of_weight(ctx.rank(), w)) {
            Poly c(ctx.coefficient_ring());
            for (const auto& [k, a] : split(ctx, ctx.dual(target))) {
                auto it = values.find(k);
                if (it != values.end())
                    c += a * it->second;
            }
            out.add_term(target, c);
        }
    return out;
}

BTClass weyl_act_bt(const BTContext& ctx, const WeylGroup& W, std::size_t w, const BTClass& x) {
    if (W.rank() != ctx.rank())
        throw ContextError("weyl_act_bt: Weyl group rank differs from the module rank");
    if (w == W.identity())
        return x;
    const LatticeMap bundles = W[W.inverse(w)].matrix.transpose();
    BTClass out(ctx.rank(), ctx.coefficient_ring());
    for (const auto& [m, b] : x.terms())
        out += b * product_class(ctx, {m, bundles});
    return out;
}

// Coinvariants

BTLattice bt_lattice(const BTContext& ctx, int n) {
    if (n < 0 || n > ctx.max_degree())
        throw AlgebraError("bt_lattice: degree outside [0, " + std::to_string(ctx.max_degree()) + "]");
    BTLattice out;
    out.degree = n;
    for (int w = 0; w <= n; ++w)
        for (const Tuple& m : tuples_of_weight(ctx.rank(), w)) {
            const int rk = ctx.lazard().rank(n - w);
            for (int j = 0; j < rk; ++j) {
                out.tuples.push_back(m);
                out.basis_index.push_back(static_cast<std::size_t>(j));
            }
        }
    return out;
}

IntVector bt_coordinates(const BTContext& ctx, const BTLattice& lattice, const BTClass& x) {
    IntVector out(lattice.dim());
    for (const auto& [m, b] : x.terms()) {
        const int d = lattice.degree - weight(m);
        auto it = std::find(lattice.tuples.begin(), lattice.tuples.end(), m);
        if (d < 0 || it == lattice.tuples.end())
            throw InternalError("bt_coordinates: term outside the degree-" +
                                std::to_string(lattice.degree) + " lattice");
        auto coords = ctx.lazard().coordinates(b, d);
        if (!coords)
            throw InternalError("bt_coordinates: coefficient is not an integral Lazard element");
        const std::size_t base = static_cast<std::size_t>(it - lattice.tuples.begin());
        for (std::size_t j = 0; j < coords->size(); ++j)
            out[base + j] = (*coords)[j];
    }
    return out;
}

BTClass bt_element(const BTContext& ctx, const BTLattice& lattice, const IntVector& coords) {
    BTClass out(ctx.rank(), ctx.coefficient_ring());
    for (std::size_t c = 0; c < lattice.dim(); ++c) {
        if (coords[c] == 0)
            continue;
        const int d = lattice.degree - weight(lattice.tuples[c]);
        out.add_term(lattice.tuples[c],
                     Scalar(coords[c]) * ctx.lazard().basis_element(d, lattice.basis_index[c]));
    }
    return out;
}

CoinvariantsReport coinvariants(const BTContext& ctx, const WeylGroup& W, int n) {
    CoinvariantsReport rep;
    rep.degree = n;
    const BTLattice lat = bt_lattice(ctx, n);
    const std::size_t dim = lat.dim();
    rep.lattice_rank = dim;

    std::vector<IntVector> columns;
    for (std::size_t g = 0; g < W.num_generators(); ++g) {
        const LatticeMap bundles = W[W.inverse(W.generator(g))].matrix.transpose();
        std::map<Tuple, BTClass, GradedLexLess> images;
        for (std::size_t c = 0; c < dim; ++c) {
            const Tuple& m = lat.tuples[c];
            auto it = images.find(m);
            if (it == images.end())
                it = images.emplace(m, product_class(ctx, {m, bundles})).first;
            Poly b = ctx.lazard().basis_element(n - weight(m), lat.basis_index[c]);
            IntVector col = bt_coordinates(ctx, lat, b * it->second);
            col[c] -= 1;
            columns.push_back(std::move(col));
        }
    }
    rep.relations = IntMatrix(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i)
            rep.relations(i, j) = columns[j][i];

    rep.relation_rank = rank(rep.relations);
    Cokernel ck = cokernel(rep.relations);
    rep.free_rank = ck.free_rank;
    rep.torsion = ck.elementary_divisors;
    if (rep.free_rank != dim - rep.relation_rank)
        throw InternalError("coinvariants: rank bookkeeping mismatch");

    rep.projection = kernel_basis(rep.relations.transpose());
    const std::size_t q = rep.projection.rows();
    if (q != rep.free_rank)
        throw InternalError("coinvariants: projection rank mismatch");
    HermiteForm hf = hnf(rep.projection.transpose());
    std::vector<std::size_t> first(q), all_dim(dim);
    std::iota(first.begin(), first.end(), 0);
    std::iota(all_dim.begin(), all_dim.end(), 0);
    rep.quotient_basis = hf.H.submatrix(first, first);
    rep.quotient_pivots = hf.pivot_cols;
    rep.lifts = hf.U.submatrix(first, all_dim);
    return rep;
}

} // namespace cobord
