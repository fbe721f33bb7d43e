#include "cobord/series.hpp"

#include <algorithm>

namespace cobord {

Series::Series(Poly poly, int order) : poly_(poly.truncated(order)), order_(order) {
    if (order < 0)
        throw AlgebraError("negative truncation order");
}

Series Series::variable(RingPtr ring, std::string_view name, int order) {
    return Series(Poly::variable(std::move(ring), name), order);
}

bool Series::has_zero_constant_term() const {
    auto w = poly_.min_series_weight();
    return !w || *w > 0;
}

Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    return Series(a.poly_.truncated(n) + b.poly_.truncated(n), n);
}

Series operator-(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    return Series(a.poly_.truncated(n) - b.poly_.truncated(n), n);
}

Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    return Series(mul(a.poly_, b.poly_, n), n);
}

Series operator*(const Poly& c, const Series& a) {
    return Series(mul(c, a.poly_, a.order_), a.order_);
}

bool operator==(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    return a.poly_.truncated(n) == b.poly_.truncated(n);
}

Series compose(const Series& f, std::span<const Series> args, int order) {
    const Ring& fr = *f.ring();
    const auto& vars = fr.series_variables();
    if (args.size() != vars.size())
        throw ContextError("series_compose: expected " + std::to_string(vars.size()) +
                           " arguments, got " + std::to_string(args.size()));
    if (args.empty())
        return f.truncated(order);
    RingPtr target = args.front().ring();
    int n = std::min(order, f.order());
    for (const auto& a : args) {
        if (!same_ring(a.ring(), target))
            throw ContextError("series_compose: arguments over different rings");
        if (!a.has_zero_constant_term())
            throw CompositionError("series_compose: argument has nonzero constant term");
        n = std::min(n, a.order());
    }
    std::vector<std::optional<Poly>> images(fr.size());
    for (std::size_t k = 0; k < vars.size(); ++k)
        images[vars[k]] = args[k].poly();
    return Series(f.poly().substitute(images, n), n);
}

Series reverse(const Series& f, int order) {
    const Ring& r = *f.ring();
    if (r.series_variables().size() != 1)
        throw NotReversibleError("series_reverse: needs exactly one series variable");
    if (!f.has_zero_constant_term())
        throw NotReversibleError("series_reverse: nonzero constant term");
    const int n = std::min(order, f.order());
    Series x = Series::variable(f.ring(), r[r.series_variables()[0]].name, n);
    if (!(f.poly().series_weight_component(1) == x.poly()))
        throw NotReversibleError("series_reverse: linear coefficient is not 1");

    // Fix one order at a time: f(g + c x^k) = f(g) + c x^k + O(x^{k+1}).
    Series g = x;
    for (int k = 2; k <= n; ++k) {
        Series fg = compose(f, std::span(&g, 1), k);
        Poly err = fg.poly().series_weight_component(k);
        g = Series(g.poly() - err, n);
    }
    return g;
}

std::map<Exponents, Poly, GradedLexLess> split_by_series_monomial(const Poly& p,
                                                                  const RingPtr& coefficients) {
    const Ring& r = *p.ring();
    const auto& cidx = r.coefficient_generators();
    const auto& sidx = r.series_variables();
    if (cidx.size() != coefficients->size())
        throw ContextError("split_by_series_monomial: coefficient ring mismatch");
    for (std::size_t i = 0; i < cidx.size(); ++i)
        if (!(r[cidx[i]] == (*coefficients)[i]))
            throw ContextError("split_by_series_monomial: coefficient ring mismatch");
    std::map<Exponents, Poly, GradedLexLess> out;
    Exponents k(sidx.size()), c(cidx.size());
    for (const auto& [e, coef] : p.terms()) {
        for (std::size_t i = 0; i < sidx.size(); ++i)
            k[i] = e[sidx[i]];
        for (std::size_t i = 0; i < cidx.size(); ++i)
            c[i] = e[cidx[i]];
        auto it = out.try_emplace(k, coefficients).first;
        it->second.add_term(c, coef);
    }
    return out;
}

} // namespace cobord
