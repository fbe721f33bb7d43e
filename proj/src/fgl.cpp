#include "cobord/fgl.hpp"

namespace cobord {

std::string to_string(LawKind kind) {
    switch (kind) {
    case LawKind::Additive:
        return "additive";
    case LawKind::Multiplicative:
        return "multiplicative";
    case LawKind::Universal:
        return "universal";
    }
    return "?";
}

namespace {

RingPtr extend(const RingPtr& coefficients, const std::vector<std::string>& names) {
    std::vector<Generator> gens = coefficients->generators();
    for (const auto& n : names)
        gens.push_back({n, 1, GeneratorKind::SeriesVariable, false});
    return make_ring(std::move(gens));
}

Series compute_inverse(const Series& law, const RingPtr& coefficients) {
    RingPtr rx = extend(coefficients, {"x"});
    const int n = law.order();
    Series x = Series::variable(rx, "x", n);
    Series g = -x;
    for (int k = 2; k <= n; ++k) {
        Series args[] = {x.truncated(k), g.truncated(k)};
        Series r = compose(law, args, k);
        g = Series(g.poly() - r.poly().series_weight_component(k), n);
    }
    return g;
}

} // namespace

FormalGroupLaw::FormalGroupLaw(LawKind kind, RingPtr coefficients, Series law)
    : kind_(kind), coefficients_(std::move(coefficients)), law_(std::move(law)),
      inverse_(compute_inverse(law_, coefficients_)) {
    const Ring& r = *law_.ring();
    if (r.series_variables().size() != 2)
        throw ContextError("formal group law must have exactly two series variables");
}

Poly FormalGroupLaw::coefficient(int i, int j) const {
    const Ring& r = *ring();
    const std::size_t xi = r.series_variables()[0];
    const std::size_t yi = r.series_variables()[1];
    Poly out(coefficients_);
    for (const auto& [e, c] : law_.poly().terms()) {
        if (e[xi] != i || e[yi] != j)
            continue;
        Exponents f;
        f.reserve(coefficients_->size());
        for (std::size_t k : r.coefficient_generators())
            f.push_back(e[k]);
        out.add_term(f, c);
    }
    return out;
}

RingPtr series_ring_over(const FormalGroupLaw& law, const std::vector<std::string>& names) {
    return extend(law.coefficient_ring(), names);
}

RingPtr logarithm_coefficient_ring(int max_degree) {
    std::vector<Generator> gens;
    for (int i = 1; i <= max_degree; ++i)
        gens.push_back({"m" + std::to_string(i), i, GeneratorKind::Coefficient, false});
    return make_ring(std::move(gens));
}

FormalGroupLaw fgl_additive(int order) {
    if (order < 1)
        throw AlgebraError("fgl_additive: order must be >= 1");
    RingPtr coeffs = make_ring({});
    RingPtr r = extend(coeffs, {"x", "y"});
    Series f(Poly::variable(r, "x") + Poly::variable(r, "y"), order);
    return FormalGroupLaw(LawKind::Additive, coeffs, f);
}

FormalGroupLaw fgl_multiplicative(int order) {
    if (order < 1)
        throw AlgebraError("fgl_multiplicative: order must be >= 1");
    RingPtr coeffs = make_ring({{"beta", -1, GeneratorKind::Coefficient, true}});
    RingPtr r = extend(coeffs, {"x", "y"});
    Poly x = Poly::variable(r, "x");
    Poly y = Poly::variable(r, "y");
    Poly b = Poly::variable(r, "beta");
    Series f(x + y + b * x * y, order);
    return FormalGroupLaw(LawKind::Multiplicative, coeffs, f);
}

FormalGroupLaw fgl_universal(int max_degree) {
    if (max_degree < 1)
        throw AlgebraError("fgl_universal: degree bound must be >= 1");
    const int order = max_degree + 1;
    RingPtr coeffs = logarithm_coefficient_ring(max_degree);
    RingPtr rx = extend(coeffs, {"x"});
    Poly x = Poly::variable(rx, "x");
    Poly log = x;
    for (int i = 1; i <= max_degree; ++i)
        log += Poly::variable(rx, "m" + std::to_string(i)) * pow(x, static_cast<unsigned>(i + 1));
    Series l(log, order);
    Series e = reverse(l, order);

    RingPtr rxy = extend(coeffs, {"x", "y"});
    Series lx = Series(log.map_into(rxy), order);
    std::vector<std::optional<Poly>> swap(rx->size());
    swap[rx->require("x")] = Poly::variable(rxy, "y");
    Series ly(log.substitute(swap), order);
    Series u = lx + ly;
    Series f = compose(e, std::span(&u, 1), order);
    return FormalGroupLaw(LawKind::Universal, coeffs, f);
}

Series formal_sum(const FormalGroupLaw& law, const Series& a, const Series& b) {
    const Series args[] = {a, b};
    return compose(law.law(), args, std::min(a.order(), b.order()));
}

Series formal_inverse(const FormalGroupLaw& law, const Series& a) {
    return compose(law.inverse_series(), std::span(&a, 1), a.order());
}

Series n_series(const FormalGroupLaw& law, long n, const Series& t) {
    if (!t.has_zero_constant_term())
        throw CompositionError("n_series: argument has nonzero constant term");
    if (n == 0)
        return Series::zero(t.ring(), t.order());
    if (n < 0)
        return formal_inverse(law, n_series(law, -n, t));
    // Binary expansion keeps the number of compositions logarithmic in n.
    Series result = Series::zero(t.ring(), t.order());
    Series base = t;
    bool have = false;
    for (unsigned long k = static_cast<unsigned long>(n); k; k >>= 1u) {
        if (k & 1u) {
            result = have ? formal_sum(law, result, base) : base;
            have = true;
        }
        if (k > 1)
            base = formal_sum(law, base, base);
    }
    return result;
}

Series formal_combination(const FormalGroupLaw& law, const std::vector<long>& n,
                          std::span<const Series> vars) {
    if (n.size() != vars.size())
        throw AlgebraError("formal_combination: coefficient count mismatch");
    if (vars.empty())
        throw AlgebraError("formal_combination: no variables");
    Series acc = Series::zero(vars[0].ring(), vars[0].order());
    bool first = true;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0)
            continue;
        Series term = n_series(law, n[i], vars[i]);
        acc = first ? term : formal_sum(law, acc, term);
        first = false;
    }
    return acc;
}

bool LawResiduals::all_zero() const {
    return unit_left.is_zero() && unit_right.is_zero() && commutativity.is_zero() &&
           associativity.is_zero();
}

LawResiduals law_residuals(const FormalGroupLaw& law, int order) {
    const int n = std::min(order, law.order());
    RingPtr r = series_ring_over(law, {"x", "y", "z"});
    Series x = Series::variable(r, "x", n);
    Series y = Series::variable(r, "y", n);
    Series z = Series::variable(r, "z", n);
    Series zero = Series::zero(r, n);
    Series fxy = formal_sum(law, x, y);
    Series fyx = formal_sum(law, y, x);
    Series fyz = formal_sum(law, y, z);
    return LawResiduals{
        formal_sum(law, x, zero) - x,
        formal_sum(law, zero, y) - y,
        fxy - fyx,
        formal_sum(law, fxy, z) - formal_sum(law, x, fyz),
    };
}

} // namespace cobord
