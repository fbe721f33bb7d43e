#include "cobord/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cobord {

bool is_integer(const Scalar& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Scalar& q) { return q.get_str(); }

Ring::Ring(std::vector<Generator> generators) : gens_(std::move(generators)) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name.empty())
            throw ContextError("generator with empty name");
        if (!seen.insert(gens_[i].name).second)
            throw ContextError("duplicate generator name '" + gens_[i].name + "'");
        if (gens_[i].kind == GeneratorKind::SeriesVariable)
            series_.push_back(i);
        else
            coeffs_.push_back(i);
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
    if (auto i = index_of(name))
        return *i;
    throw ContextError("unknown generator '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<Generator> generators) {
    return std::make_shared<const Ring>(std::move(generators));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb)
        return sa < sb;
    // Larger exponent on an earlier generator sorts later, so x^2 follows xy.
    return a < b;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_)
        throw ContextError("polynomial without a ring");
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p(ring);
    p.add_term(Exponents(p.ring_->size(), 0), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
    Poly p(ring);
    Exponents e(p.ring_->size(), 0);
    e[p.ring_->require(name)] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(RingPtr ring, Exponents exps, const Scalar& c) {
    Poly p(ring);
    if (exps.size() != p.ring_->size())
        throw ContextError("exponent vector length does not match ring");
    p.add_term(exps, c);
    return p;
}

Scalar Poly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

void Poly::add_term(const Exponents& exps, const Scalar& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void require_same_ring(const Poly& a, const Poly& b, const char* where) {
    if (!same_ring(a.ring(), b.ring()))
        throw ContextError(std::string(where) + ": mismatched generator lists");
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_ring(*this, other, "poly add");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_ring(*this, other, "poly sub");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

bool Poly::operator==(const Poly& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

int Poly::series_weight(const Exponents& exps) const {
    int w = 0;
    for (std::size_t i : ring_->series_variables())
        w += exps[i];
    return w;
}

int Poly::coefficient_degree(const Exponents& exps) const {
    int d = 0;
    for (std::size_t i : ring_->coefficient_generators())
        d += exps[i] * (*ring_)[i].degree;
    return d;
}

Poly Poly::truncated(int order) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
        if (series_weight(e) <= order)
            r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

Poly Poly::homogeneous_component(int degree) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == degree)
            r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

Poly Poly::series_weight_component(int weight) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
        if (series_weight(e) == weight)
            r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

std::optional<int> Poly::min_series_weight() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int w = series_weight(e);
        if (!best || w < *best)
            best = w;
    }
    return best;
}

bool Poly::is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int t = total_degree(e);
        if (d && *d != t)
            return false;
        d = t;
    }
    return true;
}

bool Poly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
}

Poly Poly::map_into(const RingPtr& target) const {
    if (same_ring(ring_, target)) {
        Poly r = *this;
        r.ring_ = target;
        return r;
    }
    std::vector<std::size_t> where(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        auto j = target->index_of((*ring_)[i].name);
        bool used = std::any_of(terms_.begin(), terms_.end(),
                                [i](const auto& kv) { return kv.first[i] != 0; });
        if (!j) {
            if (used)
                throw ContextError("generator '" + (*ring_)[i].name + "' missing from target ring");
            where[i] = target->size();
            continue;
        }
        where[i] = *j;
    }
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                f[where[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::substitute(const std::vector<std::optional<Poly>>& images,
                      std::optional<int> order) const {
    if (images.size() != ring_->size())
        throw ContextError("substitute: one image slot per generator required");
    RingPtr target;
    for (const auto& im : images)
        if (im) {
            if (target && !same_ring(target, im->ring()))
                throw ContextError("substitute: images over different rings");
            target = im->ring();
        }
    if (!target)
        return order ? truncated(*order) : *this;

    // Kept generators must exist in the target ring.
    std::vector<std::size_t> kept_at(ring_->size(), 0);
    for (std::size_t i = 0; i < ring_->size(); ++i)
        if (!images[i]) {
            auto j = target->index_of((*ring_)[i].name);
            if (!j) {
                bool used = std::any_of(terms_.begin(), terms_.end(),
                                        [i](const auto& kv) { return kv.first[i] != 0; });
                if (used)
                    throw ContextError("substitute: generator '" + (*ring_)[i].name +
                                       "' has no counterpart in target ring");
            } else {
                kept_at[i] = *j;
            }
        }

    std::map<std::pair<std::size_t, int>, Poly> power_cache;
    auto power = [&](std::size_t i, int n) -> const Poly& {
        if (n < 0)
            throw ContextError("substitute: negative exponent on substituted generator");
        auto it = power_cache.find({i, n});
        if (it != power_cache.end())
            return it->second;
        int k = n;
        while (k > 0 && !power_cache.count({i, k}))
            --k;
        if (k == 0)
            power_cache.try_emplace({i, 0}, Poly::constant(target, 1));
        for (; k < n; ++k)
            power_cache.emplace(std::make_pair(i, k + 1),
                                mul(power_cache.at({i, k}), *images[i], order));
        return power_cache.at({i, n});
    };

    Poly result(target);
    for (const auto& [e, c] : terms_) {
        Exponents base(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!images[i] && e[i] != 0)
                base[kept_at[i]] += e[i];
        Poly term = Poly::monomial(target, base, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (images[i] && e[i] != 0)
                term = mul(term, power(i, e[i]), order);
        result += term;
    }
    return result;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        Scalar mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (is_const || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (wrote)
                os << '*';
            os << (*ring_)[i].name;
            if (e[i] != 1)
                os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Poly mul(const Poly& a, const Poly& b, std::optional<int> order) {
    require_same_ring(a, b, "poly_mul");
    Poly r(a.ring());
    if (a.is_zero() || b.is_zero())
        return r;

    // Bucket b by series weight so truncated products can stop early.
    std::vector<std::pair<int, const Poly::TermMap::value_type*>> bt;
    bt.reserve(b.size());
    for (const auto& kv : b.terms())
        bt.emplace_back(b.series_weight(kv.first), &kv);
    std::stable_sort(bt.begin(), bt.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    const std::size_t n = a.ring()->size();
    Exponents e(n);
    Scalar prod;
    for (const auto& [ea, ca] : a.terms()) {
        int wa = a.series_weight(ea);
        if (order && wa > *order)
            continue;
        for (const auto& [wb, kv] : bt) {
            if (order && wa + wb > *order)
                break;
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + kv->first[i];
            prod = ca * kv->second;
            r.add_term(e, prod);
        }
    }
    return r;
}

Poly pow(const Poly& a, unsigned n, std::optional<int> order) {
    Poly result = Poly::constant(a.ring(), 1);
    if (order)
        result = result.truncated(*order);
    Poly base = a;
    while (n) {
        if (n & 1u)
            result = mul(result, base, order);
        n >>= 1u;
        if (n)
            base = mul(base, base, order);
    }
    return result;
}

namespace {

// Lexicographic leading term (plain lex, not graded), used for division.
const Poly::TermMap::value_type& lex_leading(const Poly& p) {
    const Poly::TermMap::value_type* best = nullptr;
    for (const auto& kv : p.terms())
        if (!best || best->first < kv.first)
            best = &kv;
    return *best;
}

} // namespace

Poly divide_exact(const Poly& a, const Poly& b) {
    require_same_ring(a, b, "divide_exact");
    if (b.is_zero())
        throw InternalError("divide_exact: division by zero");
    const auto& [lb_exp, lb_coef] = lex_leading(b);
    Poly rem = a;
    Poly quot(a.ring());
    const std::size_t n = a.ring()->size();
    while (!rem.is_zero()) {
        const auto& [lr_exp, lr_coef] = lex_leading(rem);
        Exponents q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = lr_exp[i] - lb_exp[i];
            if (q[i] < 0)
                throw InternalError("divide_exact: divisor does not divide dividend");
        }
        Poly step = Poly::monomial(a.ring(), q, lr_coef / lb_coef);
        quot += step;
        rem -= mul(step, b);
    }
    return quot;
}

} // namespace cobord
