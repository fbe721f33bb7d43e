#include "cobord/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cobord {

LatticeMap LatticeMap::identity(std::size_t n) {
    LatticeMap m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

LatticeVector LatticeMap::apply(const LatticeVector& v) const {
    LatticeVector out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

LatticeVector LatticeMap::column(std::size_t j) const {
    LatticeVector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

LatticeMap LatticeMap::transpose() const {
    LatticeMap t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

long LatticeMap::determinant() const {
    // Cofactor expansion; dimensions stay tiny.
    if (n_ == 0)
        return 1;
    if (n_ == 1)
        return a_[0];
    long det = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        LatticeMap minor(n_ - 1);
        for (std::size_t r = 1; r < n_; ++r)
            for (std::size_t c = 0, cc = 0; c < n_; ++c)
                if (c != j)
                    minor(r - 1, cc++) = (*this)(r, c);
        long term = (*this)(0, j) * minor.determinant();
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
    LatticeMap c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k)
            if (long v = a(i, k))
                for (std::size_t j = 0; j < a.n_; ++j)
                    c(i, j) += v * b(k, j);
    return c;
}

long RootDatum::coroot_pairing(const LatticeVector& lambda, std::size_t i) const {
    long s = 0;
    for (std::size_t k = 0; k < rank; ++k)
        s += lambda[k] * simple_coroots[i][k];
    return s;
}

std::vector<std::vector<long>> RootDatum::cartan_matrix() const {
    std::vector<std::vector<long>> a(num_simple(), std::vector<long>(num_simple()));
    for (std::size_t i = 0; i < num_simple(); ++i)
        for (std::size_t j = 0; j < num_simple(); ++j)
            a[i][j] = coroot_pairing(simple_roots[j], i);
    return a;
}

LatticeMap RootDatum::reflection(std::size_t i) const {
    LatticeMap m = LatticeMap::identity(rank);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < rank; ++c)
            m(r, c) -= simple_roots[i][r] * simple_coroots[i][c];
    return m;
}

void RootDatum::validate() const {
    if (simple_roots.size() != simple_coroots.size())
        throw UsageError("root datum '" + name + "': roots and coroots differ in number");
    if (simple_roots.size() > rank)
        throw UsageError("root datum '" + name + "': more simple roots than the rank");
    for (const auto& v : simple_roots)
        if (v.size() != rank)
            throw UsageError("root datum '" + name + "': root of wrong length");
    for (const auto& v : simple_coroots)
        if (v.size() != rank)
            throw UsageError("root datum '" + name + "': coroot of wrong length");
    auto a = cartan_matrix();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) {
                if (a[i][i] != 2)
                    throw UsageError("root datum '" + name + "': <alpha_i, alpha_i^vee> != 2");
                continue;
            }
            if (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0) || a[i][j] * a[j][i] > 3)
                throw UsageError("root datum '" + name + "': Cartan matrix not of finite type");
        }
}

namespace {

std::string normalize(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != '(' && c != ')' && c != ' ' && c != '_')
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return out;
}

bool split_suffix(const std::string& s, const std::string& prefix, long& n) {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
        return false;
    const char* b = s.data() + prefix.size();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, n);
    return ec == std::errc() && p == e;
}

RootDatum from_cartan(std::string name, const std::vector<std::vector<long>>& cartan) {
    // Fundamental-weight basis: alpha_i = sum_j <alpha_i, alpha_j^vee> w_j,
    // alpha_i^vee = e_i.
    RootDatum rd;
    rd.name = std::move(name);
    rd.rank = cartan.size();
    for (std::size_t i = 0; i < rd.rank; ++i) {
        LatticeVector root(rd.rank), coroot(rd.rank, 0);
        for (std::size_t j = 0; j < rd.rank; ++j)
            root[j] = cartan[j][i];
        coroot[i] = 1;
        rd.simple_roots.push_back(root);
        rd.simple_coroots.push_back(coroot);
    }
    return rd;
}

std::string unknown_preset(std::string_view name) {
    std::string msg = "unknown group '" + std::string(name) + "'; supported presets:";
    for (const auto& p : supported_presets())
        msg += " " + p;
    return msg;
}

} // namespace

std::vector<std::string> supported_presets() {
    return {"Torus(r)", "SL(n)", "GL(n)", "PGL(2)", "Sp(4)", "G2"};
}

RootDatum root_datum_preset(std::string_view name) {
    const std::string s = normalize(name);
    long n = 0;
    RootDatum rd;
    if (split_suffix(s, "TORUS", n) || split_suffix(s, "T", n)) {
        if (n < 1 || n > 16)
            throw UsageError("Torus(r) needs 1 <= r <= 16");
        rd.name = "Torus(" + std::to_string(n) + ")";
        rd.rank = static_cast<std::size_t>(n);
    } else if (split_suffix(s, "SL", n)) {
        if (n < 2 || n > 9)
            throw UsageError("SL(n) needs 2 <= n <= 9");
        std::vector<std::vector<long>> a(n - 1, std::vector<long>(n - 1, 0));
        for (long i = 0; i + 1 < n; ++i) {
            a[i][i] = 2;
            if (i + 2 < n)
                a[i][i + 1] = a[i + 1][i] = -1;
        }
        rd = from_cartan("SL(" + std::to_string(n) + ")", a);
    } else if (split_suffix(s, "GL", n)) {
        if (n < 1 || n > 9)
            throw UsageError("GL(n) needs 1 <= n <= 9");
        rd.name = "GL(" + std::to_string(n) + ")";
        rd.rank = static_cast<std::size_t>(n);
        for (long i = 0; i + 1 < n; ++i) {
            LatticeVector v(n, 0);
            v[i] = 1;
            v[i + 1] = -1;
            rd.simple_roots.push_back(v);
            rd.simple_coroots.push_back(v);
        }
    } else if (s == "PGL2") {
        rd.name = "PGL(2)";
        rd.rank = 1;
        rd.simple_roots = {{1}};
        rd.simple_coroots = {{2}};
    } else if (s == "SP4") {
        // Characters e1, e2 of the diagonal torus diag(t1, t2, 1/t1, 1/t2).
        rd.name = "Sp(4)";
        rd.rank = 2;
        rd.simple_roots = {{1, -1}, {0, 2}};
        rd.simple_coroots = {{1, -1}, {0, 1}};
    } else if (s == "G2") {
        rd = from_cartan("G2", {{2, -1}, {-3, 2}});
    } else {
        throw UsageError(unknown_preset(name));
    }
    rd.validate();
    return rd;
}

RootDatum root_datum_from_json(const nlohmann::json& j) {
    RootDatum rd;
    try {
        rd.name = j.value("name", std::string("custom"));
        rd.rank = j.at("rank").get<std::size_t>();
        rd.simple_roots = j.at("simple_roots").get<std::vector<LatticeVector>>();
        rd.simple_coroots = j.at("simple_coroots").get<std::vector<LatticeVector>>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed root datum JSON: ") + e.what());
    }
    rd.validate();
    return rd;
}

nlohmann::json to_json(const RootDatum& rd) {
    return {{"name", rd.name},
            {"rank", rd.rank},
            {"simple_roots", rd.simple_roots},
            {"simple_coroots", rd.simple_coroots}};
}

LatticeVector reflection_action(const RootDatum& rd, std::size_t i, const LatticeVector& lambda) {
    if (i >= rd.num_simple())
        throw UsageError("simple reflection index out of range");
    if (lambda.size() != rd.rank)
        throw UsageError("lattice vector has wrong length");
    long c = rd.coroot_pairing(lambda, i);
    LatticeVector out = lambda;
    for (std::size_t k = 0; k < rd.rank; ++k)
        out[k] -= c * rd.simple_roots[i][k];
    return out;
}

} // namespace cobord
