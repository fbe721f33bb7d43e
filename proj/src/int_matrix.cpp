#include "cobord/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace cobord {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw AlgebraError("IntMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw AlgebraError("IntMatrix: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntMatrix::append_row(const IntVector& r) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = r.size();
    if (r.size() != cols_)
        throw AlgebraError("IntMatrix: row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rs,
                               const std::vector<std::size_t>& cs) const {
    IntMatrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            s(i, j) = (*this)(rs[i], cs[j]);
    return s;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& z) { return z == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw AlgebraError("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

namespace {

using Rows = std::vector<IntVector>;

Rows to_rows(const IntMatrix& m) {
    Rows r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        r[i] = m.row(i);
    return r;
}

// r_a <- p r_a + q r_b ; r_b <- s r_b - t r_a  (all from the old values)
void combine(IntVector& ra, IntVector& rb, const Integer& p, const Integer& q, const Integer& s,
             const Integer& t) {
    Integer x, y;
    for (std::size_t k = 0; k < ra.size(); ++k) {
        if (ra[k] == 0 && rb[k] == 0)
            continue;
        x = p * ra[k] + q * rb[k];
        y = s * rb[k] - t * ra[k];
        ra[k] = x;
        rb[k] = y;
    }
}

void axpy(IntVector& dst, const Integer& f, const IntVector& src) {
    for (std::size_t k = 0; k < dst.size(); ++k)
        if (src[k] != 0)
            dst[k] -= f * src[k];
}

struct HnfWork {
    Rows h;
    Rows u;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

HnfWork hnf_rows(Rows h, std::size_t cols, bool track_u) {
    const std::size_t m = h.size();
    Rows u;
    if (track_u) {
        u.assign(m, IntVector(m));
        for (std::size_t i = 0; i < m; ++i)
            u[i][i] = 1;
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    Integer g, p, q, s, t;
    for (std::size_t c = 0; c < cols && r < m; ++c) {
        // Bring some nonzero entry of column c to row r.
        std::size_t nz = m;
        for (std::size_t i = r; i < m; ++i)
            if (h[i][c] != 0 && (nz == m || abs(h[i][c]) < abs(h[nz][c])))
                nz = i;
        if (nz == m)
            continue;
        if (nz != r) {
            std::swap(h[nz], h[r]);
            if (track_u)
                std::swap(u[nz], u[r]);
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            if (h[i][c] == 0)
                continue;
            const Integer a = h[r][c];
            const Integer b = h[i][c];
            if (b % a == 0) {
                Integer f = b / a;
                axpy(h[i], f, h[r]);
                if (track_u)
                    axpy(u[i], f, u[r]);
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            s = a / g;
            t = b / g;
            combine(h[r], h[i], p, q, s, t);
            if (track_u)
                combine(u[r], u[i], p, q, s, t);
        }
        if (h[r][c] < 0) {
            for (auto& v : h[r])
                v = -v;
            if (track_u)
                for (auto& v : u[r])
                    v = -v;
        }
        for (std::size_t k = 0; k < r; ++k) {
            if (h[k][c] == 0)
                continue;
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), h[k][c].get_mpz_t(), h[r][c].get_mpz_t());
            if (f == 0)
                continue;
            axpy(h[k], f, h[r]);
            if (track_u)
                axpy(u[k], f, u[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(h), std::move(u), r, std::move(pivots)};
}

} // namespace

HermiteForm hnf(const IntMatrix& m) {
    auto w = hnf_rows(to_rows(m), m.cols(), true);
    HermiteForm out;
    out.H = IntMatrix::from_rows(w.h, m.cols());
    out.U = IntMatrix::from_rows(w.u, m.rows());
    out.rank = w.rank;
    out.pivot_cols = std::move(w.pivots);
    return out;
}

IntMatrix row_lattice(const IntMatrix& m) {
    auto w = hnf_rows(to_rows(m), m.cols(), false);
    w.h.resize(w.rank);
    return IntMatrix::from_rows(w.h, m.cols());
}

std::size_t rank(const IntMatrix& m) { return hnf_rows(to_rows(m), m.cols(), false).rank; }

IntVector smith_diagonal(const IntMatrix& m) {
    // Reduce to a square nonsingular matrix first: two HNF passes.
    IntMatrix a = row_lattice(m);
    a = row_lattice(a.transpose());
    Rows h = to_rows(a);
    const std::size_t n = h.size();
    IntVector diag;
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (h[i][j] != 0 && (pi == n || abs(h[i][j]) < abs(h[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n)
                break;
            std::swap(h[t], h[pi]);
            for (auto& row : h)
                std::swap(row[t], row[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (h[i][t] == 0)
                    continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), h[i][t].get_mpz_t(), h[t][t].get_mpz_t());
                axpy(h[i], f, h[t]);
                if (h[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (h[t][j] == 0)
                    continue;
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), h[t][j].get_mpz_t(), h[t][t].get_mpz_t());
                for (std::size_t i = t; i < n; ++i)
                    if (h[i][t] != 0)
                        h[i][j] -= f * h[i][t];
                if (h[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility condition on the trailing block.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (h[i][j] % h[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n)
                break;
            for (std::size_t j = t; j < n; ++j)
                h[t][j] += h[bad][j];
        }
        if (h[t][t] == 0)
            break;
        diag.push_back(abs(h[t][t]));
    }
    return diag;
}

Cokernel cokernel(const IntMatrix& m) {
    IntVector d = smith_diagonal(m);
    Cokernel c;
    c.free_rank = m.rows() - d.size();
    for (auto& v : d)
        if (v > 1)
            c.elementary_divisors.push_back(v);
    return c;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw AlgebraError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Rows a = to_rows(m);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix kernel_basis(const IntMatrix& m) {
    const std::size_t n = m.cols();
    auto w = hnf_rows(to_rows(m.transpose()), m.rows(), true);
    Rows k(w.u.begin() + static_cast<std::ptrdiff_t>(w.rank), w.u.end());
    if (k.empty())
        return IntMatrix(0, n);
    return row_lattice(IntMatrix::from_rows(k, n));
}

IntMatrix saturation(const IntMatrix& m) { return kernel_basis(kernel_basis(m)); }

std::optional<std::vector<Scalar>> solve_hnf(const IntMatrix& basis,
                                             const std::vector<std::size_t>& pivots,
                                             const std::vector<Scalar>& v) {
    if (v.size() != basis.cols())
        throw AlgebraError("solve_hnf: vector length mismatch");
    std::vector<Scalar> rest = v;
    std::vector<Scalar> coords(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const std::size_t c = pivots[i];
        if (rest[c] == 0)
            continue;
        coords[i] = rest[c] / Scalar(basis(i, c));
        for (std::size_t j = c; j < basis.cols(); ++j)
            if (basis(i, j) != 0)
                rest[j] -= coords[i] * basis(i, j);
    }
    for (const auto& x : rest)
        if (x != 0)
            return std::nullopt;
    return coords;
}

bool divides_power_of(const Integer& d, const Integer& tau) {
    Integer x = abs(d);
    if (x == 0)
        return false;
    Integer g;
    for (;;) {
        if (x == 1)
            return true;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), tau.get_mpz_t());
        if (g == 1)
            return false;
        while (x % g == 0)
            x /= g;
    }
}

} // namespace cobord
