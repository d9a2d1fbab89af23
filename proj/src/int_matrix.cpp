#include "mukailat/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mukailat {

using boost::multiprecision::abs;

Rat parse_rational(const std::string& text) {
    const auto bad = [&] {
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    };
    const auto is_integer_token = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) bad();
        return Rat(Int(text));
    }
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (!is_integer_token(p) || !is_integer_token(q)) bad();
    const Int den(q);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
    return Rat(Int(p), den);  // cpp_rational canonicalizes sign and gcd
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_row(std::size_t i, const IntVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    return os << "]";
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator*(const Int& scalar, const IntMatrix& m) {
    IntMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = scalar * m(i, j);
    return c;
}

IntMatrix matrix_from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntVec row_times_matrix(const IntVec& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
    IntVec out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            a.swap_rows(pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

namespace {

struct HnfTransform {
    IntMatrix h;
    IntMatrix u;  // unimodular, h == u * input
};

// Row Hermite form with the row transform tracked. Entry growth stays
// controlled because entries above each pivot are reduced immediately.
HnfTransform hnf_rows_with_transform(const IntMatrix& m) {
    HnfTransform t{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = t.h;
    std::size_t r = 0;
    for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h(i, j) == 0) continue;
                if (best == h.rows() || abs(h(i, j)) < abs(h(best, j))) best = i;
            }
            if (best == h.rows()) break;
            h.swap_rows(r, best);
            t.u.swap_rows(r, best);
            bool any = false;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, j) == 0) continue;
                const Int q = h(i, j) / h(r, j);
                h.add_row_multiple(i, r, -q);
                t.u.add_row_multiple(i, r, -q);
                any = any || h(i, j) != 0;
            }
            if (!any) break;
        }
        if (h(r, j) == 0) continue;
        if (h(r, j) < 0) {
            h.negate_row(r);
            t.u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Int q = floor_div(h(i, j), h(r, j));
            h.add_row_multiple(i, r, -q);
            t.u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return t;
}

bool is_diagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    // Kannan-Bachem style: alternate row and column Hermite reductions
    // until diagonal, then repair the divisibility chain.
    SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = f.s;
    const std::size_t bound = std::min(m.rows(), m.cols());

    for (int guard = 0; !is_diagonal(s); ++guard) {
        if (guard > 10000) throw std::logic_error("smith normal form failed to converge");
        HnfTransform rows = hnf_rows_with_transform(s);
        s = std::move(rows.h);
        f.u = rows.u * f.u;
        if (is_diagonal(s)) break;
        HnfTransform cols = hnf_rows_with_transform(s.transposed());
        s = cols.h.transposed();
        f.v = f.v * cols.u.transposed();
    }

    // Positive diagonal (inputs that arrive already diagonal skip the
    // reduction loop entirely).
    for (std::size_t i = 0; i < bound; ++i) {
        if (s(i, i) < 0) {
            s.negate_row(i);
            f.u.negate_row(i);
        }
    }

    // Enforce the divisibility chain with 2x2 diagonal transforms
    // diag(a,b) -> diag(gcd, a*b/gcd); zeros bubble to the end as gcd(0,b)=b.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < bound; ++i) {
            for (std::size_t j = i + 1; j < bound; ++j) {
                const Int a = s(i, i), b = s(j, j);
                if (b == 0 || (a != 0 && b % a == 0)) continue;
                changed = true;
                // x*a + y*b = g via extended Euclid
                Int x = 1, y = 0, x1 = 0, y1 = 1, r0 = a, r1 = b;
                while (r1 != 0) {
                    const Int q = r0 / r1;
                    Int tmp;
                    tmp = r0 - q * r1; r0 = r1; r1 = tmp;
                    tmp = x - q * x1; x = x1; x1 = tmp;
                    tmp = y - q * y1; y = y1; y1 = tmp;
                }
                const Int g = r0;  // positive since a,b >= 0, not both 0
                // rows i,j of u:  [x y; -b/g a/g]
                const IntVec ui = f.u.row(i), uj = f.u.row(j);
                for (std::size_t k = 0; k < f.u.cols(); ++k) {
                    f.u(i, k) = x * ui[k] + y * uj[k];
                    f.u(j, k) = (-b / g) * ui[k] + (a / g) * uj[k];
                }
                // cols i,j of v:  [1 -y*b/g; 1 x*a/g]
                const std::size_t n = f.v.rows();
                for (std::size_t k = 0; k < n; ++k) {
                    const Int vi = f.v(k, i), vj = f.v(k, j);
                    f.v(k, i) = vi + vj;
                    f.v(k, j) = (-y * b / g) * vi + (x * a / g) * vj;
                }
                s(i, i) = g;
                s(j, j) = a / g * b;
            }
        }
    }
    return f;
}

IntMatrix hermite_normal_form(const IntMatrix& m) { return hnf_rows_with_transform(m).h; }

std::size_t matrix_rank(const IntMatrix& m) {
    const IntMatrix h = hermite_normal_form(m);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++r;
    }
    return r;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const SmithForm f = smith_normal_form(m);
    const std::size_t bound = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < bound && f.s(rank, rank) != 0) ++rank;
    // m = u^-1 s v^-1, so m x^T = 0 iff the first `rank` coordinates of
    // v^-1 x^T vanish; the trailing columns of v are a saturated basis.
    IntMatrix k(m.cols() - rank, m.cols());
    for (std::size_t c = rank; c < m.cols(); ++c)
        for (std::size_t i = 0; i < m.cols(); ++i) k(c - rank, i) = f.v(i, c);
    return hermite_normal_form(k);
}

}  // namespace mukailat
