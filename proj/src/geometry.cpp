#include "qpart/geometry.hpp"

#include <algorithm>

namespace qpart::geom {

bool lex_less(const Subspace& a, const Subspace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return std::lexicographical_compare(a.rows.begin(), a.rows.end(), b.rows.begin(),
                                        b.rows.end());
}

std::uint32_t rref(const FieldSpec& F, std::vector<Elem>& M, std::size_t n_rows,
                   std::size_t n_cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
        std::size_t piv = rank;
        while (piv < n_rows && M[piv * n_cols + col] == 0) ++piv;
        if (piv == n_rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < n_cols; ++j)
                std::swap(M[piv * n_cols + j], M[rank * n_cols + j]);
        Elem inv = F.inv(M[rank * n_cols + col]);
        for (std::size_t j = 0; j < n_cols; ++j)
            M[rank * n_cols + j] = F.mul(M[rank * n_cols + j], inv);
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == rank) continue;
            Elem c = M[r * n_cols + col];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n_cols; ++j)
                M[r * n_cols + j] = F.sub(M[r * n_cols + j], F.mul(c, M[rank * n_cols + j]));
        }
        ++rank;
    }
    return static_cast<std::uint32_t>(rank);
}

Subspace span_rows(const FieldSpec& F, std::uint32_t n, std::vector<Elem> flat_rows) {
    if (n == 0 || flat_rows.size() % n != 0) throw DimensionMismatch("row length mismatch");
    std::size_t n_rows = flat_rows.size() / n;
    std::uint32_t rank = rref(F, flat_rows, n_rows, n);
    flat_rows.resize(static_cast<std::size_t>(rank) * n);
    return Subspace{n, rank, std::move(flat_rows)};
}

Subspace span_of(const FieldSpec& F, std::uint32_t n,
                 const std::vector<std::vector<Elem>>& vectors) {
    std::vector<Elem> flat;
    flat.reserve(vectors.size() * n);
    for (const auto& v : vectors) {
        if (v.size() != n) throw DimensionMismatch("vector length != ambient dimension");
        flat.insert(flat.end(), v.begin(), v.end());
    }
    return span_rows(F, n, std::move(flat));
}

Subspace zero_space(std::uint32_t n) { return Subspace{n, 0, {}}; }

Subspace full_space(std::uint32_t n) {
    Subspace W{n, n, std::vector<Elem>(static_cast<std::size_t>(n) * n, 0)};
    for (std::uint32_t i = 0; i < n; ++i) W.rows[i * n + i] = 1;
    return W;
}

bool is_rref(const FieldSpec& F, const Subspace& W) {
    std::int64_t prev_pivot = -1;
    for (std::uint32_t i = 0; i < W.dim; ++i) {
        auto r = W.row(i);
        std::uint32_t j = 0;
        while (j < W.n && r[j] == 0) ++j;
        if (j == W.n) return false;  // zero row
        if (static_cast<std::int64_t>(j) <= prev_pivot) return false;
        if (r[j] != 1) return false;
        for (std::uint32_t k = 0; k < W.dim; ++k)
            if (k != i && W.rows[k * W.n + j] != 0) return false;
        prev_pivot = j;
    }
    (void)F;
    return true;
}

bool contains(const FieldSpec& F, const Subspace& W, const Subspace& U) {
    if (W.n != U.n) throw DimensionMismatch("ambient dimensions differ");
    if (U.dim == 0) return true;
    if (U.dim > W.dim) return false;
    // reduce each row of U against W's RREF; must vanish
    std::vector<std::uint32_t> pivots(W.dim);
    for (std::uint32_t i = 0; i < W.dim; ++i) {
        std::uint32_t j = 0;
        while (W.rows[i * W.n + j] == 0) ++j;
        pivots[i] = j;
    }
    std::vector<Elem> v(W.n);
    for (std::uint32_t r = 0; r < U.dim; ++r) {
        auto u = U.row(r);
        std::copy(u.begin(), u.end(), v.begin());
        for (std::uint32_t i = 0; i < W.dim; ++i) {
            Elem c = v[pivots[i]];
            if (c == 0) continue;
            for (std::uint32_t j = 0; j < W.n; ++j)
                v[j] = F.sub(v[j], F.mul(c, W.rows[i * W.n + j]));
        }
        for (Elem c : v)
            if (c != 0) return false;
    }
    return true;
}

Subspace sum_space(const FieldSpec& F, const Subspace& a, const Subspace& b) {
    if (a.n != b.n) throw DimensionMismatch("ambient dimensions differ");
    std::vector<Elem> flat = a.rows;
    flat.insert(flat.end(), b.rows.begin(), b.rows.end());
    return span_rows(F, a.n, std::move(flat));
}

Subspace intersect(const FieldSpec& F, const Subspace& a, const Subspace& b) {
    if (a.n != b.n) throw DimensionMismatch("ambient dimensions differ");
    const std::uint32_t n = a.n;
    // Zassenhaus: RREF of [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    std::size_t n_rows = a.dim + b.dim;
    std::vector<Elem> M(n_rows * 2 * n, 0);
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            M[i * 2 * n + j] = a.rows[i * n + j];
            M[i * 2 * n + n + j] = a.rows[i * n + j];
        }
    for (std::uint32_t i = 0; i < b.dim; ++i)
        for (std::uint32_t j = 0; j < n; ++j) M[(a.dim + i) * 2 * n + j] = b.rows[i * n + j];
    std::uint32_t rank = rref(F, M, n_rows, 2 * n);
    std::vector<Elem> inter;
    for (std::uint32_t r = 0; r < rank; ++r) {
        bool left_zero = true;
        for (std::uint32_t j = 0; j < n && left_zero; ++j)
            if (M[r * 2 * n + j] != 0) left_zero = false;
        if (left_zero)
            inter.insert(inter.end(), M.begin() + r * 2 * n + n, M.begin() + (r + 1) * 2 * n);
    }
    return span_rows(F, n, std::move(inter));
}

Int gaussian_binomial(std::uint32_t n, std::uint32_t k, const Int& q) {
    if (k > n) throw BadDimension("gaussian_binomial: k > n");
    Int num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(q, n - i) - 1;
        den *= boost::multiprecision::pow(q, i + 1) - 1;
    }
    return num / den;
}

std::uint64_t theta_u64(std::uint32_t i, std::uint32_t q) {
    std::uint64_t t = 0;
    std::uint64_t pw = 1;
    for (std::uint32_t j = 0; j < i; ++j) {
        if (t > (std::uint64_t{1} << 62)) throw TooManyPoints("theta overflows 64 bits");
        t += pw;
        pw *= q;
    }
    return t;
}

std::vector<Elem> normalize_vector(const FieldSpec& F, std::vector<Elem> v) {
    for (Elem c : v) {
        if (c == 0) continue;
        if (c != 1) {
            Elem inv = F.inv(c);
            for (auto& x : v) x = F.mul(x, inv);
        }
        break;
    }
    return v;
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& F, std::uint32_t n, std::uint32_t d) {
    if (d > n) throw BadDimension("enumerate_subspaces: d > n");
    std::vector<Subspace> out;
    if (d == 0) {
        out.push_back(zero_space(n));
        return out;
    }
    const std::uint32_t q = F.q();
    // iterate pivot-column combinations (ascending), then all free-entry
    // assignments; free entries sit right of their pivot in non-pivot columns
    std::vector<std::uint32_t> piv(d);
    for (std::uint32_t i = 0; i < d; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(n, false);
        for (auto c : piv) is_piv[c] = true;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);

        std::vector<Elem> vals(free_pos.size(), 0);
        while (true) {
            Subspace W{n, d, std::vector<Elem>(static_cast<std::size_t>(d) * n, 0)};
            for (std::uint32_t i = 0; i < d; ++i) W.rows[i * n + piv[i]] = 1;
            for (std::size_t k = 0; k < free_pos.size(); ++k)
                W.rows[free_pos[k].first * n + free_pos[k].second] = vals[k];
            out.push_back(std::move(W));
            std::size_t k = 0;
            while (k < vals.size() && vals[k] == q - 1) vals[k++] = 0;
            if (k == vals.size()) break;
            ++vals[k];
        }

        // next combination
        std::int64_t i = d - 1;
        while (i >= 0 && piv[i] == n - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (std::uint32_t j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// --- Space -------------------------------------------------------------------

Space::Space(std::uint32_t n, FieldSpec field, std::size_t max_points)
    : n_(n), field_(std::move(field)) {
    const std::uint32_t q = field_.q();
    std::uint64_t np = theta_u64(n, q);
    if (np > max_points) throw TooManyPoints("point count exceeds the configured guard");
    points_.reserve(np);
    // lex order over coordinate tuples, last coordinate fastest
    std::vector<Elem> v(n, 0);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= q;
    for (std::uint64_t it = 0; it + 1 < total; ) {
        // advance odometer (v starts at all-zero which is skipped)
        std::int64_t i = n - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        ++v[i];
        ++it;
        // canonical representative: first nonzero coordinate is 1
        Elem first = 0;
        for (Elem c : v)
            if (c != 0) {
                first = c;
                break;
            }
        if (first != 1) continue;
        index_.emplace(pack(v), static_cast<std::uint32_t>(points_.size()));
        points_.push_back(v);
    }
}

std::uint64_t Space::pack(std::span<const Elem> v) const {
    std::uint64_t r = 0;
    for (Elem c : v) r = r * field_.q() + c;
    return r;
}

std::uint32_t Space::point_index(std::span<const Elem> v) const {
    std::vector<Elem> w = normalize_vector(field_, std::vector<Elem>(v.begin(), v.end()));
    auto it = index_.find(pack(w));
    if (it == index_.end()) throw GeometryError("not a nonzero vector of this space");
    return it->second;
}

PointSet Space::points_of(const Subspace& W) const {
    if (W.n != n_) throw DimensionMismatch("subspace from a different ambient space");
    PointSet s(points_.size());
    if (W.dim == 0) return s;
    const std::uint32_t q = field_.q();
    std::vector<Elem> coeff(W.dim, 0);
    std::vector<Elem> v(n_);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < W.dim; ++i) total *= q;
    for (std::uint64_t it = 0; it + 1 < total; ) {
        std::int64_t i = W.dim - 1;
        while (i >= 0 && coeff[i] == q - 1) coeff[i--] = 0;
        ++coeff[i];
        ++it;
        std::fill(v.begin(), v.end(), 0);
        for (std::uint32_t r = 0; r < W.dim; ++r) {
            if (coeff[r] == 0) continue;
            for (std::uint32_t j = 0; j < n_; ++j)
                v[j] = field_.add(v[j], field_.mul(coeff[r], W.rows[r * n_ + j]));
        }
        s.set(point_index(v));
    }
    return s;
}

std::vector<Subspace> Space::hyperplanes() const {
    std::vector<Subspace> out;
    out.reserve(points_.size());
    for (const auto& f : points_) {
        // kernel of the functional f (normalized, pivot coefficient 1)
        std::uint32_t j0 = 0;
        while (f[j0] == 0) ++j0;
        std::vector<Elem> flat;
        flat.reserve(static_cast<std::size_t>(n_ - 1) * n_);
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (j == j0) continue;
            std::vector<Elem> v(n_, 0);
            v[j] = 1;
            v[j0] = field_.neg(f[j]);
            flat.insert(flat.end(), v.begin(), v.end());
        }
        out.push_back(span_rows(field_, n_, std::move(flat)));
    }
    return out;
}

}  // namespace qpart::geom
