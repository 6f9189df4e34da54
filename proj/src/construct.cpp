#include "qpart/construct.hpp"

#include <algorithm>

namespace qpart::construct {

using geom::Elem;
using geom::Space;
using geom::Subspace;

namespace {

/// span(e_1, ..., e_d) of V(n,q): the canonical identity-prefix subspace.
Subspace identity_prefix(std::uint32_t n, std::uint32_t d) {
    Subspace W{n, d, std::vector<Elem>(static_cast<std::size_t>(d) * n, 0)};
    for (std::uint32_t i = 0; i < d; ++i) W.rows[i * n + i] = 1;
    return W;
}

/// Appends zero columns on the right; RREF is preserved.
Subspace lift(const Subspace& W, std::uint32_t big_n) {
    Subspace L{big_n, W.dim, std::vector<Elem>(static_cast<std::size_t>(W.dim) * big_n, 0)};
    for (std::uint32_t i = 0; i < W.dim; ++i)
        for (std::uint32_t j = 0; j < W.n; ++j) L.rows[i * big_n + j] = W.rows[i * W.n + j];
    return L;
}

/// Drops trailing columns, which must all be zero.
Subspace drop_tail(const Subspace& W, std::uint32_t small_n) {
    Subspace D{small_n, W.dim, std::vector<Elem>(static_cast<std::size_t>(W.dim) * small_n)};
    for (std::uint32_t i = 0; i < W.dim; ++i) {
        for (std::uint32_t j = small_n; j < W.n; ++j)
            if (W.rows[i * W.n + j] != 0)
                throw ConstructError("subspace leaves the coordinate section");
        for (std::uint32_t j = 0; j < small_n; ++j) D.rows[i * small_n + j] = W.rows[i * W.n + j];
    }
    return D;
}

}  // namespace

SubspacePartition desarguesian_spread(std::uint32_t k, std::uint32_t t, const FieldSpec& F) {
    if (k < 1 || t < 1) throw OutOfRange("desarguesian_spread requires k, t >= 1");
    const std::uint32_t n = k * t;
    const std::uint32_t q = F.q();
    gf::ExtField K(F, t);

    std::uint64_t qt = 1;
    for (std::uint32_t i = 0; i < t; ++i) qt *= q;
    auto decode_ext = [&](std::uint64_t m) {
        gf::ExtField::Elt e(t);
        for (std::uint32_t i = 0; i < t; ++i) {
            e[i] = static_cast<Elem>(m % q);
            m /= q;
        }
        return e;
    };

    // basis monomials 1, x, ..., x^{t-1} of GF(q^t)
    std::vector<gf::ExtField::Elt> mono(t);
    for (std::uint32_t m = 0; m < t; ++m) mono[m] = K.monomial(m);

    std::vector<Subspace> parts;
    std::vector<gf::ExtField::Elt> w(k, K.zero());
    // normalized reps of K-lines in K^k: first nonzero block is 1
    for (std::uint32_t j = 0; j < k; ++j) {
        std::fill(w.begin(), w.end(), K.zero());
        w[j] = K.one();
        std::uint64_t tail = k - j - 1;
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < tail; ++i) total *= qt;
        for (std::uint64_t it = 0; it < total; ++it) {
            std::uint64_t m = it;
            for (std::uint32_t b = j + 1; b < k; ++b) {
                w[b] = decode_ext(m % qt);
                m /= qt;
            }
            // GF(q)-rows: x^m * w for each basis monomial, flattened blockwise
            std::vector<Elem> flat;
            flat.reserve(static_cast<std::size_t>(t) * n);
            for (std::uint32_t mm = 0; mm < t; ++mm) {
                for (std::uint32_t b = 0; b < k; ++b) {
                    auto prod = K.mul(mono[mm], w[b]);
                    flat.insert(flat.end(), prod.begin(), prod.end());
                }
            }
            parts.push_back(geom::span_rows(F, n, std::move(flat)));
        }
    }
    Space space(n, F);
    return part::validate(space, std::move(parts));
}

ConstructionCertificate beutelspacher_partition(std::uint32_t n, std::uint32_t d,
                                                const FieldSpec& F) {
    if (d < 1 || 2 * d > n) throw OutOfRange("beutelspacher_partition requires 1 <= d <= n/2");
    const std::uint32_t s = n - d;
    ConstructionCertificate cert;
    cert.recipe.push_back("beutelspacher n=" + std::to_string(n) + " d=" + std::to_string(d) +
                          " via " + std::to_string(s) + "-spread of V(" + std::to_string(2 * s) +
                          ",q)");

    SubspacePartition spread = desarguesian_spread(2, s, F);
    Subspace U_big = identity_prefix(2 * s, s);
    Subspace Vp = identity_prefix(2 * s, n);  // U + first d coords of the second block

    std::vector<Subspace> parts;
    parts.push_back(identity_prefix(n, s));  // image of U in V' coordinates
    bool found_u = false;
    for (const auto& W : spread.parts) {
        if (W == U_big) {
            found_u = true;
            continue;
        }
        Subspace I = geom::intersect(F, W, Vp);
        if (I.dim != d) throw ConstructError("spread section has unexpected dimension");
        parts.push_back(drop_tail(I, n));
    }
    if (!found_u) throw ConstructError("spread does not contain the coordinate block");

    Space space(n, F);
    cert.partition = part::validate(space, std::move(parts));
    return cert;
}

ConstructionCertificate pi_m(std::uint32_t n, std::uint32_t t, const FieldSpec& F) {
    if (t < 1 || n < 2 * t) throw OutOfRange("pi_m requires n = kt + r with k >= 2");
    const std::uint32_t r = n % t;
    ConstructionCertificate cert;
    cert.recipe.push_back("pi_m n=" + std::to_string(n) + " t=" + std::to_string(t));

    std::vector<Subspace> parts;
    std::uint32_t m = n;
    while (m > t + r) {
        auto step = beutelspacher_partition(m, t, F);
        cert.recipe.push_back("  residual dim " + std::to_string(m) + ": " + step.recipe.front());
        Subspace residual = identity_prefix(m, m - t);
        for (const auto& W : step.partition.parts)
            if (!(W == residual)) parts.push_back(lift(W, n));
        m -= t;
    }
    parts.push_back(identity_prefix(n, t + r));
    cert.recipe.push_back("  final residual: dim " + std::to_string(t + r));

    Space space(n, F);
    cert.partition = part::validate(space, std::move(parts));
    return cert;
}

ConstructionCertificate pi_M(std::uint32_t n, std::uint32_t t, const FieldSpec& F) {
    const std::uint32_t r = t == 0 ? 0 : n % t;
    if (t < 2 || n < 2 * t || r == 0) throw OutOfRange("pi_M requires k >= 2 and 1 <= r < t");
    ConstructionCertificate cert = pi_m(n, t, F);
    cert.recipe.insert(cert.recipe.begin(), "pi_M n=" + std::to_string(n) +
                                                " t=" + std::to_string(t));

    Subspace residual = identity_prefix(n, t + r);
    std::vector<Subspace> parts;
    for (auto& W : cert.partition.parts)
        if (!(W == residual)) parts.push_back(std::move(W));

    const std::uint32_t fl = (t + r) / 2;
    auto refine = beutelspacher_partition(t + r, fl, F);
    cert.recipe.push_back("  refine (t+r)-part: " + refine.recipe.front());
    for (const auto& W : refine.partition.parts) parts.push_back(lift(W, n));

    Space space(n, F);
    cert.partition = part::validate(space, std::move(parts));
    return cert;
}

spread::PartialSpread embedded_spread_maximal(std::uint32_t n, std::uint32_t t,
                                              const FieldSpec& F) {
    if (t < 1 || n % t != 0 || n < 2 * t)
        throw OutOfRange("embedded_spread_maximal requires t | n and n >= 2t");
    const std::uint32_t N = n + t - 1;
    SubspacePartition spread_n = desarguesian_spread(n / t, t, F);
    std::vector<Subspace> members;
    members.reserve(spread_n.parts.size());
    for (const auto& W : spread_n.parts) members.push_back(lift(W, N));
    Space space(N, F);
    return spread::validate_spread(space, t, std::move(members));
}

}  // namespace qpart::construct
