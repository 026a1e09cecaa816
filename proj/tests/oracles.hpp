#pragma once

// Reference implementations used only by the tests. None of them calls the
// library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "topo/complex.hpp"
#include "topo/edge_path.hpp"
#include "topo/integer_matrix.hpp"

namespace oracle {

using topo::Face;
using topo::SimplicialComplex;
using topo::VertexId;

inline bool subset_of(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Every subset of the vertex set of size <= dim+1 that lies in some facet,
/// found by scanning bitmasks over the vertex list.
inline std::vector<Face> brute_force_faces(const SimplicialComplex& k) {
    const auto& vs = k.vertices();
    std::vector<Face> out{Face{}};
    if (vs.size() > 24)
        throw std::runtime_error("brute force oracle limited to 24 vertices");
    for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
        Face f;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask >> i & 1)
                f.push_back(vs[i]);
        if (static_cast<int>(f.size()) > k.dim() + 1)
            continue;
        for (const Face& facet : k.facets())
            if (subset_of(f, facet)) {
                out.push_back(f);
                break;
            }
    }
    return out;
}

/// Faces by closing each facet downward; works for larger complexes.
inline std::set<Face> closure_faces(const SimplicialComplex& k) {
    std::set<Face> out{Face{}};
    for (const Face& facet : k.facets()) {
        const std::size_t n = facet.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Face f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1)
                    f.push_back(facet[i]);
            out.insert(f);
        }
    }
    return out;
}

/// f_{-1}, f_0, ... counted from a face list.
template <typename Faces>
std::vector<std::int64_t> f_counts(const Faces& faces, int d) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(d + 1), 0);
    for (const Face& x : faces)
        ++f.at(x.size());
    return f;
}

/// h from f by expanding Σ f_{i-1} (x-1)^{d-i} and reading coefficients of
/// x^{d-i}: an independent route from the closed formula.
inline std::vector<std::int64_t> h_by_polynomial(const std::vector<std::int64_t>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<std::int64_t> poly(static_cast<std::size_t>(d + 1), 0); // poly[k] = coeff of x^k
    for (int i = 0; i <= d; ++i) {
        std::vector<std::int64_t> p{1};
        for (int t = 0; t < d - i; ++t) {
            std::vector<std::int64_t> q(p.size() + 1, 0);
            for (std::size_t j = 0; j < p.size(); ++j) {
                q[j + 1] += p[j];
                q[j] -= p[j];
            }
            p = q;
        }
        for (std::size_t j = 0; j < p.size(); ++j)
            poly[j] += f[static_cast<std::size_t>(i)] * p[j];
    }
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i)
        h[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(d - i)];
    return h;
}

/// Faces of Δ_S from a face list.
template <typename Faces>
std::vector<Face> faces_with_colors(const SimplicialComplex& k, const Faces& faces,
                                    const std::set<int>& colors) {
    std::vector<Face> out;
    for (const Face& f : faces)
        if (std::all_of(f.begin(), f.end(), [&](VertexId v) { return colors.count(k.color(v)); }))
            out.push_back(f);
    return out;
}

/// Graph connectivity of the vertices and edges in a face list.
template <typename Faces>
bool graph_connected(const Faces& faces) {
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const Face& f : faces)
        if (f.size() == 1)
            parent[f[0]] = f[0];
    for (const Face& f : faces)
        if (f.size() == 2)
            parent[find(f[0])] = find(f[1]);
    std::set<VertexId> roots;
    for (const auto& entry : parent)
        roots.insert(find(entry.first));
    return roots.size() <= 1;
}

// ---------------------------------------------------------------------------
// Integer linear algebra over __int128

using I128 = __int128;
using SmallMatrix = std::vector<std::vector<long long>>;

inline I128 abs128(I128 x) { return x < 0 ? -x : x; }

inline I128 gcd128(I128 a, I128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Fraction-free determinant (Bareiss) of a small matrix.
inline I128 det128(std::vector<std::vector<I128>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    I128 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    if (k > n)
        return;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

/// Nonzero invariant factors d_k = D_k / D_{k-1}, where D_k is the gcd of the
/// k x k minors.
inline std::vector<long long> invariant_factors_by_minors(const SmallMatrix& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long long> out;
    I128 prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combinations(rows, k, rs);
        combinations(cols, k, cs);
        I128 g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<I128>> sub(k, std::vector<I128>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m[r[i]][c[j]];
                g = gcd128(g, det128(sub));
            }
        if (g == 0)
            break;
        out.push_back(static_cast<long long>(g / prev));
        prev = g;
    }
    return out;
}

/// Rank over Z/p.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> a, long long p = 1000000007LL) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    auto mod = [&](long long x) { return ((x % p) + p) % p; };
    auto power = [&](long long b, long long e) {
        long long r = 1;
        b = mod(b);
        while (e) {
            if (e & 1)
                r = static_cast<long long>(static_cast<I128>(r) * b % p);
            b = static_cast<long long>(static_cast<I128>(b) * b % p);
            e >>= 1;
        }
        return r;
    };
    for (auto& row : a)
        for (auto& x : row)
            x = mod(x);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const long long inv = power(a[rank][c], p - 2);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const long long factor = static_cast<long long>(static_cast<I128>(a[r][c]) * inv % p);
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = mod(a[r][j] - static_cast<long long>(static_cast<I128>(factor) * a[rank][j] % p));
        }
        ++rank;
    }
    return rank;
}

/// β1 over Q from the face lists, via ranks mod a large prime.
inline std::size_t betti1_mod_p(const SimplicialComplex& k) {
    std::vector<Face> vs, es, ts;
    for (const Face& f : closure_faces(k)) {
        if (f.size() == 1)
            vs.push_back(f);
        else if (f.size() == 2)
            es.push_back(f);
        else if (f.size() == 3)
            ts.push_back(f);
    }
    std::map<Face, std::size_t> vi, ei;
    for (std::size_t i = 0; i < vs.size(); ++i)
        vi[vs[i]] = i;
    for (std::size_t i = 0; i < es.size(); ++i)
        ei[es[i]] = i;
    std::vector<std::vector<long long>> d1(vs.size(), std::vector<long long>(es.size(), 0));
    for (std::size_t j = 0; j < es.size(); ++j) {
        d1[vi[{es[j][0]}]][j] -= 1;
        d1[vi[{es[j][1]}]][j] += 1;
    }
    std::vector<std::vector<long long>> d2(es.size(), std::vector<long long>(ts.size(), 0));
    for (std::size_t j = 0; j < ts.size(); ++j) {
        const Face& t = ts[j];
        d2[ei[{t[1], t[2]}]][j] += 1;
        d2[ei[{t[0], t[2]}]][j] -= 1;
        d2[ei[{t[0], t[1]}]][j] += 1;
    }
    return es.size() - rank_mod_p(d1) - rank_mod_p(d2);
}

// ---------------------------------------------------------------------------
// Generators

/// Random pure 2-complex: `count` distinct random triangles on n vertices.
inline SimplicialComplex random_surface_patch(std::mt19937& rng, int n, int count) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::set<Face> tris;
    int guard = 0;
    while (static_cast<int>(tris.size()) < count && ++guard < 10000) {
        Face t{pick(rng), pick(rng), pick(rng)};
        std::sort(t.begin(), t.end());
        if (t[0] != t[1] && t[1] != t[2])
            tris.insert(t);
    }
    return SimplicialComplex::from_faces({tris.begin(), tris.end()});
}

/// Random sub-collection of facets of a complex (at least one facet).
inline SimplicialComplex random_subcomplex(std::mt19937& rng, const SimplicialComplex& k) {
    std::vector<Face> kept;
    std::bernoulli_distribution keep(0.6);
    for (const Face& f : k.facets())
        if (keep(rng))
            kept.push_back(f);
    if (kept.empty())
        kept.push_back(k.facets().front());
    std::optional<topo::Coloring> coloring;
    if (k.has_coloring()) {
        coloring.emplace();
        for (const Face& f : kept)
            for (VertexId v : f)
                (*coloring)[v] = k.color(v);
    }
    return SimplicialComplex::from_faces(kept, coloring);
}

/// Random closed edge path at `base`: a random walk of the given length
/// followed by a BFS-shortest return to `base`.
inline topo::EdgePath random_closed_path(std::mt19937& rng, const SimplicialComplex& k,
                                         VertexId base, int steps) {
    std::vector<VertexId> walk{base};
    for (int i = 0; i < steps; ++i) {
        const auto nb = k.neighbors(walk.back());
        if (nb.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        walk.push_back(nb[pick(rng)]);
    }
    std::map<VertexId, VertexId> prev{{walk.back(), walk.back()}};
    std::vector<VertexId> queue{walk.back()};
    for (std::size_t qi = 0; qi < queue.size() && !prev.count(base); ++qi)
        for (VertexId w : k.neighbors(queue[qi]))
            if (prev.emplace(w, queue[qi]).second)
                queue.push_back(w);
    std::vector<VertexId> back;
    for (VertexId x = base; x != walk.back(); x = prev.at(x))
        back.push_back(x);
    std::reverse(back.begin(), back.end());
    walk.insert(walk.end(), back.begin(), back.end());
    if (walk.size() == 1)
        walk.push_back(base);
    return {walk};
}

} // namespace oracle
