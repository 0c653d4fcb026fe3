#pragma once
#include "doldkan.hpp"
#include <random>

// Seeded random fixtures. Dimensions stay small (the checks are exact and
// combinatorial, not statistical); every generator is a deterministic
// function of the seed.

namespace colax {

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next(std::uint64_t bound) { return eng() % bound; } // bound > 0
    long small_scalar(long lo = -3, long hi = 3) {
        return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    std::mt19937_64 eng;
};

template <class K>
LinMap<K> random_linmap(const SpacePtr& dom, const SpacePtr& cod, Rng& rng, int density_pct = 50) {
    LinMap<K> f(dom, cod);
    for (int j = 0; j < dom->dim(); ++j)
        for (int i = 0; i < cod->dim(); ++i)
            if (static_cast<int>(rng.next(100)) < density_pct) {
                long v = rng.small_scalar();
                if (v)
                    f.add_entry(i, j, K(v));
            }
    return f;
}

// Random complex built downward so that d.d = 0 holds by construction:
// each differential is a random map into the kernel of the one above.
template <class K>
ComplexPtr<K> random_complex(Rng& rng, int depth, int max_dim, const std::string& name = "C") {
    ChainComplex<K> C(name, depth);
    for (int n = -depth; n <= 0; ++n) {
        int d = 1 + static_cast<int>(rng.next(static_cast<std::uint64_t>(max_dim)));
        C.set_component(n, make_space(name + "^" + std::to_string(n), d,
                                      name + std::to_string(-n) + "_"));
    }
    for (int n = -1; n >= -depth; --n) {
        if (n == -1) {
            C.set_differential(n, random_linmap<K>(C.component(n), C.component(n + 1), rng, 40));
        } else {
            auto [ker, incl] = kernel(C.differential(n + 1), {"tmp", "t"});
            C.set_differential(n, compose(incl, random_linmap<K>(C.component(n), ker, rng, 40)));
        }
    }
    C.finalize();
    return std::make_shared<ChainComplex<K>>(std::move(C));
}

// Random chain map C -> D: sample the solution space of "commutes with d".
template <class K>
ChainMap<K> random_chain_map(const ComplexPtr<K>& C, const ComplexPtr<K>& D, Rng& rng) {
    std::vector<int> var_base(C->depth() + 1, -1);
    int nvars = 0;
    for (int i = 0; i <= C->depth(); ++i) {
        var_base[i] = nvars;
        if (D->in_range(-i))
            nvars += C->component(-i)->dim() * D->component(-i)->dim();
    }
    auto var_of = [&](int n, int row, int col) {
        return var_base[-n] + col * D->component(n)->dim() + row;
    };
    std::vector<std::map<int, K>> eqs;
    for (int n = -C->depth(); n <= -1; ++n) {
        if (!D->in_range(n) || !D->in_range(n + 1))
            continue;
        const auto& dC = C->differential(n);
        const auto& dD = D->differential(n);
        for (int col = 0; col < C->component(n)->dim(); ++col)
            for (int row = 0; row < D->component(n + 1)->dim(); ++row) {
                std::map<int, K> eq;
                for (int m = 0; m < D->component(n)->dim(); ++m) {
                    K c = dD.entry(row, m);
                    if (!is_zero(c))
                        eq[var_of(n, m, col)] = c;
                }
                for (auto& [m, c] : dC.column(col)) {
                    auto key = var_of(n + 1, row, m);
                    auto it = eq.find(key);
                    if (it == eq.end())
                        eq[key] = -c;
                    else {
                        it->second = it->second - c;
                        if (is_zero(it->second))
                            eq.erase(it);
                    }
                }
                if (!eq.empty())
                    eqs.push_back(std::move(eq));
            }
    }
    Rref<K> R = rref_rows<K>(std::move(eqs), nvars);
    // random combination of the kernel basis of the constraint system
    std::vector<K> sol(nvars, K(0));
    for (int c = 0; c < nvars; ++c) {
        if (R.is_pivot(c))
            continue;
        long coefficient = rng.small_scalar();
        if (!coefficient)
            continue;
        K kc(coefficient);
        sol[c] = sol[c] + kc;
        for (int r = 0; r < R.rank(); ++r) {
            auto it = R.rows[r].find(c);
            if (it != R.rows[r].end())
                sol[R.pivot_col[r]] = sol[R.pivot_col[r]] - kc * it->second;
        }
    }
    std::vector<LinMap<K>> comps;
    for (int i = 0; i <= C->depth(); ++i) {
        int n = -i;
        if (!D->in_range(n)) {
            comps.push_back(LinMap<K>::zero(C->component(n), ChainComplex<K>::zero_space()));
            continue;
        }
        LinMap<K> f(C->component(n), D->component(n));
        for (int col = 0; col < C->component(n)->dim(); ++col)
            for (int row = 0; row < D->component(n)->dim(); ++row) {
                K c = sol[var_of(n, row, col)];
                if (!is_zero(c))
                    f.add_entry(row, col, c);
            }
        comps.push_back(std::move(f));
    }
    return ChainMap<K>(C, D, std::move(comps));
}

// Random invertible map on a space (unitriangular L.U times unit diagonal).
template <class K> LinMap<K> random_invertible(const SpacePtr& V, Rng& rng) {
    int n = V->dim();
    LinMap<K> m(V, V);
    std::vector<std::vector<K>> a(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i)
        a[i][i] = K(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (rng.next(100) < 12)
                a[i][j] = K(rng.small_scalar(-2, 2));
    // multiply by an upper unitriangular factor
    std::vector<std::vector<K>> u(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i)
        u[i][i] = K(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next(100) < 12)
                u[i][j] = K(rng.small_scalar(-2, 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            K s(0);
            for (int t = 0; t < n; ++t)
                s = s + a[i][t] * u[t][j];
            if (!is_zero(s))
                m.add_entry(i, j, s);
        }
    return m;
}

// Conjugate a simplicial module by random level-wise isos: an isomorphic
// module whose operator matrices are scrambled. By Dold-Kan every module is
// isomorphic to a Gamma image, so Gamma + conjugation samples everything.
template <class K> ModulePtr<K> conjugate_module(const ModulePtr<K>& X, Rng& rng) {
    int n_max = X->n_max();
    SimplicialModule<K> Y(X->name() + "~", n_max);
    std::vector<LinMap<K>> t(n_max + 1), tinv(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto sp = make_space(Y.name() + "_" + std::to_string(n), X->level(n)->dim(),
                             "m" + std::to_string(n) + "_");
        Y.set_level(n, sp);
        LinMap<K> raw = random_invertible<K>(X->level(n), rng);
        LinMap<K> tr(X->level(n), sp);
        for (int j = 0; j < sp->dim(); ++j)
            tr.set_column(j, raw.column(j));
        t[n] = tr;
        LinMap<K> inv(sp, X->level(n));
        for (int e = 0; e < sp->dim(); ++e) {
            auto x = solve(tr, SparseVec<K>{{e, K(1)}});
            inv.set_column(e, std::move(*x));
        }
        tinv[n] = inv;
    }
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            Y.set_face(n, i, compose(t[n - 1], compose(X->face(n, i), tinv[n])));
    for (int n = 0; n < n_max; ++n)
        for (int i = 0; i <= n; ++i)
            Y.set_degeneracy(n, i, compose(t[n + 1], compose(X->degeneracy(n, i), tinv[n])));
    return std::make_shared<SimplicialModule<K>>(std::move(Y));
}

template <class K>
ModulePtr<K> random_module(Rng& rng, int n_max, int depth, int max_dim,
                           const std::string& name = "X") {
    auto C = random_complex<K>(rng, depth, max_dim, name);
    return conjugate_module(gamma_functor(C, n_max), rng);
}

} // namespace colax
