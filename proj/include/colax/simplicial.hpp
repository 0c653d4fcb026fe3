#pragma once
#include "chain.hpp"

// Truncated simplicial vector spaces: face/degeneracy operators, the five
// simplicial identities as matrix equalities, operators X(theta) for
// arbitrary monotone maps, normalized and Moore chain complexes, homotopy
// groups, level-wise tensor products and bisimplicial diagonals.
//
// Levels run over [0, n_max]. Degeneracies out of level n_max are omitted;
// every identity is checked wherever both sides stay inside the window.

namespace colax {

// ---------------------------------------------------------------------------
// Monotone maps [m] -> [n] as value vectors of length m+1.

using Monotone = std::vector<int>;

inline Monotone monotone_identity(int n) {
    Monotone f(n + 1);
    for (int i = 0; i <= n; ++i)
        f[i] = i;
    return f;
}

// delta_i : [n-1] -> [n], injection missing i
inline Monotone face_monotone(int n, int i) {
    Monotone f;
    for (int t = 0; t <= n; ++t)
        if (t != i)
            f.push_back(t);
    return f;
}

// sigma_i : [n+1] -> [n], surjection hitting i twice
inline Monotone degeneracy_monotone(int n, int i) {
    Monotone f;
    for (int t = 0; t <= n + 1; ++t)
        f.push_back(t <= i ? t : t - 1);
    return f;
}

inline Monotone compose_monotone(const Monotone& f, const Monotone& g) { // f after g
    Monotone h(g.size());
    for (std::size_t t = 0; t < g.size(); ++t)
        h[t] = f.at(g[t]);
    return h;
}

inline bool is_surjective_onto(const Monotone& f, int n) {
    std::vector<bool> hit(n + 1, false);
    for (int v : f)
        hit[v] = true;
    for (bool b : hit)
        if (!b)
            return false;
    return true;
}

inline std::string monotone_string(const Monotone& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += (i ? "," : "") + std::to_string(f[i]);
    return s;
}

// All order-preserving surjections [n] ->> [k], lexicographic in value strings.
inline std::vector<Monotone> surjections(int n, int k) {
    std::vector<Monotone> out;
    Monotone cur(n + 1);
    // enumerate by choosing, at each position, either repeat or step up
    cur[0] = 0;
    std::function<void(int, int)> go = [&](int pos, int maxv) {
        if (pos == n + 1) {
            if (maxv == k)
                out.push_back(cur);
            return;
        }
        cur[pos] = maxv; // repeat
        go(pos + 1, maxv);
        if (maxv + 1 <= k) {
            cur[pos] = maxv + 1; // step
            go(pos + 1, maxv + 1);
        }
    };
    if (k > n || k < 0)
        return out;
    go(1, 0);
    return out;
}

// ---------------------------------------------------------------------------

template <class K> class SimplicialModule;
template <class K> using ModulePtr = std::shared_ptr<const SimplicialModule<K>>;

template <class K> ModulePtr<K> freeze(SimplicialModule<K>&& X) {
    return std::make_shared<SimplicialModule<K>>(std::move(X));
}

template <class K> struct NormalizedComplex {
    ComplexPtr<K> complex;          // depth n_max, degree -n <-> level n
    std::vector<LinMap<K>> incl;    // [n]: N^{-n} -> X_n
    std::vector<LinMap<K>> proj;    // [n]: X_n -> N^{-n}, kills degeneracies
    std::vector<LinMap<K>> degen_incl; // [n]: span of degenerate part -> X_n
};

struct IdentityFailure {
    std::string identity;
    int level;
    std::string witness;
};

template <class K> class SimplicialModule {
  public:
    SimplicialModule() = default;
    SimplicialModule(std::string name, int n_max)
        : name_(std::move(name)), n_max_(n_max), levels_(n_max + 1), face_(n_max + 1),
          degen_(n_max + 1) {
        for (int n = 0; n <= n_max; ++n) {
            levels_[n] = make_space(name_ + "_" + std::to_string(n), 0);
            face_[n].resize(n + 1);
            if (n < n_max)
                degen_[n].resize(n + 1);
        }
    }

    const std::string& name() const { return name_; }
    int n_max() const { return n_max_; }
    const SpacePtr& level(int n) const { return levels_.at(n); }
    void set_level(int n, SpacePtr sp) { levels_.at(n) = std::move(sp); }

    const LinMap<K>& face(int n, int i) const { return face_.at(n).at(i); } // level n -> n-1
    const LinMap<K>& degeneracy(int n, int i) const { return degen_.at(n).at(i); } // n -> n+1
    void set_face(int n, int i, LinMap<K> f) { face_.at(n).at(i) = std::move(f); }
    void set_degeneracy(int n, int i, LinMap<K> s) { degen_.at(n).at(i) = std::move(s); }

    bool has_degeneracies(int n) const { return n < n_max_; }

    // Fill any unset operators with zero maps (useful for levels of dim 0).
    void finalize() {
        for (int n = 1; n <= n_max_; ++n)
            for (int i = 0; i <= n; ++i)
                if (!face_[n][i].domain())
                    face_[n][i] = LinMap<K>::zero(levels_[n], levels_[n - 1]);
        for (int n = 0; n < n_max_; ++n)
            for (int i = 0; i <= n; ++i)
                if (!degen_[n][i].domain())
                    degen_[n][i] = LinMap<K>::zero(levels_[n], levels_[n + 1]);
    }

    // X(theta) for a monotone theta: [m] -> [n], as a map X_n -> X_m.
    LinMap<K> act(const Monotone& theta, int n) const {
        int m = static_cast<int>(theta.size()) - 1;
        if (theta == monotone_identity(n))
            return LinMap<K>::identity(levels_.at(n));
        // peel degeneracies first (from the left of the composite), then faces
        for (int i = 0; i + 1 <= m; ++i)
            if (theta[i] == theta[i + 1]) {
                Monotone rest;
                for (int t = 0; t <= m; ++t)
                    if (t != i)
                        rest.push_back(theta[t]);
                return compose(degeneracy(m - 1, i), act(rest, n));
            }
        // theta injective: find the largest missed value
        std::vector<bool> hit(n + 1, false);
        for (int v : theta)
            hit[v] = true;
        int j = -1;
        for (int v = n; v >= 0; --v)
            if (!hit[v]) {
                j = v;
                break;
            }
        Monotone rest;
        for (int v : theta)
            rest.push_back(v > j ? v - 1 : v);
        return compose(act(rest, n - 1), face(n, j));
    }

    std::vector<IdentityFailure> check_simplicial_identities() const {
        std::vector<IdentityFailure> fails;
        auto record = [&](const LinMap<K>& lhs, const LinMap<K>& rhs, const std::string& id,
                          int level) {
            if (!(lhs == rhs))
                fails.push_back({id, level, diff_witness(lhs, rhs)});
        };
        for (int n = 2; n <= n_max_; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    record(compose(face(n - 1, i), face(n, j)),
                           compose(face(n - 1, j - 1), face(n, i)),
                           "d" + std::to_string(i) + "d" + std::to_string(j), n);
        for (int n = 1; n < n_max_; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    if (i < j)
                        record(compose(face(n + 1, i), degeneracy(n, j)),
                               compose(degeneracy(n - 1, j - 1), face(n, i)),
                               "d" + std::to_string(i) + "s" + std::to_string(j), n);
                    else if (i == j || i == j + 1)
                        record(compose(face(n + 1, i), degeneracy(n, j)),
                               LinMap<K>::identity(levels_[n]),
                               "d" + std::to_string(i) + "s" + std::to_string(j) + "=id", n);
                    else if (i > j + 1 && n >= 1)
                        record(compose(face(n + 1, i), degeneracy(n, j)),
                               compose(degeneracy(n - 1, j), face(n, i - 1)),
                               "d" + std::to_string(i) + "s" + std::to_string(j), n);
                }
        for (int n = 0; n + 2 <= n_max_; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    record(compose(degeneracy(n + 1, i), degeneracy(n, j)),
                           compose(degeneracy(n + 1, j + 1), degeneracy(n, i)),
                           "s" + std::to_string(i) + "s" + std::to_string(j), n);
        return fails;
    }

    void require_identities() const {
        auto fails = check_simplicial_identities();
        if (!fails.empty())
            throw std::logic_error(name_ + ": simplicial identity " + fails[0].identity +
                                   " fails at level " + std::to_string(fails[0].level) + " " +
                                   fails[0].witness);
    }

    const NormalizedComplex<K>& normalized() const {
        if (!ncache_)
            ncache_ = std::make_shared<NormalizedComplex<K>>(compute_normalized());
        return *ncache_;
    }

  private:
    NormalizedComplex<K> compute_normalized() const {
        NormalizedComplex<K> N;
        ChainComplex<K> C("N(" + name_ + ")", n_max_);
        N.incl.resize(n_max_ + 1);
        N.proj.resize(n_max_ + 1);
        N.degen_incl.resize(n_max_ + 1);
        std::vector<SpacePtr> nsp(n_max_ + 1);
        for (int n = 0; n <= n_max_; ++n) {
            if (n == 0) {
                nsp[0] = levels_[0];
                N.incl[0] = LinMap<K>::identity(levels_[0]);
            } else {
                // kernel of the stacked map (d_0, .., d_{n-1}) : X_n -> X_{n-1}^n
                auto stacked_sp = std::make_shared<FiniteBasisSpace>("st");
                for (int i = 0; i < n; ++i)
                    for (auto& l : levels_[n - 1]->labels)
                        stacked_sp->add(std::to_string(i) + "#" + l);
                SpacePtr ssp = stacked_sp;
                LinMap<K> stacked(levels_[n], ssp);
                for (int i = 0; i < n; ++i) {
                    const auto& d = face_[n][i];
                    int off = i * levels_[n - 1]->dim();
                    for (int j = 0; j < levels_[n]->dim(); ++j)
                        for (auto& [r, c] : d.column(j))
                            stacked.add_entry(off + r, j, c);
                }
                auto [ker, incl] =
                    kernel(stacked, {"N" + std::to_string(n) + "(" + name_ + ")",
                                     "n" + std::to_string(n) + "_"});
                nsp[n] = ker;
                N.incl[n] = std::move(incl);
            }
            C.set_component(-n, nsp[n]);
        }
        for (int n = 1; n <= n_max_; ++n) {
            // d = (-1)^n d_n restricted to N; lands in N by the identities
            LinMap<K> dn = compose(face_[n][n], N.incl[n]).scaled(n % 2 ? K(-1) : K(1));
            C.set_differential(-n, factor_through(N.incl[n - 1], dn));
        }
        C.finalize();
        N.complex = std::make_shared<ChainComplex<K>>(std::move(C));
        // degenerate part and the projection along it
        for (int n = 0; n <= n_max_; ++n) {
            SubspaceReducer<K> deg(levels_[n]->dim());
            std::vector<SparseVec<K>> degbasis;
            if (n >= 1)
                for (int i = 0; i <= n - 1; ++i) {
                    const auto& s = degen_[n - 1][i];
                    for (int j = 0; j < levels_[n - 1]->dim(); ++j)
                        if (deg.add(s.column(j)))
                            degbasis.push_back(deg.basis().back());
                }
            auto dsp = make_space("D" + std::to_string(n) + "(" + name_ + ")",
                                  static_cast<int>(deg.dim()), "dg");
            LinMap<K> dincl(dsp, levels_[n]);
            {
                int j = 0;
                for (auto& b : deg.basis())
                    dincl.set_column(j++, b);
            }
            N.degen_incl[n] = dincl;
            int nd = nsp[n]->dim(), dd = dsp->dim();
            if (nd + dd != levels_[n]->dim())
                throw std::logic_error(name_ + ": level " + std::to_string(n) +
                                       " is not N + degenerate");
            // projection: solve [incl_N | incl_D] x = e_j, keep the N block
            LinMap<K> big(make_space("nd", nd + dd), levels_[n]);
            for (int j = 0; j < nd; ++j)
                big.set_column(j, N.incl[n].column(j));
            for (int j = 0; j < dd; ++j)
                big.set_column(nd + j, dincl.column(j));
            LinMap<K> proj(levels_[n], nsp[n]);
            for (int e = 0; e < levels_[n]->dim(); ++e) {
                auto x = solve(big, SparseVec<K>{{e, K(1)}});
                if (!x)
                    throw std::logic_error("decomposition solve failed");
                for (auto& [i, c] : *x)
                    if (i < nd)
                        proj.add_entry(i, e, c);
            }
            N.proj[n] = std::move(proj);
        }
        return N;
    }

    std::string name_;
    int n_max_ = 0;
    std::vector<SpacePtr> levels_;
    std::vector<std::vector<LinMap<K>>> face_;
    std::vector<std::vector<LinMap<K>>> degen_;
    mutable std::shared_ptr<NormalizedComplex<K>> ncache_;
};

template <class K> ComplexPtr<K> normalized_complex(const SimplicialModule<K>& X) {
    return X.normalized().complex;
}

// Moore complex: full levels, differential sum_i (-1)^i d_i.
template <class K> ComplexPtr<K> moore_complex(const SimplicialModule<K>& X) {
    ChainComplex<K> C("Moore(" + X.name() + ")", X.n_max());
    for (int n = 0; n <= X.n_max(); ++n)
        C.set_component(-n, X.level(n));
    for (int n = 1; n <= X.n_max(); ++n) {
        LinMap<K> d = LinMap<K>::zero(X.level(n), X.level(n - 1));
        for (int i = 0; i <= n; ++i)
            d = d + X.face(n, i).scaled(i % 2 ? K(-1) : K(1));
        C.set_differential(-n, std::move(d));
    }
    C.finalize();
    return std::make_shared<ChainComplex<K>>(std::move(C));
}

template <class K> struct HomotopyGroup {
    SpacePtr space;
    LinMap<K> representatives; // into N(X)^{-n}
    bool boundary_flagged;
};

template <class K> HomotopyGroup<K> homotopy_groups(const SimplicialModule<K>& X, int n) {
    auto H = homology(*X.normalized().complex, -n);
    return {H.space, H.representatives, H.at_truncation_boundary};
}

// Constant simplicial module on a space V: all levels V, all operators id.
template <class K>
ModulePtr<K> constant_module(const SpacePtr& V, int n_max, const std::string& name = "") {
    SimplicialModule<K> X(name.empty() ? "const(" + V->name + ")" : name, n_max);
    for (int n = 0; n <= n_max; ++n)
        X.set_level(n, V);
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            X.set_face(n, i, LinMap<K>::identity(V));
    for (int n = 0; n < n_max; ++n)
        for (int i = 0; i <= n; ++i)
            X.set_degeneracy(n, i, LinMap<K>::identity(V));
    return std::make_shared<SimplicialModule<K>>(std::move(X));
}

template <class K> class SimplicialMap {
  public:
    SimplicialMap() = default;
    SimplicialMap(ModulePtr<K> src, ModulePtr<K> tgt, std::vector<LinMap<K>> comps,
                  bool verify = true)
        : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
        if (verify)
            verify_commutes();
    }

    static SimplicialMap identity(const ModulePtr<K>& X) {
        std::vector<LinMap<K>> comps;
        for (int n = 0; n <= X->n_max(); ++n)
            comps.push_back(LinMap<K>::identity(X->level(n)));
        return SimplicialMap(X, X, std::move(comps), false);
    }

    const ModulePtr<K>& source() const { return src_; }
    const ModulePtr<K>& target() const { return tgt_; }
    const LinMap<K>& level(int n) const { return comps_.at(n); }

    void verify_commutes() const {
        for (int n = 1; n <= src_->n_max(); ++n)
            for (int i = 0; i <= n; ++i) {
                auto lhs = compose(tgt_->face(n, i), comps_[n]);
                auto rhs = compose(comps_[n - 1], src_->face(n, i));
                if (!(lhs == rhs))
                    throw std::logic_error("simplicial map fails d" + std::to_string(i) +
                                           " at level " + std::to_string(n) + ": " +
                                           diff_witness(lhs, rhs));
            }
        for (int n = 0; n < src_->n_max(); ++n)
            for (int i = 0; i <= n; ++i) {
                auto lhs = compose(tgt_->degeneracy(n, i), comps_[n]);
                auto rhs = compose(comps_[n + 1], src_->degeneracy(n, i));
                if (!(lhs == rhs))
                    throw std::logic_error("simplicial map fails s" + std::to_string(i) +
                                           " at level " + std::to_string(n) + ": " +
                                           diff_witness(lhs, rhs));
            }
    }

    friend SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
        std::vector<LinMap<K>> comps;
        for (int n = 0; n <= g.src_->n_max(); ++n)
            comps.push_back(compose(f.comps_[n], g.comps_[n]));
        return SimplicialMap(g.src_, f.tgt_, std::move(comps), false);
    }
    friend bool operator==(const SimplicialMap& f, const SimplicialMap& g) {
        return f.comps_ == g.comps_;
    }

  private:
    ModulePtr<K> src_, tgt_;
    std::vector<LinMap<K>> comps_;
};

// Per-level inverse of an iso simplicial map.
template <class K> SimplicialMap<K> invert_simplicial_map(const SimplicialMap<K>& f) {
    std::vector<LinMap<K>> comps;
    for (int n = 0; n <= f.source()->n_max(); ++n) {
        const auto& c = f.level(n);
        LinMap<K> inv(f.target()->level(n), f.source()->level(n));
        for (int e = 0; e < f.target()->level(n)->dim(); ++e) {
            auto x = solve(c, SparseVec<K>{{e, K(1)}});
            if (!x)
                throw std::domain_error("invert_simplicial_map: not surjective at level " +
                                        std::to_string(n));
            inv.set_column(e, std::move(*x));
        }
        comps.push_back(std::move(inv));
    }
    return SimplicialMap<K>(f.target(), f.source(), std::move(comps), false);
}

// N on maps: restrict to the normalized subcomplexes.
template <class K> ChainMap<K> normalized_map(const SimplicialMap<K>& f) {
    const auto& NS = f.source()->normalized();
    const auto& NT = f.target()->normalized();
    std::vector<LinMap<K>> comps;
    for (int n = 0; n <= f.source()->n_max(); ++n)
        comps.push_back(factor_through(NT.incl[n], compose(f.level(n), NS.incl[n])));
    return ChainMap<K>(NS.complex, NT.complex, std::move(comps));
}

// f (x) g on a fixed level: dom/cod are tensor-labeled spaces; entries the
// operator would send outside cod (weight-capped spaces) are an error.
template <class K>
LinMap<K> tensor_pair_level(const LinMap<K>& f, const LinMap<K>& g, const SpacePtr& dom,
                            const SpacePtr& cod, bool drop_missing = false) {
    if (!dom->pairing || !cod->pairing)
        throw std::logic_error("tensor_pair_level: domain/codomain are not tensor bases");
    LinMap<K> h(dom, cod);
    const auto& dp = *dom->pairing;
    const auto& cp = *cod->pairing;
    std::map<int, K> acc;
    for (int j = 0; j < dom->dim(); ++j) {
        auto [ja, jb] = dp.unpair[j];
        acc.clear();
        for (auto& [ra, ca] : f.column(ja))
            for (auto& [rb, cb] : g.column(jb)) {
                int r = cp.at(ra, rb);
                if (r < 0) {
                    if (drop_missing)
                        continue;
                    throw std::logic_error("tensor_pair_level: operator leaves the window");
                }
                auto it = acc.find(r);
                if (it == acc.end())
                    acc.emplace(r, ca * cb);
                else {
                    it->second = it->second + ca * cb;
                    if (is_zero(it->second))
                        acc.erase(it);
                }
            }
        h.set_column(j, SparseVec<K>(acc.begin(), acc.end()));
    }
    return h;
}

// Level-wise tensor product. When both sides carry weights and cap >= 0,
// pairs of total weight > cap are dropped (the operators are
// weight-nonincreasing so this is operator-stable).
template <class K>
ModulePtr<K> tensor_levelwise(const ModulePtr<K>& X, const ModulePtr<K>& Y, int weight_cap = -1) {
    if (X->n_max() != Y->n_max())
        throw std::invalid_argument("tensor_levelwise: truncation mismatch");
    int n_max = X->n_max();
    SimplicialModule<K> T("(" + X->name() + ")x(" + Y->name() + ")", n_max);
    for (int n = 0; n <= n_max; ++n)
        T.set_level(n, tensor_space(X->level(n), Y->level(n), weight_cap));
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            T.set_face(n, i,
                       tensor_pair_level(X->face(n, i), Y->face(n, i), T.level(n), T.level(n - 1)));
    for (int n = 0; n < n_max; ++n)
        for (int i = 0; i <= n; ++i)
            T.set_degeneracy(n, i, tensor_pair_level(X->degeneracy(n, i), Y->degeneracy(n, i),
                                                     T.level(n), T.level(n + 1)));
    return std::make_shared<SimplicialModule<K>>(std::move(T));
}

// f (x) g as a simplicial map between given level-wise tensor modules.
template <class K>
SimplicialMap<K> tensor_simplicial_map(const SimplicialMap<K>& f, const SimplicialMap<K>& g,
                                       const ModulePtr<K>& src, const ModulePtr<K>& tgt) {
    std::vector<LinMap<K>> comps;
    for (int n = 0; n <= src->n_max(); ++n)
        comps.push_back(tensor_pair_level(f.level(n), g.level(n), src->level(n), tgt->level(n)));
    return SimplicialMap<K>(src, tgt, std::move(comps), false);
}

// Plain transposition (X)x(Y) -> (Y)x(X), level-wise, no signs.
template <class K>
SimplicialMap<K> simplicial_symmetry(const ModulePtr<K>& XY, const ModulePtr<K>& YX) {
    std::vector<LinMap<K>> comps;
    for (int n = 0; n <= XY->n_max(); ++n) {
        LinMap<K> s(XY->level(n), YX->level(n));
        for (int j = 0; j < XY->level(n)->dim(); ++j) {
            auto [la, lb] = split_tensor_label(XY->level(n)->labels[j]);
            s.add_entry(YX->level(n)->at(tensor_label(lb, la)), j, K(1));
        }
        comps.push_back(std::move(s));
    }
    return SimplicialMap<K>(XY, YX, std::move(comps), false);
}

// ---------------------------------------------------------------------------
// Bisimplicial modules and the diagonal.

template <class K> struct BisimplicialModule {
    std::string name;
    int n_max = 0;
    // grid(p, q), horizontal ops move p, vertical ops move q
    std::vector<std::vector<SpacePtr>> grid;
    std::vector<std::vector<std::vector<LinMap<K>>>> hface, vface, hdegen, vdegen;

    const SpacePtr& at(int p, int q) const { return grid.at(p).at(q); }
};

// External product X [x] Y: grid (p, q) = X_p (x) Y_q.
template <class K>
BisimplicialModule<K> external_product(const ModulePtr<K>& X, const ModulePtr<K>& Y) {
    int n_max = std::min(X->n_max(), Y->n_max());
    BisimplicialModule<K> B;
    B.name = "(" + X->name() + ")box(" + Y->name() + ")";
    B.n_max = n_max;
    B.grid.assign(n_max + 1, std::vector<SpacePtr>(n_max + 1));
    for (int p = 0; p <= n_max; ++p)
        for (int q = 0; q <= n_max; ++q)
            B.grid[p][q] = tensor_space(X->level(p), Y->level(q));
    auto sized = [&](auto& arr) {
        arr.assign(n_max + 1, std::vector<std::vector<LinMap<K>>>(n_max + 1));
    };
    sized(B.hface);
    sized(B.vface);
    sized(B.hdegen);
    sized(B.vdegen);
    for (int p = 0; p <= n_max; ++p)
        for (int q = 0; q <= n_max; ++q) {
            if (p >= 1) {
                for (int i = 0; i <= p; ++i)
                    B.hface[p][q].push_back(tensor_map(X->face(p, i),
                                                       LinMap<K>::identity(Y->level(q)),
                                                       B.grid[p][q], B.grid[p - 1][q]));
            }
            if (q >= 1)
                for (int i = 0; i <= q; ++i)
                    B.vface[p][q].push_back(tensor_map(LinMap<K>::identity(X->level(p)),
                                                       Y->face(q, i), B.grid[p][q],
                                                       B.grid[p][q - 1]));
            if (p < n_max)
                for (int i = 0; i <= p; ++i)
                    B.hdegen[p][q].push_back(tensor_map(X->degeneracy(p, i),
                                                        LinMap<K>::identity(Y->level(q)),
                                                        B.grid[p][q], B.grid[p + 1][q]));
            if (q < n_max)
                for (int i = 0; i <= q; ++i)
                    B.vdegen[p][q].push_back(tensor_map(LinMap<K>::identity(X->level(p)),
                                                        Y->degeneracy(q, i), B.grid[p][q],
                                                        B.grid[p][q + 1]));
        }
    return B;
}

// diag(B)_n = B(n, n), d_i = d_i^h d_i^v, s_i = s_i^h s_i^v.
template <class K> ModulePtr<K> diagonal(const BisimplicialModule<K>& B) {
    SimplicialModule<K> D("diag(" + B.name + ")", B.n_max);
    for (int n = 0; n <= B.n_max; ++n)
        D.set_level(n, B.grid[n][n]);
    for (int n = 1; n <= B.n_max; ++n)
        for (int i = 0; i <= n; ++i)
            D.set_face(n, i, compose(B.hface[n][n - 1][i], B.vface[n][n][i]));
    for (int n = 0; n < B.n_max; ++n)
        for (int i = 0; i <= n; ++i)
            D.set_degeneracy(n, i, compose(B.hdegen[n][n + 1][i], B.vdegen[n][n][i]));
    return std::make_shared<SimplicialModule<K>>(std::move(D));
}

} // namespace colax
