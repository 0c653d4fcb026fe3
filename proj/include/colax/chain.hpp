#pragma once
#include "linmap.hpp"
#include <functional>

// Z<=0-graded chain complexes with degree +1 differentials, chain maps,
// homology, tensor products with Koszul signs, quasi-isomorphism verdicts
// and a chain-homotopy solver. Degrees run over [-depth, 0]; the incoming
// differential at -depth is outside the truncation and every verdict that
// would need it is flagged instead of decided.

namespace colax {

template <class K> class ChainComplex {
  public:
    ChainComplex() = default;
    ChainComplex(std::string name, int depth) : name_(std::move(name)), depth_(depth) {
        comps_.resize(depth + 1);
        diffs_.resize(depth + 1);
        for (int i = 0; i <= depth; ++i)
            comps_[i] = make_space(name_ + "^" + std::to_string(-i), 0);
    }

    const std::string& name() const { return name_; }
    int depth() const { return depth_; }

    bool in_range(int n) const { return n >= -depth_ && n <= 0; }
    const SpacePtr& component(int n) const { return comps_.at(check(n)); }
    void set_component(int n, SpacePtr sp) { comps_.at(check(n)) = std::move(sp); }

    // differential out of degree n (zero map when n = 0)
    const LinMap<K>& differential(int n) const { return diffs_.at(check(n)); }
    void set_differential(int n, LinMap<K> d) {
        if (n == 0)
            throw std::invalid_argument("no outgoing differential at degree 0");
        if (!d.domain()->same_basis(*component(n)) || !d.codomain()->same_basis(*component(n + 1)))
            throw std::invalid_argument("differential bases mismatch at degree " +
                                        std::to_string(n));
        diffs_.at(check(n)) = std::move(d);
    }

    void finalize() {
        for (int n = -depth_; n <= 0; ++n)
            if (diffs_[check(n)].domain() == nullptr)
                diffs_[check(n)] = LinMap<K>::zero(component(n),
                                                   n == 0 ? zero_space() : component(n + 1));
        for (int n = -depth_; n <= -2; ++n)
            if (!compose(differential(n + 1), differential(n)).is_zero_map())
                throw std::logic_error(name_ + ": d.d != 0 out of degree " + std::to_string(n));
    }

    int total_dim() const {
        int s = 0;
        for (auto& c : comps_)
            s += c->dim();
        return s;
    }

    static SpacePtr zero_space() {
        static SpacePtr z = make_space("0", 0);
        return z;
    }

  private:
    int check(int n) const {
        if (!in_range(n))
            throw std::out_of_range("degree " + std::to_string(n) + " outside [-" +
                                    std::to_string(depth_) + ",0] in " + name_);
        return -n;
    }
    std::string name_;
    int depth_ = 0;
    std::vector<SpacePtr> comps_;
    std::vector<LinMap<K>> diffs_;
};

template <class K> using ComplexPtr = std::shared_ptr<const ChainComplex<K>>;

template <class K> ComplexPtr<K> freeze(ChainComplex<K>&& C) {
    return std::make_shared<ChainComplex<K>>(std::move(C));
}

// k concentrated in degree 0.
template <class K> ComplexPtr<K> unit_complex(int depth) {
    ChainComplex<K> C("k", depth);
    C.set_component(0, make_space("k^0", {"1"}));
    C.finalize();
    return std::make_shared<ChainComplex<K>>(std::move(C));
}

// A chain map stores one component per degree of its source range. Where
// the target's truncation window ends the component maps into the zero
// space: a truncated degree is unknown, not zero, so commutation checks
// are only made where both sides stay in range.
template <class K> class ChainMap {
  public:
    ChainMap() = default;
    ChainMap(ComplexPtr<K> src, ComplexPtr<K> tgt, std::vector<LinMap<K>> comps, bool verify = true)
        : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
        if (static_cast<int>(comps_.size()) != src_->depth() + 1)
            throw std::invalid_argument("chain map: wrong number of components");
        if (verify)
            verify_commutes();
    }

    static ChainMap identity(const ComplexPtr<K>& C) {
        std::vector<LinMap<K>> comps;
        for (int i = 0; i <= C->depth(); ++i)
            comps.push_back(LinMap<K>::identity(C->component(-i)));
        return ChainMap(C, C, std::move(comps), false);
    }
    static ChainMap zero(const ComplexPtr<K>& C, const ComplexPtr<K>& D) {
        std::vector<LinMap<K>> comps;
        for (int i = 0; i <= C->depth(); ++i)
            comps.push_back(LinMap<K>::zero(C->component(-i),
                                            D->in_range(-i) ? D->component(-i)
                                                            : ChainComplex<K>::zero_space()));
        return ChainMap(C, D, std::move(comps), false);
    }

    const ComplexPtr<K>& source() const { return src_; }
    const ComplexPtr<K>& target() const { return tgt_; }
    const LinMap<K>& component(int n) const { return comps_.at(-n); }
    LinMap<K>& component(int n) { return comps_.at(-n); }

    void verify_commutes() const {
        for (int n = -src_->depth(); n <= -1; ++n) {
            if (!tgt_->in_range(n) || !tgt_->in_range(n + 1))
                continue;
            auto lhs = compose(tgt_->differential(n), component(n));
            auto rhs = compose(component(n + 1), src_->differential(n));
            if (!(lhs == rhs))
                throw std::logic_error("chain map does not commute with d at degree " +
                                       std::to_string(n) + ": " + diff_witness(lhs, rhs));
        }
    }

    friend ChainMap compose(const ChainMap& f, const ChainMap& g) {
        std::vector<LinMap<K>> comps;
        for (int i = 0; i <= g.src_->depth(); ++i) {
            int n = -i;
            if (g.tgt_->in_range(n))
                comps.push_back(compose(f.component(n), g.component(n)));
            else
                comps.push_back(LinMap<K>::zero(g.src_->component(n),
                                                f.tgt_->in_range(n)
                                                    ? f.tgt_->component(n)
                                                    : ChainComplex<K>::zero_space()));
        }
        return ChainMap(g.src_, f.tgt_, std::move(comps), false);
    }
    friend ChainMap operator+(const ChainMap& f, const ChainMap& g) {
        std::vector<LinMap<K>> comps;
        for (int i = 0; i <= f.src_->depth(); ++i)
            comps.push_back(f.component(-i) + g.component(-i));
        return ChainMap(f.src_, f.tgt_, std::move(comps), false);
    }
    friend bool operator==(const ChainMap& f, const ChainMap& g) {
        for (int i = 0; i <= f.src_->depth(); ++i)
            if (!(f.component(-i) == g.component(-i)))
                return false;
        return true;
    }

  private:
    ComplexPtr<K> src_, tgt_;
    std::vector<LinMap<K>> comps_; // index i = -degree
};

// ---------------------------------------------------------------------------
// Homology

template <class K> struct HomologyResult {
    SpacePtr space;              // chosen representatives h0, h1, ...
    LinMap<K> representatives;   // inclusion into C^n (cycle representatives)
    bool at_truncation_boundary; // true at n = -depth: Im d_{n-1} not computable
};

template <class K> HomologyResult<K> homology(const ChainComplex<K>& C, int n) {
    if (!C.in_range(n))
        throw std::out_of_range("homology degree out of range");
    auto [cyc, cyc_incl] =
        n == 0 ? std::pair<SpacePtr, LinMap<K>>{C.component(0), LinMap<K>::identity(C.component(0))}
               : kernel(C.differential(n), {"Z" + std::to_string(n), "z"});
    SubspaceReducer<K> boundaries(C.component(n)->dim());
    if (n > -C.depth()) {
        const auto& d = C.differential(n - 1);
        for (int j = 0; j < d.domain()->dim(); ++j)
            boundaries.add(d.column(j));
    }
    auto hsp = std::make_shared<FiniteBasisSpace>("H^" + std::to_string(n) + "(" + C.name() + ")");
    LinMap<K> reps(hsp, C.component(n));
    std::vector<SparseVec<K>> chosen;
    SubspaceReducer<K> mod(C.component(n)->dim());
    for (auto& b : boundaries.basis())
        mod.add(b);
    for (int j = 0; j < cyc->dim(); ++j) {
        SparseVec<K> r = mod.residue(cyc_incl.column(j));
        if (!r.empty()) {
            mod.add(r);
            chosen.push_back(cyc_incl.column(j));
        }
    }
    for (std::size_t i = 0; i < chosen.size(); ++i)
        hsp->add("h" + std::to_string(i));
    LinMap<K> incl(hsp, C.component(n));
    for (std::size_t i = 0; i < chosen.size(); ++i)
        incl.set_column(static_cast<int>(i), std::move(chosen[i]));
    return {hsp, std::move(incl), n == -C.depth()};
}

// ---------------------------------------------------------------------------
// Tensor product with Koszul signs

inline std::string graded_label(int deg, const std::string& l) {
    return std::to_string(deg) + ":" + l;
}

// Splits "(p:la)(x)(q:lb)" on the top-level separator; parentheses inside
// la/lb are balanced by construction.
inline std::pair<std::string, std::string> split_tensor_label(const std::string& label) {
    const std::string sep = "⊗";
    if (label.empty() || label.front() != '(')
        throw std::invalid_argument("not a tensor label: " + label);
    int depth = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label[i] == '(')
            ++depth;
        else if (label[i] == ')') {
            --depth;
            if (depth == 0) {
                std::string left = label.substr(1, i - 1);
                std::size_t rest = i + 1;
                if (label.compare(rest, sep.size(), sep) != 0 || label[rest + sep.size()] != '(' ||
                    label.back() != ')')
                    throw std::invalid_argument("not a tensor label: " + label);
                std::string right =
                    label.substr(rest + sep.size() + 1, label.size() - rest - sep.size() - 2);
                return {left, right};
            }
        }
    }
    throw std::invalid_argument("not a tensor label: " + label);
}

inline std::pair<int, std::string> split_graded_label(const std::string& s) {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("not a graded label: " + s);
    return {std::stoi(s.substr(0, colon)), s.substr(colon + 1)};
}

inline std::tuple<int, std::string, int, std::string>
split_graded_tensor(const std::string& label) {
    auto [l, r] = split_tensor_label(label);
    auto [p, la] = split_graded_label(l);
    auto [q, lb] = split_graded_label(r);
    return {p, la, q, lb};
}


template <class K> struct TensorComplex {
    ComplexPtr<K> total;
    ComplexPtr<K> left, right;

    struct BackRef {
        int p, ia, ib; // q = degree - p
    };
    // per -degree: block tables idx[(p_offset)][ia * dim(right^q) + ib] -> flat (-1 if capped)
    std::vector<std::map<int, std::vector<int>>> block_idx; // [-n][p]
    std::vector<std::vector<BackRef>> back;                 // [-n][flat]

    int index_of(int n, int p, int ia, int ib) const {
        auto& m = block_idx.at(-n);
        auto it = m.find(p);
        if (it == m.end())
            return -1;
        int q = n - p;
        int rd = right->component(q)->dim();
        return it->second[static_cast<std::size_t>(ia) * rd + ib];
    }
    const BackRef& unpack(int n, int flat) const { return back.at(-n).at(flat); }

    // index of x (x) y inside (L(x)R)^{p+q}, by labels (slow path)
    int index(int p, const std::string& la, int q, const std::string& lb) const {
        return total->component(p + q)->at(tensor_label(graded_label(p, la), graded_label(q, lb)));
    }
};

// (C (x) D)^n = sum_{p+q=n} C^p (x) D^q, d = d(x)1 + (-1)^p 1(x)d, within depth
// min(C.depth + D.depth, max_depth). When weight_cap >= 0, weighted basis
// pairs of total weight > cap are dropped (stable: differentials are
// weight-nonincreasing wherever weights are used).
template <class K>
TensorComplex<K> tensor_complex(const ComplexPtr<K>& C, const ComplexPtr<K>& D, int max_depth = -1,
                                int weight_cap = -1) {
    int depth = C->depth() + D->depth();
    if (max_depth >= 0)
        depth = std::min(depth, max_depth);
    ChainComplex<K> T("(" + C->name() + ")x(" + D->name() + ")", depth);
    TensorComplex<K> out;
    out.block_idx.resize(depth + 1);
    out.back.resize(depth + 1);
    for (int n = -depth; n <= 0; ++n) {
        auto sp = std::make_shared<FiniteBasisSpace>(T.name() + "^" + std::to_string(n));
        for (int p = std::max(-C->depth(), n); p <= 0; ++p) {
            int q = n - p;
            if (q < -D->depth() || q > 0)
                continue;
            const auto& A = C->component(p);
            const auto& B = D->component(q);
            if (A->dim() == 0 || B->dim() == 0)
                continue;
            auto& tbl = out.block_idx[-n][p];
            tbl.assign(static_cast<std::size_t>(A->dim()) * B->dim(), -1);
            for (int i = 0; i < A->dim(); ++i)
                for (int j = 0; j < B->dim(); ++j) {
                    bool weighted = A->weights[i] >= 0 && B->weights[j] >= 0;
                    int w = weighted ? A->weights[i] + B->weights[j] : -1;
                    if (weight_cap >= 0 && weighted && w > weight_cap)
                        continue;
                    int id = sp->add(tensor_label(graded_label(p, A->labels[i]),
                                                  graded_label(q, B->labels[j])),
                                     w);
                    tbl[static_cast<std::size_t>(i) * B->dim() + j] = id;
                    out.back[-n].push_back({p, i, j});
                }
        }
        T.set_component(n, sp);
    }
    for (int n = -depth; n <= -1; ++n) {
        LinMap<K> d(T.component(n), T.component(n + 1));
        const auto& sp = T.component(n);
        for (int col = 0; col < sp->dim(); ++col) {
            auto [p, i, j] = out.back[-n][col];
            int q = n - p;
            if (p >= -C->depth() && p <= -1) {
                const auto& dc = C->differential(p);
                auto it = out.block_idx[-(n + 1)].find(p + 1);
                if (it != out.block_idx[-(n + 1)].end()) {
                    int rd = D->component(q)->dim();
                    for (auto& [r, c] : dc.column(i)) {
                        int tr = it->second[static_cast<std::size_t>(r) * rd + j];
                        if (tr >= 0)
                            d.add_entry(tr, col, c);
                    }
                }
            }
            if (q >= -D->depth() && q <= -1) {
                const auto& dd = D->differential(q);
                K sign = (p % 2 == 0) ? K(1) : K(-1);
                auto it = out.block_idx[-(n + 1)].find(p);
                if (it != out.block_idx[-(n + 1)].end()) {
                    int rd = D->component(q + 1)->dim();
                    for (auto& [r, c] : dd.column(j)) {
                        int tr = it->second[static_cast<std::size_t>(i) * rd + r];
                        if (tr >= 0)
                            d.add_entry(tr, col, sign * c);
                    }
                }
            }
        }
        T.set_differential(n, std::move(d));
    }
    T.finalize();
    out.total = std::make_shared<ChainComplex<K>>(std::move(T));
    out.left = C;
    out.right = D;
    return out;
}

// Symmetry sigma: C(x)D -> D(x)C, x(x)y |-> (-1)^{|x||y|} y(x)x.
template <class K>
ChainMap<K> tensor_symmetry(const TensorComplex<K>& CD, const TensorComplex<K>& DC) {
    std::vector<LinMap<K>> comps(CD.total->depth() + 1);
    for (int n = -CD.total->depth(); n <= 0; ++n) {
        LinMap<K> s(CD.total->component(n), DC.total->component(n));
        const auto& sp = CD.total->component(n);
        for (int col = 0; col < sp->dim(); ++col) {
            auto& br = CD.unpack(n, col);
            int q = n - br.p;
            K sign = (br.p % 2 && q % 2) ? K(-1) : K(1);
            int tr = DC.index_of(n, q, br.ib, br.ia);
            if (tr < 0)
                throw std::logic_error("tensor_symmetry: label missing");
            s.add_entry(tr, col, sign);
        }
        comps[-n] = std::move(s);
    }
    return ChainMap<K>(CD.total, DC.total, std::move(comps));
}

// Degree-0 tensor of chain maps: (f(x)g)(x(x)y) = f(x)(x)g(y). No Koszul
// factors arise because both maps preserve degree.
template <class K>
ChainMap<K> tensor_chain_map(const ChainMap<K>& f, const ChainMap<K>& g,
                             const TensorComplex<K>& src, const TensorComplex<K>& tgt) {
    std::vector<LinMap<K>> comps;
    for (int i = 0; i <= src.total->depth(); ++i) {
        int n = -i;
        if (!tgt.total->in_range(n)) {
            comps.push_back(LinMap<K>::zero(src.total->component(n), ChainComplex<K>::zero_space()));
            continue;
        }
        LinMap<K> h(src.total->component(n), tgt.total->component(n));
        const auto& sp = src.total->component(n);
        std::map<int, K> acc;
        for (int col = 0; col < sp->dim(); ++col) {
            auto& br = src.unpack(n, col);
            int p = br.p, q = n - p;
            if (!f.target()->in_range(p) || !g.target()->in_range(q))
                continue;
            const auto& fc = f.component(p);
            const auto& gc = g.component(q);
            acc.clear();
            for (auto& [ra, ca] : fc.column(br.ia))
                for (auto& [rb, cb] : gc.column(br.ib)) {
                    int r = tgt.index_of(n, p, ra, rb);
                    if (r < 0)
                        throw std::logic_error("tensor_chain_map: target label missing");
                    auto it = acc.find(r);
                    if (it == acc.end())
                        acc.emplace(r, ca * cb);
                    else {
                        it->second = it->second + ca * cb;
                        if (is_zero(it->second))
                            acc.erase(it);
                    }
                }
            h.set_column(col, SparseVec<K>(acc.begin(), acc.end()));
        }
        comps.push_back(std::move(h));
    }
    return ChainMap<K>(src.total, tgt.total, std::move(comps), false);
}

// Per-level inverse of an iso chain map.
template <class K> ChainMap<K> invert_chain_map(const ChainMap<K>& f) {
    std::vector<LinMap<K>> comps;
    for (int i = 0; i <= f.target()->depth(); ++i) {
        int n = -i;
        const auto& c = f.component(n);
        LinMap<K> inv(f.target()->component(n), f.source()->component(n));
        for (int e = 0; e < f.target()->component(n)->dim(); ++e) {
            auto x = solve(c, SparseVec<K>{{e, K(1)}});
            if (!x)
                throw std::domain_error("invert_chain_map: not surjective at degree " +
                                        std::to_string(n));
            inv.set_column(e, std::move(*x));
        }
        comps.push_back(std::move(inv));
    }
    return ChainMap<K>(f.target(), f.source(), std::move(comps), false);
}

// ---------------------------------------------------------------------------
// Quasi-isomorphism verdicts

enum class DegreeVerdict { iso, not_iso, boundary_unreliable };

template <class K> struct QuasiIsoReport {
    std::vector<std::pair<int, DegreeVerdict>> per_degree;
    bool all_iso_in(int lo, int hi) const {
        for (auto& [n, v] : per_degree)
            if (n >= lo && n <= hi && v != DegreeVerdict::iso)
                return false;
        return true;
    }
};

template <class K>
QuasiIsoReport<K> is_quasi_iso(const ChainMap<K>& f, int lo, int hi) {
    QuasiIsoReport<K> rep;
    for (int n = lo; n <= hi; ++n) {
        auto HS = homology(*f.source(), n);
        auto HT = homology(*f.target(), n);
        if (HS.at_truncation_boundary || HT.at_truncation_boundary) {
            rep.per_degree.emplace_back(n, DegreeVerdict::boundary_unreliable);
            continue;
        }
        // induced map: push representatives through f, reduce mod boundaries
        SubspaceReducer<K> bnd(f.target()->component(n)->dim());
        if (n > -f.target()->depth()) {
            const auto& d = f.target()->differential(n - 1);
            for (int j = 0; j < d.domain()->dim(); ++j)
                bnd.add(d.column(j));
        }
        // coordinates of f(rep) in target homology basis: solve against
        // [reps | boundaries]
        int ht = HT.space->dim();
        LinMap<K> big(make_space("aug", ht + bnd.dim()), f.target()->component(n));
        for (int j = 0; j < ht; ++j)
            big.set_column(j, HT.representatives.column(j));
        {
            int j = ht;
            for (auto& b : bnd.basis())
                big.set_column(j++, b);
        }
        bool ok = true;
        LinMap<K> induced(HS.space, HT.space);
        for (int j = 0; j < HS.space->dim(); ++j) {
            auto x = solve(big, f.component(n).apply(HS.representatives.column(j)));
            if (!x) {
                ok = false;
                break;
            }
            for (auto& [i, c] : *x)
                if (i < ht)
                    induced.add_entry(i, j, c);
        }
        bool iso = ok && HS.space->dim() == HT.space->dim() && rank(induced) == HT.space->dim();
        rep.per_degree.emplace_back(n, iso ? DegreeVerdict::iso : DegreeVerdict::not_iso);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Chain homotopy solver: find H with f - g = dH + Hd.

enum class HomotopyStatus { found, found_ignoring_boundary, none };

template <class K> struct Homotopy {
    HomotopyStatus status = HomotopyStatus::none;
    // H_n : C^n -> D^{n-1}, stored at index -n (absent where target leaves range)
    std::vector<LinMap<K>> comps;
};

template <class K>
Homotopy<K> find_chain_homotopy(const ChainMap<K>& f, const ChainMap<K>& g,
                                bool allow_boundary_relaxation = true) {
    const auto& C = f.source();
    const auto& D = f.target();
    int depth = C->depth();
    // variable layout: for each n with D in range at n-1: dim C^n * dim D^{n-1}
    std::vector<int> var_base(depth + 1, -1);
    int nvars = 0;
    for (int n = -depth; n <= 0; ++n) {
        if (!D->in_range(n - 1))
            continue;
        var_base[-n] = nvars;
        nvars += C->component(n)->dim() * D->component(n - 1)->dim();
    }
    auto var_of = [&](int n, int row, int col) {
        return var_base[-n] + col * D->component(n - 1)->dim() + row;
    };

    auto build = [&](bool skip_boundary) -> std::optional<std::vector<LinMap<K>>> {
        std::vector<std::map<int, K>> rows;
        std::vector<K> rhs;
        for (int n = -depth; n <= 0; ++n) {
            if (skip_boundary && n == -depth)
                continue;
            LinMap<K> delta = f.component(n) - g.component(n);
            int rc = D->in_range(n) ? D->component(n)->dim() : 0;
            int cc = C->component(n)->dim();
            for (int col = 0; col < cc; ++col)
                for (int row = 0; row < rc; ++row) {
                    std::map<int, K> eq;
                    // d_{n-1} H_n contribution
                    if (D->in_range(n - 1)) {
                        const auto& d = D->differential(n - 1);
                        for (int m = 0; m < D->component(n - 1)->dim(); ++m) {
                            K c = d.entry(row, m);
                            if (!is_zero(c))
                                eq[var_of(n, m, col)] = c;
                        }
                    }
                    // H_{n+1} d_n contribution
                    if (n < 0 && D->in_range(n)) {
                        const auto& d = C->differential(n);
                        for (auto& [m, c] : d.column(col)) {
                            auto key = var_of(n + 1, row, m);
                            auto it = eq.find(key);
                            if (it == eq.end())
                                eq[key] = c;
                            else {
                                it->second = it->second + c;
                                if (is_zero(it->second))
                                    eq.erase(it);
                            }
                        }
                    }
                    K target = delta.entry(row, col);
                    if (eq.empty() && is_zero(target))
                        continue;
                    if (!is_zero(target))
                        eq[nvars] = target; // augmented column
                    rows.push_back(std::move(eq));
                }
        }
        Rref<K> R = rref_rows<K>(std::move(rows), nvars + 1);
        for (int r = 0; r < R.rank(); ++r)
            if (R.pivot_col[r] == nvars)
                return std::nullopt;
        std::vector<K> sol(nvars, K(0));
        for (int r = 0; r < R.rank(); ++r) {
            auto it = R.rows[r].find(nvars);
            if (it != R.rows[r].end())
                sol[R.pivot_col[r]] = it->second;
        }
        std::vector<LinMap<K>> comps(depth + 1);
        for (int n = -depth; n <= 0; ++n) {
            if (var_base[-n] < 0)
                continue;
            LinMap<K> H(C->component(n), D->component(n - 1));
            for (int col = 0; col < C->component(n)->dim(); ++col)
                for (int row = 0; row < D->component(n - 1)->dim(); ++row) {
                    K c = sol[var_of(n, row, col)];
                    if (!is_zero(c))
                        H.add_entry(row, col, c);
                }
            comps[-n] = std::move(H);
        }
        return comps;
    };

    Homotopy<K> out;
    if (auto comps = build(false)) {
        out.status = HomotopyStatus::found;
        out.comps = std::move(*comps);
        return out;
    }
    if (allow_boundary_relaxation) {
        if (auto comps = build(true)) {
            out.status = HomotopyStatus::found_ignoring_boundary;
            out.comps = std::move(*comps);
            return out;
        }
    }
    return out;
}

// Substitution check: f - g == dH + Hd on all degrees above the boundary.
template <class K>
bool homotopy_verifies(const ChainMap<K>& f, const ChainMap<K>& g, const Homotopy<K>& H,
                       bool include_boundary = true) {
    const auto& C = f.source();
    const auto& D = f.target();
    for (int n = -C->depth() + (include_boundary ? 0 : 1); n <= 0; ++n) {
        if (!D->in_range(n)) {
            if (!(f.component(n) - g.component(n)).is_zero_map())
                return false;
            continue;
        }
        LinMap<K> acc = LinMap<K>::zero(C->component(n), D->component(n));
        if (D->in_range(n - 1) && H.comps[-n].domain())
            acc = acc + compose(D->differential(n - 1), H.comps[-n]);
        if (n < 0 && H.comps[-(n + 1)].domain() && D->in_range(n))
            acc = acc + compose(H.comps[-(n + 1)], C->differential(n));
        if (!(acc == f.component(n) - g.component(n)))
            return false;
    }
    return true;
}

} // namespace colax
