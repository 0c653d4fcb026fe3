#pragma once
#include "basis.hpp"
#include "field.hpp"
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

// Sparse linear maps between labeled finite bases, plus the exact
// elimination kernel everything else stands on: kernel, image, rank,
// solve, tensor of maps. All arithmetic is exact; echelon forms are the
// unique RREF for the fixed basis order, so every derived basis
// (kernels, images, quotients) is reproducible across runs.

namespace colax {

template <class K> using SparseVec = std::vector<std::pair<int, K>>; // sorted by index

template <class K> void sort_by_index(SparseVec<K>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

template <class K> void vec_add_scaled(SparseVec<K>& acc, const SparseVec<K>& v, const K& c) {
    if (is_zero(c))
        return;
    SparseVec<K> out;
    out.reserve(acc.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < v.size()) {
        if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first))
            out.push_back(acc[i++]);
        else if (i == acc.size() || v[j].first < acc[i].first) {
            out.emplace_back(v[j].first, c * v[j].second);
            ++j;
        } else {
            K s = acc[i].second + c * v[j].second;
            if (!is_zero(s))
                out.emplace_back(acc[i].first, s);
            ++i, ++j;
        }
    }
    acc = std::move(out);
}

template <class K> class LinMap {
  public:
    LinMap() = default;
    LinMap(SpacePtr dom, SpacePtr cod)
        : dom_(std::move(dom)), cod_(std::move(cod)), cols_(dom_->dim()) {}

    static LinMap identity(const SpacePtr& sp) {
        LinMap f(sp, sp);
        for (int i = 0; i < sp->dim(); ++i)
            f.cols_[i].emplace_back(i, K(1));
        return f;
    }
    static LinMap zero(const SpacePtr& dom, const SpacePtr& cod) { return LinMap(dom, cod); }

    const SpacePtr& domain() const { return dom_; }
    const SpacePtr& codomain() const { return cod_; }

    void add_entry(int row, int col, const K& c) {
        if (is_zero(c))
            return;
        if (row < 0 || row >= cod_->dim() || col < 0 || col >= dom_->dim())
            throw std::out_of_range("LinMap entry outside declared bases");
        SparseVec<K> unit{{row, c}};
        vec_add_scaled(cols_[col], unit, K(1));
    }
    void add_entry(const std::string& row, const std::string& col, const K& c) {
        add_entry(cod_->at(row), dom_->at(col), c);
    }

    const SparseVec<K>& column(int j) const { return cols_[j]; }
    void set_column(int j, SparseVec<K> v) { cols_[j] = std::move(v); }

    K entry(int row, int col) const {
        for (auto& [r, c] : cols_[col])
            if (r == row)
                return c;
        return K(0);
    }

    bool is_zero_map() const {
        for (auto& c : cols_)
            if (!c.empty())
                return false;
        return true;
    }

    SparseVec<K> apply(const SparseVec<K>& v) const {
        if (v.size() == 1 && v[0].second == K(1))
            return cols_[v[0].first];
        std::map<int, K> acc;
        for (auto& [j, c] : v)
            for (auto& [r, e] : cols_[j]) {
                auto it = acc.find(r);
                if (it == acc.end())
                    acc.emplace(r, c * e);
                else {
                    it->second = it->second + c * e;
                    if (is_zero(it->second))
                        acc.erase(it);
                }
            }
        return SparseVec<K>(acc.begin(), acc.end());
    }

    friend LinMap compose(const LinMap& f, const LinMap& g) { // f after g
        if (!g.cod_->same_basis(*f.dom_))
            throw std::invalid_argument("compose: basis mismatch " + g.cod_->name + " vs " +
                                        f.dom_->name);
        LinMap h(g.dom_, f.cod_);
        for (int j = 0; j < g.dom_->dim(); ++j)
            h.cols_[j] = f.apply(g.cols_[j]);
        return h;
    }

    friend LinMap operator+(const LinMap& f, const LinMap& g) {
        require_parallel(f, g);
        LinMap h(f.dom_, f.cod_);
        for (int j = 0; j < f.dom_->dim(); ++j) {
            h.cols_[j] = f.cols_[j];
            vec_add_scaled(h.cols_[j], g.cols_[j], K(1));
        }
        return h;
    }
    friend LinMap operator-(const LinMap& f, const LinMap& g) {
        require_parallel(f, g);
        LinMap h(f.dom_, f.cod_);
        for (int j = 0; j < f.dom_->dim(); ++j) {
            h.cols_[j] = f.cols_[j];
            vec_add_scaled(h.cols_[j], g.cols_[j], K(-1));
        }
        return h;
    }
    LinMap scaled(const K& c) const {
        LinMap h(dom_, cod_);
        for (int j = 0; j < dom_->dim(); ++j)
            vec_add_scaled(h.cols_[j], cols_[j], c);
        return h;
    }

    friend bool operator==(const LinMap& f, const LinMap& g) {
        if (!f.dom_->same_basis(*g.dom_) || !f.cod_->same_basis(*g.cod_))
            return false;
        return f.cols_ == g.cols_;
    }

    // First nonzero column of f-g, as a witness for failed equalities.
    friend std::string diff_witness(const LinMap& f, const LinMap& g) {
        LinMap d = f - g;
        for (int j = 0; j < d.dom_->dim(); ++j)
            if (!d.cols_[j].empty()) {
                std::ostringstream os;
                os << "on '" << d.dom_->labels[j] << "':";
                for (auto& [r, c] : d.cols_[j])
                    os << " " << FieldTraits<K>::to_string(c) << "*'" << d.cod_->labels[r] << "'";
                return os.str();
            }
        return "";
    }

    std::string to_string() const {
        std::ostringstream os;
        os << dom_->name << " -> " << cod_->name << " [" << cod_->dim() << "x" << dom_->dim()
           << "]\n";
        for (int j = 0; j < dom_->dim(); ++j) {
            if (cols_[j].empty())
                continue;
            os << "  " << dom_->labels[j] << " |->";
            for (auto& [r, c] : cols_[j])
                os << " + (" << FieldTraits<K>::to_string(c) << ")" << cod_->labels[r];
            os << "\n";
        }
        return os.str();
    }

  private:
    static void require_parallel(const LinMap& f, const LinMap& g) {
        if (!f.dom_->same_basis(*g.dom_) || !f.cod_->same_basis(*g.cod_))
            throw std::invalid_argument("parallel maps required");
    }
    SpacePtr dom_, cod_;
    std::vector<SparseVec<K>> cols_;
};

// ---------------------------------------------------------------------------
// Row-echelon engine. Rows are sparse; the result is the unique RREF for the
// given column order.

template <class K> struct Rref {
    std::vector<std::map<int, K>> rows; // reduced rows, in pivot-column order
    std::vector<int> pivot_col;         // per reduced row
    std::vector<int> pivot_row_of_col;  // -1 if the column is free
    int ncols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
    bool is_pivot(int col) const { return pivot_row_of_col[col] >= 0; }
};

template <class K>
Rref<K> rref_rows(std::vector<std::map<int, K>> rows, int ncols) {
    Rref<K> R;
    R.ncols = ncols;
    R.pivot_row_of_col.assign(ncols, -1);
    std::vector<bool> used(rows.size(), false);
    std::vector<int> pivot_source; // original row index per pivot column, in order
    for (int c = 0; c < ncols; ++c) {
        int pr = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r])
                continue;
            auto it = rows[r].begin();
            if (it != rows[r].end() && it->first == c) {
                pr = static_cast<int>(r);
                break;
            }
        }
        if (pr < 0)
            continue;
        used[pr] = true;
        K inv = K(1) / rows[pr].at(c);
        for (auto& [j, v] : rows[pr])
            v = v * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pr)
                continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end())
                continue;
            K factor = it->second;
            for (auto& [j, v] : rows[pr]) {
                auto jt = rows[r].find(j);
                if (jt == rows[r].end()) {
                    K nv = -factor * v;
                    if (!is_zero(nv))
                        rows[r].emplace(j, nv);
                } else {
                    jt->second = jt->second - factor * v;
                    if (is_zero(jt->second))
                        rows[r].erase(jt);
                }
            }
        }
        R.pivot_row_of_col[c] = static_cast<int>(pivot_source.size());
        R.pivot_col.push_back(c);
        pivot_source.push_back(pr);
    }
    R.rows.reserve(pivot_source.size());
    for (int src : pivot_source)
        R.rows.push_back(std::move(rows[src]));
    return R;
}

template <class K> std::vector<std::map<int, K>> rows_of(const LinMap<K>& f) {
    std::vector<std::map<int, K>> rows(f.codomain()->dim());
    for (int j = 0; j < f.domain()->dim(); ++j)
        for (auto& [r, c] : f.column(j))
            rows[r][j] = c;
    return rows;
}

template <class K> int rank(const LinMap<K>& f) {
    return rref_rows<K>(rows_of(f), f.domain()->dim()).rank();
}

struct SubspaceNaming {
    std::string space_name;
    std::string stem;
};

// Kernel as a labeled space plus its inclusion. Basis vectors follow the
// leading-one convention on free columns of the RREF.
template <class K>
std::pair<SpacePtr, LinMap<K>> kernel(const LinMap<K>& f, const SubspaceNaming& nm) {
    Rref<K> R = rref_rows<K>(rows_of(f), f.domain()->dim());
    const auto& dom = f.domain();
    std::vector<int> free_cols;
    for (int c = 0; c < dom->dim(); ++c)
        if (!R.is_pivot(c))
            free_cols.push_back(c);
    auto sp = std::make_shared<FiniteBasisSpace>(nm.space_name);
    for (std::size_t i = 0; i < free_cols.size(); ++i)
        sp->add(nm.stem + std::to_string(i), dom->weights[free_cols[i]]);
    LinMap<K> incl(sp, dom);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        int fc = free_cols[i];
        SparseVec<K> v{{fc, K(1)}};
        for (std::size_t r = 0; r < R.rows.size(); ++r) {
            auto it = R.rows[r].find(fc);
            if (it != R.rows[r].end())
                vec_add_scaled(v, SparseVec<K>{{R.pivot_col[r], K(-it->second)}}, K(1));
        }
        sort_by_index(v);
        incl.set_column(static_cast<int>(i), std::move(v));
    }
    return {sp, incl};
}

// Image as a labeled space plus its inclusion (echelon basis of the column
// space, i.e. RREF rows of the transpose).
template <class K>
std::pair<SpacePtr, LinMap<K>> image(const LinMap<K>& f, const SubspaceNaming& nm) {
    std::vector<std::map<int, K>> rows;
    rows.reserve(f.domain()->dim());
    for (int j = 0; j < f.domain()->dim(); ++j) {
        if (f.column(j).empty())
            continue;
        std::map<int, K> r;
        for (auto& [i, c] : f.column(j))
            r[i] = c;
        rows.push_back(std::move(r));
    }
    Rref<K> R = rref_rows<K>(std::move(rows), f.codomain()->dim());
    auto sp = std::make_shared<FiniteBasisSpace>(nm.space_name);
    for (int i = 0; i < R.rank(); ++i)
        sp->add(nm.stem + std::to_string(i));
    LinMap<K> incl(sp, f.codomain());
    for (int i = 0; i < R.rank(); ++i) {
        SparseVec<K> v(R.rows[i].begin(), R.rows[i].end());
        incl.set_column(i, std::move(v));
    }
    return {sp, incl};
}

// Solve f x = b. Returns empty optional when the system is inconsistent.
template <class K>
std::optional<SparseVec<K>> solve(const LinMap<K>& f, const SparseVec<K>& b) {
    int n = f.domain()->dim();
    auto rows = rows_of(f);
    for (auto& [i, c] : b)
        rows[i][n] = c; // augmented column
    Rref<K> R = rref_rows<K>(std::move(rows), n + 1);
    SparseVec<K> x;
    for (int r = 0; r < R.rank(); ++r) {
        if (R.pivot_col[r] == n)
            return std::nullopt; // leading one in the augmented column
        auto it = R.rows[r].find(n);
        if (it != R.rows[r].end())
            x.emplace_back(R.pivot_col[r], it->second);
    }
    sort_by_index(x);
    return x;
}

// Given an inclusion incl: S -> V with independent columns and a map
// f: A -> V landing in the span of incl, produce g with incl.g = f.
// Throws if some column of f is outside the span.
template <class K>
LinMap<K> factor_through(const LinMap<K>& incl, const LinMap<K>& f) {
    if (!incl.codomain()->same_basis(*f.codomain()))
        throw std::invalid_argument("factor_through: codomain mismatch");
    int n = incl.domain()->dim();
    int m = f.domain()->dim();
    auto rows = rows_of(incl);
    for (int j = 0; j < m; ++j)
        for (auto& [i, c] : f.column(j))
            rows[i][n + j] = c;
    Rref<K> R = rref_rows<K>(std::move(rows), n + m);
    LinMap<K> g(f.domain(), incl.domain());
    for (int r = 0; r < R.rank(); ++r) {
        if (R.pivot_col[r] >= n)
            throw std::domain_error("factor_through: column outside subspace (witness '" +
                                    f.domain()->labels[R.pivot_col[r] - n] + "')");
        for (auto it = R.rows[r].upper_bound(n - 1); it != R.rows[r].end(); ++it)
            g.add_entry(R.pivot_col[r], it->first - n, it->second);
    }
    return g;
}

// True iff every column of f lies in the span of the columns of incl.
template <class K> bool lands_in(const LinMap<K>& incl, const LinMap<K>& f) {
    int n = incl.domain()->dim();
    int m = f.domain()->dim();
    auto rows = rows_of(incl);
    for (int j = 0; j < m; ++j)
        for (auto& [i, c] : f.column(j))
            rows[i][n + j] = c;
    Rref<K> R = rref_rows<K>(std::move(rows), n + m);
    for (int r = 0; r < R.rank(); ++r)
        if (R.pivot_col[r] >= n)
            return false;
    return true;
}

// Incremental echelon span; used for quotient bases, ideal closures and
// membership tests. Vectors live in a fixed ambient dimension.
template <class K> class SubspaceReducer {
  public:
    explicit SubspaceReducer(int ambient) : ambient_(ambient) {}

    // Fully reduce v against the rows held so far.
    SparseVec<K> residue(SparseVec<K> v) const {
        for (auto& [lead, row] : rows_) {
            K c = coeff_at(v, lead);
            if (!is_zero(c))
                vec_add_scaled(v, row, K(-c));
        }
        return v;
    }

    // Insert v's residue if nonzero; returns true when the span grew.
    bool add(const SparseVec<K>& v) {
        SparseVec<K> r = residue(v);
        if (r.empty())
            return false;
        K inv = K(1) / r.front().second;
        for (auto& [i, c] : r)
            c = c * inv;
        int lead = r.front().first;
        for (auto& [l, row] : rows_) {
            K c = coeff_at(row, lead);
            if (!is_zero(c))
                vec_add_scaled(row, r, K(-c));
        }
        rows_.emplace_back(lead, std::move(r));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    bool contains(const SparseVec<K>& v) const { return residue(v).empty(); }
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }

    std::vector<SparseVec<K>> basis() const {
        std::vector<SparseVec<K>> out;
        for (auto& [l, row] : rows_)
            out.push_back(row);
        return out;
    }

  private:
    static K coeff_at(const SparseVec<K>& v, int i) {
        for (auto& [j, c] : v)
            if (j == i)
                return c;
        return K(0);
    }
    int ambient_;
    std::vector<std::pair<int, SparseVec<K>>> rows_; // (lead index, echelon row)
};

// Kronecker product on labeled bases; pure sign-free pairing, the callers
// supply any Koszul signs.
template <class K>
LinMap<K> tensor_map(const LinMap<K>& f, const LinMap<K>& g, const SpacePtr& dom,
                     const SpacePtr& cod) {
    LinMap<K> h(dom, cod);
    for (int ja = 0; ja < f.domain()->dim(); ++ja)
        for (int jb = 0; jb < g.domain()->dim(); ++jb) {
            int j = dom->at(tensor_label(f.domain()->labels[ja], g.domain()->labels[jb]));
            SparseVec<K> col;
            for (auto& [ra, ca] : f.column(ja))
                for (auto& [rb, cb] : g.column(jb)) {
                    int r = cod->at(tensor_label(f.codomain()->labels[ra], g.codomain()->labels[rb]));
                    vec_add_scaled(col, SparseVec<K>{{r, ca * cb}}, K(1));
                }
            h.set_column(j, std::move(col));
        }
    return h;
}

template <class K> LinMap<K> tensor_map(const LinMap<K>& f, const LinMap<K>& g) {
    return tensor_map(f, g, tensor_space(f.domain(), g.domain()),
                      tensor_space(f.codomain(), g.codomain()));
}

} // namespace colax
