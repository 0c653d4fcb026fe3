#pragma once
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

// Labeled finite bases. A label is an opaque string; ordering is the
// construction order, which every constructor in this library derives
// deterministically from its inputs. Labels may carry a weight (leaf count
// of a nested word); -1 means unweighted.

namespace colax {

// Index structure for tensor-product bases: (i, j) <-> flat index, with -1
// marking pairs dropped by a weight cap.
struct PairIndex {
    int left_dim = 0, right_dim = 0;
    std::vector<int> idx;                  // size left*right
    std::vector<std::pair<int, int>> unpair; // per flat index
    int at(int i, int j) const { return idx[static_cast<std::size_t>(i) * right_dim + j]; }
};

struct FiniteBasisSpace {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> weights; // parallel to labels; -1 = unweighted
    std::shared_ptr<const PairIndex> pairing; // set on tensor-product bases

    FiniteBasisSpace() = default;
    explicit FiniteBasisSpace(std::string nm) : name(std::move(nm)) {}

    int add(const std::string& label, int weight = -1) {
        auto [it, fresh] = index_.emplace(label, static_cast<int>(labels.size()));
        if (!fresh)
            throw std::logic_error("duplicate basis label '" + label + "' in " + name);
        labels.push_back(label);
        weights.push_back(weight);
        return it->second;
    }

    int dim() const { return static_cast<int>(labels.size()); }

    int find(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? -1 : it->second;
    }

    int at(const std::string& label) const {
        int i = find(label);
        if (i < 0)
            throw std::out_of_range("label '" + label + "' not in basis " + name);
        return i;
    }

    bool same_basis(const FiniteBasisSpace& o) const { return labels == o.labels; }

  private:
    std::unordered_map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const FiniteBasisSpace>;

inline SpacePtr make_space(std::string name, std::vector<std::string> labels,
                           std::vector<int> weights = {}) {
    auto sp = std::make_shared<FiniteBasisSpace>(std::move(name));
    if (weights.empty())
        weights.assign(labels.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        sp->add(labels[i], weights[i]);
    return sp;
}

inline SpacePtr make_space(std::string name, int dim, const std::string& stem = "e") {
    auto sp = std::make_shared<FiniteBasisSpace>(std::move(name));
    for (int i = 0; i < dim; ++i)
        sp->add(stem + std::to_string(i));
    return sp;
}

inline std::string tensor_label(const std::string& a, const std::string& b) {
    return "(" + a + ")⊗(" + b + ")";
}

// Tensor product basis, lexicographic in (left, right) construction order.
// weight_cap >= 0 drops weighted pairs above the cap.
inline SpacePtr tensor_space(const SpacePtr& a, const SpacePtr& b, int weight_cap = -1) {
    auto sp = std::make_shared<FiniteBasisSpace>("(" + a->name + ")x(" + b->name + ")");
    auto pi = std::make_shared<PairIndex>();
    pi->left_dim = a->dim();
    pi->right_dim = b->dim();
    pi->idx.assign(static_cast<std::size_t>(a->dim()) * b->dim(), -1);
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < b->dim(); ++j) {
            bool weighted = a->weights[i] >= 0 && b->weights[j] >= 0;
            int w = weighted ? a->weights[i] + b->weights[j] : -1;
            if (weight_cap >= 0 && weighted && w > weight_cap)
                continue;
            int id = sp->add(tensor_label(a->labels[i], b->labels[j]), w);
            pi->idx[static_cast<std::size_t>(i) * b->dim() + j] = id;
            pi->unpair.emplace_back(i, j);
        }
    sp->pairing = pi;
    return sp;
}

} // namespace colax
