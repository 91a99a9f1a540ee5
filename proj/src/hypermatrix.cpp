#include "qhyper/hypermatrix.hpp"

namespace qhyper {

int HyperShape::dim(int axis) const {
    if (axis < 1 || axis > axes()) throw domain_error("HyperShape: axis out of range");
    return dims[static_cast<size_t>(axis - 1)];
}

bool HyperShape::is_cubical() const {
    for (int n : dims)
        if (n != dims[0]) return false;
    return true;
}

long HyperShape::cell_count() const {
    long c = 1;
    for (int n : dims) c *= n;
    return c;
}

GenId HyperAlgebra::gen(const std::vector<int>& index) const {
    if (static_cast<int>(index.size()) != shape.axes())
        throw domain_error("HyperAlgebra: index arity mismatch");
    for (int t = 0; t < shape.axes(); ++t) {
        int v = index[static_cast<size_t>(t)];
        if (v < 1 || v > shape.dim(t + 1)) throw domain_error("HyperAlgebra: index out of range");
    }
    return GenId{component, name, index};
}

std::vector<GenId> HyperAlgebra::all_generators() const {
    std::vector<GenId> out;
    for (auto& ix : all_indices(shape)) out.push_back(GenId{component, name, ix});
    return out;
}

std::vector<std::vector<int>> all_indices(const HyperShape& shape) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(shape.axes()), 1);
    for (;;) {
        out.push_back(cur);
        int t = shape.axes() - 1;
        while (t >= 0) {
            if (++cur[static_cast<size_t>(t)] <= shape.dim(t + 1)) break;
            cur[static_cast<size_t>(t)] = 1;
            --t;
        }
        if (t < 0) break;
    }
    return out;
}

std::vector<std::vector<int>> all_indices_omitting(const HyperShape& shape, int axis) {
    if (axis < 1 || axis > shape.axes()) throw domain_error("all_indices_omitting: bad axis");
    std::vector<int> dims;
    for (int t = 1; t <= shape.axes(); ++t)
        if (t != axis) dims.push_back(shape.dim(t));
    if (dims.empty()) return {std::vector<int>{}};
    return all_indices(HyperShape(dims));
}

std::pair<int, std::vector<int>> realign_index(const HyperShape& shape, int axis,
                                               const std::vector<int>& index) {
    if (axis < 1 || axis > shape.axes()) throw domain_error("realign_index: bad axis");
    if (static_cast<int>(index.size()) != shape.axes())
        throw domain_error("realign_index: index arity mismatch");
    for (int t = 1; t <= shape.axes(); ++t) {
        int v = index[static_cast<size_t>(t - 1)];
        if (v < 1 || v > shape.dim(t)) throw domain_error("realign_index: index out of range");
    }
    std::vector<int> alpha;
    for (int t = 1; t <= shape.axes(); ++t)
        if (t != axis) alpha.push_back(index[static_cast<size_t>(t - 1)]);
    return {index[static_cast<size_t>(axis - 1)], alpha};
}

std::vector<int> realign_index_inverse(const HyperShape& shape, int axis, int row,
                                       const std::vector<int>& alpha) {
    if (axis < 1 || axis > shape.axes()) throw domain_error("realign_index_inverse: bad axis");
    if (static_cast<int>(alpha.size()) != shape.axes() - 1)
        throw domain_error("realign_index_inverse: alpha arity mismatch");
    if (row < 1 || row > shape.dim(axis)) throw domain_error("realign_index_inverse: row out of range");
    std::vector<int> index;
    size_t a = 0;
    for (int t = 1; t <= shape.axes(); ++t) {
        if (t == axis) {
            index.push_back(row);
        } else {
            int v = alpha[a++];
            if (v < 1 || v > shape.dim(t)) throw domain_error("realign_index_inverse: alpha out of range");
            index.push_back(v);
        }
    }
    return index;
}

long alpha_rank(const HyperShape& shape, int axis, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != shape.axes() - 1)
        throw domain_error("alpha_rank: arity mismatch");
    long rank = 0;
    size_t a = 0;
    for (int t = 1; t <= shape.axes(); ++t) {
        if (t == axis) continue;
        rank = rank * shape.dim(t) + (alpha[a] - 1);
        ++a;
    }
    return rank;
}

} // namespace qhyper
