#pragma once

#include <vector>

#include "qhyper/ncalg.hpp"

namespace qhyper {

// Per-axis dimensions (n_1, ..., n_m) of a hypermatrix.
struct HyperShape {
    std::vector<int> dims;

    explicit HyperShape(std::vector<int> d) : dims(std::move(d)) {
        if (dims.empty()) throw domain_error("HyperShape: needs at least one axis");
        for (int n : dims)
            if (n < 1) throw domain_error("HyperShape: dimensions must be positive");
    }
    static HyperShape cubical(int n, int m) {
        return HyperShape(std::vector<int>(static_cast<size_t>(m), n));
    }

    int axes() const { return static_cast<int>(dims.size()); }
    int dim(int axis) const;  // 1-based axis
    bool is_cubical() const;
    long cell_count() const;

    friend bool operator==(const HyperShape&, const HyperShape&) = default;
};

// The generator family a_{i1...im} of one quantum hypermatrix algebra,
// embedded in a tensor component.
struct HyperAlgebra {
    HyperShape shape;
    int component = 0;
    char name = 'a';

    GenId gen(const std::vector<int>& index) const;
    std::vector<GenId> all_generators() const;
};

// Every multi-index of the shape, in lexicographic order.
std::vector<std::vector<int>> all_indices(const HyperShape& shape);
// Lexicographic multi-indices of the shape with axis k removed.
std::vector<std::vector<int>> all_indices_omitting(const HyperShape& shape, int axis);

// k-th realignment: multi-index <-> (row i on axis k, remaining tuple alpha
// in axis order).  Throws on out-of-range input.
std::pair<int, std::vector<int>> realign_index(const HyperShape& shape, int axis,
                                               const std::vector<int>& index);
std::vector<int> realign_index_inverse(const HyperShape& shape, int axis, int row,
                                       const std::vector<int>& alpha);
// Lexicographic rank (0-based) of alpha within the axis-k-omitted index range.
long alpha_rank(const HyperShape& shape, int axis, const std::vector<int>& alpha);

} // namespace qhyper
