#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gmidas/timeseries.hpp"

namespace gmidas {

struct GroupConfig {
    std::string name;
    std::vector<std::string> members;
};

// Group config grammar: one `name: member member ...` per line, '#' comments.
std::vector<GroupConfig> parse_group_config(const std::string& text);

// The bundled default baskets (six regions plus per-crop producer/importer/
// exporter top-10 combinations).
const std::string& default_group_config_text();

struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<double> values;  // row-major dim x dim
    std::size_t dim = 0;

    double at(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
};

struct Eigenportfolio {
    std::vector<double> eigenvalues;     // descending
    std::vector<double> leading_vector;  // u1, sign fixed so its sum is > 0
    std::vector<double> weights;         // u1 / sum(u1)
    MonthlySeries index;
};

// Symmetric eigen-decomposition by cyclic Jacobi rotations. vectors[k*dim+i]
// is component i of the k-th eigenvector; pairs sorted by descending value.
struct SymEigen {
    std::vector<double> values;
    std::vector<double> vectors;  // row k = eigenvector k
    std::size_t dim = 0;
};
SymEigen jacobi_eigen(std::span<const double> matrix, std::size_t dim);

// Zero mean, unit population standard deviation.
MonthlySeries standardize(const MonthlySeries& series);

// Restrict every series to the common month range (intersection).
std::vector<MonthlySeries> intersect_months(std::span<const MonthlySeries> panel);

// c_xy = <gpre_x * gpre_y> over standardized series sharing one month range.
CorrelationMatrix correlation_matrix(std::span<const MonthlySeries> panel);

// Eigenvalues and the sign-fixed leading eigenvector; weights/index unfilled.
Eigenportfolio eigen_decompose(const CorrelationMatrix& corr);

// Complete the eigenportfolio: index(t) = sum_n u1_n RAW_n(t) / sum_n u1_n.
Eigenportfolio eigenportfolio_index(std::span<const MonthlySeries> raw_panel,
                                    Eigenportfolio decomposition);

}  // namespace gmidas
