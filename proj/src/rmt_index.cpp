#include "gmidas/rmt_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gmidas/errors.hpp"

namespace gmidas {

std::vector<GroupConfig> parse_group_config(const std::string& text) {
    std::vector<GroupConfig> groups;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("group config line " + std::to_string(lineno) +
                                        ": expected 'name: member ...'");
        }
        GroupConfig g;
        {
            std::istringstream name_in(line.substr(0, colon));
            name_in >> g.name;
            std::string extra;
            if (g.name.empty() || (name_in >> extra)) {
                throw std::invalid_argument("group config line " + std::to_string(lineno) +
                                            ": bad group name");
            }
        }
        std::istringstream members_in(line.substr(colon + 1));
        std::string token;
        while (members_in >> token) {
            while (!token.empty() && token.back() == ',') token.pop_back();
            if (!token.empty()) g.members.push_back(token);
        }
        if (g.members.size() < 2) {
            throw std::invalid_argument("group '" + g.name +
                                        "' (line " + std::to_string(lineno) +
                                        ") needs at least 2 members");
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

const std::string& default_group_config_text() {
    static const std::string text =
        "# Default composite-index baskets: six geographic regions and the\n"
        "# top-10 producer/importer/exporter combinations per staple crop.\n"
        "GPR_NA: GPR_CAN GPR_MEX GPR_USA\n"
        "GPR_SA: GPR_ARG GPR_BRA GPR_CHL GPR_COL GPR_PER GPR_VEN\n"
        "GPR_ENE: GPR_DNK GPR_FIN GPR_HUN GPR_NOR GPR_POL GPR_RUS GPR_SWE GPR_UKR GPR_GBR\n"
        "GPR_ESW: GPR_BEL GPR_FRA GPR_DEU GPR_ITA GPR_NLD GPR_PRT GPR_ESP GPR_CHE\n"
        "GPR_MEA: GPR_EGY GPR_ISR GPR_SAU GPR_ZAF GPR_TUN GPR_TUR\n"
        "GPR_AO: GPR_AUS GPR_CHN GPR_HKG GPR_JPN GPR_KOR GPR_PHL GPR_TWN GPR_IDN GPR_IND "
        "GPR_MYS GPR_THA GPR_VNM\n"
        "GPR_wh_prod: GPR_CHN GPR_IND GPR_RUS GPR_USA GPR_FRA GPR_CAN GPR_DEU GPR_AUS "
        "GPR_UKR GPR_TUR\n"
        "GPR_wh_imp: GPR_USA GPR_CHN GPR_BRA GPR_ARG GPR_MEX GPR_IND GPR_UKR GPR_IDN "
        "GPR_FRA GPR_ZAF\n"
        "GPR_wh_exp: GPR_USA GPR_BRA GPR_ARG GPR_CHN GPR_IND GPR_CAN GPR_UKR GPR_RUS "
        "GPR_IDN GPR_ITA\n"
        "GPR_mz_prod: GPR_CHN GPR_IND GPR_IDN GPR_VNM GPR_THA GPR_PHL GPR_BRA GPR_JPN "
        "GPR_USA GPR_KOR\n"
        "GPR_mz_imp: GPR_EGY GPR_ITA GPR_IDN GPR_BRA GPR_JPN GPR_ESP GPR_NLD GPR_CHN "
        "GPR_KOR GPR_MEX\n"
        "GPR_mz_exp: GPR_JPN GPR_MEX GPR_KOR GPR_CHN GPR_EGY GPR_ESP GPR_TWN GPR_VNM "
        "GPR_NLD GPR_COL\n"
        "GPR_sb_prod: GPR_CHN GPR_NLD GPR_MEX GPR_JPN GPR_DEU GPR_ESP GPR_TWN GPR_THA "
        "GPR_IDN GPR_EGY\n"
        "GPR_sb_imp: GPR_MEX GPR_VEN GPR_TUR GPR_BRA GPR_ITA GPR_COL GPR_PRT GPR_SAU "
        "GPR_ESP GPR_FRA\n"
        "GPR_sb_exp: GPR_USA GPR_CAN GPR_RUS GPR_FRA GPR_AUS GPR_UKR GPR_ARG GPR_DEU "
        "GPR_HUN GPR_GBR\n"
        "GPR_rc_prod: GPR_USA GPR_ARG GPR_BRA GPR_UKR GPR_FRA GPR_CHN GPR_HUN GPR_IND "
        "GPR_RUS GPR_ZAF\n"
        "GPR_rc_imp: GPR_BRA GPR_USA GPR_ARG GPR_CAN GPR_NLD GPR_UKR GPR_RUS GPR_CHN "
        "GPR_BEL GPR_IND\n"
        "GPR_rc_exp: GPR_USA GPR_BRA GPR_IND GPR_ARG GPR_RUS GPR_FRA GPR_ESP GPR_CHN "
        "GPR_ITA GPR_AUS\n";
    return text;
}

MonthlySeries standardize(const MonthlySeries& series) {
    if (series.size() < 2) {
        throw std::invalid_argument("standardize: '" + series.label +
                                    "' needs at least 2 observations");
    }
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(series.size());
    double var = 0.0;
    for (double v : series.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(series.size());  // population convention
    if (!(var > 0.0)) {
        throw numeric_error("standardize: zero variance in '" + series.label + "'");
    }
    const double sd = std::sqrt(var);
    MonthlySeries out = series;
    for (double& v : out.values) v = (v - mean) / sd;
    return out;
}

std::vector<MonthlySeries> intersect_months(std::span<const MonthlySeries> panel) {
    if (panel.empty()) return {};
    int lo = panel[0].months.front().index();
    int hi = panel[0].months.back().index();
    for (const MonthlySeries& s : panel) {
        if (s.size() == 0) throw std::invalid_argument("intersect_months: empty series");
        lo = std::max(lo, s.months.front().index());
        hi = std::min(hi, s.months.back().index());
    }
    if (lo > hi) {
        throw std::invalid_argument("intersect_months: series share no common months");
    }
    std::vector<MonthlySeries> out;
    out.reserve(panel.size());
    for (const MonthlySeries& s : panel) {
        const std::size_t first = static_cast<std::size_t>(lo - s.months.front().index());
        const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
        MonthlySeries cut;
        cut.label = s.label;
        cut.months.assign(s.months.begin() + first, s.months.begin() + first + count);
        cut.values.assign(s.values.begin() + first, s.values.begin() + first + count);
        out.push_back(std::move(cut));
    }
    return out;
}

CorrelationMatrix correlation_matrix(std::span<const MonthlySeries> panel) {
    if (panel.size() < 2) {
        throw std::invalid_argument("correlation_matrix: need at least 2 series");
    }
    const std::size_t n_months = panel[0].size();
    for (const MonthlySeries& s : panel) {
        if (s.size() != n_months || !(s.months.front() == panel[0].months.front())) {
            throw std::invalid_argument("correlation_matrix: series '" + s.label +
                                        "' is not aligned to the common month range");
        }
    }
    std::vector<MonthlySeries> z;
    z.reserve(panel.size());
    for (const MonthlySeries& s : panel) z.push_back(standardize(s));

    CorrelationMatrix corr;
    corr.dim = panel.size();
    corr.values.assign(corr.dim * corr.dim, 0.0);
    for (const MonthlySeries& s : panel) corr.labels.push_back(s.label);
    for (std::size_t i = 0; i < corr.dim; ++i) {
        corr.values[i * corr.dim + i] = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            double c = 0.0;
            for (std::size_t t = 0; t < n_months; ++t) {
                c += z[i].values[t] * z[j].values[t];
            }
            c /= static_cast<double>(n_months);
            corr.values[i * corr.dim + j] = c;
            corr.values[j * corr.dim + i] = c;
        }
    }
    return corr;
}

SymEigen jacobi_eigen(std::span<const double> matrix, std::size_t dim) {
    if (matrix.size() != dim * dim || dim == 0) {
        throw std::invalid_argument("jacobi_eigen: bad dimensions");
    }
    std::vector<double> a(matrix.begin(), matrix.end());
    std::vector<double> v(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) v[i * dim + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) s += a[i * dim + j] * a[i * dim + j];
        }
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps && off_norm() > 1e-12; ++sweep) {
        for (std::size_t p = 0; p + 1 < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double apq = a[p * dim + q];
                if (apq == 0.0) continue;
                const double app = a[p * dim + p];
                const double aqq = a[q * dim + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double akp = a[k * dim + p];
                    const double akq = a[k * dim + q];
                    a[k * dim + p] = c * akp - s * akq;
                    a[k * dim + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    const double apk = a[p * dim + k];
                    const double aqk = a[q * dim + k];
                    a[p * dim + k] = c * apk - s * aqk;
                    a[q * dim + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    const double vkp = v[k * dim + p];
                    const double vkq = v[k * dim + q];
                    v[k * dim + p] = c * vkp - s * vkq;
                    v[k * dim + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps && off_norm() > 1e-12) {
        throw numeric_error("jacobi_eigen: failed to converge");
    }

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * dim + x] > a[y * dim + y];
    });

    SymEigen out;
    out.dim = dim;
    out.values.resize(dim);
    out.vectors.resize(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        out.values[k] = a[order[k] * dim + order[k]];
        for (std::size_t i = 0; i < dim; ++i) {
            out.vectors[k * dim + i] = v[i * dim + order[k]];
        }
    }
    return out;
}

Eigenportfolio eigen_decompose(const CorrelationMatrix& corr) {
    const SymEigen eig = jacobi_eigen(corr.values, corr.dim);
    Eigenportfolio port;
    port.eigenvalues = eig.values;
    port.leading_vector.assign(eig.vectors.begin(),
                               eig.vectors.begin() + static_cast<std::ptrdiff_t>(corr.dim));
    double sum = 0.0;
    for (double u : port.leading_vector) sum += u;
    if (std::fabs(sum) <= 1e-12) {
        throw numeric_error("eigen_decompose: leading eigenvector components sum to zero");
    }
    if (sum < 0.0) {
        for (double& u : port.leading_vector) u = -u;
    }
    return port;
}

Eigenportfolio eigenportfolio_index(std::span<const MonthlySeries> raw_panel,
                                    Eigenportfolio decomposition) {
    const std::size_t n = raw_panel.size();
    if (decomposition.leading_vector.size() != n) {
        throw std::invalid_argument("eigenportfolio_index: panel/eigenvector size mismatch");
    }
    double sum = 0.0;
    for (double u : decomposition.leading_vector) sum += u;
    if (std::fabs(sum) <= 1e-12) {
        throw numeric_error("eigenportfolio_index: eigenvector weight sum is zero");
    }
    decomposition.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        decomposition.weights[i] = decomposition.leading_vector[i] / sum;
    }
    const std::size_t n_months = raw_panel[0].size();
    MonthlySeries index;
    index.label = "composite";
    index.months = raw_panel[0].months;
    index.values.assign(n_months, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (raw_panel[i].size() != n_months) {
            throw std::invalid_argument("eigenportfolio_index: member '" +
                                        raw_panel[i].label + "' is not aligned");
        }
        for (std::size_t t = 0; t < n_months; ++t) {
            index.values[t] += decomposition.weights[i] * raw_panel[i].values[t];
        }
    }
    decomposition.index = std::move(index);
    return decomposition;
}

}  // namespace gmidas
