#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "simerr/error.hpp"
#include "simerr/matrix.hpp"

namespace simerr {

// Raw simulation output: n draws by d coordinates.  Column names are
// optional; when present they must be unique and cover every column.
struct SampleMatrix {
    Matrix values;
    std::vector<std::string> column_names;  // empty, or exactly cols() entries

    std::size_t rows() const { return values.rows(); }
    std::size_t cols() const { return values.cols(); }

    std::vector<double> column(std::size_t j) const { return values.column(j); }

    std::string column_label(std::size_t j) const {
        if (j < column_names.size()) return column_names[j];
        return "c" + std::to_string(j + 1);
    }

    // Analysis entry points require at least two finite draws per column.
    void validate() const {
        if (rows() < 2) throw DataError("sample matrix needs at least 2 rows");
        if (cols() == 0) throw DataError("sample matrix has no columns");
        if (!values.all_finite())
            throw DataError("sample matrix contains non-finite entries");
        if (!column_names.empty()) {
            if (column_names.size() != cols())
                throw DataError("column_names length does not match column count");
            auto sorted = column_names;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw DataError("column_names must be unique");
        }
    }

    SampleMatrix drop_leading_rows(std::size_t burn_in) const {
        if (burn_in == 0) return *this;
        if (rows() <= burn_in + 1)
            throw DataError("burn-in leaves fewer than 2 rows");
        Matrix m(rows() - burn_in, cols());
        for (std::size_t i = burn_in; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) m(i - burn_in, j) = values(i, j);
        return SampleMatrix{std::move(m), column_names};
    }
};

// A column is referenced either by 0-based index or by name.
struct ColumnRef {
    std::variant<std::size_t, std::string> ref;

    static ColumnRef index(std::size_t i) { return {i}; }
    static ColumnRef name(std::string s) { return {std::move(s)}; }

    std::size_t resolve(const SampleMatrix& samples) const {
        if (std::holds_alternative<std::size_t>(ref)) {
            std::size_t i = std::get<std::size_t>(ref);
            if (i >= samples.cols())
                throw SpecError("column index " + std::to_string(i) + " out of range");
            return i;
        }
        const std::string& want = std::get<std::string>(ref);
        for (std::size_t j = 0; j < samples.column_names.size(); ++j)
            if (samples.column_names[j] == want) return j;
        throw SpecError("no column named '" + want + "'");
    }

    std::string label() const {
        if (std::holds_alternative<std::size_t>(ref))
            return "#" + std::to_string(std::get<std::size_t>(ref));
        return std::get<std::string>(ref);
    }

    bool operator==(const ColumnRef&) const = default;
};

struct QuantileTarget {
    ColumnRef column;
    double q = 0.5;

    bool operator==(const QuantileTarget&) const = default;
};

// Which means and which quantiles to estimate.  Fixes the ordering of the
// estimated vector: the p1 means first, then the p2 quantiles, exactly in
// declaration order.
struct EstimandSpec {
    std::vector<ColumnRef> mean_targets;
    std::vector<QuantileTarget> quantile_targets;

    std::size_t p1() const { return mean_targets.size(); }
    std::size_t p2() const { return quantile_targets.size(); }
    std::size_t p() const { return p1() + p2(); }

    void validate() const {
        if (p() == 0) throw SpecError("estimand spec selects nothing");
        for (const auto& t : quantile_targets)
            if (!(t.q > 0.0 && t.q < 1.0))
                throw SpecError("quantile level must lie strictly in (0,1)");
    }

    bool operator==(const EstimandSpec&) const = default;
};

// EstimandSpec with every selector resolved to a concrete column index.
struct ResolvedSpec {
    std::vector<std::size_t> mean_cols;
    std::vector<std::pair<std::size_t, double>> quantile_cols;  // (column, q)
    std::vector<std::string> labels;  // one per coordinate of nu

    std::size_t p1() const { return mean_cols.size(); }
    std::size_t p2() const { return quantile_cols.size(); }
    std::size_t p() const { return p1() + p2(); }
};

inline ResolvedSpec resolve(const EstimandSpec& spec, const SampleMatrix& samples) {
    spec.validate();
    ResolvedSpec out;
    for (const auto& ref : spec.mean_targets) {
        std::size_t j = ref.resolve(samples);
        out.mean_cols.push_back(j);
        out.labels.push_back("mean[" + samples.column_label(j) + "]");
    }
    for (const auto& t : spec.quantile_targets) {
        std::size_t j = t.column.resolve(samples);
        out.quantile_cols.emplace_back(j, t.q);
        out.labels.push_back("q" + std::to_string(t.q).substr(0, 6) + "[" +
                             samples.column_label(j) + "]");
    }
    return out;
}

// The joint point estimate nu_hat = (means..., quantiles...).
struct JointEstimate {
    std::vector<double> nu_hat;
    std::size_t n = 0;
    ResolvedSpec spec;

    std::size_t p() const { return nu_hat.size(); }
};

// Kernel density estimates at the estimated quantiles, with the
// bandwidths that produced them.
struct DensityAtQuantiles {
    std::vector<double> values;
    std::vector<double> bandwidths;
};

}  // namespace simerr
