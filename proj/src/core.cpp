#include "pmelab/core.hpp"

#include <algorithm>
#include <cmath>

#include "pmelab/numerics.hpp"

namespace pmelab {

Grid1D::Grid1D(double smin, double smax, int n) : s_min(smin), s_max(smax), n_cells(n) {
    if (!(smin < smax)) throw std::invalid_argument("Grid1D: s_min must be < s_max");
    if (n < 1) throw std::invalid_argument("Grid1D: n_cells must be positive");
    h = (smax - smin) / n;
}

std::vector<double> Grid1D::centers() const {
    std::vector<double> c(n_cells);
    for (int i = 0; i < n_cells; ++i) c[i] = center(i);
    return c;
}

Field::Field(Grid1D g, double time, std::vector<double> v)
    : grid(g), t(time), values(std::move(v)) {
    validate_field(*this, "Field");
}

double Field::max_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

void validate_field(const Field& f, const std::string& where) {
    if (static_cast<int>(f.values.size()) != f.grid.n_cells)
        throw std::invalid_argument(where + ": value count does not match grid");
    if (f.t < 0.0) throw std::invalid_argument(where + ": negative time");
    for (double v : f.values) {
        if (!std::isfinite(v)) throw std::invalid_argument(where + ": non-finite value");
        if (v < 0.0) throw std::invalid_argument(where + ": negative value");
    }
}

double datum_value_log(const InitialDatum& datum, double s) {
    return std::visit(
        [s](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BumpDatum>) {
                const double arg = d.vanish_at_origin ? s * s : std::exp(2.0 * s);
                return d.amplitude * std::max(0.0, d.radius - arg);
            } else if constexpr (std::is_same_v<T, PlateauDatum>) {
                const double e = d.decay_rate * (s - std::log(d.x_half));
                return d.K / (1.0 + std::exp(e));
            } else if constexpr (std::is_same_v<T, SnapshotDatum>) {
                return d.w0_of_s(s);
            } else {
                throw std::invalid_argument("datum_value_log: Table datum has no closed form");
            }
        },
        datum);
}

double datum_value_radial(const InitialDatum& datum, double x) {
    if (x <= 0.0) throw std::invalid_argument("datum_value_radial: need x > 0");
    return datum_value_log(datum, std::log(x));
}

void ProblemSpec::validate() const {
    if (dimension != 1 && dimension != 2)
        throw std::invalid_argument("ProblemSpec: dimension must be 1 or 2");
    if (!(m >= 1.0)) throw std::invalid_argument("ProblemSpec: m must be >= 1");
    if (!(s_min < 0.0 && 0.0 < s_max))
        throw std::invalid_argument("ProblemSpec: need s_min < 0 < s_max");
    if (n_cells < 16) throw std::invalid_argument("ProblemSpec: need n_cells >= 16");
    if (!(t_end > 0.0)) throw std::invalid_argument("ProblemSpec: need t_end > 0");
    double prev = 0.0;
    for (double t : output_times) {
        if (!(t > prev)) throw std::invalid_argument("ProblemSpec: output_times must strictly increase");
        if (t > t_end * (1.0 + 1e-12))
            throw std::invalid_argument("ProblemSpec: output time past t_end");
        prev = t;
    }
}

Field build_initial_field(const InitialDatum& datum, const Grid1D& grid) {
    std::vector<double> w(grid.n_cells);
    if (const auto* table = std::get_if<TableDatum>(&datum)) {
        if (table->r.size() != table->value.size() || table->r.size() < 2)
            throw std::invalid_argument("build_initial_field: malformed table datum");
        std::vector<double> s(table->r.size());
        for (std::size_t j = 0; j < table->r.size(); ++j) {
            if (!(table->r[j] > 0.0))
                throw std::invalid_argument("build_initial_field: table radius must be > 0");
            if (!std::isfinite(table->value[j]))
                throw std::invalid_argument("build_initial_field: non-finite table sample");
            if (table->value[j] < 0.0)
                throw std::invalid_argument("build_initial_field: negative table sample");
            s[j] = std::log(table->r[j]);
        }
        if (grid.s_min < s.front() || grid.s_max > s.back())
            throw std::invalid_argument("build_initial_field: grid extends past sampled range");
        w = resample_monotone(s, table->value, grid.centers());
        for (double& v : w) v = std::max(v, 0.0);
    } else {
        for (int i = 0; i < grid.n_cells; ++i) {
            const double v = datum_value_log(datum, grid.center(i));
            if (!std::isfinite(v))
                throw std::invalid_argument("build_initial_field: non-finite datum sample");
            if (v < 0.0)
                throw std::invalid_argument("build_initial_field: negative datum sample");
            w[i] = v;
        }
    }
    return Field(grid, 0.0, std::move(w));
}

double weighted_mass(const Field& field) {
    validate_field(field, "weighted_mass");
    double sum = 0.0;
    for (double v : field.values) sum += v;
    return sum * field.grid.h;
}

}  // namespace pmelab
