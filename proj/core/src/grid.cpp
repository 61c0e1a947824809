#include "piscat/grid.hpp"

#include <algorithm>
#include <cmath>

namespace piscat {

Grid3 Grid3::centered_cube(double half, int n) {
    double h = 2.0 * half / (n - 1);
    return Grid3({-half, -half, -half}, h, n, n, n);
}

double Grid3::sample(const Vec3& p) const {
    double fx = (p.x - origin.x) / h;
    double fy = (p.y - origin.y) / h;
    double fz = (p.z - origin.z) / h;
    // zero outside: clamp test before floor
    if (fx <= -1.0 || fy <= -1.0 || fz <= -1.0 ||
        fx >= nx || fy >= ny || fz >= nz)
        return 0.0;
    int i0 = static_cast<int>(std::floor(fx));
    int j0 = static_cast<int>(std::floor(fy));
    int k0 = static_cast<int>(std::floor(fz));
    double tx = fx - i0, ty = fy - j0, tz = fz - k0;

    double acc = 0.0;
    for (int di = 0; di <= 1; ++di) {
        int i = i0 + di;
        if (i < 0 || i >= nx) continue;
        double wx = di ? tx : 1.0 - tx;
        for (int dj = 0; dj <= 1; ++dj) {
            int j = j0 + dj;
            if (j < 0 || j >= ny) continue;
            double wy = dj ? ty : 1.0 - ty;
            for (int dk = 0; dk <= 1; ++dk) {
                int k = k0 + dk;
                if (k < 0 || k >= nz) continue;
                double wz = dk ? tz : 1.0 - tz;
                acc += wx * wy * wz * at(i, j, k);
            }
        }
    }
    return acc;
}

void Grid3::fill(const std::function<double(const Vec3&)>& f) {
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int k = 0; k < nz; ++k)
                at(i, j, k) = f(node(i, j, k));
}

std::vector<SupportCell> support_cells(const Grid3& g, double floor) {
    std::vector<SupportCell> cells;
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
            for (int k = 0; k < g.nz; ++k) {
                double v = g.at(i, j, k);
                if (std::abs(v) > floor) cells.push_back({g.node(i, j, k), v});
            }
    return cells;
}

double RadialTable::sample(double r) const {
    if (r < 0.0) r = -r;
    double f = r / dr;
    if (f >= static_cast<double>(values.size() - 1)) return 0.0;
    int i = static_cast<int>(f);
    double t = f - i;
    return values[i] * (1.0 - t) + values[i + 1] * t;
}

std::optional<RadialTable> detect_radial(const Grid3& g, double rel_tol) {
    // fixed direction set: icosahedral-ish spread, deterministic
    std::vector<Vec3> dirs;
    const double ga = 2.399963229728653;  // golden angle
    const int n_dir = 24;
    for (int i = 0; i < n_dir; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n_dir;
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        dirs.push_back({rho * std::cos(ga * i), rho * std::sin(ga * i), z});
    }

    double r_max = 0.0;
    for (auto c : {g.origin, g.node(g.nx - 1, g.ny - 1, g.nz - 1)})
        r_max = std::max(r_max, c.norm());

    RadialTable table;
    table.dr = g.h / 2.0;
    int n_r = static_cast<int>(r_max / table.dr) + 2;
    table.values.resize(n_r);

    double scale = 0.0;
    for (double v : g.values) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
        return table;  // identically zero field is radial
    }

    for (int ir = 0; ir < n_r; ++ir) {
        double r = ir * table.dr;
        double lo = 0.0, hi = 0.0, acc = 0.0;
        bool first = true;
        for (const Vec3& d : dirs) {
            double v = g.sample(d * r);
            acc += v;
            if (first) { lo = hi = v; first = false; }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > rel_tol * scale) return std::nullopt;
        table.values[ir] = acc / n_dir;
    }
    return table;
}

}  // namespace piscat
