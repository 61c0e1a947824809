#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "piscat/vec3.hpp"

namespace piscat {

// Node-centered uniform Cartesian grid. Values are implicitly zero outside
// the grid box, matching compactly supported fields.
struct Grid3 {
    Vec3 origin;
    double h = 0.0;  // spacing, same per axis
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> values;

    Grid3() = default;
    Grid3(Vec3 origin_, double h_, int nx_, int ny_, int nz_)
        : origin(origin_), h(h_), nx(nx_), ny(ny_), nz(nz_),
          values(static_cast<size_t>(nx_) * ny_ * nz_, 0.0) {}

    // Cube grid centered at the origin covering [-half, half]^3 with n nodes per axis.
    static Grid3 centered_cube(double half, int n);

    size_t size() const { return values.size(); }
    size_t index(int i, int j, int k) const {
        return (static_cast<size_t>(i) * ny + j) * nz + k;
    }
    Vec3 node(int i, int j, int k) const {
        return {origin.x + h * i, origin.y + h * j, origin.z + h * k};
    }
    double& at(int i, int j, int k) { return values[index(i, j, k)]; }
    double at(int i, int j, int k) const { return values[index(i, j, k)]; }

    // Trilinear interpolation; zero outside the box.
    double sample(const Vec3& p) const;

    void fill(const std::function<double(const Vec3&)>& f);
};

// Nonzero nodes treated as midpoint-quadrature cells of volume h^3.
struct SupportCell {
    Vec3 pos;
    double value;
};
std::vector<SupportCell> support_cells(const Grid3& g, double floor = 0.0);

// 1-d radial table f(r) on a uniform r-grid starting at 0.
struct RadialTable {
    double dr = 0.0;
    std::vector<double> values;  // values[i] = f(i*dr)

    double r_max() const { return dr * (values.size() - 1); }
    double sample(double r) const;
};

// Detects spherical symmetry about the origin by comparing directional
// samples; returns the angular-average profile when the spread is below tol.
std::optional<RadialTable> detect_radial(const Grid3& g, double rel_tol = 1e-9);

// Sampled compactly supported potential q >= 0 (zero outside G).
struct PotentialGrid {
    Grid3 grid;
    int smoothness_order = 2;  // m in {2, 4}
};

// Source function g on the same layout as the potential; mollifier metadata
// kept for diagnostics.
struct SourceGrid {
    Grid3 grid;
    Vec3 center;
    double sigma = 0.0;          // mollifier width (0 when not a mollifier)
    double normalization = 1.0;  // constant C making the grid integral 1
};

}  // namespace piscat
