#pragma once
// Catalog of the 2-dimensional crystallographic (wallpaper) groups: point
// groups, exact lattice data, integer generator matrices in the lattice
// basis, translation parts of the nonsymmorphic groups, the available sign
// characters, and validated equivariant CW decompositions of the torus
// R^2 / lattice.
//
// Seventeen named entries share thirteen distinct torus actions: pm/pg,
// pmm/pmg/pgg and p4m/p4g differ only in their translation data, never in
// the action of the point group.  Hexagonal-lattice symmetries are given in
// Cartesian form with entries in Q(sqrt 3); they are converted exactly to
// integer matrices in the lattice basis at catalog construction, and the
// sqrt-3 representation never leaks into any computation downstream.
//
// The catalog is immutable static data built on first use; accessors hand
// out references into it, so entries are never copied and the internal
// group/complex cross-pointers stay valid for the program lifetime.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eqcoh/gcw.hpp"
#include "eqcoh/gmodule.hpp"
#include "eqcoh/group.hpp"
#include "eqcoh/intmatrix.hpp"

namespace eqc {

// An element r + s*sqrt(3) of Q(sqrt 3), exactly.
struct QSqrt3 {
    mpq_class r;
    mpq_class s;

    QSqrt3() = default;
    QSqrt3(mpq_class rational, mpq_class root3 = 0)
        : r(std::move(rational)), s(std::move(root3)) {}

    QSqrt3 operator+(const QSqrt3& o) const { return {r + o.r, s + o.s}; }
    QSqrt3 operator-(const QSqrt3& o) const { return {r - o.r, s - o.s}; }
    QSqrt3 operator*(const QSqrt3& o) const {
        return {r * o.r + 3 * s * o.s, r * o.s + s * o.r};
    }
    QSqrt3 operator-() const { return {-r, -s}; }
    bool operator==(const QSqrt3& o) const { return r == o.r && s == o.s; }
    bool is_zero() const { return r == 0 && s == 0; }
    // Throws std::domain_error when dividing by zero.
    QSqrt3 inverse() const;
    std::string str() const;
};

// A named sign character of a point group.
struct PhiEntry {
    std::string label;  // "phi0", "phi1" or "phi2"
    SignHom phi;
};

struct WallpaperEntry {
    std::string name;          // lowercase crystallographic label, e.g. "p4g"
    std::string action_class;  // label of the shared torus action, e.g. "p4m/p4g"
    // Cartesian lattice basis vectors as columns {a | b}, row-major.
    std::array<QSqrt3, 4> lattice_basis;
    FinGroup point_group;
    // One 2x2 integer matrix per group element, in the lattice basis.
    std::vector<IntMatrix> lattice_matrices;
    // Translation part per group element, in lattice coordinates; all zero
    // exactly when the group is symmorphic.  Denominators divide 2.
    std::vector<std::array<mpq_class, 2>> vector_system;
    std::vector<PhiEntry> phis;
    // A validated equivariant CW decomposition of the torus.
    GCWComplex torus;

    bool nonsymmorphic() const;
};

// All seventeen entries, in a fixed order.  Built once; immutable.
const std::vector<WallpaperEntry>& wallpaper_catalog();

// Entry lookup by name; throws std::invalid_argument for unknown names.
const WallpaperEntry& wallpaper_entry(const std::string& name);

// The point group acting on the translation lattice (integer matrices in
// the lattice basis), packaged as a module over the point group.
GModule lattice_action(const std::string& name);

// The action induced on the dual torus: per-element transpose-inverse of
// the lattice matrices.
std::vector<IntMatrix> dual_action(const std::string& name);

// Exhaustive search for an integer matrix T with entries in
// [-bound, bound] and det = +-1 such that T A T^{-1} = B as matrix SETS.
// nullopt means "not found within the bound" (inconclusive), never a proof
// of non-conjugacy.
std::optional<IntMatrix> bounded_conjugacy_search(
    const std::vector<IntMatrix>& A, const std::vector<IntMatrix>& B,
    int bound = 5);

// The entry's torus decomposition; reference into the catalog.
const GCWComplex& torus_gcw(const std::string& name);

// The whole catalog as a JSON document (deterministic).
std::string catalog_to_json();

}  // namespace eqc
