#pragma once

#include "origami/errors.hpp"
#include "origami/geometry.hpp"

namespace origami {

struct Facet {
    std::string id;
    HalfSpace hs;
};

enum class Location { Interior, Boundary, Outside };

struct LocateResult {
    Location where = Location::Outside;
    std::vector<std::string> facets;  // boundary facets within tolerance
};

/// Bounded intersection of half-spaces with identified facets. Immutable
/// after construction; construction validates boundedness, nonempty interior
/// and non-redundancy, and enumerates the vertex set (brute force over facet
/// subsets, fine at desk scale).
class Polytope {
public:
    static Polytope make(std::vector<Facet> facets, double tol = kEpsGeom);

    /// Assemble without the validation pass, for constructions whose validity
    /// follows from their inputs (e.g. products). The vertex set must be the
    /// exact vertex set of the intersection.
    static Polytope trusted(std::vector<Facet> facets, std::vector<Vec> vertices,
                            double tol);

    int dim() const { return dim_; }
    double tol() const { return tol_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const Facet& facet(const std::string& id) const;
    bool has_facet(const std::string& id) const;
    Vec interior_point() const { return centroid_; }

    bool contains(const Vec& x, double tol) const;
    bool contains(const Vec& x) const { return contains(x, tol_); }

    LocateResult locate(const Vec& x) const;
    std::vector<std::pair<std::string, double>> hyperplane_distances(const Vec& x) const;
    Isometry reflect_about_facet(const std::string& id) const;

    /// Image under an isometry; facet ids pass through iso.relabel().
    Polytope transformed(const Isometry& iso) const;

private:
    Polytope() = default;
    int dim_ = 0;
    double tol_ = kEpsGeom;
    std::vector<Facet> facets_;
    std::vector<Vec> vertices_;
    Vec centroid_;
};

/// Cartesian product; facet ids are prefixed "L." and "R." to carry their
/// origin.
Polytope product(const Polytope& p, const Polytope& q);

/// Union of two overlapping polytopes, returned iff it is convex: the convex
/// hull of both vertex sets is computed facet-by-facet and verified to equal
/// the set union exactly. Coplanar facet pairs merge and keep the id from
/// `p`'s side.
Polytope convex_union(const Polytope& p, const Polytope& q);

/// Brute-force vertex enumeration for a halfspace list (shared with make()).
std::vector<Vec> enumerate_vertices(const std::vector<Facet>& facets, double tol);

} // namespace origami
