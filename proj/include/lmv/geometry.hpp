#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmv/matrix.hpp"
#include "lmv/rng.hpp"

namespace lmv {

/// Pinhole camera: a rank-3 rational 3x4 matrix acting P^3 -> P^2.
class Camera {
public:
    explicit Camera(RationalMatrix m);

    const RationalMatrix& matrix() const { return m_; }
    /// Primitive representative of ker C, a single projective point.
    const RatVec& center() const { return center_; }

private:
    RationalMatrix m_;
    RatVec center_;
};

/// Ordered tuple of >= 2 cameras with pairwise distinct centers.
class CameraArrangement {
public:
    explicit CameraArrangement(std::vector<Camera> cameras);

    int size() const { return static_cast<int>(cameras_.size()); }
    const Camera& camera(int i) const { return cameras_[i]; }
    const std::vector<Camera>& cameras() const { return cameras_; }

private:
    std::vector<Camera> cameras_;
};

/// Line in P^3 spanned by two projectively distinct points.
class Line3D {
public:
    Line3D(RatVec a, RatVec b);

    const RatVec& a() const { return a_; }
    const RatVec& b() const { return b_; }
    /// Pluecker coordinates (p01, p02, p03, p12, p13, p23), primitive.
    const RatVec& plucker() const { return plucker_; }
    bool contains(const RatVec& point) const;

private:
    RatVec a_, b_, plucker_;
};

struct LineTuple {
    std::vector<RatVec> lines;  // one covector per camera

    int size() const { return static_cast<int>(lines.size()); }
};

/// Image of L under one camera: (Ca) x (Cb), primitive. Independent of the
/// spanning pair up to scale; the returned representative is unique.
RatVec project_line(const Camera& c, const Line3D& l);

LineTuple joint_camera_map(const CameraArrangement& a, const Line3D& l);

/// C^T l, the plane through the center projecting onto l. Exact representative,
/// no normalization (identities downstream are representative-sensitive).
RatVec back_projected_plane(const Camera& c, const RatVec& ell);

struct CollinearSet {
    std::vector<int> indices;  // 0-based camera indices, ascending, size >= 3
    RatVec span_a, span_b;     // two centers spanning the baseline
};

struct CollinearSubsetReport {
    std::vector<CollinearSet> maximal_sets;
};

/// All maximal subsets of >= 3 cameras with collinear centers.
CollinearSubsetReport collinear_subsets(const CameraArrangement& a);

struct GenericityViolation {
    std::string description;
};

struct CenterGenericityReport {
    bool ok = true;
    std::vector<GenericityViolation> violations;
};

/// Explicit nonvanishing conditions on translational camera parameters:
/// (i) cross-row entry differences, (ii) all 3x3 minors of the stacked
/// center matrix with final row -1.
CenterGenericityReport is_center_generic(const std::vector<RatVec>& s);

struct DualFrame {
    RatVec base_a, base_b;  // two points spanning the baseline
    RatVec f1, f2, f3;      // frame on the disjoint auxiliary line, f3 = f1 + f2
};

/// Baseline through collinear centers plus an auxiliary line disjoint from it
/// (the orthogonal complement under the standard bilinear form; a seeded
/// random line if the rank-4 disjointness check were ever to fail).
DualFrame baseline_dual_frame(const std::vector<RatVec>& collinear_centers);

/// e_i = c_i - (h^T f2) f1 + (h^T f1) f2; exact representative arithmetic.
RatVec e_point(const RatVec& center, const RatVec& h, const RatVec& f1, const RatVec& f2);

struct FLine {
    enum class Kind { Line, Plane } kind;
    std::vector<RatVec> span;  // two points for a line, three for a plane
};

/// The line through c_i and H_i cap E*, or the plane c_i v E* when E* lies
/// inside the back-projected plane.
FLine f_line(const RatVec& center, const RatVec& h, const DualFrame& frame);

/// Quadratic Veronese of a 4-vector, component order
/// (x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2).
RatVec veronese(const RatVec& p);

/// 10x10 matrix whose columns are the Veronese images of three baseline
/// points, the frame f1, f2, f3, and the four e-points of sigma.
RationalMatrix phi_matrix(const CameraArrangement& a, const std::vector<int>& sigma,
                          const DualFrame& frame, const std::vector<RatVec>& ells);

/// Same matrix with explicit baseline points in the first three columns.
RationalMatrix phi_matrix_with_baseline(const std::vector<RatVec>& baseline3,
                                        const DualFrame& frame,
                                        const std::vector<RatVec>& centers4,
                                        const std::vector<RatVec>& planes4);

/// Basis of quadrics through the given points: kernel of the stacked Veronese
/// evaluation matrix. At most 10 points.
std::vector<RatVec> quadric_fit(const std::vector<RatVec>& points);

/// Seeded random line avoiding every camera center (and hence projecting to a
/// nonzero covector under every camera).
Line3D random_line_avoiding_centers(const CameraArrangement& a, SeededRng& rng, int mag = 30);

}  // namespace lmv
