#include "lmv/geometry.hpp"

#include <algorithm>
#include <set>

#include "lmv/errors.hpp"

namespace lmv {

Camera::Camera(RationalMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 3 || m_.cols() != 4) throw ShapeError("camera matrix must be 3x4");
    const auto k = m_.kernel_basis();
    if (k.size() != 1) throw InputError("camera matrix must have rank 3");
    center_ = k[0];
}

CameraArrangement::CameraArrangement(std::vector<Camera> cameras) : cameras_(std::move(cameras)) {
    if (cameras_.size() < 2) throw InputError("arrangement needs at least two cameras");
    for (std::size_t i = 0; i < cameras_.size(); ++i)
        for (std::size_t j = i + 1; j < cameras_.size(); ++j)
            if (cameras_[i].center() == cameras_[j].center())
                throw InputError("camera centers must be pairwise distinct");
}

Line3D::Line3D(RatVec a, RatVec b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != 4 || b_.size() != 4) throw ShapeError("line spanning points must be 4-vectors");
    if (is_zero_vec(a_) || is_zero_vec(b_) || proportional(a_, b_))
        throw InputError("line spanning points must be projectively distinct");
    RatVec p(6);
    int at = 0;
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) p[at++] = a_[k] * b_[l] - a_[l] * b_[k];
    plucker_ = primitive(p);
}

bool Line3D::contains(const RatVec& point) const {
    return RationalMatrix::from_rows({a_, b_, point}).rank() <= 2;
}

RatVec project_line(const Camera& c, const Line3D& l) {
    const RatVec pa = c.matrix().apply(l.a());
    const RatVec pb = c.matrix().apply(l.b());
    const RatVec cross = cross3(pa, pb);
    if (is_zero_vec(cross))
        throw DegenerateProjection("line passes through the camera center", -1);
    return primitive(cross);
}

LineTuple joint_camera_map(const CameraArrangement& a, const Line3D& l) {
    LineTuple out;
    out.lines.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) {
        try {
            out.lines.push_back(project_line(a.camera(i), l));
        } catch (const DegenerateProjection&) {
            throw DegenerateProjection(
                "line passes through the center of camera " + std::to_string(i + 1), i + 1);
        }
    }
    return out;
}

RatVec back_projected_plane(const Camera& c, const RatVec& ell) {
    if (ell.size() != 3) throw ShapeError("image line covector must have 3 entries");
    if (is_zero_vec(ell)) throw InputError("zero image line covector");
    return c.matrix().transpose().apply(ell);
}

CollinearSubsetReport collinear_subsets(const CameraArrangement& a) {
    const int m = a.size();
    CollinearSubsetReport report;
    std::set<std::vector<int>> seen;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> on_line{i, j};
            for (int k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                if (RationalMatrix::from_rows(
                        {a.camera(i).center(), a.camera(j).center(), a.camera(k).center()})
                        .rank() <= 2)
                    on_line.push_back(k);
            }
            if (on_line.size() < 3) continue;
            std::sort(on_line.begin(), on_line.end());
            if (seen.insert(on_line).second)
                report.maximal_sets.push_back(
                    {on_line, a.camera(on_line[0]).center(), a.camera(on_line[1]).center()});
        }
    }
    std::sort(report.maximal_sets.begin(), report.maximal_sets.end(),
              [](const CollinearSet& x, const CollinearSet& y) { return x.indices < y.indices; });
    return report;
}

CenterGenericityReport is_center_generic(const std::vector<RatVec>& s) {
    CenterGenericityReport rep;
    const int m = static_cast<int>(s.size());
    for (const RatVec& v : s)
        if (v.size() != 3) throw ShapeError("parameter vectors must have 3 entries");
    // (i) cross-row entry differences
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = i1 + 1; i2 < 3; ++i2)
            for (int j1 = 0; j1 < m; ++j1)
                for (int j2 = 0; j2 < m; ++j2)
                    if (s[j1][i1] == s[j2][i2])
                        rep.violations.push_back(
                            {"entry difference vanishes: s_" + std::to_string(i1 + 1) + "_" +
                             std::to_string(j1 + 1) + " = s_" + std::to_string(i2 + 1) + "_" +
                             std::to_string(j2 + 1)});
    // (ii) all 3x3 minors of the stacked center matrix nonzero
    if (m >= 3) {
        RationalMatrix cm(4, m);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < 3; ++i) cm.at(i, j) = s[j][i];
            cm.at(3, j) = Rational(-1);
        }
        for (const auto& mn : cm.minors(3)) {
            if (!mn.value.is_zero()) continue;
            std::string rows, cols;
            for (int r : mn.row_set) rows += std::to_string(r + 1);
            for (int c : mn.col_set) cols += std::to_string(c + 1);
            rep.violations.push_back({"zero 3x3 center-matrix minor, rows " + rows + ", columns " + cols});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

namespace {

bool all_collinear(const std::vector<RatVec>& pts) {
    if (pts.size() < 3) return true;
    return RationalMatrix::from_rows(pts).rank() <= 2;
}

}  // namespace

DualFrame baseline_dual_frame(const std::vector<RatVec>& centers) {
    if (centers.size() < 2) throw InputError("need at least two collinear centers");
    for (const RatVec& c : centers)
        if (c.size() != 4) throw ShapeError("centers must be 4-vectors");
    if (!all_collinear(centers)) throw InputError("centers are not collinear");
    // two distinct spanning points
    RatVec a = primitive(centers[0]);
    RatVec b;
    for (std::size_t i = 1; i < centers.size(); ++i) {
        if (!proportional(centers[0], centers[i])) {
            b = primitive(centers[i]);
            break;
        }
    }
    if (b.empty()) throw InputError("collinear centers are not pairwise distinct");

    DualFrame frame;
    frame.base_a = a;
    frame.base_b = b;
    // orthogonal complement of the baseline under the standard bilinear form
    const auto ker = RationalMatrix::from_rows({a, b}).kernel_basis();
    frame.f1 = ker[0];
    frame.f2 = ker[1];
    auto disjoint = [&](const RatVec& f1, const RatVec& f2) {
        return RationalMatrix::from_rows({a, b, f1, f2}).rank() == 4;
    };
    if (!disjoint(frame.f1, frame.f2)) {
        // real rational data never reaches this; seeded fallback kept as a guard
        SeededRng rng(0xD15C0);
        do {
            RatVec g1(4), g2(4);
            for (int i = 0; i < 4; ++i) {
                g1[i] = Rational(rng.int_in(-9, 9));
                g2[i] = Rational(rng.int_in(-9, 9));
            }
            if (is_zero_vec(g1) || is_zero_vec(g2) || proportional(g1, g2)) continue;
            frame.f1 = primitive(g1);
            frame.f2 = primitive(g2);
        } while (!disjoint(frame.f1, frame.f2));
    }
    frame.f3 = primitive(add(frame.f1, frame.f2));
    return frame;
}

RatVec e_point(const RatVec& center, const RatVec& h, const RatVec& f1, const RatVec& f2) {
    const Rational hf2 = dot(h, f2);
    const Rational hf1 = dot(h, f1);
    return add(sub(center, scale(f1, hf2)), scale(f2, hf1));
}

FLine f_line(const RatVec& center, const RatVec& h, const DualFrame& frame) {
    if (is_zero_vec(h)) throw InputError("zero plane covector");
    const Rational hf1 = dot(h, frame.f1);
    const Rational hf2 = dot(h, frame.f2);
    if (hf1.is_zero() && hf2.is_zero())
        return {FLine::Kind::Plane, {center, frame.f1, frame.f2}};
    // intersection of the plane with the auxiliary line
    const RatVec p = sub(scale(frame.f2, hf1), scale(frame.f1, hf2));
    return {FLine::Kind::Line, {center, p}};
}

RatVec veronese(const RatVec& p) {
    if (p.size() != 4) throw ShapeError("veronese input must be a 4-vector");
    const Rational &x = p[0], &y = p[1], &z = p[2], &w = p[3];
    return {x * x, x * y, x * z, x * w, y * y, y * z, y * w, z * z, z * w, w * w};
}

RationalMatrix phi_matrix_with_baseline(const std::vector<RatVec>& baseline3,
                                        const DualFrame& frame,
                                        const std::vector<RatVec>& centers4,
                                        const std::vector<RatVec>& planes4) {
    if (baseline3.size() != 3 || centers4.size() != 4 || planes4.size() != 4)
        throw ShapeError("phi matrix needs 3 baseline points and 4 cameras");
    std::vector<RatVec> cols;
    cols.reserve(10);
    for (const RatVec& b : baseline3) cols.push_back(veronese(b));
    cols.push_back(veronese(frame.f1));
    cols.push_back(veronese(frame.f2));
    cols.push_back(veronese(frame.f3));
    for (int i = 0; i < 4; ++i)
        cols.push_back(veronese(e_point(centers4[i], planes4[i], frame.f1, frame.f2)));
    return RationalMatrix::from_cols(cols);
}

RationalMatrix phi_matrix(const CameraArrangement& a, const std::vector<int>& sigma,
                          const DualFrame& frame, const std::vector<RatVec>& ells) {
    if (sigma.size() != 4) throw ShapeError("phi matrix needs a 4-element camera subset");
    if (ells.size() != 4) throw ShapeError("phi matrix needs 4 image lines");
    std::vector<RatVec> centers;
    for (int i : sigma) centers.push_back(a.camera(i).center());
    if (RationalMatrix::from_rows(centers).rank() > 2)
        throw InputError("phi matrix subset centers are not collinear");
    std::vector<RatVec> baseline3{centers[0], centers[1], centers[2]};
    std::vector<RatVec> planes;
    for (int k = 0; k < 4; ++k)
        planes.push_back(back_projected_plane(a.camera(sigma[k]), ells[k]));
    return phi_matrix_with_baseline(baseline3, frame, centers, planes);
}

std::vector<RatVec> quadric_fit(const std::vector<RatVec>& points) {
    if (points.size() > 10) throw ShapeError("quadric fit takes at most 10 points");
    if (points.empty()) {
        std::vector<RatVec> basis;
        for (int i = 0; i < 10; ++i) basis.push_back(RationalMatrix::identity(10).row(i));
        return basis;
    }
    std::vector<RatVec> rows;
    rows.reserve(points.size());
    for (const RatVec& p : points) rows.push_back(veronese(p));
    return RationalMatrix::from_rows(rows).kernel_basis();
}

Line3D random_line_avoiding_centers(const CameraArrangement& a, SeededRng& rng, int mag) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RatVec pa(4), pb(4);
        for (int i = 0; i < 4; ++i) {
            pa[i] = Rational(rng.int_in(-mag, mag));
            pb[i] = Rational(rng.int_in(-mag, mag));
        }
        if (is_zero_vec(pa) || is_zero_vec(pb) || proportional(pa, pb)) continue;
        Line3D l(pa, pb);
        bool ok = true;
        for (int i = 0; i < a.size() && ok; ++i)
            if (l.contains(a.camera(i).center())) ok = false;
        if (ok) return l;
    }
    throw BudgetExceeded("could not sample a line avoiding all centers", 0);
}

}  // namespace lmv
