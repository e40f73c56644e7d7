#include <doctest.h>

#include "lmv/geometry.hpp"

using namespace lmv;

namespace {

Rational Q(long n) { return Rational(n); }

Camera cam(std::initializer_list<long> rowmajor) {
    std::vector<Rational> e;
    for (long v : rowmajor) e.push_back(Q(v));
    return Camera(RationalMatrix(3, 4, std::move(e)));
}

Camera identity_cam() { return cam({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0}); }

Camera translational(long s1, long s2, long s3) {
    return cam({1, 0, 0, s1, 0, 1, 0, s2, 0, 0, 1, s3});
}

// [I3 | (v,0,0)^T]
Camera collinear_cam(long v) { return cam({1, 0, 0, v, 0, 1, 0, 0, 0, 0, 1, 0}); }

const RatVec e1{Q(1), Q(0), Q(0), Q(0)};
const RatVec e2{Q(0), Q(1), Q(0), Q(0)};
const RatVec e3{Q(0), Q(0), Q(1), Q(0)};
const RatVec e4{Q(0), Q(0), Q(0), Q(1)};

}  // namespace

TEST_CASE("camera validation and centers") {
    CHECK(identity_cam().center() == e4);
    CHECK(translational(3, -5, 7).center() == RatVec{Q(3), Q(-5), Q(7), Q(-1)});
    CHECK_THROWS_AS(cam({1, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0}), InputError);  // rank 1
    CHECK_THROWS_AS(CameraArrangement({identity_cam(), identity_cam()}), InputError);
}

TEST_CASE("line and pluecker") {
    Line3D l(e1, e2);
    CHECK(l.plucker()[0] == Q(1));
    // Grassmann-Pluecker relation p01 p23 - p02 p13 + p03 p12 = 0
    SeededRng rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        RatVec a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = Q(rng.int_in(-9, 9));
            b[i] = Q(rng.int_in(-9, 9));
        }
        if (is_zero_vec(a) || is_zero_vec(b) || proportional(a, b)) continue;
        const RatVec p = Line3D(a, b).plucker();
        CHECK(p[0] * p[5] - p[1] * p[4] + p[2] * p[3] == Q(0));
    }
    CHECK_THROWS_AS(Line3D(e1, e1), InputError);
}

TEST_CASE("project_line worked cases") {
    // image of the xy-coordinate "axes" line under the identity camera
    CHECK(project_line(identity_cam(), Line3D(e1, e2)) == RatVec{Q(0), Q(0), Q(1)});

    // two-camera worked scene
    Camera c1 = identity_cam();
    Camera c2 = translational(1, 0, 0);
    Line3D L(RatVec{Q(0), Q(1), Q(0), Q(1)}, RatVec{Q(0), Q(0), Q(1), Q(1)});
    CHECK(project_line(c1, L) == RatVec{Q(1), Q(0), Q(0)});
    CHECK(project_line(c2, L) == RatVec{Q(1), Q(-1), Q(-1)});

    // span invariance: (a, a+b) projects to the same representative
    Line3D L2(L.a(), add(L.a(), L.b()));
    CHECK(project_line(c2, L2) == project_line(c2, L));

    // line through the center degenerates
    CHECK_THROWS_AS(project_line(identity_cam(), Line3D(e4, e1)), DegenerateProjection);
}

TEST_CASE("joint camera map") {
    CameraArrangement a({identity_cam(), translational(1, 0, 0)});
    Line3D L(RatVec{Q(0), Q(1), Q(0), Q(1)}, RatVec{Q(0), Q(0), Q(1), Q(1)});
    const LineTuple t = joint_camera_map(a, L);
    CHECK(t.lines == std::vector<RatVec>{{Q(1), Q(0), Q(0)}, {Q(1), Q(-1), Q(-1)}});

    // permuting cameras permutes output components
    CameraArrangement swapped({translational(1, 0, 0), identity_cam()});
    const LineTuple t2 = joint_camera_map(swapped, L);
    CHECK(t2.lines[0] == t.lines[1]);
    CHECK(t2.lines[1] == t.lines[0]);

    // rank M(l) <= 2 at projections, and back-projected planes contain a and b
    SeededRng rng(4);
    CameraArrangement a3({identity_cam(), translational(1, 2, 3), translational(-2, 5, 1),
                          translational(4, -1, -3)});
    for (int rep = 0; rep < 10; ++rep) {
        const Line3D l = random_line_avoiding_centers(a3, rng);
        const LineTuple tup = joint_camera_map(a3, l);
        RationalMatrix M(4, a3.size());
        for (int j = 0; j < a3.size(); ++j) {
            const RatVec h = back_projected_plane(a3.camera(j), tup.lines[j]);
            CHECK(dot(h, l.a()) == Q(0));
            CHECK(dot(h, l.b()) == Q(0));
            for (int r = 0; r < 4; ++r) M.at(r, j) = h[r];
        }
        CHECK(M.rank() <= 2);
        for (const auto& mn : M.minors(3)) CHECK(mn.value == Q(0));
    }
}

TEST_CASE("back projected planes") {
    CHECK(back_projected_plane(identity_cam(), RatVec{Q(0), Q(0), Q(1)}) ==
          RatVec{Q(0), Q(0), Q(1), Q(0)});
    CHECK(back_projected_plane(translational(1, 0, 0), RatVec{Q(1), Q(-1), Q(-1)}) ==
          RatVec{Q(1), Q(-1), Q(-1), Q(1)});
    // the plane always contains the center
    SeededRng rng(6);
    for (int rep = 0; rep < 10; ++rep) {
        Camera c = translational(rng.int_in(-9, 9), rng.int_in(-9, 9), rng.int_in(-9, 9));
        RatVec ell{Q(rng.nonzero_int(5)), Q(rng.int_in(-5, 5)), Q(rng.int_in(-5, 5))};
        CHECK(dot(back_projected_plane(c, ell), c.center()) == Q(0));
    }
    CHECK_THROWS_AS(back_projected_plane(identity_cam(), RatVec{Q(0), Q(0), Q(0)}), InputError);
}

TEST_CASE("collinear subsets") {
    // standard-basis centers: no three collinear
    Camera c1 = cam({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0});   // center e4
    Camera c2 = cam({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});   // center e3
    Camera c3 = cam({1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});   // center e2
    Camera c4 = cam({0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});   // center e1
    CHECK(collinear_subsets(CameraArrangement({c1, c2, c3, c4})).maximal_sets.empty());

    // translational collinear family: one maximal set of all cameras
    CameraArrangement coll({collinear_cam(0), collinear_cam(1), collinear_cam(-1),
                            collinear_cam(2)});
    const auto rep = collinear_subsets(coll);
    REQUIRE(rep.maximal_sets.size() == 1);
    CHECK(rep.maximal_sets[0].indices == std::vector<int>{0, 1, 2, 3});

    // m = 2: nothing to report
    CHECK(collinear_subsets(CameraArrangement({identity_cam(), translational(1, 0, 0)}))
              .maximal_sets.empty());

    // mixed: a planted collinear triple among generic cameras
    CameraArrangement mixed({collinear_cam(0), collinear_cam(1), collinear_cam(2),
                             translational(1, 2, 3), translational(-1, 5, 2)});
    const auto rep2 = collinear_subsets(mixed);
    REQUIRE(rep2.maximal_sets.size() == 1);
    CHECK(rep2.maximal_sets[0].indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("center genericity") {
    // violation of cross-row condition: s_1_1 == s_2_3
    std::vector<RatVec> s{{Q(5), Q(10), Q(20)}, {Q(6), Q(11), Q(21)}, {Q(7), Q(5), Q(22)}};
    // s_2_3 = 5 = s_1_1
    auto rep = is_center_generic(s);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].description.find("entry difference") != std::string::npos);

    // generic random values pass
    SeededRng rng(8);
    std::vector<RatVec> s2;
    for (int j = 0; j < 4; ++j)
        s2.push_back(RatVec{Q(rng.int_in(1, 1000000)), Q(rng.int_in(1, 1000000)),
                            Q(rng.int_in(1, 1000000))});
    CHECK(is_center_generic(s2).ok);

    // center-generic parameters never allow three collinear centers
    CameraArrangement a({Camera(RationalMatrix(3, 4, {Q(1), Q(0), Q(0), s2[0][0], Q(0), Q(1), Q(0), s2[0][1], Q(0), Q(0), Q(1), s2[0][2]})),
                         Camera(RationalMatrix(3, 4, {Q(1), Q(0), Q(0), s2[1][0], Q(0), Q(1), Q(0), s2[1][1], Q(0), Q(0), Q(1), s2[1][2]})),
                         Camera(RationalMatrix(3, 4, {Q(1), Q(0), Q(0), s2[2][0], Q(0), Q(1), Q(0), s2[2][1], Q(0), Q(0), Q(1), s2[2][2]})),
                         Camera(RationalMatrix(3, 4, {Q(1), Q(0), Q(0), s2[3][0], Q(0), Q(1), Q(0), s2[3][1], Q(0), Q(0), Q(1), s2[3][2]}))});
    CHECK(collinear_subsets(a).maximal_sets.empty());

    // planted collinearity: arithmetic-progression centers zero out minors
    std::vector<RatVec> s3{{Q(1), Q(11), Q(21)}, {Q(2), Q(12), Q(22)}, {Q(3), Q(13), Q(23)}};
    auto rep3 = is_center_generic(s3);
    CHECK_FALSE(rep3.ok);
    bool has_minor_violation = false;
    for (const auto& v : rep3.violations)
        if (v.description.find("minor") != std::string::npos) has_minor_violation = true;
    CHECK(has_minor_violation);
}

TEST_CASE("baseline dual frame") {
    // x-axis baseline: complement is span{e2, e3}
    const auto frame = baseline_dual_frame({e1, e4});
    CHECK(frame.f1 == e2);
    CHECK(frame.f2 == e3);
    CHECK(frame.f3 == RatVec{Q(0), Q(1), Q(1), Q(0)});
    // disjointness: stacked matrix has rank 4
    CHECK(RationalMatrix::from_rows({frame.base_a, frame.base_b, frame.f1, frame.f2}).rank() == 4);
    // f1, f2, f3 pairwise projectively distinct
    CHECK_FALSE(proportional(frame.f1, frame.f2));
    CHECK_FALSE(proportional(frame.f1, frame.f3));
    CHECK_FALSE(proportional(frame.f2, frame.f3));

    CHECK_THROWS_AS(baseline_dual_frame({e1, e2, e3}), InputError);  // not collinear

    // generic collinear centers
    SeededRng rng(12);
    for (int rep = 0; rep < 5; ++rep) {
        RatVec p(4), q(4);
        for (int i = 0; i < 4; ++i) {
            p[i] = Q(rng.int_in(-9, 9));
            q[i] = Q(rng.int_in(-9, 9));
        }
        if (is_zero_vec(p) || is_zero_vec(q) || proportional(p, q)) continue;
        const RatVec mid = add(p, q);
        const auto fr = baseline_dual_frame({p, q, mid});
        CHECK(RationalMatrix::from_rows({fr.base_a, fr.base_b, fr.f1, fr.f2}).rank() == 4);
    }
}

TEST_CASE("e point") {
    const auto frame = baseline_dual_frame({e1, e4});
    // both correction terms vanish -> e = c
    const RatVec h0{Q(1), Q(0), Q(0), Q(-2)};  // h.f1 = h.f2 = 0
    const RatVec c{Q(3), Q(0), Q(0), Q(-1)};
    CHECK(e_point(c, h0, frame.f1, frame.f2) == c);

    // worked translational values: center (v,0,0,-1), h = (l1,l2,l3,v*l1)
    const Rational v(5);
    const RatVec l{Q(2), Q(3), Q(7)};
    const RatVec center{v, Q(0), Q(0), Q(-1)};
    const RatVec h{l[0], l[1], l[2], v * l[0]};
    CHECK(e_point(center, h, frame.f1, frame.f2) == RatVec{v, -l[2], l[1], Q(-1)});

    // h.e == h.c identically
    SeededRng rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        RatVec hh(4), cc(4);
        for (int i = 0; i < 4; ++i) {
            hh[i] = Q(rng.int_in(-9, 9));
            cc[i] = Q(rng.int_in(-9, 9));
        }
        const RatVec e = e_point(cc, hh, frame.f1, frame.f2);
        CHECK(dot(hh, e) == dot(hh, cc));
    }
}

TEST_CASE("F line") {
    const auto frame = baseline_dual_frame({e1, e4});
    const RatVec c{Q(2), Q(0), Q(0), Q(-1)};
    // plane case: E* inside the back-projected plane
    const RatVec h0{Q(1), Q(0), Q(0), Q(2)};
    CHECK(f_line(c, h0, frame).kind == FLine::Kind::Plane);

    // line case: the second span point is the intersection with E*, on H
    const RatVec h{Q(2), Q(3), Q(-1), Q(4)};
    const auto fl = f_line(c, h, frame);
    REQUIRE(fl.kind == FLine::Kind::Line);
    CHECK(dot(h, fl.span[1]) == Q(0));
    CHECK(RationalMatrix::from_rows({fl.span[1], frame.f1, frame.f2}).rank() == 2);

    // with the center on H (the real back-projection situation), the whole
    // F line lies in H and passes through the e point
    RatVec con{Q(1), Q(2), Q(4), Q(-1)};  // h.con = 2+6-4-4 = 0
    REQUIRE(dot(h, con) == Q(0));
    const auto fl2 = f_line(con, h, frame);
    const RatVec e = e_point(con, h, frame.f1, frame.f2);
    CHECK(RationalMatrix::from_rows({fl2.span[0], fl2.span[1], e}).rank() == 2);
    // both span points annihilated by h when the center lies on H
    CHECK(dot(h, fl2.span[0]) == Q(0));
    CHECK(dot(h, fl2.span[1]) == Q(0));
    // e off the baseline and off E*
    CHECK(RationalMatrix::from_rows({e, e1, e4}).rank() == 3);
    CHECK(RationalMatrix::from_rows({e, frame.f1, frame.f2}).rank() == 3);

    CHECK_THROWS_AS(f_line(c, RatVec{Q(0), Q(0), Q(0), Q(0)}, frame), InputError);
}

TEST_CASE("veronese") {
    CHECK(veronese(e1) == RatVec{Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)});
    CHECK(veronese(RatVec{Q(1), Q(1), Q(0), Q(0)}) ==
          RatVec{Q(1), Q(1), Q(0), Q(0), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)});
    SeededRng rng(16);
    for (int rep = 0; rep < 10; ++rep) {
        RatVec p(4);
        for (int i = 0; i < 4; ++i) p[i] = Q(rng.int_in(-9, 9));
        const Rational lam(rng.nonzero_int(7));
        CHECK(veronese(scale(p, lam)) == scale(veronese(p), lam * lam));
    }
}

TEST_CASE("quadric fit") {
    SeededRng rng(18);
    // 9 generic points: one quadric through them
    std::vector<RatVec> pts;
    for (int k = 0; k < 9; ++k) {
        RatVec p(4);
        for (int i = 0; i < 4; ++i) p[i] = Q(rng.int_in(-20, 20));
        pts.push_back(p);
    }
    CHECK(quadric_fit(pts).size() == 1);

    // points on xw - yz = 0: the fitted space contains that quadric
    std::vector<RatVec> on_quadric;
    for (int k = 0; k < 8; ++k) {
        // (a, b, ac, bc) satisfies xw = yz
        const Rational a(rng.int_in(-9, 9)), b(rng.int_in(-9, 9)), c(rng.int_in(-9, 9));
        on_quadric.push_back(RatVec{a, b, a * c, b * c});
    }
    const RatVec theta{Q(0), Q(0), Q(0), Q(1), Q(0), Q(-1), Q(0), Q(0), Q(0), Q(0)};
    for (const auto& th : quadric_fit(on_quadric))
        CHECK(dot(th, veronese(on_quadric[0])) == Q(0));
    bool contains = false;
    for (const auto& p : on_quadric) CHECK(dot(theta, veronese(p)) == Q(0));
    // theta is in the fitted nullspace: residual of stacking theta onto the
    // fitted basis does not increase the rank
    auto basis = quadric_fit(on_quadric);
    std::vector<RatVec> rows = basis;
    rows.push_back(theta);
    contains = RationalMatrix::from_rows(rows).rank() == static_cast<int>(basis.size());
    CHECK(contains);
    CHECK_THROWS_AS(quadric_fit(std::vector<RatVec>(11, e1)), ShapeError);
}

TEST_CASE("phi determinant vanishes on projections through collinear cameras") {
    CameraArrangement coll({collinear_cam(0), collinear_cam(1), collinear_cam(-1),
                            collinear_cam(2)});
    std::vector<RatVec> centers;
    for (int i = 0; i < 4; ++i) centers.push_back(coll.camera(i).center());
    const auto frame = baseline_dual_frame(centers);
    SeededRng rng(20);
    for (int rep = 0; rep < 10; ++rep) {
        const Line3D l = random_line_avoiding_centers(coll, rng);
        const LineTuple t = joint_camera_map(coll, l);
        const auto phi = phi_matrix(coll, {0, 1, 2, 3}, frame, t.lines);
        CHECK(phi.det() == Q(0));
    }
    // a random tuple is generically off the variety
    RatVec r1{Q(3), Q(5), Q(-2)}, r2{Q(1), Q(-4), Q(2)}, r3{Q(7), Q(2), Q(9)}, r4{Q(-3), Q(1), Q(8)};
    const auto phi = phi_matrix(coll, {0, 1, 2, 3}, frame, {r1, r2, r3, r4});
    CHECK(phi.det() != Q(0));
}
