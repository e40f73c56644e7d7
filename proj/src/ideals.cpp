#include "lmv/ideals.hpp"

#include <algorithm>

namespace lmv {

std::string GeneratorTag::str() const {
    std::string s = kind == Kind::Minor ? "minor(rows " : "phi(sigma ";
    const std::vector<int>& first = kind == Kind::Minor ? rows : cols;
    for (std::size_t i = 0; i < first.size(); ++i)
        s += (i ? "," : "") + std::to_string(first[i] + 1);
    if (kind == Kind::Minor) {
        s += "; cols ";
        for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i] + 1);
    }
    return s + ")";
}

namespace {

MonomialOrder canonical_order(const VariableLayout& layout) {
    return layout.nblocks() > 1 ? block_product_order() : grevlex_order();
}

LayoutPtr layout_for(const SymbolicArrangement& s) {
    switch (s.mode) {
        case SymbolicArrangement::Mode::Numeric: return line_layout(s.m);
        case SymbolicArrangement::Mode::Translational: return line_translation_layout(s.m);
        case SymbolicArrangement::Mode::Collinear: return line_collinear_layout(s.m);
    }
    throw InputError("bad arrangement mode");
}

Polynomial line_var(const LayoutPtr& l, MonomialOrder ord, int i, int j) {
    return Polynomial::variable(l, ord, l->index_of(line_var_name(i, j)));
}

}  // namespace

PolyMatrix build_M(const SymbolicArrangement& s) {
    const int m = s.m;
    LayoutPtr layout = layout_for(s);
    const MonomialOrder ord = canonical_order(*layout);
    PolyMatrix M(layout, ord, 4, m);
    for (int j = 0; j < m; ++j) {
        switch (s.mode) {
            case SymbolicArrangement::Mode::Numeric: {
                const RationalMatrix& C = s.cameras->camera(j).matrix();
                for (int r = 0; r < 4; ++r) {
                    Polynomial e = Polynomial::zero(layout, ord);
                    for (int i = 0; i < 3; ++i)
                        if (!C.at(i, r).is_zero())
                            e = e + line_var(layout, ord, i + 1, j + 1).scaled(C.at(i, r));
                    M.at(r, j) = e;
                }
                break;
            }
            case SymbolicArrangement::Mode::Translational: {
                for (int r = 0; r < 3; ++r) M.at(r, j) = line_var(layout, ord, r + 1, j + 1);
                Polynomial e = Polynomial::zero(layout, ord);
                for (int i = 0; i < 3; ++i) {
                    Polynomial t =
                        Polynomial::variable(layout, ord, layout->index_of(translation_var_name(i + 1, j + 1)));
                    e = e + t * line_var(layout, ord, i + 1, j + 1);
                }
                M.at(3, j) = e;
                break;
            }
            case SymbolicArrangement::Mode::Collinear: {
                for (int r = 0; r < 3; ++r) M.at(r, j) = line_var(layout, ord, r + 1, j + 1);
                Polynomial v =
                    Polynomial::variable(layout, ord, layout->index_of(collinear_var_name(j + 1)));
                M.at(3, j) = v * line_var(layout, ord, 1, j + 1);
                break;
            }
        }
    }
    return M;
}

IdealPresentation minor_ideal(const SymbolicArrangement& s) {
    if (s.m < 2) throw InputError("minor ideal needs at least two cameras");
    PolyMatrix M = build_M(s);
    IdealPresentation out{M.layout_ptr(), M.order(), {}, {}};
    for (const auto& rows : subsets_of_size(4, 3)) {
        for (const auto& cols : subsets_of_size(s.m, 3)) {
            Polynomial minor = M.submatrix(rows, cols).det();
            out.generators.push_back(std::move(minor));
            out.tags.push_back({GeneratorTag::Kind::Minor, rows, cols});
        }
    }
    return out;
}

namespace {

std::vector<Polynomial> to_poly_vec(const LayoutPtr& l, MonomialOrder ord, const RatVec& v) {
    std::vector<Polynomial> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(Polynomial::constant(l, ord, x));
    return out;
}

Polynomial poly_dot(const std::vector<Polynomial>& a, const RatVec& b) {
    Polynomial s = Polynomial::zero(a[0].layout_ptr(), a[0].order());
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i].scaled(b[i]);
    return s;
}

// e = c - (h.f2) f1 + (h.f1) f2 with polynomial h (and possibly polynomial c).
std::vector<Polynomial> poly_e_point(const std::vector<Polynomial>& center,
                                     const std::vector<Polynomial>& h, const RatVec& f1,
                                     const RatVec& f2) {
    const Polynomial hf2 = poly_dot(h, f2);
    const Polynomial hf1 = poly_dot(h, f1);
    std::vector<Polynomial> e;
    e.reserve(4);
    for (int r = 0; r < 4; ++r)
        e.push_back(center[r] - hf2.scaled(f1[r]) + hf1.scaled(f2[r]));
    return e;
}

std::vector<Polynomial> poly_veronese(const std::vector<Polynomial>& p) {
    return {p[0] * p[0], p[0] * p[1], p[0] * p[2], p[0] * p[3], p[1] * p[1],
            p[1] * p[2], p[1] * p[3], p[2] * p[2], p[2] * p[3], p[3] * p[3]};
}

// 10x10 Phi with constant baseline/frame columns and four symbolic e-columns.
PolyMatrix phi_symbolic(const LayoutPtr& layout, MonomialOrder ord,
                        const std::vector<RatVec>& baseline3, const DualFrame& frame,
                        const std::vector<std::vector<Polynomial>>& e_points) {
    PolyMatrix phi(layout, ord, 10, 10);
    auto set_col = [&](int j, const std::vector<Polynomial>& col) {
        for (int r = 0; r < 10; ++r) phi.at(r, j) = col[r];
    };
    for (int j = 0; j < 3; ++j)
        set_col(j, to_poly_vec(layout, ord, veronese(baseline3[j])));
    set_col(3, to_poly_vec(layout, ord, veronese(frame.f1)));
    set_col(4, to_poly_vec(layout, ord, veronese(frame.f2)));
    set_col(5, to_poly_vec(layout, ord, veronese(frame.f3)));
    for (int k = 0; k < 4; ++k) set_col(6 + k, poly_veronese(e_points[k]));
    return phi;
}

}  // namespace

IdealPresentation extended_ideal(const CameraArrangement& a) {
    IdealPresentation out = minor_ideal(SymbolicArrangement::numeric(a));
    const LayoutPtr layout = out.layout;
    const MonomialOrder ord = out.order;
    const auto report = collinear_subsets(a);
    for (const CollinearSet& set : report.maximal_sets) {
        if (set.indices.size() < 4) continue;
        std::vector<RatVec> centers;
        for (int i : set.indices) centers.push_back(a.camera(i).center());
        const DualFrame frame = baseline_dual_frame(centers);
        const int n = static_cast<int>(set.indices.size());
        for (const auto& pick : subsets_of_size(n, 4)) {
            std::vector<int> sigma;
            for (int p : pick) sigma.push_back(set.indices[p]);
            std::vector<RatVec> baseline3{a.camera(sigma[0]).center(), a.camera(sigma[1]).center(),
                                          a.camera(sigma[2]).center()};
            std::vector<std::vector<Polynomial>> es;
            for (int idx : sigma) {
                const RationalMatrix& C = a.camera(idx).matrix();
                std::vector<Polynomial> h;
                for (int r = 0; r < 4; ++r) {
                    Polynomial e = Polynomial::zero(layout, ord);
                    for (int i = 0; i < 3; ++i)
                        if (!C.at(i, r).is_zero())
                            e = e + line_var(layout, ord, i + 1, idx + 1).scaled(C.at(i, r));
                    h.push_back(std::move(e));
                }
                es.push_back(poly_e_point(to_poly_vec(layout, ord, a.camera(idx).center()), h,
                                          frame.f1, frame.f2));
            }
            Polynomial det = phi_symbolic(layout, ord, baseline3, frame, es).det();
            out.generators.push_back(std::move(det));
            out.tags.push_back({GeneratorTag::Kind::Phi, {}, sigma});
        }
    }
    return out;
}

IdealPresentation it_ideal(int m) {
    if (m < 3) throw InputError("indeterminate translation ideal needs m >= 3");
    return minor_ideal(SymbolicArrangement::translational(m));
}

PolyMatrix ict_phi_matrix(int m, const std::vector<int>& sigma) {
    if (m < 4) throw InputError("collinear Phi matrix needs m >= 4");
    if (sigma.size() != 4) throw ShapeError("Phi matrix needs a 4-element camera subset");
    LayoutPtr layout = line_collinear_layout(m);
    const MonomialOrder ord = block_product_order();

    // canonical baseline points and frame shared by all collinear cameras
    const RatVec e1{Rational(1), Rational(0), Rational(0), Rational(0)};
    const RatVec e4{Rational(0), Rational(0), Rational(0), Rational(1)};
    DualFrame frame;
    frame.base_a = e1;
    frame.base_b = e4;
    frame.f1 = RatVec{Rational(0), Rational(1), Rational(0), Rational(0)};
    frame.f2 = RatVec{Rational(0), Rational(0), Rational(1), Rational(0)};
    frame.f3 = RatVec{Rational(0), Rational(1), Rational(1), Rational(0)};
    const std::vector<RatVec> baseline3{e1, e4, add(e1, e4)};

    std::vector<std::vector<Polynomial>> es;
    for (int idx : sigma) {
        Polynomial v =
            Polynomial::variable(layout, ord, layout->index_of(collinear_var_name(idx + 1)));
        // center (v_i, 0, 0, -1); h = (l1, l2, l3, v l1)
        std::vector<Polynomial> center{v, Polynomial::zero(layout, ord),
                                       Polynomial::zero(layout, ord),
                                       Polynomial::constant(layout, ord, Rational(-1))};
        std::vector<Polynomial> h{line_var(layout, ord, 1, idx + 1),
                                  line_var(layout, ord, 2, idx + 1),
                                  line_var(layout, ord, 3, idx + 1),
                                  v * line_var(layout, ord, 1, idx + 1)};
        es.push_back(poly_e_point(center, h, frame.f1, frame.f2));
    }
    return phi_symbolic(layout, ord, baseline3, frame, es);
}

IdealPresentation ict_ideal(int m) {
    if (m < 4) throw InputError("indeterminate collinear translation ideal needs m >= 4");
    IdealPresentation out = minor_ideal(SymbolicArrangement::collinear(m));
    for (const auto& sigma : subsets_of_size(m, 4)) {
        out.generators.push_back(ict_phi_matrix(m, sigma).det());
        out.tags.push_back({GeneratorTag::Kind::Phi, {}, sigma});
    }
    return out;
}

std::vector<Rational> parameter_values(const std::vector<RatVec>& s) {
    const int m = static_cast<int>(s.size());
    std::vector<Rational> values;
    values.reserve(3 * m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < m; ++j) {
            if (s[j].size() != 3) throw ShapeError("translation vectors must have 3 entries");
            values.push_back(s[j][i]);
        }
    return values;
}

namespace {

std::vector<VarImage> specialization_images(const VariableLayout& from, const LayoutPtr& target,
                                            const std::vector<Rational>& values) {
    if (from.nblocks() != 2) throw LayoutMismatch("specialization needs a parameter block");
    const int nparams = from.block_end(1) - from.block_begin(1);
    if (static_cast<int>(values.size()) != nparams)
        throw ShapeError("parameter value count mismatch");
    std::vector<VarImage> images;
    images.reserve(from.nvars());
    for (int i = 0; i < from.nvars(); ++i) {
        if (i < from.block_begin(1)) images.push_back(VarImage::to_var(target->index_of(from.var_name(i))));
        else images.push_back(VarImage::to_const(values[i - from.block_begin(1)]));
    }
    return images;
}

}  // namespace

IdealPresentation specialize(const IdealPresentation& p, const std::vector<Rational>& values) {
    const int m = camera_count(*p.layout);
    LayoutPtr target = line_layout(m);
    const MonomialOrder ord = grevlex_order();
    const auto images = specialization_images(*p.layout, target, values);
    IdealPresentation out{target, ord, {}, {}};
    for (std::size_t k = 0; k < p.generators.size(); ++k) {
        Polynomial img = substitute(p.generators[k], target, ord, images);
        if (img.is_zero()) continue;
        out.generators.push_back(std::move(img));
        out.tags.push_back(p.tags[k]);
    }
    return out;
}

Polynomial lead_parameter_coefficient(const Polynomial& g) {
    const VariableLayout& layout = g.layout();
    if (layout.nblocks() != 2) throw LayoutMismatch("polynomial has no parameter block");
    if (g.is_zero()) throw InputError("zero polynomial");
    const Polynomial gn = g.normalized(block_product_order());
    const int split = layout.first_block_end();
    const Monomial& lead = gn.lead_monomial();
    std::vector<Term> coeff;
    for (const Term& t : gn.terms()) {
        bool same_line_part = true;
        for (int i = 0; i < split && same_line_part; ++i)
            if (t.mono.exp(i) != lead.exp(i)) same_line_part = false;
        if (!same_line_part) continue;
        Monomial param(layout);
        for (int i = split; i < layout.nvars(); ++i) param.set_exp(i, t.mono.exp(i));
        coeff.push_back({param, t.coef});
    }
    return Polynomial::from_terms(g.layout_ptr(), block_product_order(), std::move(coeff));
}

GroebnerBasis specialize(const GroebnerBasis& g, const std::vector<Rational>& values) {
    if (!g.layout) throw InputError("empty basis has no layout");
    const int m = camera_count(*g.layout);
    LayoutPtr target = line_layout(m);
    const MonomialOrder ord = grevlex_order();
    const auto images = specialization_images(*g.layout, target, values);

    RatVec full_values(g.layout->nvars(), Rational(1));
    for (int i = g.layout->block_begin(1); i < g.layout->nvars(); ++i)
        full_values[i] = values[i - g.layout->block_begin(1)];

    std::vector<Polynomial> elems;
    elems.reserve(g.elements.size());
    for (const Polynomial& e : g.elements) {
        const Polynomial coeff = lead_parameter_coefficient(e);
        // evaluate the parameter coefficient (line exponents in it are zero)
        if (coeff.evaluate(full_values).is_zero())
            throw SpecializationDegeneracy(
                "leading coefficient vanishes at the specialization values", coeff.str());
        elems.push_back(substitute(e, target, ord, images));
    }
    GroebnerBasis out{target, ord, interreduce(std::move(elems), ord)};
    return out;
}

MembershipResult tuple_membership(const CameraArrangement& a, const LineTuple& ell) {
    const int m = a.size();
    if (ell.size() != m) throw ShapeError("tuple length != camera count");
    for (const RatVec& l : ell.lines) {
        if (l.size() != 3) throw ShapeError("image lines must have 3 entries");
        if (is_zero_vec(l)) throw InputError("zero image line component");
    }
    RationalMatrix M(4, m);
    for (int j = 0; j < m; ++j) {
        const RatVec h = back_projected_plane(a.camera(j), ell.lines[j]);
        for (int r = 0; r < 4; ++r) M.at(r, j) = h[r];
    }
    MembershipResult res;
    if (M.rank() > 2) {
        for (const auto& rows : subsets_of_size(4, 3)) {
            for (const auto& cols : subsets_of_size(m, 3)) {
                const Rational val = M.submatrix(rows, cols).det();
                if (!val.is_zero()) {
                    res.member = false;
                    res.certificate = {{GeneratorTag::Kind::Minor, rows, cols}, val};
                    return res;
                }
            }
        }
    }
    const auto report = collinear_subsets(a);
    for (const CollinearSet& set : report.maximal_sets) {
        if (set.indices.size() < 4) continue;
        std::vector<RatVec> centers;
        for (int i : set.indices) centers.push_back(a.camera(i).center());
        const DualFrame frame = baseline_dual_frame(centers);
        const int n = static_cast<int>(set.indices.size());
        for (const auto& pick : subsets_of_size(n, 4)) {
            std::vector<int> sigma;
            std::vector<RatVec> ells;
            for (int p : pick) {
                sigma.push_back(set.indices[p]);
                ells.push_back(ell.lines[set.indices[p]]);
            }
            const Rational det = phi_matrix(a, sigma, frame, ells).det();
            if (!det.is_zero()) {
                res.member = false;
                res.certificate = {{GeneratorTag::Kind::Phi, {}, sigma}, det};
                return res;
            }
        }
    }
    res.member = true;
    return res;
}

bool poly_membership(const Polynomial& f, const GroebnerBasis& g) {
    if (!g.layout) return f.is_zero();
    if (f.layout() != *g.layout) throw LayoutMismatch("polynomial not in the basis layout");
    return reduces_to_zero(f, g.elements, g.order);
}

int jacobian_rank_at(const IdealPresentation& p, const RatVec& point) {
    if (static_cast<int>(point.size()) != p.layout->nvars())
        throw ShapeError("point dimension != variable count");
    for (const Polynomial& g : p.generators)
        if (!g.evaluate(point).is_zero())
            throw PointNotOnVariety("point does not lie on the zero set of the presentation");
    RationalMatrix jac(static_cast<int>(p.generators.size()), p.layout->nvars());
    for (std::size_t k = 0; k < p.generators.size(); ++k)
        for (int v = 0; v < p.layout->nvars(); ++v)
            jac.at(static_cast<int>(k), v) = p.generators[k].derivative(v).evaluate(point);
    return jac.rank();
}

int cone_parametrization_jacobian_rank(const CameraArrangement& a, const RatVec& x,
                                       const RatVec& y, const RatVec& lambda) {
    const int m = a.size();
    if (x.size() != 4 || y.size() != 4) throw ShapeError("x, y must be 4-vectors");
    if (static_cast<int>(lambda.size()) != m) throw ShapeError("lambda must have one entry per camera");
    RationalMatrix jac(3 * m, 8 + m);
    RatVec basis_k(4);
    for (int i = 0; i < m; ++i) {
        const RationalMatrix& C = a.camera(i).matrix();
        const RatVec cx = C.apply(x);
        const RatVec cy = C.apply(y);
        const RatVec cxy = cross3(cx, cy);
        for (int k = 0; k < 4; ++k) {
            std::fill(basis_k.begin(), basis_k.end(), Rational(0));
            basis_k[k] = Rational(1);
            const RatVec cek = C.apply(basis_k);
            const RatVec dx = scale(cross3(cek, cy), lambda[i]);
            const RatVec dy = scale(cross3(cx, cek), lambda[i]);
            for (int r = 0; r < 3; ++r) {
                jac.at(3 * i + r, k) = dx[r];
                jac.at(3 * i + r, 4 + k) = dy[r];
            }
        }
        for (int r = 0; r < 3; ++r) jac.at(3 * i + r, 8 + i) = cxy[r];
    }
    return jac.rank();
}

LineTuple spurious_rank2_tuple(const CameraArrangement& a, SeededRng& rng) {
    const auto report = collinear_subsets(a);
    if (report.maximal_sets.size() != 1 ||
        static_cast<int>(report.maximal_sets[0].indices.size()) != a.size())
        throw InputError("spurious tuple construction needs an all-collinear arrangement");
    std::vector<RatVec> centers;
    for (int i = 0; i < a.size(); ++i) centers.push_back(a.camera(i).center());
    // two independent planes through the baseline
    const auto pencil = RationalMatrix::from_rows({centers[0], centers[1]}).kernel_basis();
    for (int attempt = 0; attempt < 200; ++attempt) {
        LineTuple out;
        bool ok = true;
        for (int i = 0; i < a.size() && ok; ++i) {
            const RatVec plane = add(scale(pencil[0], Rational(rng.int_in(-9, 9))),
                                     scale(pencil[1], Rational(rng.int_in(-9, 9))));
            if (is_zero_vec(plane)) {
                ok = false;
                break;
            }
            // solve C^T l = plane; consistent because the plane contains the center
            RatVec l;
            try {
                l = a.camera(i).matrix().transpose().solve(plane);
            } catch (const InputError&) {
                ok = false;
                break;
            }
            if (is_zero_vec(l)) {
                ok = false;
                break;
            }
            out.lines.push_back(primitive(l));
        }
        if (!ok) continue;
        // reject the rare draw that happens to satisfy the Phi condition
        if (!tuple_membership(a, out).member) return out;
    }
    throw BudgetExceeded("could not construct a spurious rank-2 tuple", 0);
}

}  // namespace lmv
