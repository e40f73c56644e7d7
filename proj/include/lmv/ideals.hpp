#pragma once

#include <optional>

#include "lmv/geometry.hpp"
#include "lmv/groebner.hpp"
#include "lmv/polymatrix.hpp"

namespace lmv {

/// Camera arrangement whose entries may be ring variables: concrete rational
/// cameras, translational cameras [I3 | t_i], or collinear translational
/// cameras [I3 | (v_i,0,0)^T].
struct SymbolicArrangement {
    enum class Mode { Numeric, Translational, Collinear };

    Mode mode;
    std::optional<CameraArrangement> cameras;  // Numeric only
    int m;

    static SymbolicArrangement numeric(CameraArrangement a) {
        const int m = a.size();
        return {Mode::Numeric, std::move(a), m};
    }
    static SymbolicArrangement translational(int m) { return {Mode::Translational, std::nullopt, m}; }
    static SymbolicArrangement collinear(int m) { return {Mode::Collinear, std::nullopt, m}; }
};

struct GeneratorTag {
    enum class Kind { Minor, Phi };
    Kind kind;
    std::vector<int> rows;   // Minor: 0-based row set of M(l)
    std::vector<int> cols;   // Minor: 0-based column set; Phi: 0-based sigma

    std::string str() const;
    friend bool operator==(const GeneratorTag& a, const GeneratorTag& b) {
        return a.kind == b.kind && a.rows == b.rows && a.cols == b.cols;
    }
};

struct IdealPresentation {
    LayoutPtr layout;
    MonomialOrder order;
    std::vector<Polynomial> generators;
    std::vector<GeneratorTag> tags;

    std::size_t size() const { return generators.size(); }
};

/// The 4 x m matrix whose column i is C_i^T l_i with symbolic l_i.
PolyMatrix build_M(const SymbolicArrangement& s);

/// All 3x3 minors of M(l), row sets and column sets ascending lexicographic,
/// each minor expanded along its first row. Empty for m = 2.
IdealPresentation minor_ideal(const SymbolicArrangement& s);

/// Minor ideal plus det Phi for every 4-subset of every maximal collinear set.
/// Identical to the minor ideal when no four cameras are collinear.
IdealPresentation extended_ideal(const CameraArrangement& a);

/// Indeterminate translation ideal in C[l, t], m >= 3.
IdealPresentation it_ideal(int m);

/// Indeterminate collinear translation ideal in C[l, v], m >= 4. The Phi
/// baseline columns use the canonical points e1, e4, e1+e4 of the common
/// baseline and the frame f = (e2, e3, e2+e3).
IdealPresentation ict_ideal(int m);

/// The symbolic 10x10 Phi matrix (entries in C[l, v]) entering ict_ideal for
/// one 4-subset sigma.
PolyMatrix ict_phi_matrix(int m, const std::vector<int>& sigma);

/// Parameter values for the t block from m translation 3-vectors.
std::vector<Rational> parameter_values(const std::vector<RatVec>& s);

/// Substitutes parameter-block values; generators mapping to zero are dropped
/// together with their tags.
IdealPresentation specialize(const IdealPresentation& p, const std::vector<Rational>& values);

/// Specializes a basis computed under the block product order. Every
/// element's leading parameter coefficient must be nonzero at the values
/// (otherwise SpecializationDegeneracy naming the coefficient); the image is
/// re-reduced and returned as a claimed GRevLex basis in the line variables.
GroebnerBasis specialize(const GroebnerBasis& g, const std::vector<Rational>& values);

/// Coefficient (a polynomial in the parameter subring) of the leading
/// line-block monomial of g; g must live in a two-block layout.
Polynomial lead_parameter_coefficient(const Polynomial& g);

struct MembershipCertificate {
    GeneratorTag tag;
    Rational value;
};

struct MembershipResult {
    bool member = false;
    std::optional<MembershipCertificate> certificate;
};

/// Exact test whether a line tuple lies on the multiview variety: rank of
/// M(l) at most 2, and det Phi vanishing for every collinear 4-subset. The
/// certificate is the first violated minor or Phi determinant.
MembershipResult tuple_membership(const CameraArrangement& a, const LineTuple& ell);

/// f reduces to zero modulo the basis.
bool poly_membership(const Polynomial& f, const GroebnerBasis& g);

/// Exact rank of the Jacobian of the presented generators at a point of
/// their common zero set.
int jacobian_rank_at(const IdealPresentation& p, const RatVec& point);

/// Rank of the Jacobian of (x, y, lambda) -> (lambda_i (C_i x) x (C_i y))_i
/// at the given parameters: a 3m x (8+m) exact rank computation.
int cone_parametrization_jacobian_rank(const CameraArrangement& a, const RatVec& x,
                                       const RatVec& y, const RatVec& lambda);

/// Deterministic tuple on the rank <= 2 locus of an all-collinear arrangement
/// that generically fails the Phi condition: images of planes in the pencil
/// through the baseline.
LineTuple spurious_rank2_tuple(const CameraArrangement& a, SeededRng& rng);

}  // namespace lmv
