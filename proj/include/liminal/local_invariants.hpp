#ifndef LIMINAL_LOCAL_INVARIANTS_HPP
#define LIMINAL_LOCAL_INVARIANTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "liminal/quotient.hpp"
#include "liminal/weight_system.hpp"

namespace liminal {

// Diagonal: a positive weight system for the given coordinates was found.
// CoordinateChange: mu = tau, so the germ is quasihomogeneous after some
// analytic change of coordinates, but not diagonally in these coordinates.
// No: mu != tau.
enum class Quasihomogeneity { Diagonal, CoordinateChange, No };

struct AnalysisOptions {
    EngineLimits limits;
    std::uint64_t materialize_cap = Staircase::kDefaultMaterializeCap;
};

// Everything local analysis produces for one germ: the defining polynomial,
// the Milnor and Tyurina numbers with their monomial bases, and the weight
// system when one exists. mu = 0 marks a smooth point.
struct LocalSingularity {
    Polynomial f;
    std::size_t n = 0;  // dim X = (number of variables) - 1
    Integer milnor = 0;
    Integer tyurina = 0;
    std::optional<WeightSystem> weight_system;
    Staircase milnor_basis;
    Staircase tyurina_basis;
    // The global critical scheme had points away from the origin and the
    // origin factor was split off.
    bool localized = false;

    bool smooth_point() const { return milnor == 0; }
    Quasihomogeneity quasihomogeneity() const {
        if (weight_system) return Quasihomogeneity::Diagonal;
        return milnor == tyurina ? Quasihomogeneity::CoordinateChange : Quasihomogeneity::No;
    }
};

namespace detail {

struct IdealDimension {
    Integer dim;
    Staircase basis;
    bool localized;
};

// Dimension of the origin-supported factor of R/I with its monomial basis.
// For a weight-graded ideal the critical scheme is a cone, so a finite
// quotient is automatically supported at the origin and no splitting is
// needed.
inline IdealDimension origin_dimension(const GroebnerBasis& gb, const AnalysisOptions& opt,
                                       bool graded) {
    Staircase st;
    try {
        st = standard_monomials(gb, opt.materialize_cap);
    } catch (const InfiniteDimensionalError& e) {
        throw NotIsolatedError(std::string("not an isolated singularity: ") + e.what());
    }
    if (graded || st.dimension() == 0) return {st.dimension(), std::move(st), false};
    if (is_origin_only(gb, st)) return {st.dimension(), std::move(st), false};
    OriginLocalization loc = origin_localize(gb, st);
    return {Integer(static_cast<long>(loc.dimension)), std::move(loc.basis), true};
}

}  // namespace detail

// Full local analysis of the germ V(f) at the origin.
inline LocalSingularity analyze_local(const Polynomial& f, const AnalysisOptions& opt = {}) {
    if (f.is_zero()) throw DomainError("the zero polynomial does not define a hypersurface germ");
    if (f.is_constant()) throw DomainError("constant polynomial does not define a germ");
    if (!f.constant_term().is_zero())
        throw DomainError("hypersurface does not pass through the origin");

    LocalSingularity sing;
    sing.f = f;
    sing.n = f.nvars() - 1;
    sing.weight_system = detect_weight_system(f);

    MonomialOrder order = sing.weight_system
                              ? MonomialOrder::weighted_grevlex(sing.weight_system->weights)
                              : MonomialOrder::grevlex();

    std::vector<Polynomial> jacobian;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Polynomial d = f.derivative(i);
        if (!d.is_zero()) jacobian.push_back(std::move(d));
    }

    GroebnerBasis gb_j = buchberger(jacobian, order, opt.limits);
    auto milnor = detail::origin_dimension(gb_j, opt, sing.weight_system.has_value());
    sing.milnor = milnor.dim;
    sing.milnor_basis = milnor.basis;
    sing.localized = milnor.localized;

    if (sing.milnor == 0) {
        sing.tyurina = 0;
        sing.tyurina_basis = milnor.basis;
        return sing;  // smooth point
    }

    if (normal_form(f, gb_j).is_zero()) {
        // f lies in its Jacobian ideal (always the case under a weight
        // system, by the Euler identity), so T^1 has the same basis.
        sing.tyurina = sing.milnor;
        sing.tyurina_basis = sing.milnor_basis;
    } else {
        std::vector<Polynomial> gens = jacobian;
        gens.push_back(f);
        GroebnerBasis gb_t = buchberger(gens, order, opt.limits);
        auto tyurina = detail::origin_dimension(gb_t, opt, sing.weight_system.has_value());
        sing.tyurina = tyurina.dim;
        sing.tyurina_basis = tyurina.basis;
        sing.localized = sing.localized || tyurina.localized;
    }

    if (sing.tyurina > sing.milnor)
        throw Error("tyurina number exceeded milnor number; computation is inconsistent");
    if (sing.weight_system && sing.tyurina != sing.milnor)
        throw Error("mu != tau under a weight system; computation is inconsistent");
    return sing;
}

inline Integer milnor_number(const Polynomial& f, const AnalysisOptions& opt = {}) {
    return analyze_local(f, opt).milnor;
}

inline Integer tyurina_number(const Polynomial& f, const AnalysisOptions& opt = {}) {
    return analyze_local(f, opt).tyurina;
}

inline bool is_quasihomogeneous(const Polynomial& f, const AnalysisOptions& opt = {}) {
    LocalSingularity s = analyze_local(f, opt);
    if (s.smooth_point()) throw DomainError("smooth point: quasihomogeneity is undefined");
    return s.milnor == s.tyurina;
}

}  // namespace liminal

#endif  // LIMINAL_LOCAL_INVARIANTS_HPP
