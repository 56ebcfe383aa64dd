#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cauchy_jump/contour.hpp"
#include "cauchy_jump/expr.hpp"

namespace cauchy_jump {

struct HolderBound {
    double index;     // lambda in (0, 1]
    double constant;  // A > 0
};

enum class Regularity { unknown, holder, non_holder };

/// Complex density on a contour, stored as its pullback h(t) = phi(gamma(t))
/// over the contour's canonical parameter.
class Density {
public:
    using Pullback = std::function<cplx(double)>;

    explicit Density(Pullback pullback, std::string label = "custom");

    static Density constant(cplx value);
    static Density from_function(const Contour& contour, std::function<cplx(cplx)> phi, std::string label);
    static Density from_expression(const Contour& contour, const Expression& expr);

    /// Named presets: one, zero, re, im, conj, inv (1/t), sq (t^2), sqrt,
    /// inv_ln (1/ln t with value 0 at t = 0), sqrt_pullback (sqrt(t(1-t)) in
    /// the parameter). Any other name is parsed as an expression in t.
    static Density preset(const Contour& contour, std::string_view name);

    /// Samples (t, value) in the user's parameter, linearly interpolated.
    static Density tabulated(const Contour& contour, std::vector<double> t, std::vector<cplx> values);
    /// CSV with header row and columns t, re, im.
    static Density from_csv(const Contour& contour, std::istream& in);

    cplx operator()(double t) const { return pullback_(t); }
    const std::string& label() const noexcept { return label_; }

    Regularity regularity() const noexcept { return regularity_; }
    std::optional<HolderBound> holder() const noexcept { return holder_; }
    Density with_holder(HolderBound bound) const;
    Density declared_non_holder() const;

    /// Largest |h| on a grid; 1 for the zero density.
    double data_scale(const Contour& contour, std::size_t n = 256) const;
    /// Closed contours need h(0) = h(1) within 1e-10 of the data scale.
    void check_closure(const Contour& contour) const;

    friend Density operator+(const Density& a, const Density& b);
    friend Density operator*(cplx s, const Density& d);

private:
    Pullback pullback_;
    std::string label_;
    Regularity regularity_ = Regularity::unknown;
    std::optional<HolderBound> holder_;
};

struct HolderReport {
    bool pass = false;
    std::pair<double, double> worst_pair{0.0, 0.0};
    double worst_ratio = 0.0;
    double estimated_index = 1.0;
    double estimated_constant = 0.0;
};

/// Grid certification of |phi(z) - phi(w)| <= A |z - w|^lambda over all
/// pairs of an n-point parameter grid. Passing means no counterexample on
/// the grid.
HolderReport check_holder(const Density& density, const Contour& contour, double lambda, double constant,
                          std::size_t grid_size, double slack = 1e-9);
/// Same, over an explicit parameter list. The report does not depend on the
/// order of the list.
HolderReport check_holder(const Density& density, const Contour& contour, double lambda, double constant,
                          std::span<const double> params, double slack = 1e-9);

/// Estimates the Hölder index from the empirical modulus of continuity.
HolderReport estimate_holder(const Density& density, const Contour& contour, std::size_t grid_size);

}  // namespace cauchy_jump
