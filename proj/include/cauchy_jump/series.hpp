#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cauchy_jump {

using Rational = boost::multiprecision::cpp_rational;

enum class CoefficientMode { rational, complex };

/// Where the expansion lives. A series at zero has a lowest exponent and a
/// tail toward +inf; a series at infinity has a highest exponent and a tail
/// toward -inf (the exterior-map setting, c1 z + c0 + c-1/z + ...).
enum class Expansion { at_zero, at_infinity };

/// Exact or floating coefficient, tagged by the owning series' mode.
struct Coefficient {
    Rational exact{0};
    std::complex<double> value{};
    bool is_exact = true;

    static Coefficient rational(Rational q);
    static Coefficient complex(std::complex<double> c);
    std::complex<double> numeric() const;
    bool is_zero() const;
    std::string to_string() const;
};

/// Truncated formal Laurent series.
///
/// `order` is the leading exponent: the smallest nonzero exponent at zero,
/// the largest at infinity. Only exponents within `truncation` steps of the
/// order (in the tail direction) are tracked; everything beyond is an O-term.
/// Binary operations keep the smaller truncation depth.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly from_terms(const std::map<int, Rational>& terms, int truncation,
                                  Expansion expansion = Expansion::at_infinity);
    static LaurentPoly from_terms(const std::map<int, std::complex<double>>& terms, int truncation,
                                  Expansion expansion = Expansion::at_infinity);
    /// Monomial c z^k.
    static LaurentPoly monomial(Rational c, int k, int truncation, Expansion expansion = Expansion::at_infinity);
    static LaurentPoly zero(int horizon, CoefficientMode mode, Expansion expansion = Expansion::at_infinity);

    CoefficientMode mode() const noexcept { return mode_; }
    Expansion expansion() const noexcept { return expansion_; }
    bool is_zero() const noexcept;
    /// Leading exponent; throws for the zero series.
    int order() const;
    int truncation() const noexcept;
    /// Last tracked exponent in the tail direction.
    int horizon() const noexcept;
    bool tracks(int exponent) const noexcept;

    Coefficient coefficient(int exponent) const;
    /// Nonzero terms, exponents descending.
    std::vector<std::pair<int, Coefficient>> terms() const;

    std::complex<double> evaluate(std::complex<double> z) const;

    LaurentPoly to_complex() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Printed as "c_k z^k + ... + O(z^m)", exponents descending.
    std::string to_text() const;
    static LaurentPoly parse_text(std::string_view text, int default_truncation = 20);

    // Internal representation: ascending series in w = z (at zero) or
    // w = 1/z (at infinity); c_[k] is the coefficient of w^(val_ + k).
    struct Raw;

private:
    CoefficientMode mode_ = CoefficientMode::rational;
    Expansion expansion_ = Expansion::at_infinity;
    int val_ = 0;
    int hor_ = 0;  // largest tracked internal exponent
    std::vector<Rational> q_;
    std::vector<std::complex<double>> c_;

    friend struct Raw;
};

/// Exact value of "3", "-1/2" or "0.125" (decimals are read in base ten).
Rational parse_rational(std::string_view text);

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
/// Multiplicative inverse 1/a; throws Error(division_by_zero) for zero.
LaurentPoly invert(const LaurentPoly& a);
LaurentPoly power(const LaurentPoly& a, int n);
/// Coefficients of exponents 0..max, dense. Empty if no nonnegative
/// exponent is present.
std::vector<Coefficient> polynomial_part(const LaurentPoly& a);

}  // namespace cauchy_jump
