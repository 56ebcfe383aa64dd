#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>

namespace cauchy_jump {

/// Compiled complex expression in one variable.
///
/// Grammar: numbers, `i`, `pi`, the variable (`t` or `z`, interchangeable),
/// binary + - * / ^, unary minus, parentheses and the functions re, im,
/// conj, abs, sqrt, exp, log (alias ln), sin, cos. Integer exponents use
/// repeated multiplication so that `t^-1` is exact on the unit circle.
class Expression {
public:
    /// Throws Error(parse) with the 0-based character offset on failure.
    static Expression parse(std::string_view text);

    std::complex<double> operator()(std::complex<double> z) const;
    const std::string& text() const noexcept { return text_; }
    /// True if the expression uses re/im/conj/abs, i.e. is not a function of
    /// z alone in the holomorphic sense.
    bool uses_conjugation() const noexcept { return conjugating_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    bool conjugating_ = false;
};

}  // namespace cauchy_jump
