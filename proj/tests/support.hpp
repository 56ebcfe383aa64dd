#pragma once

#include <complex>

#include <doctest.h>

#include "cauchy_jump/error.hpp"

namespace test_support {

using cplx = std::complex<double>;

inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace test_support

// Checks that `expr` throws cauchy_jump::Error of the given kind.
#define CHECK_ERROR_KIND(expr, expected_kind)                                        \
    do {                                                                             \
        bool thrown_ = false;                                                        \
        try {                                                                        \
            (void)(expr);                                                            \
        } catch (const cauchy_jump::Error& e_) {                                     \
            thrown_ = true;                                                          \
            CHECK_MESSAGE(e_.kind() == (expected_kind), "got kind ",                 \
                          std::string(cauchy_jump::to_string(e_.kind())), ": ", e_.what()); \
        }                                                                            \
        CHECK_MESSAGE(thrown_, "expected an error from " #expr);                     \
    } while (0)
