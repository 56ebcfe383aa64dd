#include "cauchy_jump/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

using cplx = std::complex<double>;

Coefficient Coefficient::rational(Rational q) {
    Coefficient c;
    c.exact = std::move(q);
    c.value = c.exact.convert_to<double>();
    c.is_exact = true;
    return c;
}

Coefficient Coefficient::complex(cplx v) {
    Coefficient c;
    c.value = v;
    c.is_exact = false;
    return c;
}

cplx Coefficient::numeric() const { return is_exact ? cplx(exact.convert_to<double>()) : value; }

bool Coefficient::is_zero() const { return is_exact ? exact == 0 : value == cplx(0.0); }

namespace {

std::string format_double(double x) {
    std::ostringstream s;
    s.precision(15);
    s << x;
    return s.str();
}

std::string format_complex(cplx v) {
    std::string out = "(" + format_double(v.real());
    out += v.imag() < 0 || (v.imag() == 0.0 && std::signbit(v.imag())) ? "-" : "+";
    out += format_double(std::abs(v.imag())) + "i)";
    return out;
}

}  // namespace

std::string Coefficient::to_string() const {
    if (is_exact) return exact.str();
    return format_complex(value);
}

// Direction-agnostic arithmetic on the internal ascending representation.
struct LaurentPoly::Raw {
    static int to_internal(Expansion e, int exponent) { return e == Expansion::at_zero ? exponent : -exponent; }

    static LaurentPoly make(CoefficientMode mode, Expansion e, int val, int hor) {
        LaurentPoly p;
        p.mode_ = mode;
        p.expansion_ = e;
        p.val_ = val;
        p.hor_ = hor;
        return p;
    }

    static std::size_t size(const LaurentPoly& p) {
        return p.mode_ == CoefficientMode::rational ? p.q_.size() : p.c_.size();
    }

    // Drops leading zeros; the zero series keeps only its horizon.
    static void normalize(LaurentPoly& p) {
        std::size_t lead = 0;
        if (p.mode_ == CoefficientMode::rational) {
            while (lead < p.q_.size() && p.q_[lead] == 0) ++lead;
            p.q_.erase(p.q_.begin(), p.q_.begin() + static_cast<std::ptrdiff_t>(lead));
        } else {
            while (lead < p.c_.size() && p.c_[lead] == cplx(0.0)) ++lead;
            p.c_.erase(p.c_.begin(), p.c_.begin() + static_cast<std::ptrdiff_t>(lead));
        }
        p.val_ += static_cast<int>(lead);
        if (size(p) == 0) p.val_ = p.hor_ + 1;
    }

    static Rational raw_q(const LaurentPoly& p, int e) {
        if (e < p.val_ || e - p.val_ >= static_cast<int>(p.q_.size())) return Rational(0);
        return p.q_[static_cast<std::size_t>(e - p.val_)];
    }
    static cplx raw_c(const LaurentPoly& p, int e) {
        if (e < p.val_ || e - p.val_ >= static_cast<int>(p.c_.size())) return cplx(0.0);
        return p.c_[static_cast<std::size_t>(e - p.val_)];
    }

    static void check_compatible(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.expansion_ != b.expansion_)
            throw Error(ErrorKind::domain, "cannot combine a series at zero with a series at infinity");
    }

    static LaurentPoly add(const LaurentPoly& a0, const LaurentPoly& b0, bool subtract) {
        check_compatible(a0, b0);
        bool rational = a0.mode_ == CoefficientMode::rational && b0.mode_ == CoefficientMode::rational;
        LaurentPoly a = rational ? a0 : a0.to_complex();
        LaurentPoly b = rational ? b0 : b0.to_complex();
        int hor = std::min(a.hor_, b.hor_);
        int val = std::min(a.val_, b.val_);
        LaurentPoly r = make(a.mode_, a.expansion_, val, hor);
        if (val > hor) {
            r.val_ = hor + 1;
            return r;
        }
        std::size_t n = static_cast<std::size_t>(hor - val + 1);
        if (rational) {
            r.q_.assign(n, Rational(0));
            for (int e = val; e <= hor; ++e) {
                Rational x = raw_q(a, e), y = raw_q(b, e);
                r.q_[static_cast<std::size_t>(e - val)] = subtract ? Rational(x - y) : Rational(x + y);
            }
        } else {
            r.c_.assign(n, cplx(0.0));
            for (int e = val; e <= hor; ++e) {
                cplx x = raw_c(a, e), y = raw_c(b, e);
                r.c_[static_cast<std::size_t>(e - val)] = subtract ? x - y : x + y;
            }
        }
        normalize(r);
        return r;
    }

    static LaurentPoly mul(const LaurentPoly& a0, const LaurentPoly& b0) {
        check_compatible(a0, b0);
        bool rational = a0.mode_ == CoefficientMode::rational && b0.mode_ == CoefficientMode::rational;
        LaurentPoly a = rational ? a0 : a0.to_complex();
        LaurentPoly b = rational ? b0 : b0.to_complex();
        if (a.is_zero() || b.is_zero()) {
            int hor;
            if (a.is_zero() && b.is_zero()) hor = a.hor_ + b.hor_ + 1;
            else if (a.is_zero()) hor = a.hor_ + b.val_;
            else hor = b.hor_ + a.val_;
            LaurentPoly r = make(a.mode_, a.expansion_, hor + 1, hor);
            return r;
        }
        int depth = std::min(a.hor_ - a.val_, b.hor_ - b.val_);
        int val = a.val_ + b.val_;
        LaurentPoly r = make(a.mode_, a.expansion_, val, val + depth);
        std::size_t n = static_cast<std::size_t>(depth + 1);
        if (rational) {
            r.q_.assign(n, Rational(0));
            for (std::size_t i = 0; i < n && i < a.q_.size(); ++i) {
                if (a.q_[i] == 0) continue;
                for (std::size_t j = 0; i + j < n && j < b.q_.size(); ++j) r.q_[i + j] += a.q_[i] * b.q_[j];
            }
        } else {
            r.c_.assign(n, cplx(0.0));
            for (std::size_t i = 0; i < n && i < a.c_.size(); ++i)
                for (std::size_t j = 0; i + j < n && j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        normalize(r);
        return r;
    }

    static LaurentPoly inv(const LaurentPoly& a) {
        if (a.is_zero()) throw Error(ErrorKind::division_by_zero, "cannot invert the zero series");
        int depth = a.hor_ - a.val_;
        LaurentPoly r = make(a.mode_, a.expansion_, -a.val_, -a.val_ + depth);
        std::size_t n = static_cast<std::size_t>(depth + 1);
        if (a.mode_ == CoefficientMode::rational) {
            auto coef = [&](std::size_t k) { return k < a.q_.size() ? a.q_[k] : Rational(0); };
            Rational lead_inv = Rational(1) / a.q_[0];
            r.q_.assign(n, Rational(0));
            r.q_[0] = lead_inv;
            for (std::size_t k = 1; k < n; ++k) {
                Rational s(0);
                for (std::size_t j = 1; j <= k; ++j) s += coef(j) * r.q_[k - j];
                r.q_[k] = -s * lead_inv;
            }
        } else {
            auto coef = [&](std::size_t k) { return k < a.c_.size() ? a.c_[k] : cplx(0.0); };
            cplx lead_inv = 1.0 / a.c_[0];
            r.c_.assign(n, cplx(0.0));
            r.c_[0] = lead_inv;
            for (std::size_t k = 1; k < n; ++k) {
                cplx s(0.0);
                for (std::size_t j = 1; j <= k; ++j) s += coef(j) * r.c_[k - j];
                r.c_[k] = -s * lead_inv;
            }
        }
        normalize(r);
        return r;
    }

    static LaurentPoly one_like(const LaurentPoly& a) {
        int depth = a.is_zero() ? 0 : a.hor_ - a.val_;
        LaurentPoly r = make(a.mode_, a.expansion_, 0, depth);
        if (a.mode_ == CoefficientMode::rational) {
            r.q_.assign(static_cast<std::size_t>(depth + 1), Rational(0));
            r.q_[0] = 1;
        } else {
            r.c_.assign(static_cast<std::size_t>(depth + 1), cplx(0.0));
            r.c_[0] = 1.0;
        }
        return r;
    }
};

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rational>& terms, int truncation, Expansion expansion) {
    if (truncation < 0) throw Error(ErrorKind::domain, "truncation depth must be nonnegative");
    std::map<int, Rational> internal;
    for (const auto& [e, q] : terms)
        if (q != 0) internal[Raw::to_internal(expansion, e)] = q;
    if (internal.empty()) return zero(Raw::to_internal(expansion, 0) + truncation, CoefficientMode::rational, expansion);
    int val = internal.begin()->first;
    int hor = val + truncation;
    if (internal.rbegin()->first > hor)
        throw Error(ErrorKind::domain, "truncation depth too small to hold every given term");
    LaurentPoly p = Raw::make(CoefficientMode::rational, expansion, val, hor);
    p.q_.assign(static_cast<std::size_t>(truncation + 1), Rational(0));
    for (const auto& [e, q] : internal) p.q_[static_cast<std::size_t>(e - val)] = q;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, cplx>& terms, int truncation, Expansion expansion) {
    if (truncation < 0) throw Error(ErrorKind::domain, "truncation depth must be nonnegative");
    std::map<int, cplx> internal;
    for (const auto& [e, c] : terms)
        if (c != cplx(0.0)) internal[Raw::to_internal(expansion, e)] = c;
    if (internal.empty()) return zero(Raw::to_internal(expansion, 0) + truncation, CoefficientMode::complex, expansion);
    int val = internal.begin()->first;
    int hor = val + truncation;
    if (internal.rbegin()->first > hor)
        throw Error(ErrorKind::domain, "truncation depth too small to hold every given term");
    LaurentPoly p = Raw::make(CoefficientMode::complex, expansion, val, hor);
    p.c_.assign(static_cast<std::size_t>(truncation + 1), cplx(0.0));
    for (const auto& [e, c] : internal) p.c_[static_cast<std::size_t>(e - val)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(Rational c, int k, int truncation, Expansion expansion) {
    return from_terms(std::map<int, Rational>{{k, std::move(c)}}, truncation, expansion);
}

LaurentPoly LaurentPoly::zero(int horizon, CoefficientMode mode, Expansion expansion) {
    return Raw::make(mode, expansion, horizon + 1, horizon);
}

bool LaurentPoly::is_zero() const noexcept { return q_.empty() && c_.empty(); }

int LaurentPoly::order() const {
    if (is_zero()) throw Error(ErrorKind::domain, "the zero series has no order");
    return expansion_ == Expansion::at_zero ? val_ : -val_;
}

int LaurentPoly::truncation() const noexcept { return is_zero() ? 0 : hor_ - val_; }

int LaurentPoly::horizon() const noexcept { return expansion_ == Expansion::at_zero ? hor_ : -hor_; }

bool LaurentPoly::tracks(int exponent) const noexcept { return Raw::to_internal(expansion_, exponent) <= hor_; }

Coefficient LaurentPoly::coefficient(int exponent) const {
    int e = Raw::to_internal(expansion_, exponent);
    if (e > hor_)
        throw Error(ErrorKind::domain, "exponent " + std::to_string(exponent) + " lies beyond the truncation horizon");
    if (mode_ == CoefficientMode::rational) {
        if (e < val_ || is_zero()) return Coefficient::rational(0);
        return Coefficient::rational(q_[static_cast<std::size_t>(e - val_)]);
    }
    if (e < val_ || is_zero()) return Coefficient::complex(0.0);
    return Coefficient::complex(c_[static_cast<std::size_t>(e - val_)]);
}

std::vector<std::pair<int, Coefficient>> LaurentPoly::terms() const {
    std::vector<std::pair<int, Coefficient>> out;
    std::size_t n = Raw::size(*this);
    for (std::size_t k = 0; k < n; ++k) {
        int internal = val_ + static_cast<int>(k);
        int e = expansion_ == Expansion::at_zero ? internal : -internal;
        Coefficient c = mode_ == CoefficientMode::rational ? Coefficient::rational(q_[k]) : Coefficient::complex(c_[k]);
        if (!c.is_zero()) out.emplace_back(e, std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return out;
}

cplx LaurentPoly::evaluate(cplx z) const {
    cplx w = expansion_ == Expansion::at_zero ? z : 1.0 / z;
    cplx acc{};
    std::size_t n = Raw::size(*this);
    for (std::size_t k = n; k-- > 0;) {
        cplx c = mode_ == CoefficientMode::rational ? cplx(q_[k].convert_to<double>()) : c_[k];
        acc = acc * w + c;
    }
    return acc * std::pow(w, val_);
}

LaurentPoly LaurentPoly::to_complex() const {
    if (mode_ == CoefficientMode::complex) return *this;
    LaurentPoly p = Raw::make(CoefficientMode::complex, expansion_, val_, hor_);
    for (const auto& q : q_) p.c_.emplace_back(q.convert_to<double>());
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::Raw::add(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::Raw::add(a, b, true); }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::Raw::mul(a, b); }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.mode_ == b.mode_ && a.expansion_ == b.expansion_ && a.val_ == b.val_ && a.hor_ == b.hor_ &&
           a.q_ == b.q_ && a.c_ == b.c_;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto fail = [&] { throw Error(ErrorKind::parse, "malformed exact number '" + s + "'"); };
    auto integer = [&](const std::string& digits) {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) fail();
        return boost::multiprecision::cpp_int(digits);
    };
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.erase(0, 1);
    }
    Rational q;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        auto den = integer(body.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator in '" + s + "'");
        q = Rational(integer(body.substr(0, slash)), den);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        boost::multiprecision::cpp_int scale = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                          static_cast<unsigned>(frac.size()));
        q = Rational(integer(whole.empty() ? "0" : whole) * scale + (frac.empty() ? 0 : integer(frac)), scale);
    } else {
        q = Rational(integer(body));
    }
    return neg ? Rational(-q) : q;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly invert(const LaurentPoly& a) { return LaurentPoly::Raw::inv(a); }

LaurentPoly power(const LaurentPoly& a, int n) {
    if (n < 0) return power(invert(a), -n);
    LaurentPoly result = LaurentPoly::Raw::one_like(a);
    LaurentPoly base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::vector<Coefficient> polynomial_part(const LaurentPoly& a) {
    std::vector<Coefficient> out;
    auto terms = a.terms();
    int top = -1;
    for (const auto& [e, c] : terms) top = std::max(top, e);
    if (a.expansion() == Expansion::at_infinity && top >= 0 && !a.tracks(0))
        throw Error(ErrorKind::domain, "truncation too shallow to determine the polynomial part");
    if (top < 0) return out;
    bool exact = a.mode() == CoefficientMode::rational;
    out.assign(static_cast<std::size_t>(top + 1), exact ? Coefficient::rational(0) : Coefficient::complex(0.0));
    for (auto& [e, c] : terms)
        if (e >= 0) out[static_cast<std::size_t>(e)] = c;
    return out;
}

namespace {

std::string format_term(const Coefficient& c, int e, bool first) {
    std::string sign, body;
    bool unit = false;
    if (c.is_exact) {
        Rational q = c.exact;
        bool neg = q < 0;
        if (neg) q = -q;
        sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
        unit = q == 1;
        body = q.str();
    } else {
        sign = first ? "" : " + ";
        unit = c.value == cplx(1.0);
        body = format_complex(c.value);
    }
    std::string zpart = e == 0 ? "" : (e == 1 ? "z" : "z^" + std::to_string(e));
    if (e == 0) return sign + body;
    if (unit) return sign + zpart;
    return sign + body + " " + zpart;
}

}  // namespace

std::string LaurentPoly::to_text() const {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        out += format_term(c, e, first);
        first = false;
    }
    if (first) out = "0";
    int next = expansion_ == Expansion::at_zero ? hor_ + 1 : -hor_ - 1;
    out += " + O(z^" + std::to_string(next) + ")";
    return out;
}

namespace {

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::parse, "series text at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool done() {
        skip();
        return pos_ >= s_.size();
    }

    int integer() {
        skip();
        bool paren = accept('(');
        skip();
        int v = 0;
        const char* b = s_.data() + pos_;
        if (pos_ < s_.size() && s_[pos_] == '+') ++b;
        auto [p, ec] = std::from_chars(b, s_.data() + s_.size(), v);
        if (ec != std::errc()) fail("expected an integer exponent");
        pos_ = static_cast<std::size_t>(p - s_.data());
        if (paren && !accept(')')) fail("expected ')'");
        return v;
    }

    // Returns true if the token was a decimal (complex mode).
    bool number(Rational& q, double& d) {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                    s_[pos_] == 'e' || s_[pos_] == 'E' ||
                                    ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
                                     (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
            ++pos_;
        std::string tok(s_.substr(start, pos_ - start));
        if (tok.empty()) fail("expected a coefficient");
        if (tok.find_first_of(".eE") != std::string::npos) {
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
            if (ec != std::errc() || p != tok.data() + tok.size()) fail("malformed number '" + tok + "'");
            return true;
        }
        q = Rational(boost::multiprecision::cpp_int(tok));
        return false;
    }

    std::size_t pos_ = 0;
    std::string_view s_;
};

}  // namespace

LaurentPoly LaurentPoly::parse_text(std::string_view text, int default_truncation) {
    TextParser p(text);
    std::map<int, Rational> exact;
    std::map<int, cplx> floating;
    bool complex_mode = false;
    bool have_o = false;
    int o_exp = 0;
    bool first = true;
    while (!p.done()) {
        double sign = 1.0;
        if (p.accept('+')) sign = 1.0;
        else if (p.accept('-')) sign = -1.0;
        else if (!first) p.fail("expected '+' or '-'");
        first = false;
        p.skip();
        if (p.accept('O')) {
            if (!p.accept('(') || !p.accept('z')) p.fail("expected O(z^k)");
            o_exp = p.accept('^') ? p.integer() : 1;
            if (!p.accept(')')) p.fail("expected ')'");
            have_o = true;
            continue;
        }
        Rational q(1);
        cplx c(1.0);
        bool is_float = false, have_coef = false;
        if (p.accept('(')) {
            double re = 0, im = 0;
            Rational dummy;
            if (p.accept('-')) {
                p.number(dummy, re) ? (void)0 : (void)(re = dummy.convert_to<double>());
                re = -re;
            } else {
                if (!p.number(dummy, re)) re = dummy.convert_to<double>();
            }
            double isign = p.accept('-') ? -1.0 : (p.accept('+'), 1.0);
            if (!p.number(dummy, im)) im = dummy.convert_to<double>();
            if (!p.accept('i') || !p.accept(')')) p.fail("expected complex coefficient (a+bi)");
            c = cplx(re, isign * im);
            is_float = have_coef = true;
        } else if (!p.peek('z')) {
            double d = 0;
            is_float = p.number(q, d);
            if (!is_float && p.accept('/')) {
                Rational den;
                double dd;
                if (p.number(den, dd)) p.fail("rational denominator must be an integer");
                if (den == 0) p.fail("zero denominator");
                q /= den;
            }
            if (is_float) c = d;
            have_coef = true;
        }
        p.accept('*');
        int e = 0;
        if (p.accept('z')) e = p.accept('^') ? p.integer() : 1;
        else if (!have_coef) p.fail("expected a term");
        if (is_float || complex_mode) {
            if (!complex_mode) {
                for (auto& [k, v] : exact) floating[k] += v.convert_to<double>();
                complex_mode = true;
            }
            floating[e] += sign * (is_float ? c : cplx(q.convert_to<double>()));
        } else {
            exact[e] += sign < 0 ? -q : q;
        }
    }
    int lo = 0, hi = 0;
    bool any = false;
    auto track = [&](int e) {
        lo = any ? std::min(lo, e) : e;
        hi = any ? std::max(hi, e) : e;
        any = true;
    };
    if (complex_mode) {
        for (auto& [e, v] : floating)
            if (v != cplx(0.0)) track(e);
    } else {
        for (auto& [e, v] : exact)
            if (v != 0) track(e);
    }
    Expansion expansion = Expansion::at_infinity;
    int truncation = default_truncation;
    if (have_o) {
        if (!any) {
            expansion = Expansion::at_infinity;
            auto mode = complex_mode ? CoefficientMode::complex : CoefficientMode::rational;
            return o_exp > 0 ? zero(o_exp - 1, mode, Expansion::at_zero) : zero(-o_exp - 1, mode, Expansion::at_infinity);
        }
        if (o_exp > hi) {
            expansion = Expansion::at_zero;
            truncation = o_exp - 1 - lo;
        } else if (o_exp < lo) {
            expansion = Expansion::at_infinity;
            truncation = hi - o_exp - 1;
        } else {
            throw Error(ErrorKind::parse, "O-term exponent must lie beyond every listed term");
        }
    } else if (any) {
        truncation = std::max(default_truncation, hi - lo);
    }
    if (complex_mode) return from_terms(floating, truncation, expansion);
    return from_terms(exact, truncation, expansion);
}

}  // namespace cauchy_jump
