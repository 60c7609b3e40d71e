#pragma once

// Exact arithmetic for the ground field Q(sqrt 5).
//
// Rat is an arbitrary-precision rational (GMP); QS5 is a + b*sqrt(5) with
// rational a, b.  The Galois involution sends sqrt(5) to -sqrt(5).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace h3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string render_rat(const Rat& r) {
    std::ostringstream os;
    if (r.get_den() == 1)
        os << r.get_num();
    else
        os << r.get_num() << "/" << r.get_den();
    return os.str();
}

// Accepts "n" or "n/d", with optional leading '-'.
inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t slash = s.find('/');
    try {
        Rat r;
        if (slash == std::string::npos) {
            r = Rat(s);
        } else {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (num.empty() || den.empty()) return std::nullopt;
            r = Rat(num + "/" + den);
        }
        if (r.get_den() == 0) return std::nullopt;
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

struct QS5 {
    Rat a, b;  // value a + b*sqrt(5)

    QS5() : a(0), b(0) {}
    QS5(long x) : a(x), b(0) {}
    QS5(const Rat& x) : a(x), b(0) {}
    QS5(const Rat& a_, const Rat& b_) : a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const QS5& x, const QS5& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QS5& x, const QS5& y) { return !(x == y); }

    friend QS5 operator+(const QS5& x, const QS5& y) { return QS5(x.a + y.a, x.b + y.b); }
    friend QS5 operator-(const QS5& x, const QS5& y) { return QS5(x.a - y.a, x.b - y.b); }
    friend QS5 operator-(const QS5& x) { return QS5(-x.a, -x.b); }
    friend QS5 operator*(const QS5& x, const QS5& y) {
        return QS5(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    QS5& operator+=(const QS5& y) { a += y.a; b += y.b; return *this; }
    QS5& operator-=(const QS5& y) { a -= y.a; b -= y.b; return *this; }
    QS5& operator*=(const QS5& y) { *this = *this * y; return *this; }

    // Field norm a^2 - 5 b^2 (= x * galois(x)).
    Rat norm() const { return a * a - 5 * b * b; }

    QS5 inverse() const {
        if (is_zero()) throw std::domain_error("QS5: division by zero");
        Rat n = norm();  // nonzero: sqrt(5) is irrational
        return QS5(a / n, -b / n);
    }
    friend QS5 operator/(const QS5& x, const QS5& y) { return x * y.inverse(); }

    // For use as ordered-container key; not the real-embedding order.
    friend bool operator<(const QS5& x, const QS5& y) {
        int c = cmp(x.a, y.a);
        if (c != 0) return c < 0;
        return cmp(x.b, y.b) < 0;
    }
};

inline QS5 galois(const QS5& x) { return QS5(x.a, -x.b); }

inline QS5 sqrt5() { return QS5(Rat(0), Rat(1)); }

// The golden ratio (1+sqrt5)/2.
inline QS5 golden() { return QS5(rat(1, 2), rat(1, 2)); }

// Text form: "a/b", "c/d*r5", or "a/b + c/d*r5" / "a/b - c/d*r5".
inline std::string render_qs5(const QS5& x) {
    if (x.b == 0) return render_rat(x.a);
    std::string r5part = (abs(x.b) == 1 ? std::string("r5")
                                        : render_rat(abs(x.b)) + "*r5");
    if (x.a == 0) return (x.b < 0 ? "-" : "") + r5part;
    return render_rat(x.a) + (x.b < 0 ? " - " : " + ") + r5part;
}

inline std::optional<QS5> parse_qs5(std::string s) {
    // strip spaces
    std::string t;
    for (char ch : s)
        if (ch != ' ') t += ch;
    if (t.empty()) return std::nullopt;
    // split into at most two signed terms
    size_t split = std::string::npos;
    for (size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-') {
            split = i;
            break;
        }
    }
    auto parse_term = [](std::string term) -> std::optional<QS5> {
        if (!term.empty() && term[0] == '+') term = term.substr(1);
        if (term.empty()) return std::nullopt;
        size_t star = term.find("*r5");
        if (star != std::string::npos && star + 3 == term.size()) {
            auto r = parse_rat(term.substr(0, star));
            if (!r) return std::nullopt;
            return QS5(Rat(0), *r);
        }
        if (term == "r5") return sqrt5();
        if (term == "-r5") return -sqrt5();
        auto r = parse_rat(term);
        if (!r) return std::nullopt;
        return QS5(*r);
    };
    if (split == std::string::npos) return parse_term(t);
    auto lhs = parse_term(t.substr(0, split));
    auto rhs = parse_term(t.substr(split));  // sign included
    if (!lhs || !rhs) return std::nullopt;
    if (!lhs->is_rational() || rhs->is_rational()) return std::nullopt;
    return *lhs + *rhs;
}

}  // namespace h3
