#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "ttla/rational.hpp"

namespace ttla {

// Element of the cyclotomic field Q(z) with z = exp(2*pi*i/24), stored in the
// power basis {z^k : 0 <= k <= 7} reduced modulo Phi_24(x) = x^8 - x^4 + 1.
// The representation is canonical: equality is coordinate-wise equality.
//
// The field hosts every scalar the rest of the library needs: all roots of
// unity of order dividing 24 (in particular the twist eigenvalues for r = 2, 3)
// and sqrt(2) = z^3 + z - z^5.
class Scalar {
  public:
    static constexpr int Deg = 8;

    Scalar() = default;
    Scalar(long n) { c_[0] = rat(n); }
    explicit Scalar(const Rat& r) { c_[0] = r; }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    // z^k for any integer k (k reduced mod 24, then mod Phi_24).
    static Scalar zetaPow(long k) {
        k %= 24;
        if (k < 0) k += 24;
        Scalar s;
        bool neg = false;
        if (k >= 12) {  // z^12 = -1
            k -= 12;
            neg = true;
        }
        Rat sign = rat(neg ? -1 : 1);
        if (k <= 7) {
            s.c_[k] = sign;
        } else {  // 8..11: z^k = z^(k-4) - z^(k-8)
            s.c_[k - 4] = sign;
            s.c_[k - 8] = -sign;
        }
        return s;
    }

    // Primitive r-th root of unity, r a divisor of 24.
    static Scalar rootOfUnity(int r) {
        if (r <= 0 || 24 % r != 0)
            throw std::domain_error("rootOfUnity: order " + std::to_string(r) +
                                    " does not divide 24");
        return zetaPow(24 / r);
    }

    static Scalar sqrt2() {
        // z^3 + z^-3; the positive real square root of 2.
        return zetaPow(3) + zetaPow(-3);
    }

    const Rat& coord(int k) const { return c_[k]; }

    bool isZero() const {
        for (const auto& x : c_)
            if (!ttla::isZero(x)) return false;
        return true;
    }

    bool isRational() const {
        for (int k = 1; k < Deg; ++k)
            if (!ttla::isZero(c_[k])) return false;
        return true;
    }

    Rat toRat() const {
        if (!isRational()) throw std::domain_error("Scalar is not rational: " + toString());
        return c_[0];
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Lexicographic order on coordinates; used only to keep containers deterministic.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        for (int k = 0; k < Deg; ++k) {
            int c = cmp(a.c_[k], b.c_[k]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    Scalar operator-() const {
        Scalar r;
        for (int k = 0; k < Deg; ++k) r.c_[k] = -c_[k];
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        for (int k = 0; k < Deg; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (int k = 0; k < Deg; ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (int k = 0; k < Deg; ++k) {
            if (ttla::isZero(a.c_[k])) continue;
            for (int l = 0; l < Deg; ++l) {
                if (ttla::isZero(b.c_[l])) continue;
                Rat p = a.c_[k] * b.c_[l];
                int s = k + l;
                // reduce z^s mod Phi_24 for s in 0..14
                if (s <= 7) {
                    r.c_[s] += p;
                } else if (s <= 11) {  // z^s = z^(s-4) - z^(s-8)
                    r.c_[s - 4] += p;
                    r.c_[s - 8] -= p;
                } else {  // 12..14: z^s = -z^(s-12)
                    r.c_[s - 12] -= p;
                }
            }
        }
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (isZero()) throw std::domain_error("division by zero Scalar");
        // Solve M x = e_0 where M is the multiplication-by-*this matrix.
        std::array<std::array<Rat, Deg + 1>, Deg> m{};
        for (int j = 0; j < Deg; ++j) {
            Scalar col = *this * zetaPow(j);
            for (int i = 0; i < Deg; ++i) m[i][j] = col.c_[i];
        }
        m[0][Deg] = rat(1);
        // Gaussian elimination, exact.
        for (int col = 0, row = 0; col < Deg && row < Deg; ++col) {
            int piv = -1;
            for (int i = row; i < Deg; ++i)
                if (!ttla::isZero(m[i][col])) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m[piv], m[row]);
            Rat inv = 1 / m[row][col];
            for (int j = col; j <= Deg; ++j) m[row][j] *= inv;
            for (int i = 0; i < Deg; ++i) {
                if (i == row || ttla::isZero(m[i][col])) continue;
                Rat f = m[i][col];
                for (int j = col; j <= Deg; ++j) m[i][j] -= f * m[row][j];
            }
            ++row;
        }
        Scalar r;
        for (int i = 0; i < Deg; ++i) r.c_[i] = m[i][Deg];
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    // Rendering: "c0 + c1*z^1 + ..." with exact rational coefficients.
    // parse() round-trips this exactly.
    std::string toString() const {
        if (isZero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < Deg; ++k) {
            if (ttla::isZero(c_[k])) continue;
            Rat v = c_[k];
            if (first) {
                if (sgn(v) < 0) {
                    os << "-";
                    v = -v;
                }
                first = false;
            } else {
                os << (sgn(v) < 0 ? " - " : " + ");
                if (sgn(v) < 0) v = -v;
            }
            if (k == 0) {
                os << ratStr(v);
            } else {
                if (v != 1) os << ratStr(v) << "*";
                os << "z^" << k;
            }
        }
        return os.str();
    }

    static Scalar parse(const std::string& text) {
        Scalar out;
        size_t i = 0;
        auto skipws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skipws();
        if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
        bool expectTerm = true;
        int termSign = 1;
        while (i < text.size()) {
            skipws();
            if (!expectTerm) {
                if (text[i] == '+') termSign = 1;
                else if (text[i] == '-') termSign = -1;
                else throw std::invalid_argument("Scalar::parse: expected +/- in: " + text);
                ++i;
                skipws();
            } else if (text[i] == '-') {
                termSign = -1;
                ++i;
                skipws();
            }
            // coefficient (optional) then optional z^k
            size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            Rat coeff = rat(1);
            if (j > i) coeff = ratParse(text.substr(i, j - i));
            i = j;
            skipws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skipws();
            }
            int power = 0;
            if (i < text.size() && text[i] == 'z') {
                ++i;
                if (i >= text.size() || text[i] != '^')
                    throw std::invalid_argument("Scalar::parse: expected z^k in: " + text);
                ++i;
                size_t p = i;
                while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
                power = std::atoi(text.substr(i, p - i).c_str());
                i = p;
            }
            Scalar term = zetaPow(power);
            Rat signed_coeff = (termSign < 0) ? Rat(-coeff) : coeff;
            for (int k = 0; k < Deg; ++k) out.c_[k] += signed_coeff * term.c_[k];
            expectTerm = false;
            termSign = 1;
            skipws();
        }
        return out;
    }

    // Debug-only numeric embedding (z -> exp(i*pi/12)).
    std::complex<double> toComplexDouble() const {
        std::complex<double> acc{0.0, 0.0};
        const double theta = M_PI / 12.0;
        for (int k = 0; k < Deg; ++k) {
            if (ttla::isZero(c_[k])) continue;
            double v = c_[k].get_d();
            acc += v * std::complex<double>(std::cos(theta * k), std::sin(theta * k));
        }
        return acc;
    }

  private:
    std::array<Rat, Deg> c_{};
};

inline Scalar operator*(const Rat& r, const Scalar& s) { return Scalar(r) * s; }
inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace ttla
