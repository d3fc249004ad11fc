#pragma once

#include "vvmf/cyclotomic.hpp"

#include <vector>

namespace vvmf {

/// Polynomial in a formal variable x with Cyclotomic coefficients.
/// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed.
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<Cyclotomic> cs) : c_(std::move(cs)) { trim(); }
    static XPolynomial monomial(const Cyclotomic& a, std::size_t deg) {
        std::vector<Cyclotomic> cs(deg + 1);
        cs[deg] = a;
        return XPolynomial(std::move(cs));
    }

    std::size_t degree_bound() const { return c_.size(); } // deg + 1, 0 for zero
    const Cyclotomic& coeff(std::size_t i) const {
        static const Cyclotomic zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    bool is_zero() const { return c_.empty(); }

    XPolynomial operator+(const XPolynomial& o) const {
        std::vector<Cyclotomic> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return XPolynomial(std::move(r));
    }
    XPolynomial operator-(const XPolynomial& o) const {
        std::vector<Cyclotomic> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return XPolynomial(std::move(r));
    }
    XPolynomial operator*(const XPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Cyclotomic> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return XPolynomial(std::move(r));
    }
    bool operator==(const XPolynomial& o) const {
        std::size_t n = std::max(c_.size(), o.c_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (coeff(i) != o.coeff(i)) return false;
        return true;
    }
    bool operator!=(const XPolynomial& o) const { return !(*this == o); }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> r = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * x + c_[i].to_complex();
        return r;
    }

private:
    std::vector<Cyclotomic> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Truncated power series: coefficients through x^K inclusive.
class XSeries {
public:
    XSeries(std::size_t K) : k_(K), c_(K + 1) {}
    XSeries(const XPolynomial& p, std::size_t K) : k_(K), c_(K + 1) {
        for (std::size_t i = 0; i <= K; ++i) c_[i] = p.coeff(i);
    }

    std::size_t order() const { return k_; }
    const Cyclotomic& coeff(std::size_t i) const { return c_.at(i); }
    Cyclotomic& coeff(std::size_t i) { return c_.at(i); }

    XSeries truncate(std::size_t K) const {
        XSeries r(std::min(K, k_));
        for (std::size_t i = 0; i <= r.k_; ++i) r.c_[i] = c_[i];
        return r;
    }

    XSeries operator+(const XSeries& o) const {
        XSeries r(std::min(k_, o.k_));
        for (std::size_t i = 0; i <= r.k_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    XSeries operator-(const XSeries& o) const {
        XSeries r(std::min(k_, o.k_));
        for (std::size_t i = 0; i <= r.k_; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    XSeries operator*(const XSeries& o) const {
        XSeries r(std::min(k_, o.k_));
        for (std::size_t i = 0; i <= r.k_; ++i)
            for (std::size_t j = 0; i + j <= r.k_ && j <= o.k_; ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }
    /// Division by a series with invertible constant term.
    XSeries operator/(const XSeries& o) const {
        if (o.c_[0].is_zero()) throw std::domain_error("XSeries: non-unit division");
        XSeries r(std::min(k_, o.k_));
        Cyclotomic inv0 = o.c_[0].inverse();
        for (std::size_t i = 0; i <= r.k_; ++i) {
            Cyclotomic acc = c_[i];
            for (std::size_t j = 1; j <= i; ++j)
                acc -= o.coeff(j) * r.c_[i - j];
            r.c_[i] = acc * inv0;
        }
        return r;
    }

    /// Exact coefficientwise equality through min(order, K).
    bool equal_to_order(const XSeries& o, std::size_t K) const {
        std::size_t top = std::min({K, k_, o.k_});
        for (std::size_t i = 0; i <= top; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }

private:
    std::size_t k_;
    std::vector<Cyclotomic> c_;
};

} // namespace vvmf
