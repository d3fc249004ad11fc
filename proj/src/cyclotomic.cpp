#include "vvmf/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace vvmf {

namespace {

struct PrimePowerPart {
    Integer q;        // p^a
    Integer phi;      // p^a - p^(a-1)
    Integer p;
    Integer pam1;     // p^(a-1)
    Integer crt_unit; // 1 mod q, 0 mod M/q
};

struct CondInfo {
    Integer M;
    std::vector<PrimePowerPart> parts;
};

const CondInfo& cond_info(const Integer& M) {
    static std::map<Integer, CondInfo> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    CondInfo info;
    info.M = M;
    for (auto& [p, a] : factorize(M)) {
        PrimePowerPart part;
        part.p = p;
        part.q = pow_int(p, a);
        part.pam1 = pow_int(p, a - 1);
        part.phi = part.q - part.pam1;
        Integer rest = M / part.q;
        // crt_unit = rest * (rest^-1 mod q)
        part.crt_unit = rest == 1 ? Integer(1) : imod(rest * inv_mod(rest, part.q), M);
        info.parts.push_back(std::move(part));
    }
    return cache.emplace(M, std::move(info)).first->second;
}

} // namespace

// Expand zeta_M^e over the canonical basis and accumulate into acc.
// Per prime power q = p^a the admissible residues are 0 .. phi(q)-1; a residue
// r >= phi(q) rewrites as -sum_{j<p-1} zeta_q^(j p^(a-1) + r - phi(q)).
void Cyclotomic::add_canonical(std::map<Integer, Rational>& acc, const Integer& M,
                               const Integer& e, const Rational& c) {
    if (c == 0) return;
    if (M == 1) {
        auto [it, fresh] = acc.emplace(0, c);
        if (!fresh && (it->second += c) == 0) acc.erase(it);
        return;
    }
    const CondInfo& info = cond_info(M);
    Integer er = imod(e, M);
    // residues per part; offending parts expand into p-1 options with sign -1
    std::vector<std::vector<Integer>> options;
    int sign_flips = 0;
    for (const auto& part : info.parts) {
        Integer r = er % part.q;
        if (r < part.phi) {
            options.push_back({r});
        } else {
            ++sign_flips;
            Integer i = r - part.phi;
            std::vector<Integer> opts;
            for (Integer j = 0; j < part.p - 1; ++j)
                opts.push_back(j * part.pam1 + i);
            options.push_back(std::move(opts));
        }
    }
    Rational cc = (sign_flips % 2) ? -c : c;
    std::vector<std::size_t> idx(options.size(), 0);
    for (;;) {
        Integer exp = 0;
        for (std::size_t k = 0; k < options.size(); ++k)
            exp += options[k][idx[k]] * info.parts[k].crt_unit;
        exp = imod(exp, M);
        auto [it, fresh] = acc.emplace(exp, cc);
        if (!fresh && (it->second += cc) == 0) acc.erase(it);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
}

void Cyclotomic::normalize() {
    for (;;) {
        if (coeffs_.empty()) { cond_ = 1; return; }
        if (cond_ == 1) return;
        // drop to conductor M/g when every exponent is divisible by g
        Integer g = cond_;
        for (auto& [e, c] : coeffs_) g = igcd(g, e);
        Integer newM = cond_ / g;
        bool twist = false;
        Integer m = newM, shift = 1;
        if (newM % 4 == 2) {
            // zeta_2m = -zeta_m^((m+1)/2), m odd
            m = newM / 2;
            shift = (m + 1) / 2;
            twist = true;
        }
        if (g == 1 && !twist) return;
        std::map<Integer, Rational> fresh;
        for (auto& [e, c] : coeffs_) {
            Integer e2 = e / g;
            if (twist) {
                Rational cc = (e2 % 2 != 0) ? -c : c;
                add_canonical(fresh, m, imod(e2 * shift, m), cc);
            } else {
                add_canonical(fresh, m, e2, c);
            }
        }
        cond_ = m;
        coeffs_ = std::move(fresh);
    }
}

Cyclotomic Cyclotomic::promoted(const Integer& L) const {
    if (L == cond_) return *this;
    Cyclotomic r;
    r.cond_ = L;
    Integer f = L / cond_;
    for (auto& [e, c] : coeffs_)
        add_canonical(r.coeffs_, L, e * f, c);
    // no shrink: caller wants conductor exactly L
    if (r.coeffs_.empty()) r.cond_ = 1;
    return r;
}

Cyclotomic Cyclotomic::e_frac(const Rational& q) {
    Rational r = mod1(q);
    Cyclotomic x;
    x.cond_ = den(r);
    add_canonical(x.coeffs_, x.cond_, num(r), Rational(1));
    x.normalize();
    return x;
}

Cyclotomic Cyclotomic::sqrt_nat(const Integer& n) {
    if (n < 0) throw std::domain_error("sqrt_nat: negative argument");
    if (n == 0) return Cyclotomic(0);
    auto [a, b] = split_square(n);
    Cyclotomic r = Cyclotomic(Rational(a));
    if (b == 1) return r;
    Integer bo = b;
    if (bo % 2 == 0) {
        // sqrt(2) = e(1/8) + e(-1/8)
        r *= e_frac(Rational(1, 8)) + e_frac(Rational(-1, 8));
        bo /= 2;
    }
    if (bo > 1) {
        // quadratic Gauss sum g(b) = sum_j e(j^2/b) equals sqrt(b) for b = 1 mod 4
        // and i sqrt(b) for b = 3 mod 4 (b odd squarefree)
        Cyclotomic g(0);
        for (Integer j = 0; j < bo; ++j)
            g += e_frac(Rational(j * j, bo));
        if (bo % 4 == 3) g *= e_frac(Rational(-1, 4));
        r *= g;
    }
    return r;
}

Cyclotomic Cyclotomic::half_power(const Integer& p, long k) {
    Cyclotomic r(Rational(pow_int(p, std::labs(k) / 2)));
    if (std::labs(k) % 2) r *= sqrt_nat(p);
    if (k < 0) r = r.inverse();
    return r;
}

Rational Cyclotomic::to_rational() const {
    if (coeffs_.empty()) return 0;
    if (cond_ != 1) throw std::domain_error("to_rational: not rational");
    return coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Integer L = ilcm(cond_, o.cond_);
    Cyclotomic a = promoted(L), b = o.promoted(L);
    a.cond_ = L;
    for (auto& [e, c] : b.coeffs_) {
        auto [it, fresh] = a.coeffs_.emplace(e, c);
        if (!fresh && (it->second += c) == 0) a.coeffs_.erase(it);
    }
    a.normalize();
    *this = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Integer L = ilcm(cond_, o.cond_);
    Cyclotomic a = promoted(L), b = o.promoted(L);
    Cyclotomic r;
    r.cond_ = L;
    for (auto& [ea, ca] : a.coeffs_)
        for (auto& [eb, cb] : b.coeffs_)
            add_canonical(r.coeffs_, L, ea + eb, ca * cb);
    r.normalize();
    *this = std::move(r);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    return *this *= o.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return cond_ == o.cond_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::conj() const {
    return cond_ == 1 ? *this : galois(Integer(cond_ - 1));
}

Cyclotomic Cyclotomic::galois(const Integer& t) const {
    if (cond_ == 1) return *this;
    if (igcd(imod(t, cond_), cond_) != 1)
        throw std::domain_error("galois: twist not coprime to conductor");
    Cyclotomic r;
    r.cond_ = cond_;
    for (auto& [e, c] : coeffs_)
        add_canonical(r.coeffs_, cond_, e * t, c);
    r.normalize();
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (coeffs_.empty()) throw std::domain_error("inverse of zero");
    if (cond_ == 1) return Cyclotomic(Rational(1) / coeffs_.begin()->second);
    if (coeffs_.size() == 1) {
        auto& [e, c] = *coeffs_.begin();
        Cyclotomic r = e_frac(Rational(-e, cond_));
        return r * Cyclotomic(Rational(1) / c);
    }
    // product of the nontrivial Galois conjugates; times *this it is the
    // (rational) field norm
    Cyclotomic b(1);
    for (Integer t = 2; t < cond_; ++t) {
        if (igcd(t, cond_) != 1) continue;
        b *= galois(t);
    }
    Cyclotomic nrm = *this * b;
    if (!nrm.is_rational()) throw std::logic_error("inverse: norm not rational");
    return b * Cyclotomic(Rational(1) / nrm.to_rational());
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(1), base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) r *= base;
        base *= base;
        u >>= 1;
    }
    return r;
}

std::complex<double> Cyclotomic::to_complex(unsigned) const {
    long double re = 0, im = 0;
    const long double tau = 6.283185307179586476925286766559L;
    long double Md = cond_.convert_to<long double>();
    for (auto& [e, c] : coeffs_) {
        long double cc = c.convert_to<long double>();
        long double ang = tau * (e.convert_to<long double>() / Md);
        re += cc * std::cos(ang);
        im += cc * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

double Cyclotomic::embed_error_bound(unsigned precision) const {
    long double s = 0;
    for (auto& [e, c] : coeffs_) {
        Rational a = c < 0 ? Rational(-c) : c;
        s += a.convert_to<long double>();
    }
    if (precision < 53) precision = 53;
    return static_cast<double>(std::ldexp(s, 2 - static_cast<int>(precision)));
}

std::string Cyclotomic::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << rat_str(a);
        } else {
            os << rat_str(a) << " * z(" << e << "/" << cond_ << ")";
        }
    }
    return os.str();
}

bool Cyclotomic::less(const Cyclotomic& o) const {
    if (cond_ != o.cond_) return cond_ < o.cond_;
    return coeffs_ < o.coeffs_;
}

Cyclotomic parse_cyclotomic(const std::string& s) {
    Cyclotomic out(0);
    std::size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    bool any = false;
    while (i < n) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("parse_cyclotomic: expected + or - between terms");
        }
        Rational coeff = 1;
        bool saw_coeff = false;
        if (i < n && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            std::size_t j = i;
            while (j < n && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            coeff = parse_rational(s.substr(i, j - i));
            i = j;
            saw_coeff = true;
            skip_ws();
            if (i < n && s[i] == '*') { ++i; skip_ws(); }
        }
        if (i < n && s[i] == 'z') {
            ++i;
            if (i >= n || s[i] != '(') throw std::invalid_argument("parse_cyclotomic: expected (");
            ++i;
            std::size_t close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("parse_cyclotomic: expected )");
            Rational arg = parse_rational(s.substr(i, close - i));
            i = close + 1;
            out += Cyclotomic(Rational(sign) * coeff) * Cyclotomic::e_frac(arg);
        } else if (saw_coeff) {
            out += Cyclotomic(Rational(sign) * coeff);
        } else {
            throw std::invalid_argument("parse_cyclotomic: malformed term");
        }
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("parse_cyclotomic: empty input");
    return out;
}

} // namespace vvmf
