// Command-line front end: builds modules and lattices, evaluates the
// representation, Gauss sums, Hecke operators, L-series factors and
// Kloosterman sums, and runs the verification suite. Exit codes: 0 success,
// 1 usage error, 2 verification failure.

#include "vvmf/hecke.hpp"
#include "vvmf/kloosterman.hpp"
#include "vvmf/lseries.hpp"
#include "vvmf/serialize.hpp"
#include "vvmf/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

namespace {

using namespace vvmf;

constexpr int kExitOk = 0, kExitUsage = 1, kExitVerify = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_output(const nlohmann::json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot open " + out_path + " for writing");
        out << text;
    }
}

/// Lattice from an inline JSON Gram matrix like "[[2,1],[1,2]]".
Lattice lattice_from_arg(const std::string& gram) {
    nlohmann::json j = nlohmann::json::parse(gram);
    return Lattice(gram_from_json(j));
}

/// Module from --gram (inline Gram) or --module (JSON file); exactly one.
FiniteQuadraticModule module_from_args(const std::string& gram, const std::string& module_path) {
    if (gram.empty() == module_path.empty())
        throw UsageError("provide exactly one of --gram and --module");
    if (!gram.empty()) return discriminant_form(lattice_from_arg(gram)).module;
    return module_from_json(read_json_file(module_path));
}

FqElement element_from_arg(const FiniteQuadraticModule& A, const std::string& s) {
    std::vector<Integer> x;
    if (!s.empty() && s != "-") {
        std::istringstream is(s);
        std::string cur;
        while (std::getline(is, cur, ',')) x.emplace_back(cur);
    }
    if (x.size() != A.ngens())
        throw UsageError("element needs " + std::to_string(A.ngens()) + " coordinates");
    return A.reduce(std::move(x));
}

std::complex<double> complex_from_arg(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::string double_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json cyc_json(const Cyclotomic& c) {
    auto z = c.to_complex();
    return {{"exact", c.str()}, {"float", {z.real(), z.imag()}}};
}

nlohmann::json complex_json(std::complex<double> z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json module_report(const FiniteQuadraticModule& A) {
    nlohmann::json j = module_to_json(A);
    j["size"] = A.size().str();
    j["level"] = A.level().str();
    j["sig8"] = A.sig8();
    return j;
}

// --- subcommand implementations ---------------------------------------------

int cmd_df_build(const std::string& gram, const std::string& out) {
    DiscriminantForm df = discriminant_form(lattice_from_arg(gram));
    write_output(module_report(df.module), out);
    return kExitOk;
}

int cmd_df_info(const std::string& gram, const std::string& module_path) {
    FiniteQuadraticModule A = module_from_args(gram, module_path);
    nlohmann::json j = module_report(A);
    j["isotropic_count"] = A.isotropic_elements().size();
    write_output(j, "");
    return kExitOk;
}

int cmd_weil_dump(const std::string& gram, const std::string& module_path,
                  const std::string& mat, int branch, const std::string& out) {
    WeilRep W(module_from_args(gram, module_path));
    nlohmann::json j;
    j["T"] = cyc_matrix_to_json(W.rho_T());
    j["S"] = cyc_matrix_to_json(W.rho_S());
    j["Z"] = cyc_matrix_to_json(W.rho_Z());
    if (!mat.empty()) {
        nlohmann::json m = nlohmann::json::parse(mat);
        MetaplecticElement g =
            mp_make(Integer(m.at(0).at(0).get<long>()), Integer(m.at(0).at(1).get<long>()),
                    Integer(m.at(1).at(0).get<long>()), Integer(m.at(1).at(1).get<long>()),
                    branch);
        j["g"] = mp_to_json(g);
        j["rho"] = cyc_matrix_to_json(W.rho_of(g));
    }
    write_output(j, out);
    return kExitOk;
}

int cmd_weil_check(const std::string& gram, const std::string& module_path, int count,
                   unsigned seed) {
    WeilRep W(module_from_args(gram, module_path));
    if (!cyc_equal(cyc_mul(W.rho_S(), W.rho_S()), W.rho_Z()))
        throw VerifyError("rho(S)^2 != rho(Z)");
    CycMatrix st = cyc_mul(W.rho_S(), W.rho_T());
    if (!cyc_equal(cyc_mul(st, cyc_mul(st, st)), W.rho_Z()))
        throw VerifyError("(rho(S) rho(T))^3 != rho(Z)");
    if (!cyc_is_identity(cyc_mul(W.rho_S(), cyc_adjoint(W.rho_S()))) ||
        !cyc_is_identity(cyc_mul(W.rho_T(), cyc_adjoint(W.rho_T()))))
        throw VerifyError("generator matrices are not unitary");
    std::mt19937 rng(seed);
    for (int t = 0; t < count; ++t) {
        MetaplecticElement g1 = mp_identity(), g2 = mp_identity();
        for (int s = 0; s < 8; ++s) {
            auto step = [&](MetaplecticElement g) {
                return (rng() % 2) ? mp_compose(g, mp_S())
                                   : mp_compose(g, mp_T(Integer(static_cast<long>(rng() % 5)) - 2));
            };
            g1 = step(g1);
            g2 = step(g2);
        }
        if (!cyc_equal(W.rho_of(mp_compose(g1, g2)), cyc_mul(W.rho_of(g1), W.rho_of(g2))))
            throw VerifyError("rho(g1 g2) != rho(g1) rho(g2)");
    }
    std::cout << "weil check: ok\n";
    return kExitOk;
}

int cmd_gauss_table(long p, unsigned nmax, const std::string& chi_name,
                    const std::string& out_path) {
    CharKind chi = (chi_name == "legendre") ? CharKind::LegendreModP : CharKind::TrivialModPn;
    std::ostringstream os;
    os << "p,n,h,value-exact,value-float\n";
    for (unsigned n = 1; n <= nmax; ++n)
        for (Integer h = 0; h < pow_int(Integer(p), n); ++h) {
            Cyclotomic v = g_p(Integer(p), n, chi, h, GpMode::Closed);
            auto z = v.to_complex();
            os << p << "," << n << "," << h << ",\"" << v.str() << "\","
               << double_str(z.real()) << (z.imag() < 0 ? "" : "+")
               << double_str(z.imag()) << "j\n";
        }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot open " + out_path + " for writing");
        out << os.str();
    }
    return kExitOk;
}

int cmd_gauss_check(long p, unsigned nmax) {
    for (unsigned n = 1; n <= nmax; ++n)
        for (Integer h = 0; h < pow_int(Integer(p), n); ++h)
            for (CharKind chi : {CharKind::TrivialModPn, CharKind::LegendreModP})
                if (g_p(Integer(p), n, chi, h, GpMode::Brute) !=
                    g_p(Integer(p), n, chi, h, GpMode::Closed))
                    throw VerifyError("g_p brute/closed mismatch at n=" + std::to_string(n));
    std::cout << "gauss check: ok\n";
    return kExitOk;
}

int cmd_theta(const std::string& gram, const std::string& nmax, const std::string& out) {
    Lattice L = lattice_from_arg(gram);
    DiscriminantForm df = discriminant_form(L);
    FourierExpansion f = theta_series(df, L, parse_rational(nmax));
    write_output(expansion_to_json(f), out);
    return kExitOk;
}

/// df/L companions are required by the direct and bad formulas on nontrivial
/// modules; the Gram must reproduce the expansion's module.
FourierExpansion apply_formula(const FourierExpansion& f, const Integer& p,
                               const std::string& formula, const std::string& gram) {
    std::optional<Lattice> L;
    std::optional<DiscriminantForm> df;
    if (!gram.empty()) {
        L.emplace(lattice_from_arg(gram));
        df.emplace(discriminant_form(*L));
        if (!(df->module == f.module()))
            throw UsageError("--gram does not match the expansion's module");
    }
    const DiscriminantForm* dfp = df ? &*df : nullptr;
    const Lattice* lp = L ? &*L : nullptr;
    if (formula == "direct") return hecke_direct(f, p, dfp, lp);
    if (formula == "even") return hecke_closed_even(f, p);
    if (formula == "odd") return hecke_closed_odd(f, p);
    if (formula == "bad") return hecke_closed_bad(f, p, dfp, lp);
    throw UsageError("unknown --formula " + formula);
}

int cmd_hecke_apply(long p, const std::string& formula, const std::string& in,
                    const std::string& out, const std::string& gram) {
    FourierExpansion f = expansion_from_json(read_json_file(in));
    write_output(expansion_to_json(apply_formula(f, Integer(p), formula, gram)), out);
    return kExitOk;
}

int cmd_hecke_eigen(long p, const std::string& formula, const std::string& in,
                    const std::string& gram) {
    FourierExpansion f = expansion_from_json(read_json_file(in));
    EigenReport rep = eigenvalue_extract(f, apply_formula(f, Integer(p), formula, gram));
    nlohmann::json j;
    j["p"] = p;
    j["eigenvalue"] = cyc_json(rep.eigenvalue);
    j["exact"] = rep.exact;
    j["indices_tested"] = rep.indices_tested;
    write_output(j, "");
    if (!rep.exact) throw VerifyError("nonzero eigen residual: not an eigenform");
    return kExitOk;
}

int cmd_hecke_recursion(long p, unsigned r) {
    if (!recursion_check(Integer(p), r)) throw VerifyError("recursion identity failed");
    std::cout << "hecke recursion: ok\n";
    return kExitOk;
}

int cmd_hecke_adjoint(const std::string& gram, const std::string& module_path, long m) {
    if (!gstar_adjointness(module_from_args(gram, module_path), Integer(m)))
        throw VerifyError("g/g* adjointness failed");
    std::cout << "hecke adjoint: ok\n";
    return kExitOk;
}

int cmd_lseries_coeffs(const std::string& in, const std::string& lam_s, const std::string& t_s,
                       const std::string& N_s, long ncut, const std::string& out) {
    FourierExpansion f = expansion_from_json(read_json_file(in));
    FqElement lam = element_from_arg(f.module(), lam_s);
    SeriesTruncation s = series_coeffs(f, lam, parse_rational(t_s), Integer(N_s), ncut);
    nlohmann::json j;
    j["lam"] = lam_s;
    j["t"] = t_s;
    j["N"] = N_s;
    j["terms"] = nlohmann::json::array();
    for (const auto& [n, c] : s.terms) {
        nlohmann::json e = cyc_json(c);
        e["n"] = n.str();
        j["terms"].push_back(e);
    }
    write_output(j, out);
    return kExitOk;
}

EulerFactor factor_from_args(const FourierExpansion& f, const Integer& p,
                             const std::string& formula, const std::string& gram,
                             const FqElement& lam, const Rational& t, bool bad,
                             const std::string& sign) {
    EigenReport rep = eigenvalue_extract(f, apply_formula(f, p, formula, gram));
    if (!rep.exact) throw VerifyError("eigenvalue not certified; cannot build factor");
    if (!bad) return euler_factor_good(p, f.k2(), rep.eigenvalue, f.module(), t);
    if (gram.empty()) throw UsageError("--bad needs --gram");
    Lattice L = lattice_from_arg(gram);
    SylowComponent syl = p_component(f.module(), p);
    FqElement lam_p = syl.project(lam);
    bool lam_p_zero = syl.sub.is_zero(lam_p);
    Integer C = lam_p_zero ? 0 : orbit_count_norm(syl.sub, lam_p);
    return euler_factor_bad(p, f.k2(), rep.eigenvalue, K_Lp(L, p), jordan_counts(L, p, 1).R,
                            lam_p_zero, C, t,
                            sign == "plus" ? X2Sign::Plus : X2Sign::Minus);
}

nlohmann::json poly_json(const XPolynomial& poly) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < std::max<std::size_t>(poly.degree_bound(), 1); ++i)
        a.push_back(cyc_json(poly.coeff(i)));
    return a;
}

int cmd_lseries_factor(const std::string& in, long p, const std::string& formula,
                       const std::string& gram, const std::string& lam_s,
                       const std::string& t_s, bool bad, const std::string& sign,
                       const std::string& s_arg, const std::string& out) {
    FourierExpansion f = expansion_from_json(read_json_file(in));
    FqElement lam = element_from_arg(f.module(), lam_s);
    EulerFactor ef =
        factor_from_args(f, Integer(p), formula, gram, lam, parse_rational(t_s), bad, sign);
    nlohmann::json j;
    j["p"] = p;
    j["R"] = poly_json(ef.R);
    j["P"] = poly_json(ef.P);
    j["odd_parity"] = ef.odd_parity;
    j["bad"] = ef.bad;
    if (!s_arg.empty()) j["value"] = complex_json(ef.eval(complex_from_arg(s_arg)));
    write_output(j, out);
    return kExitOk;
}

int cmd_lseries_identity(const std::string& in, long p, const std::string& formula,
                         const std::string& gram, const std::string& lam_s,
                         const std::string& t_s, unsigned K, bool bad,
                         const std::string& sign) {
    FourierExpansion f = expansion_from_json(read_json_file(in));
    FqElement lam = element_from_arg(f.module(), lam_s);
    Rational t = parse_rational(t_s);
    EulerFactor ef = factor_from_args(f, Integer(p), formula, gram, lam, t, bad, sign);
    if (!hn_identity_check(f, lam, t, Integer(p), K, ef))
        throw VerifyError("H_n identity failed through x^" + std::to_string(K));
    std::cout << "lseries identity: ok through x^" << K << "\n";
    return kExitOk;
}

int cmd_lseries_compare(const std::string& in, const std::string& lam_s, const std::string& t_s,
                        const std::string& N_s, long ncut, long pmax,
                        const std::string& formula, const std::string& gram,
                        const std::string& s_arg, const std::string& out) {
    FourierExpansion f = expansion_from_json(read_json_file(in));
    const FiniteQuadraticModule& A = f.module();
    FqElement lam = element_from_arg(A, lam_s);
    Rational t = parse_rational(t_s);
    SeriesTruncation s = series_coeffs(f, lam, t, Integer(N_s), ncut);
    std::vector<EulerFactor> factors;
    for (Integer p = 2; p <= pmax; ++p) {
        if (!is_prime(p) || igcd(p, A.level()) != 1) continue;
        factors.push_back(factor_from_args(f, p, formula, gram, lam, t, false, "minus"));
    }
    std::complex<double> prefactor = f.coeff(lam, t).to_complex();
    ProductComparison pc =
        product_vs_series(s, prefactor, factors, complex_from_arg(s_arg), f.k2());
    nlohmann::json j;
    j["series"] = complex_json(pc.series);
    j["product"] = complex_json(pc.product);
    j["gap"] = pc.gap;
    j["tail_diag"] = pc.tail_diag;
    write_output(j, out);
    return kExitOk;
}

int cmd_kloosterman(const std::string& gram, const std::string& module_path, long c,
                    const std::string& lam_s, const std::string& mu_s, const std::string& m_s,
                    const std::string& n_s, int k2) {
    FiniteQuadraticModule A = (gram.empty() && module_path.empty())
                                  ? FiniteQuadraticModule::trivial()
                                  : module_from_args(gram, module_path);
    WeilRep W(A);
    KloostermanQuery q = make_query(A, element_from_arg(A, lam_s), parse_rational(m_s),
                                    element_from_arg(A, mu_s), parse_rational(n_s),
                                    Integer(c), k2);
    nlohmann::json j;
    j["c"] = c;
    j["H_c"] = cyc_json(H_c(W, q));
    write_output(j, "");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil representations, lattice Gauss sums, Hecke operators and "
                 "symmetric-square L-series in exact arithmetic"};
    app.require_subcommand(1);
    std::function<int()> run;

    // df
    auto* df = app.add_subcommand("df", "finite quadratic modules");
    df->require_subcommand(1);
    static std::string gram, module_path, out, in;
    {
        auto* c = df->add_subcommand("build", "discriminant form of an even lattice");
        c->add_option("--gram", gram, "Gram matrix, e.g. [[2,1],[1,2]]")->required();
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] { run = [] { return cmd_df_build(gram, out); }; });
    }
    {
        auto* c = df->add_subcommand("info", "summary of a module");
        c->add_option("--gram", gram, "Gram matrix");
        c->add_option("--module", module_path, "module JSON file");
        c->callback([&] { run = [] { return cmd_df_info(gram, module_path); }; });
    }

    // weil
    auto* weil = app.add_subcommand("weil", "Weil representation");
    weil->require_subcommand(1);
    static std::string mat;
    static int branch = 1, count = 20;
    static unsigned seed = 1;
    {
        auto* c = weil->add_subcommand("dump", "generator matrices (and rho of a given matrix)");
        c->add_option("--gram", gram, "Gram matrix");
        c->add_option("--module", module_path, "module JSON file");
        c->add_option("--mat", mat, "SL2(Z) matrix, e.g. [[1,1],[0,1]]");
        c->add_option("--branch", branch, "branch bit, +1 or -1");
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] { run = [] { return cmd_weil_dump(gram, module_path, mat, branch, out); }; });
    }
    {
        auto* c = weil->add_subcommand("check", "relations, unitarity, word independence");
        c->add_option("--gram", gram, "Gram matrix");
        c->add_option("--module", module_path, "module JSON file");
        c->add_option("--count", count, "random word pairs (default 20)");
        c->add_option("--seed", seed, "RNG seed");
        c->callback([&] { run = [] { return cmd_weil_check(gram, module_path, count, seed); }; });
    }

    // gauss
    auto* gauss = app.add_subcommand("gauss", "character Gauss sums g_p");
    gauss->require_subcommand(1);
    static long p = 3;
    static unsigned nmax = 2, rr = 1;
    static std::string chi_name = "trivial";
    {
        auto* c = gauss->add_subcommand("table", "CSV table of closed-form values");
        c->add_option("--p", p, "odd prime")->required();
        c->add_option("--nmax", nmax, "largest exponent n (default 2)");
        c->add_option("--chi", chi_name, "trivial | legendre");
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] { run = [] { return cmd_gauss_table(p, nmax, chi_name, out); }; });
    }
    {
        auto* c = gauss->add_subcommand("check", "brute force vs closed form");
        c->add_option("--p", p, "odd prime")->required();
        c->add_option("--nmax", nmax, "largest exponent n (default 2)");
        c->callback([&] { run = [] { return cmd_gauss_check(p, nmax); }; });
    }

    // theta
    static std::string nmax_s = "10";
    {
        auto* c = app.add_subcommand("theta", "theta series of a positive definite lattice");
        c->add_option("--gram", gram, "Gram matrix")->required();
        c->add_option("--nmax", nmax_s, "truncation bound (rational, default 10)");
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] { run = [] { return cmd_theta(gram, nmax_s, out); }; });
    }

    // hecke
    auto* hecke = app.add_subcommand("hecke", "Hecke operators T(p^2)");
    hecke->require_subcommand(1);
    static std::string formula = "direct";
    static long m = 2;
    {
        auto* c = hecke->add_subcommand("apply", "apply an operator to an expansion");
        c->add_option("--p", p, "prime")->required();
        c->add_option("--formula", formula, "direct | even | odd | bad");
        c->add_option("--in", in, "input expansion JSON")->required();
        c->add_option("--out", out, "output file (default stdout)");
        c->add_option("--gram", gram, "parent lattice Gram (needed by direct/bad on nontrivial modules)");
        c->callback([&] { run = [] { return cmd_hecke_apply(p, formula, in, out, gram); }; });
    }
    {
        auto* c = hecke->add_subcommand("eigen", "certify an eigenform and report the eigenvalue");
        c->add_option("--p", p, "prime")->required();
        c->add_option("--formula", formula, "direct | even | odd | bad");
        c->add_option("--in", in, "input expansion JSON")->required();
        c->add_option("--gram", gram, "parent lattice Gram");
        c->callback([&] { run = [] { return cmd_hecke_eigen(p, formula, in, gram); }; });
    }
    {
        auto* c = hecke->add_subcommand("recursion", "double coset recursion identities");
        c->add_option("--p", p, "prime")->required();
        c->add_option("--r", rr, "exponent r (default 1)");
        c->callback([&] { run = [] { return cmd_hecke_recursion(p, rr); }; });
    }
    {
        auto* c = hecke->add_subcommand("adjoint", "g/g* adjointness and torsion sum");
        c->add_option("--gram", gram, "Gram matrix");
        c->add_option("--module", module_path, "module JSON file");
        c->add_option("--m", m, "scaling index m (default 2)");
        c->callback([&] { run = [] { return cmd_hecke_adjoint(gram, module_path, m); }; });
    }

    // lseries
    auto* ls = app.add_subcommand("lseries", "symmetric-square L-series");
    ls->require_subcommand(1);
    static std::string lam_s = "-", t_s = "1", N_s = "1", s_arg, sign = "minus";
    static long ncut = 50, pmax = 20;
    static unsigned K = 2;
    static bool bad = false;
    {
        auto* c = ls->add_subcommand("coeffs", "restricted coefficient stream a(n lam, n^2 t)");
        c->add_option("--in", in, "input expansion JSON")->required();
        c->add_option("--lam", lam_s, "component, comma separated coordinates ('-' for trivial)");
        c->add_option("--t", t_s, "index t (rational)");
        c->add_option("--N", N_s, "coprimality level N");
        c->add_option("--ncut", ncut, "largest index n");
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] { run = [] { return cmd_lseries_coeffs(in, lam_s, t_s, N_s, ncut, out); }; });
    }
    {
        auto* c = ls->add_subcommand("factor", "Euler factor at p from a certified eigenform");
        c->add_option("--in", in, "input expansion JSON")->required();
        c->add_option("--p", p, "prime")->required();
        c->add_option("--formula", formula, "Hecke formula used for certification");
        c->add_option("--gram", gram, "parent lattice Gram");
        c->add_option("--lam", lam_s, "component");
        c->add_option("--t", t_s, "index t (rational)");
        c->add_flag("--bad", bad, "bad-prime display");
        c->add_option("--sign", sign, "x^2 sign in the bad numerator: minus | plus");
        c->add_option("--s", s_arg, "evaluate at s = re,im");
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] {
            run = [] { return cmd_lseries_factor(in, p, formula, gram, lam_s, t_s, bad, sign,
                                                 s_arg, out); };
        });
    }
    {
        auto* c = ls->add_subcommand("identity", "H_n(x) P(x) = a R(x) through x^K");
        c->add_option("--in", in, "input expansion JSON")->required();
        c->add_option("--p", p, "prime")->required();
        c->add_option("--formula", formula, "Hecke formula used for certification");
        c->add_option("--gram", gram, "parent lattice Gram");
        c->add_option("--lam", lam_s, "component");
        c->add_option("--t", t_s, "index t (rational)");
        c->add_option("--K", K, "check order (default 2)");
        c->add_flag("--bad", bad, "bad-prime display");
        c->add_option("--sign", sign, "x^2 sign in the bad numerator: minus | plus");
        c->callback([&] {
            run = [] { return cmd_lseries_identity(in, p, formula, gram, lam_s, t_s, K, bad,
                                                   sign); };
        });
    }
    {
        auto* c = ls->add_subcommand("compare", "truncated series vs Euler product");
        c->add_option("--in", in, "input expansion JSON")->required();
        c->add_option("--lam", lam_s, "component");
        c->add_option("--t", t_s, "index t (rational)");
        c->add_option("--N", N_s, "coprimality level N");
        c->add_option("--ncut", ncut, "largest series index");
        c->add_option("--pmax", pmax, "largest prime in the product");
        c->add_option("--formula", formula, "Hecke formula used for certification");
        c->add_option("--gram", gram, "parent lattice Gram");
        c->add_option("--s", s_arg, "evaluation point s = re,im")->required();
        c->add_option("--out", out, "output file (default stdout)");
        c->callback([&] {
            run = [] { return cmd_lseries_compare(in, lam_s, t_s, N_s, ncut, pmax, formula,
                                                  gram, s_arg, out); };
        });
    }

    // kloosterman
    static std::string mu_s = "-", m_s = "0", n_s = "0";
    static long cc = 1;
    static int k2 = 0;
    {
        auto* c = app.add_subcommand("kloosterman", "generalized Kloosterman sum H_c");
        c->add_option("--c", cc, "nonzero modulus c")->required();
        c->add_option("--lam", lam_s, "component lambda");
        c->add_option("--mu", mu_s, "component mu");
        c->add_option("--m", m_s, "index m (rational, m = q(lam) mod 1)");
        c->add_option("--n", n_s, "index n (rational, n = q(mu) mod 1)");
        c->add_option("--gram", gram, "Gram matrix (default: trivial module)");
        c->add_option("--module", module_path, "module JSON file");
        c->add_option("--k2", k2, "doubled weight 2k");
        c->callback([&] {
            run = [] { return cmd_kloosterman(gram, module_path, cc, lam_s, mu_s, m_s, n_s, k2); };
        });
    }

    // suite
    auto* suite = app.add_subcommand("suite", "verification suites");
    suite->require_subcommand(1);
    {
        auto* c = suite->add_subcommand("acceptance", "full acceptance suite");
        c->callback([&] {
            run = [] { return vvmf::run_acceptance(std::cout) ? kExitOk : kExitVerify; };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    try {
        return run();
    } catch (const VerifyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
