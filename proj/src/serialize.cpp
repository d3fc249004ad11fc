#include "vvmf/serialize.hpp"

#include <sstream>

namespace vvmf {

namespace {

std::string coords_str(const std::vector<Integer>& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ",";
        os << x[i].str();
    }
    return os.str();
}

std::vector<Integer> coords_parse(const std::string& s, std::size_t expect) {
    std::vector<Integer> x;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) x.emplace_back(cur);
    if (x.size() != expect) throw std::domain_error("coords: wrong length");
    return x;
}

} // namespace

nlohmann::json module_to_json(const FiniteQuadraticModule& A) {
    nlohmann::json j;
    j["orders"] = nlohmann::json::array();
    for (const Integer& d : A.orders()) j["orders"].push_back(d.str());
    j["q"] = nlohmann::json::array();
    const std::size_t r = A.ngens();
    auto unit = [&](std::size_t i, std::size_t k) {
        std::vector<Integer> x(r, 0);
        x[i] += 1;
        if (k != i) x[k] += 1;
        return FqElement{x};
    };
    for (std::size_t i = 0; i < r; ++i)
        j["q"].push_back(
            nlohmann::json::array({coords_str(unit(i, i).x), rat_str(A.qbar(unit(i, i)))}));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = i + 1; k < r; ++k)
            j["q"].push_back(
                nlohmann::json::array({coords_str(unit(i, k).x), rat_str(A.qbar(unit(i, k)))}));
    return j;
}

FiniteQuadraticModule module_from_json(const nlohmann::json& j) {
    std::vector<Integer> orders;
    for (const auto& d : j.at("orders")) orders.emplace_back(d.get<std::string>());
    const std::size_t r = orders.size();
    std::map<std::vector<Integer>, Rational> qvals;
    for (const auto& entry : j.at("q")) {
        auto x = coords_parse(entry.at(0).get<std::string>(), r);
        qvals[x] = parse_rational(entry.at(1).get<std::string>());
    }
    auto q_at = [&](std::size_t i, std::size_t k) {
        std::vector<Integer> x(r, 0);
        x[i] += 1;
        if (k != i) x[k] += 1;
        auto it = qvals.find(x);
        if (it == qvals.end()) throw std::domain_error("module_from_json: missing q value");
        return it->second;
    };
    std::vector<Rational> qg(r);
    QMatrix b;
    b.setZero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t i = 0; i < r; ++i) {
        qg[i] = q_at(i, i);
        b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = mod1(2 * qg[i]);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = i + 1; k < r; ++k) {
            Rational bv = mod1(q_at(i, k) - qg[i] - qg[k]);
            b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = bv;
            b(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = bv;
        }
    return FiniteQuadraticModule(std::move(orders), std::move(qg), std::move(b));
}

nlohmann::json expansion_to_json(const FourierExpansion& f) {
    nlohmann::json j;
    j["module"] = module_to_json(f.module());
    j["k2"] = f.k2();
    j["nmax"] = rat_str(f.n_max());
    j["coeffs"] = nlohmann::json::array();
    for (const auto& [key, c] : f.coeffs()) {
        nlohmann::json e;
        e["lam"] = nlohmann::json::array();
        for (const Integer& x : key.first.x) e["lam"].push_back(x.str());
        e["n"] = rat_str(key.second);
        e["c"] = c.str();
        auto z = c.to_complex();
        e["float"] = {z.real(), z.imag()};
        j["coeffs"].push_back(e);
    }
    return j;
}

FourierExpansion expansion_from_json(const nlohmann::json& j) {
    FiniteQuadraticModule A = module_from_json(j.at("module"));
    FourierExpansion f(A, j.at("k2").get<int>(), parse_rational(j.at("nmax").get<std::string>()));
    for (const auto& e : j.at("coeffs")) {
        std::vector<Integer> x;
        for (const auto& v : e.at("lam")) x.emplace_back(v.get<std::string>());
        f.set(FqElement{x}, parse_rational(e.at("n").get<std::string>()),
              parse_cyclotomic(e.at("c").get<std::string>()));
    }
    return f;
}

nlohmann::json mp_to_json(const MetaplecticElement& g) {
    nlohmann::json j;
    j["m"] = nlohmann::json::array({nlohmann::json::array({g.a.str(), g.b.str()}),
                                    nlohmann::json::array({g.c.str(), g.d.str()})});
    j["branch"] = g.branch;
    return j;
}

MetaplecticElement mp_from_json(const nlohmann::json& j) {
    const auto& m = j.at("m");
    return mp_make(Integer(m.at(0).at(0).get<std::string>()),
                   Integer(m.at(0).at(1).get<std::string>()),
                   Integer(m.at(1).at(0).get<std::string>()),
                   Integer(m.at(1).at(1).get<std::string>()), j.at("branch").get<int>());
}

nlohmann::json gram_to_json(const IMatrix& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < g.cols(); ++k) row.push_back(to_i64(g(i, k)));
        rows.push_back(row);
    }
    return rows;
}

IMatrix gram_from_json(const nlohmann::json& j) {
    const Eigen::Index n = static_cast<Eigen::Index>(j.size());
    IMatrix g;
    g.setZero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(j.at(i).size()) != n)
            throw std::domain_error("gram_from_json: not square");
        for (Eigen::Index k = 0; k < n; ++k) g(i, k) = Integer(j.at(i).at(k).get<long>());
    }
    return g;
}

nlohmann::json cyc_matrix_to_json(const CycMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(row);
    }
    return rows;
}

} // namespace vvmf
