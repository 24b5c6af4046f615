#include "triham/frobenius/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace triham::frobenius {

namespace {

using nlohmann::json;

json cplx(cdouble z) { return json::array({z.real(), z.imag()}); }

cdouble as_cplx(const json& j) {
    if (!j.is_array() || j.size() != 2) fail("ParseError", "complex scalar must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json monomial_to_json(const MonomialTerm& m) {
    return json{{"coeff", cplx(m.coeff)}, {"exponents", m.exps}};
}

MonomialTerm monomial_from_json(const json& j) {
    MonomialTerm m;
    m.coeff = as_cplx(j.at("coeff"));
    m.exps = j.at("exponents").get<std::vector<int>>();
    return m;
}

}  // namespace

std::string to_json(const Prepotential& F) {
    json j;
    j["n"] = F.dim();
    j["charge"] = F.charge();
    j["degrees"] = F.degrees();
    json eta = json::array();
    for (int a = 0; a < F.dim(); ++a)
        for (int b = 0; b < F.dim(); ++b) eta.push_back(cplx(F.eta()(a, b)));
    j["eta"] = eta;
    json mono = json::array();
    for (const auto& m : F.monomials()) mono.push_back(monomial_to_json(m));
    j["monomials"] = mono;
    json rad = json::array();
    for (const auto& r : F.radicals()) {
        json q = json::array();
        for (const auto& m : r.Q.terms) q.push_back(monomial_to_json(m));
        rad.push_back(json{{"coeff", cplx(r.coeff)}, {"power", r.power}, {"Q", q}});
    }
    j["radicals"] = rad;
    return j.dump(2) + "\n";
}

Prepotential prepotential_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail("ParseError", e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        const double charge = j.at("charge").get<double>();
        auto degrees = j.at("degrees").get<std::vector<double>>();
        const auto& etaj = j.at("eta");
        if (static_cast<int>(etaj.size()) != n * n) fail("ParseError", "eta must have n*n entries");
        CMatrix eta(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) eta(a, b) = as_cplx(etaj[a * n + b]);
        std::vector<MonomialTerm> monomials;
        for (const auto& mj : j.value("monomials", json::array()))
            monomials.push_back(monomial_from_json(mj));
        std::vector<RadicalTerm> radicals;
        for (const auto& rj : j.value("radicals", json::array())) {
            RadicalTerm r;
            r.coeff = as_cplx(rj.at("coeff"));
            r.power = rj.at("power").get<double>();
            r.Q.n = n;
            for (const auto& mj : rj.at("Q")) r.Q.terms.push_back(monomial_from_json(mj));
            radicals.push_back(std::move(r));
        }
        return Prepotential(n, charge, std::move(degrees), std::move(eta), std::move(monomials),
                            std::move(radicals));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail("ParseError", e.what());
    }
}

Prepotential load_prepotential(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return prepotential_from_json(ss.str());
}

void save_prepotential(const Prepotential& F, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("IoError", "cannot write " + path);
    out << to_json(F);
}

}  // namespace triham::frobenius
