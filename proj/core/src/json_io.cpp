#include "cb/json_io.hpp"

#include <fstream>

namespace cb {

namespace {

json complex_to_json(Complex c) { return json{c.real(), c.imag()}; }

}  // namespace

json to_json(const BivariatePoly& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degz(); ++i)
        for (int j = 0; j <= p.degw(); ++j) {
            const Complex c = p.coeff(i, j);
            if (c == Complex{}) continue;
            coeffs.push_back({{"i", i}, {"j", j}, {"re", c.real()}, {"im", c.imag()}});
        }
    return {{"degz", std::max(0, p.degz())}, {"degw", std::max(0, p.degw())}, {"coeffs", coeffs}};
}

json to_json(const UnivariatePoly& p) {
    return to_json(BivariatePoly::from_univariate_z(p));
}

BivariatePoly bivariate_from_json(const json& j) {
    const int degz = j.at("degz").get<int>();
    const int degw = j.at("degw").get<int>();
    std::vector<std::vector<Complex>> grid(static_cast<std::size_t>(degz) + 1,
                                           std::vector<Complex>(static_cast<std::size_t>(degw) + 1));
    for (const auto& e : j.at("coeffs")) {
        const int i = e.at("i").get<int>();
        const int jj = e.at("j").get<int>();
        if (i < 0 || jj < 0 || i > degz || jj > degw)
            throw Error(Err::BadInput, "polynomial json: coefficient index out of range");
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] =
            Complex{e.at("re").get<double>(), e.at("im").get<double>()};
    }
    return BivariatePoly(std::move(grid));
}

UnivariatePoly univariate_from_json(const json& j) {
    const BivariatePoly b = bivariate_from_json(j);
    if (b.degw() > 0) throw Error(Err::BadInput, "expected a univariate polynomial (degw = 0)");
    std::vector<Complex> cs;
    for (int i = 0; i <= b.degz(); ++i) cs.push_back(b.coeff(i, 0));
    return UnivariatePoly(std::move(cs));
}

json to_json(const Car1Cover& c) {
    json disks = json::array();
    for (const auto& d : c.disks)
        disks.push_back({{"c", complex_to_json(d.center)}, {"r", d.radius}});
    return {{"H", c.H}, {"K", c.K}, {"disks", disks}};
}

Car1Cover car1_from_json(const json& j) {
    Car1Cover c;
    c.H = j.at("H").get<double>();
    c.K = j.at("K").get<int>();
    for (const auto& d : j.at("disks"))
        c.disks.emplace_back(Complex{d.at("c")[0].get<double>(), d.at("c")[1].get<double>()},
                             d.at("r").get<double>());
    return c;
}

json to_json(const Car20Cover& c) {
    json balls = json::array();
    for (const auto& b : c.balls)
        balls.push_back({{"c", json{b.center.z.real(), b.center.z.imag(), b.center.w.real(),
                                    b.center.w.imag()}},
                         {"r", b.radius}});
    return {{"H", c.H}, {"K", c.K}, {"balls", balls}};
}

Car20Cover car20_from_json(const json& j) {
    Car20Cover c;
    c.H = j.at("H").get<double>();
    c.K = j.at("K").get<int>();
    for (const auto& b : j.at("balls")) {
        const auto& cc = b.at("c");
        c.balls.emplace_back(C2{Complex{cc[0].get<double>(), cc[1].get<double>()},
                                Complex{cc[2].get<double>(), cc[3].get<double>()}},
                             b.at("r").get<double>());
    }
    return c;
}

json to_json(const ResultantWitnessReport& r) {
    json j{{"delta", r.delta},
           {"res", complex_to_json(r.res)},
           {"log_abs_res", r.log_abs_res == kLogZero ? json(nullptr) : json(r.log_abs_res)},
           {"part0", {{"holds", r.part0_holds},
                      {"worst_root_f", r.worst_root_f},
                      {"worst_root_g", r.worst_root_g},
                      {"root_bound_f", r.bounds.root_bound_f},
                      {"root_bound_g", r.bounds.root_bound_g}}},
           {"part1", {{"applies", r.part1_applies}, {"holds", r.part1_holds}}},
           {"part2", {{"applies", r.part2_applies}, {"holds", r.part2_holds}}},
           {"bounds", {{"t_f", r.bounds.t_f},
                       {"t_g", r.bounds.t_g},
                       {"T_f", r.bounds.T_f},
                       {"T_g", r.bounds.T_g},
                       {"R_f_displayed", r.bounds.R_f_displayed},
                       {"R_g_displayed", r.bounds.R_g_displayed},
                       {"s", r.bounds.s},
                       {"t", r.bounds.t},
                       {"R", r.bounds.R}}}};
    if (r.part1_witness)
        j["part1"]["witness"] = complex_to_json(*r.part1_witness);
    if (r.part1_applies) j["part1"]["witness_value"] = r.part1_witness_value;
    if (r.part2_witness)
        j["part2"]["witness"] = complex_to_json(*r.part2_witness);
    if (r.part2_applies) j["part2"]["log_bound"] = r.part2_log_bound;
    return j;
}

json to_json(const BernsteinReport& r) {
    return {{"M_outer", r.M_outer == kLogZero ? json(nullptr) : json(r.M_outer)},
            {"M_inner", r.M_inner == kLogZero ? json(nullptr) : json(r.M_inner)},
            {"B", r.B},
            {"samples_used", r.samples_used},
            {"is_identically_zero", r.is_identically_zero}};
}

json to_json(const DoublingBoundReport& r) {
    return {{"B", r.B},
            {"n_quarter3", r.n_quarter3},
            {"n_cofactor", r.n_cofactor},
            {"m_quarter", r.m_quarter},
            {"c1", r.c1},
            {"c2", r.c2},
            {"U_log4", r.U_log4},
            {"U_log10", r.U_log10},
            {"M14_lower", r.M14_lower},
            {"bound", r.bound},
            {"holds", r.holds}};
}

json to_json(const Frame& f) {
    return {{"e1", json{f.e1.z.real(), f.e1.z.imag(), f.e1.w.real(), f.e1.w.imag()}},
            {"e2", json{f.e2.z.real(), f.e2.z.imag(), f.e2.w.real(), f.e2.w.imag()}},
            {"origin",
             json{f.origin.z.real(), f.origin.z.imag(), f.origin.w.real(), f.origin.w.imag()}},
            {"scale", f.scale},
            {"distortion", f.distortion()}};
}

json to_json(const WeierstrassFactorization& wf) {
    json grid = json::array();
    for (const auto& w : wf.w_grid) grid.push_back(complex_to_json(w));
    json acoef = json::array();
    for (const auto& a : wf.a_coeffs) {
        json row = json::array();
        for (const auto& c : a) row.push_back(complex_to_json(c));
        acoef.push_back(row);
    }
    json gs = json::array();
    for (std::size_t i = 0; i < wf.g_samples.size(); ++i)
        gs.push_back({{"z", complex_to_json(wf.g_points[i].z)},
                      {"w", complex_to_json(wf.g_points[i].w)},
                      {"g", complex_to_json(wf.g_samples[i])}});
    return {{"k", wf.k},     {"rho0", wf.rho0},     {"r1", wf.r1}, {"frame", to_json(wf.frame)},
            {"w_grid", grid}, {"a_coeffs", acoef},  {"g", gs}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::BadInput, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Err::BadInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cb
