#include "minnaert/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minnaert {

namespace pt = boost::property_tree;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double to_double(const std::string& key, const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': not a number: " + text);
    }
    if (text.find_first_not_of(" \t", pos) != std::string::npos)
        throw std::invalid_argument("config key '" + key + "': trailing characters in " + text);
    return v;
}

int to_int(const std::string& key, const std::string& text) {
    const double v = to_double(key, text);
    if (v != std::floor(v)) throw std::invalid_argument("config key '" + key + "': expected an integer");
    return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

Vec3 to_vec3(const std::string& key, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw std::invalid_argument("config key '" + key + "': expected three comma-separated values");
    return {to_double(key, parts[0]), to_double(key, parts[1]), to_double(key, parts[2])};
}

std::string vec3_text(const Vec3& v) { return fmt(v[0]) + ", " + fmt(v[1]) + ", " + fmt(v[2]); }

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"medium", {"rho_b", "rho_e", "kappa", "gamma", "lambda_tilde", "mu_tilde"}},
        {"scene", {"z", "s", "p", "epsilon", "C1", "rho", "N_trunc", "observers", "grid_lo", "grid_hi", "grid_counts"}},
        {"sweep",
         {"n_min", "n_max", "k_values", "omega_min", "omega_max", "omega_count", "field_omega", "t_min", "t_max",
          "t_count"}},
        {"output", {"dir", "tol_helmholtz", "tol_elastic", "fc2", "eta0_scale"}},
    };
    return keys;
}

}  // namespace

std::string format_complex(cplx v) {
    if (v.imag() == 0.0) return fmt(v.real());
    return fmt(v.real()) + (std::signbit(v.imag()) ? "-" : "+") + fmt(std::abs(v.imag())) + "j";
}

cplx parse_complex(const std::string& text) {
    static const std::regex re(R"(^\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)(?:\s*([-+])\s*([0-9.]+(?:[eE][-+]?[0-9]+)?)\s*[ij])?\s*$)");
    static const std::regex pure_imag(R"(^\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*[ij]\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pure_imag)) return {0.0, std::stod(m[1].str())};
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("not a complex number: " + text);
    const double re_part = std::stod(m[1].str());
    if (!m[2].matched) return re_part;
    const double im = std::stod(m[3].str());
    return {re_part, m[2].str() == "-" ? -im : im};
}

bool operator==(const RunConfig& a, const RunConfig& b) { return emit_config(a) == emit_config(b); }

RunConfig parse_config(const std::string& text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw std::invalid_argument(std::string("config syntax error: ") + e.what());
    }
    for (const auto& [section, body] : tree) {
        const auto it = known_keys().find(section);
        if (it == known_keys().end()) throw std::invalid_argument("unknown config section [" + section + "]");
        for (const auto& kv : body)
            if (!it->second.count(kv.first))
                throw std::invalid_argument("unknown config key '" + kv.first + "' in [" + section + "]");
    }
    RunConfig c;
    auto get = [&](const std::string& path) -> std::optional<std::string> {
        if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return *v;
        return std::nullopt;
    };
    auto num = [&](const std::string& path, double& dst) {
        if (auto v = get(path)) dst = to_double(path, *v);
    };
    auto integer = [&](const std::string& path, int& dst) {
        if (auto v = get(path)) dst = to_int(path, *v);
    };
    auto vec = [&](const std::string& path, Vec3& dst) {
        if (auto v = get(path)) dst = to_vec3(path, *v);
    };

    num("medium.rho_b", c.medium.rho_b);
    num("medium.rho_e", c.medium.rho_e);
    num("medium.kappa", c.medium.kappa);
    num("medium.gamma", c.medium.gamma);
    num("medium.lambda_tilde", c.medium.lambda_tilde);
    num("medium.mu_tilde", c.medium.mu_tilde);

    vec("scene.z", c.scene.z);
    vec("scene.s", c.scene.s);
    vec("scene.p", c.scene.p);
    num("scene.epsilon", c.scene.epsilon);
    num("scene.C1", c.scene.c1);
    num("scene.rho", c.scene.rho);
    integer("scene.N_trunc", c.scene.n_trunc);
    if (auto v = get("scene.observers")) {
        c.observers.clear();
        for (const auto& item : split(*v, ';'))
            if (!item.empty()) c.observers.push_back(to_vec3("scene.observers", item));
    }
    vec("scene.grid_lo", c.grid.lo);
    vec("scene.grid_hi", c.grid.hi);
    if (auto v = get("scene.grid_counts")) {
        const Vec3 n = to_vec3("scene.grid_counts", *v);
        for (int i = 0; i < 3; ++i) {
            if (n[i] != std::floor(n[i])) throw std::invalid_argument("scene.grid_counts must be integers");
            c.grid.counts[i] = static_cast<int>(n[i]);
        }
    }

    integer("sweep.n_min", c.sweep.n_min);
    integer("sweep.n_max", c.sweep.n_max);
    if (auto v = get("sweep.k_values")) {
        c.sweep.k_values.clear();
        for (const auto& item : split(*v, ','))
            if (!item.empty()) c.sweep.k_values.push_back(parse_complex(item));
    }
    num("sweep.omega_min", c.sweep.omega_min);
    num("sweep.omega_max", c.sweep.omega_max);
    integer("sweep.omega_count", c.sweep.omega_count);
    num("sweep.field_omega", c.sweep.field_omega);
    num("sweep.t_min", c.sweep.t_min);
    num("sweep.t_max", c.sweep.t_max);
    integer("sweep.t_count", c.sweep.t_count);

    if (auto v = get("output.dir")) c.output.dir = *v;
    num("output.tol_helmholtz", c.output.tol_helmholtz);
    num("output.tol_elastic", c.output.tol_elastic);
    if (auto v = get("output.fc2")) {
        if (*v == "upper")
            c.output.fc2 = Fc2Variant::Upper;
        else if (*v == "lower")
            c.output.fc2 = Fc2Variant::Lower;
        else
            throw std::invalid_argument("output.fc2 must be 'upper' or 'lower'");
    }
    num("output.eta0_scale", c.output.eta0_scale);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string emit_config(const RunConfig& c) {
    std::ostringstream o;
    o << "[medium]\n";
    o << "rho_b = " << fmt(c.medium.rho_b) << "\n";
    o << "rho_e = " << fmt(c.medium.rho_e) << "\n";
    o << "kappa = " << fmt(c.medium.kappa) << "\n";
    o << "gamma = " << fmt(c.medium.gamma) << "\n";
    o << "lambda_tilde = " << fmt(c.medium.lambda_tilde) << "\n";
    o << "mu_tilde = " << fmt(c.medium.mu_tilde) << "\n\n";

    o << "[scene]\n";
    o << "z = " << vec3_text(c.scene.z) << "\n";
    o << "s = " << vec3_text(c.scene.s) << "\n";
    o << "p = " << vec3_text(c.scene.p) << "\n";
    o << "epsilon = " << fmt(c.scene.epsilon) << "\n";
    o << "C1 = " << fmt(c.scene.c1) << "\n";
    o << "rho = " << fmt(c.scene.rho) << "\n";
    o << "N_trunc = " << c.scene.n_trunc << "\n";
    o << "observers = ";
    for (std::size_t i = 0; i < c.observers.size(); ++i) o << (i ? "; " : "") << vec3_text(c.observers[i]);
    o << "\n";
    o << "grid_lo = " << vec3_text(c.grid.lo) << "\n";
    o << "grid_hi = " << vec3_text(c.grid.hi) << "\n";
    o << "grid_counts = " << c.grid.counts[0] << ", " << c.grid.counts[1] << ", " << c.grid.counts[2] << "\n\n";

    o << "[sweep]\n";
    o << "n_min = " << c.sweep.n_min << "\n";
    o << "n_max = " << c.sweep.n_max << "\n";
    o << "k_values = ";
    for (std::size_t i = 0; i < c.sweep.k_values.size(); ++i) o << (i ? ", " : "") << format_complex(c.sweep.k_values[i]);
    o << "\n";
    o << "omega_min = " << fmt(c.sweep.omega_min) << "\n";
    o << "omega_max = " << fmt(c.sweep.omega_max) << "\n";
    o << "omega_count = " << c.sweep.omega_count << "\n";
    o << "field_omega = " << fmt(c.sweep.field_omega) << "\n";
    o << "t_min = " << fmt(c.sweep.t_min) << "\n";
    o << "t_max = " << fmt(c.sweep.t_max) << "\n";
    o << "t_count = " << c.sweep.t_count << "\n\n";

    o << "[output]\n";
    o << "dir = " << c.output.dir << "\n";
    o << "tol_helmholtz = " << fmt(c.output.tol_helmholtz) << "\n";
    o << "tol_elastic = " << fmt(c.output.tol_elastic) << "\n";
    o << "fc2 = " << (c.output.fc2 == Fc2Variant::Upper ? "upper" : "lower") << "\n";
    o << "eta0_scale = " << fmt(c.output.eta0_scale) << "\n";
    return o.str();
}

void validate(const RunConfig& c) {
    validate(c.medium);
    validate(c.scene);
    for (const Vec3& x : c.observers)
        if (!(norm3(sub3(x, c.scene.z)) > c.scene.epsilon))
            throw std::invalid_argument("observer lies inside the closed bubble");
    const SweepConfig& s = c.sweep;
    if (s.n_min < 0 || s.n_max < s.n_min) throw std::invalid_argument("sweep order range must satisfy 0 <= n_min <= n_max");
    for (cplx k : s.k_values)
        if (k == cplx(0.0))
            throw std::invalid_argument("k = 0 lies on the pole of the spherical Hankel function; remove it from k_values");
    if (!(s.omega_min > 0.0) || !(s.omega_max >= s.omega_min) || s.omega_count < 1)
        throw std::invalid_argument("omega sweep needs 0 < omega_min <= omega_max and omega_count >= 1");
    if (!(s.t_max >= s.t_min) || s.t_count < 1) throw std::invalid_argument("time grid needs t_min <= t_max and t_count >= 1");
    for (int n : c.grid.counts)
        if (n < 1) throw std::invalid_argument("grid counts must be positive");
    if (!(c.output.tol_helmholtz > 0.0) || !(c.output.tol_elastic > 0.0))
        throw std::invalid_argument("tolerances must be positive");
}

}  // namespace minnaert
