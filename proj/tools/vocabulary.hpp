#pragma once

// Parsers for the built-in coefficient, integrand, kernel and distribution
// vocabulary used on the command line.

#include <monoratio/monoratio.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace monoratio::cli {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::pair<std::string, std::string> split_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

inline double parse_number(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw usage_error("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw usage_error("not a number: '" + s + "'");
    return v;
}

inline std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number(item));
    if (out.empty())
        throw usage_error("empty number list");
    return out;
}

inline std::vector<double> parse_params(const std::string& kind, const std::string& body, std::size_t min_n,
                                        std::size_t max_n)
{
    const auto v = body.empty() ? std::vector<double>{} : parse_list(body);
    if (v.size() < min_n || v.size() > max_n)
        throw usage_error("'" + kind + "' takes " + std::to_string(min_n) +
                          (min_n == max_n ? "" : ".." + std::to_string(max_n)) + " parameters");
    return v;
}

/// Polynomial coefficients from "c0,c1,..." or an expression such as "1+t^2" or "2t-0.5t^3".
inline std::vector<double> parse_polynomial(const std::string& body)
{
    if (body.empty())
        throw usage_error("empty polynomial");
    if (body.find('t') == std::string::npos)
        return parse_list(body);
    std::vector<double> c;
    std::string s;
    for (char ch : body)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    std::size_t i = 0;
    while (i < s.size()) {
        double sign = 1.0;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1.0 : 1.0;
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' || s[i] == 'e' ||
                                ((s[i] == '+' || s[i] == '-') && i > start && s[i - 1] == 'e')))
            ++i;
        double coef = i > start ? parse_number(s.substr(start, i - start)) : 1.0;
        int power = 0;
        if (i < s.size() && s[i] == '*')
            ++i;
        if (i < s.size() && s[i] == 't') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i == ps)
                    throw usage_error("bad exponent in polynomial '" + body + "'");
                power = std::stoi(s.substr(ps, i - ps));
            }
        } else if (i == start) {
            throw usage_error("cannot parse polynomial '" + body + "'");
        }
        if (c.size() <= static_cast<std::size_t>(power))
            c.resize(power + 1, 0.0);
        c[power] += sign * coef;
    }
    return c;
}

/// recip-gamma:a,b | seq:v,... | const-seq:c[,n] | poly:... (a_k = P(k)) | polygeom:p,q
inline CoefficientSource parse_coefficients(const std::string& spec)
{
    const auto [kind, body] = split_spec(spec);
    if (kind == "recip-gamma") {
        const auto p = parse_params(kind, body, 2, 2);
        return coeffs::recip_gamma(p[0], p[1]);
    }
    if (kind == "seq")
        return coeffs::finite(parse_list(body), spec);
    if (kind == "const-seq") {
        const auto p = parse_params(kind, body, 1, 2);
        if (p.size() == 2)
            return coeffs::constant(p[0], static_cast<int>(p[1]));
        return coeffs::constant(p[0]);
    }
    if (kind == "poly") {
        const auto c = parse_polynomial(body);
        return coeffs::from_function(spec, [c](int k) {
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it)
                acc = acc * k + *it;
            return acc;
        });
    }
    if (kind == "polygeom") {
        const auto p = parse_params(kind, body, 2, 2);
        return coeffs::poly_geometric(p[0], p[1]);
    }
    throw usage_error("unknown coefficient spec '" + spec + "'");
}

/// const:c | poly:... | exp:lambda | gamma:k,theta | recip-gamma:a,b | polyexp:lambda,c0,...
inline Integrand parse_integrand(const std::string& spec)
{
    const auto [kind, body] = split_spec(spec);
    if (kind == "const")
        return integrands::constant(parse_params(kind, body, 1, 1)[0]);
    if (kind == "poly")
        return integrands::polynomial(parse_polynomial(body));
    if (kind == "exp")
        return integrands::exponential(parse_params(kind, body, 1, 1)[0]);
    if (kind == "gamma") {
        const auto p = parse_params(kind, body, 2, 2);
        return integrands::gamma_kernel(p[0], p[1]);
    }
    if (kind == "recip-gamma") {
        const auto p = parse_params(kind, body, 2, 2);
        return integrands::recip_gamma(p[0], p[1]);
    }
    if (kind == "polyexp") {
        auto p = parse_params(kind, body, 2, 64);
        const double lambda = p.front();
        p.erase(p.begin());
        return integrands::poly_exp(lambda, p);
    }
    throw usage_error("unknown integrand spec '" + spec + "'");
}

inline DiscreteKernelFamily parse_discrete_kernel(const std::string& name, double r)
{
    DiscreteKernelFamily f;
    f.r = r;
    if (name == "power")
        f.id = DiscreteFamilyId::PowerK;
    else if (name == "inverse-power")
        f.id = DiscreteFamilyId::InversePowerK;
    else if (name == "expdecay" || name == "exp-decay")
        f.id = DiscreteFamilyId::ExpDecayK;
    else if (name == "dirichlet")
        f.id = DiscreteFamilyId::DirichletK;
    else
        throw usage_error("unknown discrete kernel '" + name + "'");
    if (!(r > 0.0))
        throw usage_error("--r must be positive");
    return f;
}

inline ContinuousKernel parse_continuous_kernel(const std::string& name, double alpha, double beta)
{
    ContinuousKernel k;
    k.alpha = alpha;
    k.beta = beta;
    if (name == "power")
        k.id = ContinuousKernelId::PowerX;
    else if (name == "inverse-power")
        k.id = ContinuousKernelId::InversePowerX;
    else if (name == "explace" || name == "laplace" || name == "expdecay")
        k.id = ContinuousKernelId::ExpDecayX;
    else if (name == "shifted-power")
        k.id = ContinuousKernelId::ShiftedPowerX;
    else if (name == "mellin")
        k.id = ContinuousKernelId::MellinX;
    else
        throw usage_error("unknown continuous kernel '" + name + "'");
    if (!(beta > alpha))
        throw usage_error("--beta must exceed --alpha");
    return k;
}

/// CSV with header "k,p" and k ascending from 0.
inline std::vector<double> read_pmf_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot open pmf file " + path);
    std::string line;
    if (!std::getline(in, line))
        throw usage_error("pmf file " + path + " is empty");
    auto strip = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        return s;
    };
    if (strip(line) != "k,p")
        throw usage_error("pmf file " + path + " must start with the header k,p");
    std::vector<double> p;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw usage_error(path + ":" + std::to_string(lineno) + ": expected k,p");
        const double k = parse_number(line.substr(0, comma));
        if (k != static_cast<double>(p.size()))
            throw usage_error(path + ":" + std::to_string(lineno) + ": k must ascend from 0 without gaps");
        p.push_back(parse_number(line.substr(comma + 1)));
    }
    return p;
}

/// exp:l | gamma:k,theta | uniform:theta | recip-gamma:a,b | geom:p | sbgeom:p | poisson:mu | pmf:p0,... | pmf-file:path
inline RandomVariableModel parse_distribution(const std::string& spec)
{
    const auto [kind, body] = split_spec(spec);
    if (kind == "exp")
        return rv::exponential(parse_params(kind, body, 1, 1)[0]);
    if (kind == "gamma") {
        const auto p = parse_params(kind, body, 2, 2);
        return rv::gamma(p[0], p[1]);
    }
    if (kind == "uniform")
        return rv::uniform(parse_params(kind, body, 1, 1)[0]);
    if (kind == "recip-gamma") {
        const auto p = parse_params(kind, body, 2, 2);
        return rv::reciprocal_gamma_weight(p[0], p[1]);
    }
    if (kind == "geom")
        return rv::geometric(parse_params(kind, body, 1, 1)[0]);
    if (kind == "sbgeom")
        return rv::size_biased_geometric(parse_params(kind, body, 1, 1)[0]);
    if (kind == "poisson")
        return rv::poisson(parse_params(kind, body, 1, 1)[0]);
    if (kind == "pmf")
        return rv::discrete(spec, parse_list(body));
    if (kind == "pmf-file")
        return rv::discrete(spec, read_pmf_file(body));
    throw usage_error("unknown distribution spec '" + spec + "'");
}

} // namespace monoratio::cli
