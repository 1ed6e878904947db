#pragma once

/**
 * @file coefficients.hpp
 * @brief Coefficient sequences {a_k} and integrands f(t) used to build
 *        series and transform ratio problems.
 *
 * Both carry a log-magnitude evaluator so that products with kernel values
 * can be formed without overflow.
 */

#include "errors.hpp"
#include "kernels.hpp"
#include "specfun.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monoratio {

/// A real sequence a_0, a_1, ...; finite sources are zero past `length`.
class CoefficientSource {
public:
    using LogFn = std::function<SignedLog(int)>;

    CoefficientSource() = default;
    CoefficientSource(std::string name, LogFn fn, std::optional<int> length = std::nullopt)
        : name_(std::move(name)), fn_(std::move(fn)), length_(length)
    {
    }

    SignedLog log_at(int k) const
    {
        if (k < 0)
            throw domain_error("coefficient index must be nonnegative");
        if (length_ && k >= *length_)
            return {};
        return fn_(k);
    }
    double at(int k) const { return log_at(k).value(); }

    std::optional<int> length() const { return length_; }
    const std::string& name() const { return name_; }

    /// Coefficients multiplied by a positive constant.
    CoefficientSource scaled(double lambda) const
    {
        if (!(lambda > 0.0))
            throw domain_error("scale factor must be positive");
        const double shift = std::log(lambda);
        auto fn = fn_;
        return {name_ + "*" + std::to_string(lambda),
                [fn, shift](int k) {
                    auto v = fn(k);
                    if (v.sign != 0)
                        v.log_abs += shift;
                    return v;
                },
                length_};
    }

private:
    std::string name_;
    LogFn fn_;
    std::optional<int> length_;
};

namespace coeffs {

inline SignedLog from_value(double v)
{
    if (v == 0.0)
        return {};
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

/// Finite list a_0..a_{n-1}.
inline CoefficientSource finite(std::vector<double> values, std::string name = "seq")
{
    const int n = static_cast<int>(values.size());
    auto shared = std::make_shared<const std::vector<double>>(std::move(values));
    return {std::move(name), [shared](int k) { return from_value((*shared)[k]); }, n};
}

/// a_k = 1 / Gamma(a k + b).
inline CoefficientSource recip_gamma(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("recip-gamma needs a, b > 0");
    return {"recip-gamma:" + std::to_string(a) + "," + std::to_string(b),
            [a, b](int k) { return SignedLog{-ln_gamma(a * k + b).value, 1}; }};
}

/// a_k = c (optionally only for k < n).
inline CoefficientSource constant(double c, std::optional<int> n = std::nullopt)
{
    return {"const-seq:" + std::to_string(c), [c](int) { return from_value(c); }, n};
}

/// a_k = scale * (k+1)^p * q^k, the building block for shaped test sequences.
inline CoefficientSource poly_geometric(double p, double q, double scale = 1.0)
{
    if (!(q > 0.0) || !(scale > 0.0))
        throw domain_error("poly-geometric needs q > 0 and scale > 0");
    const double lq = std::log(q), ls = std::log(scale);
    return {"polygeom", [p, lq, ls](int k) { return SignedLog{ls + p * std::log1p(k) + k * lq, 1}; }};
}

/// a_k = 1 / k!
inline CoefficientSource inverse_factorial() { return recip_gamma(1.0, 1.0); }

/// Arbitrary generator on values.
inline CoefficientSource from_function(std::string name, std::function<double(int)> fn,
                                       std::optional<int> length = std::nullopt)
{
    return {std::move(name), [fn = std::move(fn)](int k) { return from_value(fn(k)); }, length};
}

} // namespace coeffs

/// Real function of t on the integration interval, with an optional log-magnitude form.
class Integrand {
public:
    using Fn = std::function<double(double)>;

    Integrand() = default;
    Integrand(std::string name, Fn fn, Fn log_fn = {})
        : name_(std::move(name)), fn_(std::move(fn)), log_fn_(std::move(log_fn))
    {
    }

    double operator()(double t) const { return fn_(t); }

    /// log f(t) for positive integrands; falls back to log of the value.
    double log_at(double t) const
    {
        if (log_fn_)
            return log_fn_(t);
        const double v = fn_(t);
        return v > 0.0 ? std::log(v) : (v == 0.0 ? -kInf : std::numeric_limits<double>::quiet_NaN());
    }
    const std::string& name() const { return name_; }
    bool has_log() const { return static_cast<bool>(log_fn_); }
    explicit operator bool() const { return static_cast<bool>(fn_); }

private:
    std::string name_;
    Fn fn_;
    Fn log_fn_;
};

namespace integrands {

inline Integrand constant(double c)
{
    return {"const:" + std::to_string(c), [c](double) { return c; }};
}

/// sum_i c_i t^i
inline Integrand polynomial(std::vector<double> c)
{
    return {"poly", [c](double t) {
                double acc = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it)
                    acc = acc * t + *it;
                return acc;
            }};
}

/// e^{-lambda t}
inline Integrand exponential(double lambda)
{
    return {"exp:" + std::to_string(lambda), [lambda](double t) { return std::exp(-lambda * t); },
            [lambda](double t) { return -lambda * t; }};
}

/// t^{shape-1} e^{-rate t}
inline Integrand gamma_kernel(double shape, double rate)
{
    if (!(shape > 0.0) || !(rate > 0.0))
        throw domain_error("gamma integrand needs shape, rate > 0");
    auto lg = [shape, rate](double t) {
        if (t <= 0.0)
            return shape == 1.0 ? 0.0 : (shape > 1.0 ? -kInf : kInf);
        return (shape - 1.0) * std::log(t) - rate * t;
    };
    return {"gamma", [lg](double t) { return std::exp(lg(t)); }, lg};
}

/// 1 / Gamma(a t + b)
inline Integrand recip_gamma(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("recip-gamma needs a, b > 0");
    auto lg = [a, b](double t) { return -ln_gamma(a * t + b).value; };
    return {"recip-gamma:" + std::to_string(a) + "," + std::to_string(b),
            [lg](double t) { return std::exp(lg(t)); }, lg};
}

/// (sum_i c_i t^i) e^{-lambda t}
inline Integrand poly_exp(double lambda, std::vector<double> c)
{
    auto p = polynomial(std::move(c));
    return {"polyexp", [p, lambda](double t) { return p(t) * std::exp(-lambda * t); },
            [p, lambda](double t) {
                const double v = p(t);
                if (v > 0.0)
                    return std::log(v) - lambda * t;
                return v == 0.0 ? -kInf : std::numeric_limits<double>::quiet_NaN();
            }};
}

/// f(t) * g(t)
inline Integrand product(const Integrand& f, const Integrand& g)
{
    return {f.name() + "*" + g.name(), [f, g](double t) { return f(t) * g(t); },
            [f, g](double t) { return f.log_at(t) + g.log_at(t); }};
}

} // namespace integrands

} // namespace monoratio
