#pragma once

#include <cmath>
#include <string>
#include <string_view>

namespace swave {

enum class Variant {
    GeneralProduct, ///< |u_t|^p |u_x|^q
    SpecialPlus,    ///< |u_t + u_x|^{p-1} (u_t + u_x)
    SpecialMinus,   ///< |u_t - u_x|^{p-1} (u_t - u_x)
    Linear,         ///< F = 0, free wave; used for transport checks
};

std::string_view variant_name(Variant v);
/// Accepts general, special-plus, special-minus, linear. Throws std::invalid_argument.
Variant parse_variant(std::string_view name);

/// Exponents and model variant. Construct through make_params so the
/// admissibility rules are enforced.
struct NonlinearityParams {
    double p = 2.0;
    double q = 2.0;
    Variant variant = Variant::GeneralProduct;

    /// Exponent that linearises sup|amplitude| along characteristics:
    /// p for the special models, p + q (heuristic) for the product model.
    double riccati_exponent() const;
    /// Expected lifespan exponent T ~ eps^{-k}: k = p - 1 (special), p + q - 1 (product).
    double lifespan_exponent() const;
    /// True when no closed-form blow-up oracle backs the model.
    bool exploratory() const { return variant == Variant::GeneralProduct; }
};

/// GeneralProduct: (p > 1 or p = 0) and (q > 1 or q = 0).
/// SpecialPlus/SpecialMinus: p > 1; q is ignored (stored as 0).
/// Throws std::invalid_argument otherwise.
NonlinearityParams make_params(Variant variant, double p, double q = 0.0);

/// |x|^e with the convention |x|^0 = 1. Integer exponents 2 and 3 avoid pow().
inline double abs_pow(double x, double e)
{
    const double a = std::abs(x);
    if (e == 0.0)
        return 1.0;
    if (e == 2.0)
        return a * a;
    if (e == 3.0)
        return a * a * a;
    return std::pow(a, e);
}

/// sign(x) |x|^e, zero at x = 0.
inline double signed_pow(double x, double e)
{
    if (x == 0.0)
        return 0.0;
    const double m = abs_pow(x, e);
    return x > 0.0 ? m : -m;
}

/// F(u_t, u_x) evaluated from v = u_t and w = u_x.
inline double source_vw(double v, double w, const NonlinearityParams& np)
{
    switch (np.variant) {
    case Variant::GeneralProduct:
        return abs_pow(v, np.p) * abs_pow(w, np.q);
    case Variant::SpecialPlus:
        return signed_pow(v + w, np.p);
    case Variant::SpecialMinus:
        return signed_pow(v - w, np.p);
    case Variant::Linear:
        break;
    }
    return 0.0;
}

/// F evaluated from the Riemann invariants a = u_t + u_x, b = u_t - u_x.
/// The special models read only the invariant they are built on.
inline double source_ab(double a, double b, const NonlinearityParams& np)
{
    switch (np.variant) {
    case Variant::GeneralProduct:
        return abs_pow(0.5 * (a + b), np.p) * abs_pow(0.5 * (a - b), np.q);
    case Variant::SpecialPlus:
        return signed_pow(a, np.p);
    case Variant::SpecialMinus:
        return signed_pow(b, np.p);
    case Variant::Linear:
        break;
    }
    return 0.0;
}

/// Partial derivatives (dF/dv, dF/dw) at (v, w). Zero exponents contribute
/// nothing; |v|^{p-2} v is evaluated as sign(v)|v|^{p-1} so v = 0 is safe.
inline void source_gradient(double v, double w, const NonlinearityParams& np, double& dv, double& dw)
{
    switch (np.variant) {
    case Variant::GeneralProduct: {
        const double vp = abs_pow(v, np.p);
        const double wq = abs_pow(w, np.q);
        dv = np.p == 0.0 ? 0.0 : np.p * signed_pow(v, np.p - 1.0) * wq;
        dw = np.q == 0.0 ? 0.0 : np.q * signed_pow(w, np.q - 1.0) * vp;
        return;
    }
    case Variant::SpecialPlus: {
        const double d = np.p * abs_pow(v + w, np.p - 1.0);
        dv = d;
        dw = d;
        return;
    }
    case Variant::SpecialMinus: {
        const double d = np.p * abs_pow(v - w, np.p - 1.0);
        dv = d;
        dw = -d;
        return;
    }
    case Variant::Linear:
        break;
    }
    dv = 0.0;
    dw = 0.0;
}

} // namespace swave
