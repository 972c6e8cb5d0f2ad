#include "swave/nonlinearity.hpp"

#include <stdexcept>
#include <string>

namespace swave {

std::string_view variant_name(Variant v)
{
    switch (v) {
    case Variant::GeneralProduct:
        return "general";
    case Variant::SpecialPlus:
        return "special-plus";
    case Variant::SpecialMinus:
        return "special-minus";
    case Variant::Linear:
        return "linear";
    }
    return "unknown";
}

Variant parse_variant(std::string_view name)
{
    if (name == "general" || name == "general-product")
        return Variant::GeneralProduct;
    if (name == "special-plus" || name == "plus")
        return Variant::SpecialPlus;
    if (name == "special-minus" || name == "minus")
        return Variant::SpecialMinus;
    if (name == "linear" || name == "free")
        return Variant::Linear;
    throw std::invalid_argument("unknown model variant '" + std::string(name) + "'");
}

double NonlinearityParams::riccati_exponent() const
{
    switch (variant) {
    case Variant::SpecialPlus:
    case Variant::SpecialMinus:
        return p;
    case Variant::GeneralProduct:
        return p + q;
    case Variant::Linear:
        break;
    }
    return 1.0;
}

double NonlinearityParams::lifespan_exponent() const
{
    switch (variant) {
    case Variant::SpecialPlus:
    case Variant::SpecialMinus:
        return p - 1.0;
    case Variant::GeneralProduct:
        return p + q - 1.0;
    case Variant::Linear:
        break;
    }
    return 0.0;
}

NonlinearityParams make_params(Variant variant, double p, double q)
{
    auto admissible = [](double e) { return e == 0.0 || e > 1.0; };
    if (!std::isfinite(p) || !std::isfinite(q))
        throw std::invalid_argument("exponents must be finite");
    switch (variant) {
    case Variant::GeneralProduct:
        if (!admissible(p) || !admissible(q))
            throw std::invalid_argument("general product model requires p, q in (1, inf) or {0}");
        return NonlinearityParams{p, q, variant};
    case Variant::SpecialPlus:
    case Variant::SpecialMinus:
        if (!(p > 1.0))
            throw std::invalid_argument("special model requires p > 1");
        return NonlinearityParams{p, 0.0, variant};
    case Variant::Linear:
        return NonlinearityParams{0.0, 0.0, variant};
    }
    throw std::invalid_argument("unknown model variant");
}

} // namespace swave
