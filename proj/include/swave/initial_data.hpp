#pragma once

#include <string>
#include <utility>

namespace swave {

/// Selects the upper or lower sign in u_t ± u_x, M± = ±f' + g, and friends.
enum class Sign { Plus = 1, Minus = -1 };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

enum class DataFamily {
    Bump,      ///< f = A(1-(x/R)^2)^3, g = B(1-(x/R)^2)^2
    Traveling, ///< f = A(1-(x/R)^2)^3, g = -s f', so that s f' + g = 0 identically
};

/// Compactly supported initial data (f, g) with supp f, supp g in [-R, R].
///
/// Both families are piecewise polynomials, so f', f'', g' and the
/// antiderivative G(x) = int_{-inf}^x g are evaluated exactly. f is C^2 and
/// g is C^1 across |x| = R.
class InitialData {
public:
    double f(double x) const;
    double df(double x) const;
    double d2f(double x) const;
    double g(double x) const;
    double dg(double x) const;
    /// Antiderivative of g normalised so that G = 0 for x < -R.
    double G(double x) const;

    double R() const { return radius_; }
    DataFamily family() const { return family_; }
    double amp_f() const { return amp_f_; }
    double amp_g() const { return amp_g_; }
    /// Direction of the traveling family (only meaningful for DataFamily::Traveling).
    Sign direction() const { return direction_; }

    std::string describe() const;

    friend InitialData make_bump_data(double amp_f, double amp_g, double R);
    friend InitialData make_traveling_data(double amp_f, double R, Sign direction);

private:
    InitialData() = default;

    DataFamily family_ = DataFamily::Bump;
    double amp_f_ = 0.0;
    double amp_g_ = 0.0;
    double radius_ = 1.0;
    Sign direction_ = Sign::Plus;
};

/// f = amp_f (1-(x/R)^2)^3 and g = amp_g (1-(x/R)^2)^2 on |x| <= R.
/// Throws std::invalid_argument for R < 1.
InitialData make_bump_data(double amp_f, double amp_g, double R);

/// Data for which u = eps f(x - s t) is an exact global solution of the
/// special model with the matching sign s: g = -s f'.
InitialData make_traveling_data(double amp_f, double R, Sign direction);

/// M±(x0) = ±f'(x0) + g(x0). Any sign of the result is allowed.
double eval_M(const InitialData& data, Sign sign, double x0);

struct MStar {
    double value = 0.0;    ///< max |±f' + g| over the sample grid
    double x = 0.0;        ///< smallest maximiser
    bool degenerate = false;
};

inline constexpr int kDefaultMStarSamples = (1 << 16) + 1;
inline constexpr double kDegenerateAmplitude = 1e-14;

/// Dense-sample maximum of |±f'+g| on [-R, R]. Returns {0, 0, true} when the
/// maximum is below kDegenerateAmplitude (no blow-up direction).
MStar eval_Mstar(const InitialData& data, Sign sign, int samples = kDefaultMStarSamples);

} // namespace swave
