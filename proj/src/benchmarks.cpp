#include "gwode/benchmarks.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace gwode {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// Norm-based generalization of the classical 2-D form; reduces to it at D=2
// and keeps the minimum 0 at the origin.
double schaffer_f6(std::span<const double> x) {
    const double s = sphere(x);
    const double num = std::sin(std::sqrt(s));
    const double den = 1.0 + 0.001 * s;
    return 0.5 + (num * num - 0.5) / (den * den);
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double ackley(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double sum_sq = 0.0;
    double sum_cos = 0.0;
    for (double v : x) {
        sum_sq += v * v;
        sum_cos += std::cos(kTwoPi * v);
    }
    static const double e1 = std::exp(1.0);
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / d)) - std::exp(sum_cos / d) + 20.0 + e1;
}

double griewank(std::span<const double> x) {
    double s = 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

// a = 0.5, b = 3, k_max = 20. cos(2 pi 3^k y) is evaluated by the
// triple-angle recurrence cos(3t) = 4 cos^3 t - 3 cos t, one cos call per
// coordinate. Subtracting the per-coordinate constant term keeps the value
// exactly 0 at the origin.
struct WeierstrassTerms {
    static constexpr int k_max = 20;
    std::array<double, k_max + 1> a_pow;
    double s0;

    WeierstrassTerms() {
        double a = 1.0;
        for (int k = 0; k <= k_max; ++k, a *= 0.5) a_pow[k] = a;
        s0 = coordinate_sum(0.0);
    }

    double coordinate_sum(double y) const {
        double c = std::cos(kTwoPi * (y + 0.5));
        double s = 0.0;
        for (int k = 0; k <= k_max; ++k) {
            s += a_pow[k] * c;
            c = 4.0 * c * c * c - 3.0 * c;
        }
        return s;
    }
};

double weierstrass(std::span<const double> x) {
    static const WeierstrassTerms terms;
    double s = 0.0;
    for (double v : x) s += terms.coordinate_sum(v) - terms.s0;
    return s;
}

double rastrigin_term(double y) {
    return y * y - 10.0 * std::cos(kTwoPi * y) + 10.0;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += rastrigin_term(v);
    return s;
}

double noncont_rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        const double y = (std::fabs(v) < 0.5) ? v : std::round(2.0 * v) / 2.0;
        s += rastrigin_term(y);
    }
    return s;
}

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

double penalized_f12(std::span<const double> x) {
    const std::size_t d = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    auto sin_sq = [](double t) {
        const double s = std::sin(t);
        return s * s;
    };
    double s = 10.0 * sin_sq(kPi * y(0));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double dy = y(i) - 1.0;
        s += dy * dy * (1.0 + 10.0 * sin_sq(kPi * y(i + 1)));
    }
    const double last = y(d - 1) - 1.0;
    s += last * last;
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 10.0, 100.0, 4.0);
    return kPi / static_cast<double>(d) * s + pen;
}

double penalized_f13(std::span<const double> x) {
    const std::size_t d = x.size();
    auto sin_sq = [](double t) {
        const double s = std::sin(t);
        return s * s;
    };
    double s = sin_sq(3.0 * kPi * x[0]);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double dx = x[i] - 1.0;
        s += dx * dx * (1.0 + sin_sq(3.0 * kPi * x[i + 1]));
    }
    const double last = x[d - 1] - 1.0;
    s += last * last * (1.0 + sin_sq(kTwoPi * x[d - 1]));
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 5.0, 100.0, 4.0);
    return 0.1 * s + pen;
}

enum class OptimumAt { origin, ones, minus_ones, unknown };

struct CatalogEntry {
    FunctionInfo info;
    double (*fn)(std::span<const double>);
    OptimumAt optimum;
};

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {{"schaffer_f6", -100.0, 100.0, 0.0, 1, "norm-generalized Schaffer f6"},
         schaffer_f6,
         OptimumAt::origin},
        {{"sphere", -100.0, 100.0, 0.0, 1, "sum of squares"}, sphere, OptimumAt::origin},
        {{"rosenbrock", -30.0, 30.0, 0.0, 2, "banana valley"}, rosenbrock, OptimumAt::ones},
        {{"ackley", -32.0, 32.0, 0.0, 1, "exponential well with cosine ripple"},
         ackley,
         OptimumAt::origin},
        {{"griewank", -600.0, 600.0, 0.0, 1, "quadratic bowl with cosine product"},
         griewank,
         OptimumAt::origin},
        {{"weierstrass", -0.5, 0.5, 0.0, 1, "a=0.5, b=3, k_max=20"},
         weierstrass,
         OptimumAt::origin},
        {{"rastrigin", -5.12, 5.12, 0.0, 1, "multimodal cosine grid"},
         rastrigin,
         OptimumAt::origin},
        {{"noncont_rastrigin", -5.12, 5.12, 0.0, 1, "rastrigin with step-quantized variables"},
         noncont_rastrigin,
         OptimumAt::origin},
        {{"penalized_f12", -50.0, 50.0, 0.0, 1, "sine-penalized, optimum at all -1"},
         penalized_f12,
         OptimumAt::minus_ones},
        {{"penalized_f13", -50.0, 50.0, 0.0, 1, "sine-penalized, optimum at all 1"},
         penalized_f13,
         OptimumAt::ones},
    };
    return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.info.name == name) return &e;
    return nullptr;
}

} // namespace

ObjectiveFunction::ObjectiveFunction(std::string name, SearchSpace space, double f_star,
                                     std::optional<std::vector<double>> x_star, EvalFn fn)
    : name_(std::move(name)), space_(std::move(space)), f_star_(f_star),
      x_star_(std::move(x_star)), fn_(std::move(fn)) {
    if (x_star_ && static_cast<int>(x_star_->size()) != space_.dimension())
        throw std::invalid_argument("ObjectiveFunction: x_star dimension mismatch");
}

double ObjectiveFunction::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension())
        throw std::invalid_argument("ObjectiveFunction: dimension mismatch");
    return fn_(x);
}

const std::vector<FunctionInfo>& function_catalog() {
    static const std::vector<FunctionInfo> infos = [] {
        std::vector<FunctionInfo> v;
        for (const auto& e : catalog_entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool is_known_function(const std::string& name) { return find_entry(name) != nullptr; }

ObjectiveFunction make_function(const std::string& name, int dimension) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw std::invalid_argument("unknown function: " + name);
    if (dimension < e->info.min_dimension)
        throw std::invalid_argument(name + ": dimension >= " +
                                    std::to_string(e->info.min_dimension) + " required");
    std::optional<std::vector<double>> x_star;
    switch (e->optimum) {
    case OptimumAt::origin: x_star = std::vector<double>(dimension, 0.0); break;
    case OptimumAt::ones: x_star = std::vector<double>(dimension, 1.0); break;
    case OptimumAt::minus_ones: x_star = std::vector<double>(dimension, -1.0); break;
    case OptimumAt::unknown: break;
    }
    auto fn = e->fn;
    return ObjectiveFunction(name, SearchSpace::box(dimension, e->info.lower, e->info.upper),
                             e->info.f_star, std::move(x_star),
                             [fn](std::span<const double> x) { return fn(x); });
}

std::vector<double> random_shift(int dimension, RngStream& rng) {
    if (dimension < 1) throw std::invalid_argument("random_shift: dimension >= 1 required");
    std::vector<double> s(dimension);
    for (auto& v : s) v = rng.uniform(-80.0, 80.0);
    return s;
}

Matrix identity_matrix(int dimension) {
    Matrix m(dimension, std::vector<double>(dimension, 0.0));
    for (int i = 0; i < dimension; ++i) m[i][i] = 1.0;
    return m;
}

Matrix random_rotation(int dimension, RngStream& rng) {
    if (dimension < 1) throw std::invalid_argument("random_rotation: dimension >= 1 required");
    Matrix m(dimension, std::vector<double>(dimension));
    for (auto& row : m)
        for (auto& v : row) v = rng.normal();
    // modified Gram-Schmidt over rows; degenerate rows are redrawn
    for (int i = 0; i < dimension; ++i) {
        for (;;) {
            for (int j = 0; j < i; ++j) {
                double proj = 0.0;
                for (int k = 0; k < dimension; ++k) proj += m[i][k] * m[j][k];
                for (int k = 0; k < dimension; ++k) m[i][k] -= proj * m[j][k];
            }
            double norm_sq = 0.0;
            for (int k = 0; k < dimension; ++k) norm_sq += m[i][k] * m[i][k];
            if (norm_sq > 1e-24) {
                const double inv = 1.0 / std::sqrt(norm_sq);
                for (int k = 0; k < dimension; ++k) m[i][k] *= inv;
                break;
            }
            for (int k = 0; k < dimension; ++k) m[i][k] = rng.normal();
        }
    }
    return m;
}

double orthogonality_error(const Matrix& m) {
    const int d = static_cast<int>(m.size());
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double dot = 0.0;
            for (int k = 0; k < d; ++k) dot += m[i][k] * m[j][k];
            const double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::fabs(dot - target));
        }
    }
    return worst;
}

ObjectiveFunction make_transformed(const ObjectiveFunction& base, std::vector<double> shift,
                                   Matrix rotation) {
    const int d = base.dimension();
    if (static_cast<int>(shift.size()) != d || static_cast<int>(rotation.size()) != d)
        throw std::invalid_argument("make_transformed: dimension mismatch");
    if (orthogonality_error(rotation) > 1e-10)
        throw std::invalid_argument("make_transformed: rotation is not orthogonal");

    bool is_identity = true;
    for (int i = 0; i < d && is_identity; ++i)
        for (int j = 0; j < d; ++j)
            if (rotation[i][j] != (i == j ? 1.0 : 0.0)) {
                is_identity = false;
                break;
            }

    std::optional<std::vector<double>> x_star;
    if (base.x_star()) {
        // R (x - shift) = x_star  =>  x = shift + R^T x_star
        std::vector<double> xs(d);
        for (int i = 0; i < d; ++i) {
            double v = shift[i];
            for (int j = 0; j < d; ++j) v += rotation[j][i] * (*base.x_star())[j];
            xs[i] = v;
        }
        x_star = std::move(xs);
    }

    // capture the base objective by value so the wrapper is self-contained
    auto inner = std::make_shared<ObjectiveFunction>(base);
    EvalFn fn;
    if (is_identity) {
        fn = [inner, shift](std::span<const double> x) {
            std::vector<double> z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - shift[i];
            return inner->evaluate(z);
        };
    } else {
        fn = [inner, shift, rotation](std::span<const double> x) {
            const std::size_t n = x.size();
            std::vector<double> diff(n);
            for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - shift[i];
            std::vector<double> z(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                double v = 0.0;
                for (std::size_t j = 0; j < n; ++j) v += rotation[i][j] * diff[j];
                z[i] = v;
            }
            return inner->evaluate(z);
        };
    }

    const std::string name =
        (is_identity ? "shifted_" : "shifted_rotated_") + base.name();
    return ObjectiveFunction(name, SearchSpace::box(d, -100.0, 100.0), base.f_star(),
                             std::move(x_star), std::move(fn));
}

ObjectiveFunction make_shifted(const ObjectiveFunction& base, std::vector<double> shift) {
    return make_transformed(base, std::move(shift), identity_matrix(base.dimension()));
}

} // namespace gwode
