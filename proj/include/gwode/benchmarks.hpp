#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwode/core.hpp"

namespace gwode {

/// Named pure objective with its search box, known optimum value and, when
/// known, an optimum location.
class ObjectiveFunction {
public:
    ObjectiveFunction(std::string name, SearchSpace space, double f_star,
                      std::optional<std::vector<double>> x_star, EvalFn fn);

    const std::string& name() const { return name_; }
    int dimension() const { return space_.dimension(); }
    const SearchSpace& space() const { return space_; }
    double f_star() const { return f_star_; }
    const std::optional<std::vector<double>>& x_star() const { return x_star_; }

    double evaluate(std::span<const double> x) const;

private:
    std::string name_;
    SearchSpace space_;
    double f_star_;
    std::optional<std::vector<double>> x_star_;
    EvalFn fn_;
};

struct FunctionInfo {
    std::string name;
    double lower;
    double upper;
    double f_star;
    int min_dimension;
    std::string summary;
};

/// The classical test suite, data-driven: entries can be added without core
/// changes.
const std::vector<FunctionInfo>& function_catalog();
bool is_known_function(const std::string& name);
ObjectiveFunction make_function(const std::string& name, int dimension);

// ---- shift / rotation wrappers ----

using Matrix = std::vector<std::vector<double>>;

/// Shift vector with coordinates uniform in [-80, 80].
std::vector<double> random_shift(int dimension, RngStream& rng);

/// Orthogonal matrix from Gram-Schmidt on standard-normal entries.
Matrix random_rotation(int dimension, RngStream& rng);

Matrix identity_matrix(int dimension);

/// max |M M^T - I| entry-wise.
double orthogonality_error(const Matrix& m);

/// Wrapped objective x -> base(R (x - shift)) over the [-100, 100]^D box.
/// The wrapped optimum sits at shift + R^T x_star(base).
ObjectiveFunction make_transformed(const ObjectiveFunction& base, std::vector<double> shift,
                                   Matrix rotation);
ObjectiveFunction make_shifted(const ObjectiveFunction& base, std::vector<double> shift);

} // namespace gwode
