#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace clasp {

/// omega_j = e^(2*pi*i*k/q), stored gcd-reduced with 0 < k < q
struct ExactCoord {
    long long k;
    long long q;
};

/// omega_j = e^(i*theta), theta in (0, 2*pi)
struct ApproxCoord {
    double theta;
};

using Coord = std::variant<ExactCoord, ApproxCoord>;

Coord make_exact_coord(long long k, long long q);
Coord make_approx_coord(double theta);

/**
 * TorusPoint: a point of the open torus T^mu_* = (S^1 \ {1})^mu.
 * Coordinates are exact roots of unity or floating angles; the value 1
 * is rejected at construction, so every TorusPoint lies in T^mu_*.
 */
class TorusPoint {
public:
    explicit TorusPoint(std::vector<Coord> coords);
    static TorusPoint exact(const std::vector<std::pair<long long, long long>>& fractions);
    static TorusPoint diagonal(const Coord& c, int mu);
    static TorusPoint parse(const std::string& text);

    int mu() const { return static_cast<int>(coords_.size()); }
    const Coord& coord(int j) const { return coords_.at(static_cast<size_t>(j)); }
    const std::vector<Coord>& coords() const { return coords_; }

    bool all_exact() const;
    /// order of the j-th coordinate as a root of unity; throws on approx
    long long order(int j) const;
    /// lcm of the coordinate orders; throws on approx coordinates
    long long conductor() const;

    /// coordinate-wise principal square root e^(i*theta/2), 0 < theta < 2*pi
    TorusPoint half() const;
    TorusPoint conjugate() const;
    /// drop the last coordinate (used after color merging)
    TorusPoint drop_last() const;

    double angle(int j) const;  // theta_j in (0, 2*pi)
    std::complex<double> value(int j) const;

    std::string to_string() const;

private:
    std::vector<Coord> coords_;
};

struct Classification {
    bool in_T_star = false;
    bool in_T_Q = false;
    bool in_T_P = false;
    std::optional<long long> conductor;
};

/// membership of omega in T^mu_*, T^mu_Q and T^mu_P
Classification classify(const TorusPoint& omega);

}  // namespace clasp
