#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "adsvol/error.hpp"

namespace adsvol {

using Complex = std::complex<double>;

/// Signature of an indefinite form. Negative coordinates are the trailing ones.
struct Signature {
    int plus = 0;
    int minus = 1;

    int dim() const { return plus + minus; }
    bool operator==(const Signature&) const = default;
};

/// R^{n,1}: n spacelike coordinates x0..x_{n-1}, timelike x_n.
inline Signature lorentz(int n) { return {n, 1}; }

struct MVector {
    std::vector<double> coords;
    Signature sig;

    MVector() = default;
    MVector(std::vector<double> c, Signature s);
    MVector(std::initializer_list<double> c, Signature s);

    static MVector zero(Signature s);

    int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int i) const { return coords[static_cast<size_t>(i)]; }
    double& operator[](int i) { return coords[static_cast<size_t>(i)]; }
    /// Sign of coordinate i in the form (+1 or -1).
    int eta(int i) const { return i < sig.plus ? 1 : -1; }
};

MVector operator+(const MVector& u, const MVector& v);
MVector operator-(const MVector& u, const MVector& v);
MVector operator-(const MVector& u);
MVector operator*(double s, const MVector& u);

enum class CausalClass { Spacelike, Timelike, Null };

double bilinear(const MVector& u, const MVector& v);
double norm2_euclid(const MVector& v);
double tol_null(const MVector& v);
CausalClass causal_class(const MVector& v);
/// sqrt(v.v) for spacelike v, i*sqrt(-v.v) for timelike v; throws for null v.
Complex complex_length(const MVector& v);
/// Volume of the unit sphere S^n.
double sphere_volume(int n);

const char* to_string(CausalClass c);

}  // namespace adsvol
