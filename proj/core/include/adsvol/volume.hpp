#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adsvol/model.hpp"

namespace adsvol {

/// Arc of a slice circle. Points are (x0, x1) = (R cos phi, v1 + R sin phi); phi1 > phi0.
/// s0, s1 are the sines at the ends, kept exactly so mirrored arcs cancel bit for bit.
struct Arc {
    double phi0 = 0.0;
    double phi1 = 0.0;
    double s0 = 0.0;
    double s1 = 0.0;
    int crossings = 0;  ///< passages through x0 = 0 strictly inside the arc

    static Arc from_angles(double phi0, double phi1);
};

struct FaceSlice {
    int facet_id = -1;
    double r_F = 0.0;
    MVector center;  ///< (0, v1, .., t): center of the slice sphere, on x0 = 0
    FaceOrientation orientation = FaceOrientation::Top;
    std::vector<Arc> arcs;  ///< ambient 3
    int points = 0;         ///< ambient 2: number of face points in the slice
    int ambient_dim = 3;
};

struct SliceInterval {
    double a = 0.0;
    double b = 0.0;
    bool singular_a = false;  ///< inverse square root behaviour at a
    bool singular_b = false;
};

struct SlicePlan {
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::vector<double> breakpoints;
    std::vector<SliceInterval> intervals;
};

struct ComplexVolume {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
};

struct EpsilonSchedule {
    double eps0 = 0.0;  ///< 0 means 0.1 * (box x0 half-width)
    double ratio = 0.5;
    int count = 6;
    long budget = 1L << 20;

    void validate() const;
};

struct VolumeOptions {
    double rel_tol = 1e-8;
    int samples = 2048;        ///< signature samples per t-range
    double bisect_tol = 1e-10;  ///< relative to the t-range
    int max_depth = 18;
    EpsilonSchedule eps;  ///< used when ambient_dim > 3
};

struct OracleOptions {
    double rel_tol = 1e-11;
    long budget = 1L << 20;  ///< panel cap per integration level, log2 split across levels
};

struct OracleValue {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
};

struct ExtrapolationResult {
    ComplexVolume volume;
    std::vector<double> eps;
    std::vector<Complex> values;
    std::vector<double> quad_err;
    double residual = 0.0;      ///< |degree d - degree d-1| at eps = 0
    double drift = 0.0;         ///< change of the extrapolant when dropping the largest eps
    double contraction = 0.0;   ///< |last step| / |previous step| of the raw sequence
    bool converged = true;
};

struct SheetReport {
    bool present = false;
    SlicePlan plan;
    ComplexVolume volume;
};

struct VolumeReport {
    ComplexVolume total;
    SheetReport upper;
    SheetReport lower;
};

/// Faces of the slice x_n = t of the upper-sheet portion of P (ambient 2 or 3).
std::vector<FaceSlice> slice_faces(const GoodPolytope& P, double t);
/// Volume of a face of a double hyperbolic line, from its arcs.
Complex face_volume_dh1(const FaceSlice& fs);
Complex face_volume_dh1(const std::vector<Arc>& arcs);
/// Derivative of the upper-sheet volume of P ∩ {x_n <= t}.
Complex integrand_b(const GoodPolytope& P, double t);
/// Slice plan over the x_n range of the upper-sheet box.
SlicePlan breakpoints(const GoodPolytope& P, const VolumeOptions& opt = {});

/// Lower-sheet portion moved to the upper sheet by (x,h) -> (-x,-h).
GoodPolytope map_lower_sheet(const GoodPolytope& P);

/// Volume of the upper-sheet portion only (requires upper extent).
ComplexVolume upper_volume(const GoodPolytope& P, const VolumeOptions& opt = {}, SlicePlan* plan_out = nullptr);
ComplexVolume volume(const GoodPolytope& P, const VolumeOptions& opt = {});
VolumeReport volume_report(const GoodPolytope& P, const VolumeOptions& opt = {});

/// Extent of the upper-sheet portion found by scanning slices over a wide window.
SheetExtent scan_upper_extent(const GoodPolytope& P);
/// Upper-sheet box certificate check by slice sampling; throws DecompositionRequired on failure.
void verify_upper_box(const GoodPolytope& P, int samples = 256);

/// Regularized measure of the upper-sheet portion inside its box for a single eps.
OracleValue mu_eps(const GoodPolytope& P, double eps, const OracleOptions& opt = {});
/// mu_eps of both sheet portions.
OracleValue epsilon_oracle(const GoodPolytope& P, double eps, const OracleOptions& opt = {});
ExtrapolationResult epsilon_extrapolate(const GoodPolytope& P, EpsilonSchedule sched, const OracleOptions& opt = {});
/// Default first eps for a polytope: 0.1 * half-width of the x0 range of its boxes.
double default_eps0(const GoodPolytope& P);

struct SliceSample {
    double t = 0.0;
    Complex b;
    std::vector<std::pair<int, double>> radii;  ///< (facet, r_F)
};
std::vector<SliceSample> sample_integrand(const GoodPolytope& P, int count);

}  // namespace adsvol
