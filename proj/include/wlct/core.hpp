#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlct {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors. Every failure mode the library reports is a subclass of Error so
// callers (the CLI in particular) can separate computation failures from
// usage mistakes with a single catch.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WLCT_DEFINE_ERROR(Name)                  \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    };

WLCT_DEFINE_ERROR(DeterminantError)
WLCT_DEFINE_ERROR(UnknownVariant)
WLCT_DEFINE_ERROR(InvalidWindow)
WLCT_DEFINE_ERROR(InvalidSignal)
WLCT_DEFINE_ERROR(GridError)
WLCT_DEFINE_ERROR(SmallBError)
WLCT_DEFINE_ERROR(GridMismatch)
WLCT_DEFINE_ERROR(DirectionError)
WLCT_DEFINE_ERROR(EmptyCube)
WLCT_DEFINE_ERROR(InsufficientEnergy)
WLCT_DEFINE_ERROR(ZeroChirprate)
WLCT_DEFINE_ERROR(UnknownId)
WLCT_DEFINE_ERROR(LengthMismatch)
WLCT_DEFINE_ERROR(ZeroSeries)
WLCT_DEFINE_ERROR(ParseError)

#undef WLCT_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Parameter matrices
// ---------------------------------------------------------------------------

/// Real 2x2 matrix [a, b; c, d] with unit determinant.
class ParamMatrix {
public:
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

    double det() const noexcept { return a_ * d_ - b_ * c_; }

    /// [d, b; c, a], the matrix that appears inside the windowed transform.
    ParamMatrix swapped_diagonal() const noexcept { return ParamMatrix(d_, b_, c_, a_); }

    ParamMatrix operator*(const ParamMatrix& o) const noexcept;

    friend ParamMatrix make_param_matrix(double a, double b, double c, double d);

private:
    ParamMatrix(double a, double b, double c, double d) noexcept : a_(a), b_(b), c_(c), d_(d) {}

    double a_, b_, c_, d_;
};

inline constexpr double kDeterminantTolerance = 1e-12;

/// Throws DeterminantError when |ad - bc - 1| exceeds kDeterminantTolerance.
ParamMatrix make_param_matrix(double a, double b, double c, double d);

/// Transform families supported by the windowed transform.
enum class Variant : int { N1 = 1, N2 = 2, N5 = 5, N6 = 6 };

Variant variant_from_int(int n);
int to_int(Variant v) noexcept;

/// Families 1 and 5 parameterize the chirprate reciprocally (lambda ~ 1/phi'');
/// families 2 and 6 linearly (lambda ~ -phi'').
inline bool is_reciprocal(Variant v) noexcept { return v == Variant::N1 || v == Variant::N5; }

/// n=1 -> [l,1;-1,0]; n=2 -> [1,0;l,1]; n=5,6 -> rotation with theta = arccot(l) in (0, pi).
ParamMatrix matrix_for(Variant n, double lambda);
ParamMatrix matrix_for(int n, double lambda);

// ---------------------------------------------------------------------------
// Window and signal
// ---------------------------------------------------------------------------

struct WindowSpec {
    Variant n = Variant::N2;
    double alpha = 1.0;  ///< Gaussian width, g(t) = exp(-pi alpha t^2)
};

/// Throws InvalidWindow when alpha <= 0 or the 5/6 alpha split is violated.
WindowSpec make_window_spec(Variant n, double alpha);
void validate(const WindowSpec& spec);

struct SampledSignal {
    std::vector<cplx> samples;
    double dt = 1.0;
    double t0 = 0.0;

    std::size_t size() const noexcept { return samples.size(); }
    double time(std::size_t m) const noexcept { return t0 + static_cast<double>(m) * dt; }
};

/// Throws InvalidSignal when N < 2 or dt <= 0.
SampledSignal make_signal(std::vector<cplx> samples, double dt, double t0 = 0.0);

// ---------------------------------------------------------------------------
// Grid
// ---------------------------------------------------------------------------

enum class GridKind { Uniform, Dyadic, UniformPositive, DyadicPositive };

GridKind grid_kind_from_string(const std::string& s);
std::string to_string(GridKind k);

/// The natural chirp axis for a family: dyadic for 1/5, uniform for 2/6.
GridKind default_grid_kind(Variant n, bool positiveOnly);

struct GridParams {
    std::size_t N = 0;
    double dt = 1.0;
    double t0 = 0.0;
    std::size_t Nc = 0;  ///< 0 selects 2*floor(N/2)
    GridKind kind = GridKind::Uniform;
    double R0 = 0.0;     ///< 0 selects Nyquist/4
    double a0 = 0.0;     ///< 0 selects dt
    double deltaA = 0.05;
    std::size_t hop = 1;
    double deltaGamma = 0.0;  ///< 0 selects 2 R0/(Nc - 1)
    double deltaXi = 0.0;     ///< 0 selects the frequency step
    double epsilonRel = 1e-4; ///< mask threshold relative to max|T| per frame
};

/// Discrete axes of the time-frequency-chirprate representation.
struct TFCGrid {
    std::size_t N = 0;
    double dt = 1.0;
    double t0 = 0.0;
    std::size_t hop = 1;
    GridKind kind = GridKind::Uniform;
    double R0 = 0.0;
    double a0 = 0.0;
    double deltaA = 0.0;
    double epsilonRel = 1e-4;

    std::vector<double> timeAxis;   ///< frame times t0 + m*hop*dt
    std::vector<double> freqAxis;   ///< j * deltaEta, 0 <= j <= N/2
    std::vector<double> chirpAxis;  ///< lambda_l
    double deltaEta = 0.0;
    double deltaLambda = 0.0;       ///< uniform step (also used for squeeze defaults)

    std::vector<double> squeezeChirpAxis;  ///< gamma_p = -R0 + (p-1) dGamma
    std::vector<double> squeezeFreqAxis;   ///< xi_q = (q-1) dXi
    double deltaGamma = 0.0;
    double deltaXi = 0.0;

    std::size_t frames() const noexcept { return timeAxis.size(); }
    std::size_t Nf() const noexcept { return freqAxis.size(); }
    std::size_t Nc() const noexcept { return chirpAxis.size(); }
    std::size_t frameSample(std::size_t m) const noexcept { return m * hop; }
    bool dyadic() const noexcept {
        return kind == GridKind::Dyadic || kind == GridKind::DyadicPositive;
    }
};

TFCGrid build_grid(const GridParams& p);

/// Throws GridMismatch when the grid was not built for this signal.
void check_grid(const TFCGrid& grid, const SampledSignal& x);

// ---------------------------------------------------------------------------
// Cubes
// ---------------------------------------------------------------------------

/// Dense 3-D array in (l, j, m) row-major order (m fastest).
template <class T>
class Cube {
public:
    Cube() = default;
    Cube(std::size_t d0, std::size_t d1, std::size_t d2, T fill = T{})
        : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, fill) {}

    std::size_t dim0() const noexcept { return d0_; }
    std::size_t dim1() const noexcept { return d1_; }
    std::size_t dim2() const noexcept { return d2_; }
    std::size_t size() const noexcept { return data_.size(); }

    std::size_t index(std::size_t i0, std::size_t i1, std::size_t i2) const noexcept {
        return (i0 * d1_ + i1) * d2_ + i2;
    }
    T& operator()(std::size_t i0, std::size_t i1, std::size_t i2) noexcept {
        return data_[index(i0, i1, i2)];
    }
    const T& operator()(std::size_t i0, std::size_t i1, std::size_t i2) const noexcept {
        return data_[index(i0, i1, i2)];
    }

    T* slice(std::size_t i0) noexcept { return data_.data() + i0 * d1_ * d2_; }
    const T* slice(std::size_t i0) const noexcept { return data_.data() + i0 * d1_ * d2_; }

    std::vector<T>& data() noexcept { return data_; }
    const std::vector<T>& data() const noexcept { return data_; }

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<T> data_;
};

using ComplexCube = Cube<cplx>;
using RealCube = Cube<double>;

// ---------------------------------------------------------------------------
// Ridges and modes
// ---------------------------------------------------------------------------

/// K per-frame curves of estimated instantaneous frequency and chirprate.
struct RidgeSet {
    std::size_t K = 0;
    std::vector<double> frameTimes;
    std::vector<std::vector<double>> xi;     ///< K x frames, Hz
    std::vector<std::vector<double>> gamma;  ///< K x frames, Hz/s
    std::vector<double> peakEnergy;          ///< per ridge, descending
};

struct ModeSet {
    std::vector<std::vector<cplx>> modes;  ///< K arrays of length N
    std::vector<double> frameTimes;
    std::vector<double> condition;         ///< per frame, coefficient-matrix kappa_2
};

}  // namespace wlct
