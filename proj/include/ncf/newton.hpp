#ifndef NCF_NEWTON_HPP
#define NCF_NEWTON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ncf/als.hpp"
#include "ncf/assignment.hpp"

namespace ncf {

/* The step solvers find B with f(X) + (∂_{x|b} f)(X; B) = 0: the
 * truncated polarization expansion of f(X+B). The probe solver samples
 * the linear operator on the matrix unit basis; the transform solver
 * sets up the joint (B, T, U) least-squares system on a block pattern
 * of the admissible transformation matrices P and Q.
 */

/// minimize(f + ∂_{x|b} f); the right-hand side of one Newton step as a
/// single system, linear in the direction letter b.
Als buildStepSystem(const Als& f, Letter x, Letter b);

/// Returns f over an alphabet extended by the given fresh names (zero
/// coefficient blocks). No-op names that already exist are rejected.
Als extendAlphabet(const Als& f, const std::vector<std::string>& extraNames);

/// Solves the step by probing the b-linear part on the m² matrix units
/// and solving the vectorized m²×m² system (minimum-norm least squares).
MatD newtonStepProbe(const Als& g, Letter x, Letter b, const MatD& X,
                     const MatAssignmentD& params, double tolStep = 1e-8);

/// Block pattern for the transform-based step: which cells of P and Q
/// (block indices into the step system) carry unknown m×m blocks, and
/// which upper-right region of P·A(σ)·Q must vanish.
struct PqPattern {
    std::vector<std::pair<std::size_t, std::size_t>> tCells; // P unknowns
    std::vector<std::pair<std::size_t, std::size_t>> uCells; // Q unknowns
    std::vector<std::size_t> zeroRows, zeroCols;
};

/// Validates the pattern (unitriangular P/Q, u- and v-protection, no
/// structurally bilinear products) and solves the joint linear system
/// in (B, T.., U..); returns B.
MatD newtonStepPq(const Als& g, Letter x, Letter b, const MatD& X, const MatAssignmentD& params,
                  const PqPattern& pattern, double tolStep = 1e-8);

enum class StepMethod { Probe, Pq };

struct NewtonProblem {
    Als f;     // over {x} ∪ parameter letters ∪ {b}, b unused in f
    Letter x;  // the unknown
    Letter b;  // fresh direction letter
    MatAssignmentD params;
    MatD x0;
    double tol = 1e-12;
    std::size_t maxIter = 50;
    std::optional<MatD> reference;                 // for the error column
    std::optional<std::uint32_t> commutatorLetter; // parameter for the commutator column
};

struct NewtonTraceRow {
    std::size_t k = 0;
    double stepNorm = 0;                // ‖B_k‖_F (or ‖X_k - X_{k-1}‖_F)
    std::optional<double> errNorm;      // ‖X_k - X*‖_F
    std::optional<double> commNorm;     // ‖X_k Z - Z X_k‖_F
};

struct NewtonTrace {
    std::vector<NewtonTraceRow> rows;
    bool converged = false;
    bool diverged = false;
};

struct NewtonResult {
    MatD x;
    NewtonTrace trace;
};

NewtonResult newtonSolve(const NewtonProblem& problem, StepMethod method = StepMethod::Probe,
                         const Als* pqSystem = nullptr, const PqPattern* pqPattern = nullptr);

/// X_{k+1} = (2/3)X_k + (1/3)X_k^{-2}Z; valid only while the iterates
/// commute with Z, which finite precision eventually destroys.
NewtonTrace commutativeCubeRootIteration(const MatD& z, const MatD& x0, std::size_t iters,
                                         const std::optional<MatD>& reference = std::nullopt);

struct ScalarNewtonRow {
    std::size_t k;
    double delta; // |x_k - x_{k-1}|
    double x;
};

/// Classic scalar Newton for x^3 = z.
std::vector<ScalarNewtonRow> scalarCubeRootTable(double z, double x0, std::size_t iters);

/* Cube-root demo instance: the dim-6 step system for f = x^3 - z over
 * letters (x, z, b), its transform pattern (13m² unknowns, 9m²
 * equations), and the 3×3 data for the table runs.
 */
struct CubeRootFixture {
    Alphabet alpha; // {x, z, b}
    Als f;          // x^3 - z
    Als stepSystem; // dim 6
    PqPattern pattern;
    MatD z, cbrtZ, x0;
};

CubeRootFixture cubeRootFixture();

/// The nc Newton run behind the cube-root table.
NewtonResult ncCubeRootDemo(StepMethod method = StepMethod::Probe);

} // namespace ncf

#endif
