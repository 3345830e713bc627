#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fabeam/geometry.hpp"

namespace fabeam {

// ---------------------------------------------------------------------------
// Affine expressions over the program's real decision vector.
// ---------------------------------------------------------------------------

struct LinExpr {
  double constant = 0.0;
  std::vector<std::pair<int, double>> terms;

  LinExpr() = default;
  LinExpr(double c) : constant(c) {}  // NOLINT: implicit constants are handy
  static LinExpr variable(int index, double coef = 1.0) {
    LinExpr e;
    e.terms.emplace_back(index, coef);
    return e;
  }

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(double s);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(double s, LinExpr a) { return a *= s; }
  friend LinExpr operator*(LinExpr a, double s) { return a *= s; }
  friend LinExpr operator-(LinExpr a) { return a *= -1.0; }

  double eval(const RVec& x) const;
};

// Affine complex vector (entries affine in the decision variables).
struct CVecExpr {
  CVec constant;
  std::vector<std::pair<int, CVec>> terms;

  explicit CVecExpr(Eigen::Index n = 0) : constant(CVec::Zero(n)) {}
  static CVecExpr of(const CVec& c) {
    CVecExpr e(c.size());
    e.constant = c;
    return e;
  }
  Eigen::Index size() const { return constant.size(); }
  CVecExpr& operator+=(const CVecExpr& o);
  CVec eval(const RVec& x) const;
};

// Affine Hermitian matrix (coefficient matrices are Hermitian).
struct HermExpr {
  CMat constant;
  std::vector<std::pair<int, CMat>> terms;

  explicit HermExpr(Eigen::Index n = 0) : constant(CMat::Zero(n, n)) {}
  static HermExpr of(const CMat& c) {
    HermExpr e(c.rows());
    e.constant = c;
    return e;
  }
  Eigen::Index order() const { return constant.rows(); }
  HermExpr& operator+=(const HermExpr& o);
  HermExpr& operator-=(const HermExpr& o);
  friend HermExpr operator+(HermExpr a, const HermExpr& b) { return a += b; }
  friend HermExpr operator-(HermExpr a, const HermExpr& b) { return a -= b; }
  HermExpr scaled(double s) const;
  // T^H (*this) T for a constant matrix T.
  HermExpr conj_transform(const CMat& t) const;
  CMat eval(const RVec& x) const;
};

// Bordered matrix [[A, b], [b^H, c]] as an affine Hermitian expression;
// the constraint "bordered matrix PSD" encodes c >= b^H A^{-1} b on the
// range of A (Schur complement).
HermExpr lmi_block(const HermExpr& a, const CVecExpr& b, const LinExpr& c);

// ---------------------------------------------------------------------------
// Cone program
// ---------------------------------------------------------------------------

// Handle for an n x n complex Hermitian matrix variable: n^2 reals laid
// out as, for each i <= j in column-major upper order: H_ii, then
// (Re H_ij, Im H_ij) for i < j.
struct HermitianVar {
  int start = -1;
  int n = 0;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kMaxIter,
                         kNumerical };

const char* to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::kNumerical;
  double objective = 0.0;        // in the program's stated sense
  RVec x;                        // variable values
  double primal_residual = 0.0;  // max constraint violation at x
  double psd_min_eig = 0.0;      // most negative PSD block eigenvalue
  double gap_bound = 0.0;        // barrier duality-gap bound at exit
  int newton_iterations = 0;
  int centering_steps = 0;
  std::string message;

  bool ok() const { return status == SolveStatus::kOptimal; }
};

struct SolveOptions {
  double tolerance = 1e-8;       // relative duality-gap target
  double feasibility_goal = 1e-7;  // phase-1 interior margin target
  double infeasible_below = 1e-9;  // phase-1 optimum below this => infeasible
  int max_centering = 80;
  int max_newton_total = 20000;
  double path_growth = 10.0;     // barrier parameter multiplier
  double initial_t = 1.0;
  bool warm_start = false;       // trust the initial point if interior
};

// Backend-agnostic conic program: linear objective, scalar affine
// inequalities/equalities, Hermitian PSD blocks (handled through the real
// symmetric embedding), and exponential epigraphs exp(x) <= u used for the
// logarithmic rate terms.
class ConeProgram {
 public:
  int add_scalar(const std::string& name, double initial = 0.0);
  HermitianVar add_hermitian(int n, const std::string& name);

  int num_vars() const { return static_cast<int>(initial_.size()); }
  const std::string& name(int var) const { return names_[std::size_t(var)]; }

  // e >= 0.
  void add_nonneg(const LinExpr& e, bool relaxable = true);
  // a <= b, sugar over add_nonneg(b - a).
  void add_leq(const LinExpr& a, const LinExpr& b, bool relaxable = true) {
    add_nonneg(b - a, relaxable);
  }
  // e == 0.
  void add_equality(const LinExpr& e);
  // expr PSD (complex Hermitian affine; embedded for the backend).
  void add_psd(const HermExpr& expr, bool relaxable = true);
  // Marks the n^2-variable block itself PSD.
  void add_psd(const HermitianVar& v, bool relaxable = true);
  // exp(x) <= u. Never relaxed: the initial point must satisfy it strictly.
  void add_exp_epigraph(const LinExpr& x, const LinExpr& u);

  void maximize(const LinExpr& objective);
  void minimize(const LinExpr& objective);

  void set_initial(int var, double value);
  void set_initial(const HermitianVar& v, const CMat& value);
  double initial(int var) const { return initial_[std::size_t(var)]; }

  // --- Expression helpers over Hermitian variables -------------------------
  // h^H W h (real affine).
  LinExpr quad_form(const HermitianVar& w, const CVec& h) const;
  LinExpr trace(const HermitianVar& w) const;
  // W h as an affine complex vector.
  CVecExpr mat_vec(const HermitianVar& w, const CVec& h) const;
  // W as an affine Hermitian expression.
  HermExpr as_expr(const HermitianVar& w) const;

  // Reads a Hermitian matrix value out of a solution vector.
  static CMat value(const HermitianVar& w, const RVec& x);

  // Documented plain-text sparse dump for offline debugging.
  void dump(std::ostream& os) const;

  SolveReport solve(const SolveOptions& options = {}) const;

 private:
  friend class BarrierSolver;

  struct ScalarCone {
    LinExpr expr;
    bool relaxable = true;
  };
  struct PsdCone {
    // Real symmetric embedded block: s0 + sum_p x_p * coef[p].
    RMat s0;
    std::vector<std::pair<int, RMat>> coef;
    bool relaxable = true;
  };
  struct ExpCone {
    LinExpr x;
    LinExpr u;
  };

  std::vector<std::string> names_;
  std::vector<double> initial_;
  std::vector<ScalarCone> scalar_cones_;
  std::vector<LinExpr> equalities_;
  std::vector<PsdCone> psd_cones_;
  std::vector<ExpCone> exp_cones_;
  LinExpr objective_;
  bool maximize_ = true;
};

// ---------------------------------------------------------------------------
// Spectral utilities
// ---------------------------------------------------------------------------

// [[Re H, -Im H], [Im H, Re H]]; PSD iff H is, each eigenvalue doubled.
// Throws std::invalid_argument when H is not Hermitian within herm_tol.
RMat hermitian_embed(const CMat& h, double herm_tol = 1e-10);

struct RankOneExtraction {
  CVec w;                       // sqrt(lambda_1) * u_1, phase-canonical
  double residual_ratio = 0.0;  // lambda_2 / lambda_1
  bool degenerate = false;      // lambda_1 below tolerance (zero beam)
};

// Dominant-eigenpair beamformer recovery. The phase is fixed so the
// largest-modulus entry is real nonnegative.
RankOneExtraction extract_rank_one(const CMat& w, double tol = 1e-9);

}  // namespace fabeam
