#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "fabeam/conic.hpp"

namespace fabeam {

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant += o.constant;
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  constant -= o.constant;
  for (const auto& [v, c] : o.terms) terms.emplace_back(v, -c);
  return *this;
}

LinExpr& LinExpr::operator*=(double s) {
  constant *= s;
  for (auto& [v, c] : terms) c *= s;
  return *this;
}

double LinExpr::eval(const RVec& x) const {
  double r = constant;
  for (const auto& [v, c] : terms) r += c * x[v];
  return r;
}

CVecExpr& CVecExpr::operator+=(const CVecExpr& o) {
  if (constant.size() == 0) constant = CVec::Zero(o.size());
  constant += o.constant;
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

CVec CVecExpr::eval(const RVec& x) const {
  CVec r = constant;
  for (const auto& [v, c] : terms) r += x[v] * c;
  return r;
}

HermExpr& HermExpr::operator+=(const HermExpr& o) {
  if (order() == 0) constant = CMat::Zero(o.order(), o.order());
  constant += o.constant;
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

HermExpr& HermExpr::operator-=(const HermExpr& o) {
  if (order() == 0) constant = CMat::Zero(o.order(), o.order());
  constant -= o.constant;
  for (const auto& [v, m] : o.terms) terms.emplace_back(v, -m);
  return *this;
}

HermExpr HermExpr::scaled(double s) const {
  HermExpr e(order());
  e.constant = s * constant;
  e.terms.reserve(terms.size());
  for (const auto& [v, m] : terms) e.terms.emplace_back(v, s * m);
  return e;
}

HermExpr HermExpr::conj_transform(const CMat& t) const {
  HermExpr e(t.cols());
  e.constant = t.adjoint() * constant * t;
  e.terms.reserve(terms.size());
  for (const auto& [v, m] : terms)
    e.terms.emplace_back(v, CMat(t.adjoint() * m * t));
  return e;
}

CMat HermExpr::eval(const RVec& x) const {
  CMat r = constant;
  for (const auto& [v, m] : terms) r += x[v] * m;
  return r;
}

HermExpr lmi_block(const HermExpr& a, const CVecExpr& b, const LinExpr& c) {
  if (b.size() != a.order())
    throw std::invalid_argument("lmi_block: border size mismatch");
  const Eigen::Index n = a.order();
  HermExpr e(n + 1);
  e.constant.topLeftCorner(n, n) = a.constant;
  e.constant.block(0, n, n, 1) = b.constant;
  e.constant.block(n, 0, 1, n) = b.constant.adjoint();
  e.constant(n, n) = c.constant;
  for (const auto& [v, m] : a.terms) {
    CMat f = CMat::Zero(n + 1, n + 1);
    f.topLeftCorner(n, n) = m;
    e.terms.emplace_back(v, std::move(f));
  }
  for (const auto& [v, vec] : b.terms) {
    CMat f = CMat::Zero(n + 1, n + 1);
    f.block(0, n, n, 1) = vec;
    f.block(n, 0, 1, n) = vec.adjoint();
    e.terms.emplace_back(v, std::move(f));
  }
  for (const auto& [v, coef] : c.terms) {
    CMat f = CMat::Zero(n + 1, n + 1);
    f(n, n) = coef;
    e.terms.emplace_back(v, std::move(f));
  }
  return e;
}

int ConeProgram::add_scalar(const std::string& name, double initial) {
  names_.push_back(name);
  initial_.push_back(initial);
  return num_vars() - 1;
}

HermitianVar ConeProgram::add_hermitian(int n, const std::string& name) {
  HermitianVar v;
  v.start = num_vars();
  v.n = n;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        add_scalar(name + "[" + std::to_string(i) + "," + std::to_string(i) +
                   "]");
      } else {
        const std::string ij =
            "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        add_scalar(name + ".re" + ij);
        add_scalar(name + ".im" + ij);
      }
    }
  return v;
}

void ConeProgram::add_nonneg(const LinExpr& e, bool relaxable) {
  scalar_cones_.push_back({e, relaxable});
}

void ConeProgram::add_equality(const LinExpr& e) { equalities_.push_back(e); }

void ConeProgram::add_psd(const HermExpr& expr, bool relaxable) {
  PsdCone cone;
  cone.s0 = hermitian_embed(expr.constant);
  // Coefficients for one variable may appear split across several terms;
  // merge so the solver sees each variable once per block.
  std::vector<std::pair<int, CMat>> merged;
  for (const auto& [v, m] : expr.terms) {
    bool found = false;
    for (auto& [mv, mm] : merged)
      if (mv == v) {
        mm += m;
        found = true;
        break;
      }
    if (!found) merged.emplace_back(v, m);
  }
  for (const auto& [v, m] : merged)
    cone.coef.emplace_back(v, hermitian_embed(m));
  cone.relaxable = relaxable;
  psd_cones_.push_back(std::move(cone));
}

void ConeProgram::add_psd(const HermitianVar& v, bool relaxable) {
  add_psd(as_expr(v), relaxable);
}

void ConeProgram::add_exp_epigraph(const LinExpr& x, const LinExpr& u) {
  exp_cones_.push_back({x, u});
}

void ConeProgram::maximize(const LinExpr& objective) {
  objective_ = objective;
  maximize_ = true;
}

void ConeProgram::minimize(const LinExpr& objective) {
  objective_ = objective;
  maximize_ = false;
}

void ConeProgram::set_initial(int var, double value) {
  initial_[std::size_t(var)] = value;
}

void ConeProgram::set_initial(const HermitianVar& v, const CMat& value) {
  int idx = v.start;
  for (int j = 0; j < v.n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        initial_[std::size_t(idx++)] = value(i, i).real();
      } else {
        initial_[std::size_t(idx++)] = value(i, j).real();
        initial_[std::size_t(idx++)] = value(i, j).imag();
      }
    }
}

LinExpr ConeProgram::quad_form(const HermitianVar& w, const CVec& h) const {
  LinExpr e;
  int idx = w.start;
  for (int j = 0; j < w.n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        e.terms.emplace_back(idx++, std::norm(h[i]));
      } else {
        const cplx cross = std::conj(h[i]) * h[j];
        e.terms.emplace_back(idx++, 2.0 * cross.real());
        e.terms.emplace_back(idx++, -2.0 * cross.imag());
      }
    }
  return e;
}

LinExpr ConeProgram::trace(const HermitianVar& w) const {
  LinExpr e;
  int idx = w.start;
  for (int j = 0; j < w.n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) e.terms.emplace_back(idx, 1.0);
      idx += (i == j) ? 1 : 2;
    }
  return e;
}

CVecExpr ConeProgram::mat_vec(const HermitianVar& w, const CVec& h) const {
  CVecExpr e(w.n);
  int idx = w.start;
  const cplx im(0.0, 1.0);
  for (int j = 0; j < w.n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        CVec c = CVec::Zero(w.n);
        c[i] = h[i];
        e.terms.emplace_back(idx++, std::move(c));
      } else {
        CVec cre = CVec::Zero(w.n);
        cre[i] = h[j];
        cre[j] = h[i];
        e.terms.emplace_back(idx++, std::move(cre));
        CVec cim = CVec::Zero(w.n);
        cim[i] = im * h[j];
        cim[j] = -im * h[i];
        e.terms.emplace_back(idx++, std::move(cim));
      }
    }
  return e;
}

HermExpr ConeProgram::as_expr(const HermitianVar& w) const {
  HermExpr e(w.n);
  int idx = w.start;
  const cplx im(0.0, 1.0);
  for (int j = 0; j < w.n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        CMat m = CMat::Zero(w.n, w.n);
        m(i, i) = 1.0;
        e.terms.emplace_back(idx++, std::move(m));
      } else {
        CMat mre = CMat::Zero(w.n, w.n);
        mre(i, j) = 1.0;
        mre(j, i) = 1.0;
        e.terms.emplace_back(idx++, std::move(mre));
        CMat mim = CMat::Zero(w.n, w.n);
        mim(i, j) = im;
        mim(j, i) = -im;
        e.terms.emplace_back(idx++, std::move(mim));
      }
    }
  return e;
}

CMat ConeProgram::value(const HermitianVar& w, const RVec& x) {
  CMat m(w.n, w.n);
  int idx = w.start;
  const cplx im(0.0, 1.0);
  for (int j = 0; j < w.n; ++j)
    for (int i = 0; i <= j; ++i) {
      if (i == j) {
        m(i, i) = x[idx++];
      } else {
        const double re = x[idx++];
        const double imv = x[idx++];
        m(i, j) = cplx(re, imv);
        m(j, i) = cplx(re, -imv);
      }
    }
  return m;
}

namespace {
void dump_expr(std::ostream& os, const LinExpr& e) {
  os << e.constant;
  for (const auto& [v, c] : e.terms) os << " " << v << ":" << c;
  os << "\n";
}
}  // namespace

void ConeProgram::dump(std::ostream& os) const {
  os << std::setprecision(17);
  os << "fabeam-coneprog v1\n";
  os << "vars " << num_vars() << "\n";
  for (int i = 0; i < num_vars(); ++i)
    os << i << " " << names_[std::size_t(i)] << " init "
       << initial_[std::size_t(i)] << "\n";
  os << (maximize_ ? "maximize " : "minimize ");
  dump_expr(os, objective_);
  os << "nonneg " << scalar_cones_.size() << "\n";
  for (const auto& c : scalar_cones_) dump_expr(os, c.expr);
  os << "equality " << equalities_.size() << "\n";
  for (const auto& e : equalities_) dump_expr(os, e);
  os << "psd " << psd_cones_.size() << "\n";
  for (const auto& b : psd_cones_) {
    os << "block order " << b.s0.rows() << " terms " << b.coef.size() << "\n";
    auto dump_mat = [&os](int var, const RMat& m) {
      os << "coef " << var;
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = r; c < m.cols(); ++c)
          if (m(r, c) != 0.0) os << " " << r << "," << c << ":" << m(r, c);
      os << "\n";
    };
    dump_mat(-1, b.s0);
    for (const auto& [v, m] : b.coef) dump_mat(v, m);
  }
  os << "exp " << exp_cones_.size() << "\n";
  for (const auto& e : exp_cones_) {
    os << "x ";
    dump_expr(os, e.x);
    os << "u ";
    dump_expr(os, e.u);
  }
}

}  // namespace fabeam
