#ifndef NCG_LP_SOLVER_HPP
#define NCG_LP_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/rational.hpp"

namespace ncg {

enum class Sense { LessEq, Eq, GreaterEq };

// Linear program over nonnegative variables with integer data. Columns are
// stored dense column-major: instances have few rows and possibly very many
// columns. One column is the objective variable (maximize it).
struct LPInstance {
  int num_rows = 0;
  int num_vars = 0;
  int objective_col = 0;
  std::vector<int16_t> cols;  // num_vars * num_rows
  std::vector<Sense> sense;   // per row
  std::vector<long> rhs;      // per row

  int16_t at(int col, int row) const {
    return cols[static_cast<size_t>(col) * num_rows + row];
  }
  int16_t& at(int col, int row) {
    return cols[static_cast<size_t>(col) * num_rows + row];
  }

  void validate() const {
    if (num_rows <= 0 || num_vars <= 0)
      throw std::invalid_argument("LPInstance: empty instance");
    if (cols.size() != static_cast<size_t>(num_vars) * num_rows ||
        sense.size() != static_cast<size_t>(num_rows) ||
        rhs.size() != static_cast<size_t>(num_rows))
      throw std::invalid_argument("LPInstance: dimension mismatch");
    if (objective_col < 0 || objective_col >= num_vars)
      throw std::invalid_argument("LPInstance: objective column out of range");
    int eq_rows = 0;
    for (Sense s : sense) eq_rows += (s == Sense::Eq);
    if (eq_rows != 1)
      throw std::invalid_argument("LPInstance: expected exactly one equality row");
  }
};

struct SolveResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational optimum;                                  // valid when Optimal
  std::vector<std::pair<int, Rational>> certificate; // nonzero variables
  std::vector<Rational> duals;  // per original row, valid when Optimal
  bool certified = false;                            // true only in exact mode
};

enum class SolveMode { Exact, Float };

// Plain-text row dump: "sense coeffs... rhs", one row per line.
inline void dump_lp(const LPInstance& lp, std::ostream& os) {
  for (int r = 0; r < lp.num_rows; ++r) {
    os << (lp.sense[r] == Sense::LessEq   ? "<="
           : lp.sense[r] == Sense::Eq     ? "=="
                                          : ">=");
    for (int j = 0; j < lp.num_vars; ++j) os << ' ' << lp.at(j, r);
    os << ' ' << lp.rhs[r] << '\n';
  }
}

namespace detail {

struct ExactNum {
  using T = Rational;
  static bool pos(const T& x) { return x > 0; }
  static bool neg(const T& x) { return x < 0; }
  static bool zero(const T& x) { return x == 0; }
  static T perturb(int, int) { return T(0); }
};

struct FloatNum {
  using T = double;
  static constexpr double eps = 1e-9;
  static bool pos(double x) { return x > eps; }
  static bool neg(double x) { return x < -eps; }
  static bool zero(double x) { return x > -eps && x < eps; }
  // tiny deterministic right-hand-side offsets break the massive degeneracy
  // of all-zero-rhs instances; float mode is advisory, so the O(1e-7) bias
  // in the reported optimum is acceptable and cycling becomes impossible
  static double perturb(int r, int m) { return 1e-7 * (r + 1) / (m + 1); }
};

// Two-phase revised simplex with an explicit basis inverse. Default pricing
// is Dantzig-style (steered by double approximations in exact mode, verified
// exactly before any pivot) with a lexicographic ratio test against cycling;
// an extreme run of degenerate pivots still falls back to Bland's rule.
template <class Num>
class Simplex {
  using T = typename Num::T;

 public:
  explicit Simplex(const LPInstance& lp) : lp_(lp), m_(lp.num_rows) {
    // normalize row signs so every right-hand side is nonnegative
    row_sign_.assign(m_, 1);
    sense_.resize(m_);
    b_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      long rhs = lp.rhs[r];
      Sense s = lp.sense[r];
      if (rhs < 0) {
        row_sign_[r] = -1;
        rhs = -rhs;
        if (s == Sense::LessEq)
          s = Sense::GreaterEq;
        else if (s == Sense::GreaterEq)
          s = Sense::LessEq;
      }
      sense_[r] = s;
      b_[r] = rhs;
    }
    // column layout: structural | slack/surplus | artificial
    n_struct_ = lp.num_vars;
    slack_of_row_.assign(m_, -1);
    art_of_row_.assign(m_, -1);
    int next = n_struct_;
    for (int r = 0; r < m_; ++r)
      if (sense_[r] != Sense::Eq) slack_of_row_[r] = next++;
    first_art_ = next;
    // A >= row with zero right-hand side starts feasibly on its own surplus
    // variable (at value zero), so it needs no artificial. This matters a
    // lot for the bound LPs, where every inequality row has rhs 0 and an
    // all-artificial phase 1 would stall in a huge degenerate cloud.
    for (int r = 0; r < m_; ++r)
      if (sense_[r] == Sense::Eq || (sense_[r] == Sense::GreaterEq && b_[r] > 0))
        art_of_row_[r] = next++;
    n_total_ = next;
  }

  SolveResult run() {
    init_basis();
    // phase 1: maximize minus the sum of artificials
    if (first_art_ < n_total_) {
      phase_ = 1;
      if (!iterate()) throw std::logic_error("simplex: phase 1 unbounded");
      T infeas{};
      for (int r = 0; r < m_; ++r)
        if (basis_[r] >= first_art_) infeas += xb_[r];
      if (Num::pos(infeas)) {
        SolveResult res;
        res.status = SolveResult::Status::Infeasible;
        return res;
      }
    }
    phase_ = 2;
    degenerate_run_ = 0;
    bland_ = false;
    if (!iterate()) {
      SolveResult res;
      res.status = SolveResult::Status::Unbounded;
      return res;
    }
    SolveResult res;
    res.status = SolveResult::Status::Optimal;
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_struct_ && !Num::zero(xb_[r]))
        res.certificate.push_back({basis_[r], to_rational(xb_[r])});
      if (basis_[r] == lp_.objective_col) res.optimum = to_rational(xb_[r]);
    }
    // duals for the original rows (undo the sign normalization); used by
    // callers that price candidate columns against the solved instance
    std::vector<T> y;
    compute_duals(y);
    res.duals.resize(m_);
    for (int r = 0; r < m_; ++r)
      res.duals[r] = to_rational(y[r]) * row_sign_[r];
    std::sort(res.certificate.begin(), res.certificate.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return res;
  }

 private:
  static Rational to_rational(const Rational& x) { return x; }
  static Rational to_rational(double x) {
    Rational q(x);
    q.canonicalize();
    return q;
  }

  // entry of standardized column j in row r
  long col_entry(int j, int r) const {
    if (j < n_struct_) return static_cast<long>(row_sign_[r]) * lp_.at(j, r);
    if (j < first_art_)
      return slack_of_row_[r] == j ? (sense_[r] == Sense::LessEq ? 1 : -1) : 0;
    return art_of_row_[r] == j ? 1 : 0;
  }

  T objective_coeff(int j) const {
    if (phase_ == 1) return j >= first_art_ ? T(-1) : T(0);
    return j == lp_.objective_col ? T(1) : T(0);
  }

  void init_basis() {
    basis_.assign(m_, -1);
    for (int r = 0; r < m_; ++r)
      basis_[r] = art_of_row_[r] != -1 ? art_of_row_[r] : slack_of_row_[r];
    binv_.assign(static_cast<size_t>(m_) * m_, T{});
    xb_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      // a surplus basis column is -e_r, so its basis-inverse diagonal entry
      // is -1; this only happens on rows with b_[r] == 0
      bool surplus = basis_[r] < first_art_ && sense_[r] == Sense::GreaterEq;
      binv_[static_cast<size_t>(r) * m_ + r] = T(surplus ? -1 : 1);
      xb_[r] = T(surplus ? -b_[r] : b_[r]) + Num::perturb(r, m_);
    }
  }

  void compute_duals(std::vector<T>& y) const {
    y.assign(m_, T{});
    for (int r = 0; r < m_; ++r) {
      T c = objective_coeff(basis_[r]);
      if (Num::zero(c)) continue;
      const T* row = &binv_[static_cast<size_t>(r) * m_];
      for (int k = 0; k < m_; ++k) y[k] += c * row[k];
    }
  }

  T reduced_cost(int j, const std::vector<T>& y) const {
    T d = objective_coeff(j);
    for (int r = 0; r < m_; ++r) {
      long a = col_entry(j, r);
      if (a != 0) d -= y[r] * a;
    }
    return d;
  }

  // Lexicographic comparison of (basis-inverse row / pivot entry) between two
  // rows tied in the ratio test. Picking the lexicographically smallest row
  // keeps every (xb, binv) row lex-positive, so no basis can repeat and the
  // fast pricing rule cannot cycle.
  bool lex_smaller(int r, int l, const std::vector<T>& w) const {
    const T* rr = &binv_[static_cast<size_t>(r) * m_];
    const T* lr = &binv_[static_cast<size_t>(l) * m_];
    for (int k = 0; k < m_; ++k) {
      T diff = rr[k] / w[r] - lr[k] / w[l];
      if (!Num::zero(diff)) return Num::neg(diff);
    }
    return false;
  }

  // basic-variable positions, for skipping columns already in the basis
  bool in_basis(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  int pick_entering(const std::vector<T>& y) const {
    const int limit = phase_ == 1 ? first_art_ : first_art_;
    if (bland_) {
      for (int j = 0; j < limit; ++j) {
        if (in_basis(j)) continue;
        if (Num::pos(reduced_cost(j, y))) return j;
      }
      return -1;
    }
    // approximate scan first, exact verification of the best candidates
    std::vector<double> yd(m_);
    for (int r = 0; r < m_; ++r) yd[r] = approx(y[r]);
    std::vector<std::pair<double, int>> cand;
    for (int j = 0; j < limit; ++j) {
      double d = approx(objective_coeff(j));
      for (int r = 0; r < m_; ++r) {
        long a = col_entry(j, r);
        if (a != 0) d -= yd[r] * a;
      }
      if (d > 1e-12) cand.push_back({-d, j});
    }
    std::sort(cand.begin(), cand.end());
    int checked = 0;
    for (auto& [negd, j] : cand) {
      if (in_basis(j)) continue;
      if (Num::pos(reduced_cost(j, y))) return j;
      if (++checked >= 16) break;  // approximation unreliable, do a full scan
    }
    for (int j = 0; j < limit; ++j) {
      if (in_basis(j)) continue;
      if (Num::pos(reduced_cost(j, y))) return j;
    }
    return -1;
  }

  static double approx(const Rational& x) { return x.get_d(); }
  static double approx(double x) { return x; }

  // returns false on unboundedness
  bool iterate() {
    std::vector<T> y, w(m_);
    long safety = 0;
    while (true) {
      if (++safety > 2000000)
        throw std::logic_error("simplex: iteration safety cap exceeded");
#ifdef NCG_LP_TRACE
      if (safety % 200 == 0)
        std::fprintf(stderr, "iter=%ld phase=%d bland=%d degen=%d\n", safety,
                     phase_, (int)bland_, degenerate_run_);
#endif
      compute_duals(y);
      int e = pick_entering(y);
      if (e == -1) return true;
      // w = Binv * A_e
      for (int r = 0; r < m_; ++r) {
        T acc{};
        const T* row = &binv_[static_cast<size_t>(r) * m_];
        for (int k = 0; k < m_; ++k) {
          long a = col_entry(e, k);
          if (a != 0) acc += row[k] * a;
        }
        w[r] = acc;
      }
      // ratio test; artificials sitting at zero block immediately so they can
      // never become positive again
      int leave = -1;
      T best_ratio{};
      for (int r = 0; r < m_; ++r) {
        bool blocking = Num::pos(w[r]) ||
                        (basis_[r] >= first_art_ && Num::zero(xb_[r]) &&
                         !Num::zero(w[r]));
        if (!blocking) continue;
        T ratio = Num::pos(w[r]) ? T(xb_[r] / w[r]) : T(0);
        bool better;
        if (leave == -1)
          better = true;
        else if (ratio != best_ratio)
          better = ratio < best_ratio;
        else if (bland_)
          better = basis_[r] < basis_[leave];
        else if ((basis_[r] >= first_art_) != (basis_[leave] >= first_art_))
          better = basis_[r] >= first_art_;  // drive artificials out first
        else if (Num::pos(w[r]) && Num::pos(w[leave]))
          better = lex_smaller(r, leave, w);
        else
          better = basis_[r] < basis_[leave];
        if (better) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == -1) return false;  // unbounded direction
      if (Num::zero(best_ratio)) {
        if (++degenerate_run_ > degenerate_threshold_) bland_ = true;
      } else {
        // a strict objective increase ends the stall, so the fast pricing rule
        // is safe again; a truly cycling sequence is all-degenerate and keeps
        // Bland's rule active until it terminates
        degenerate_run_ = 0;
        bland_ = false;
      }
      pivot(leave, e, w);
    }
  }

  void pivot(int r, int e, const std::vector<T>& w) {
    T inv = T(1) / w[r];
    T* prow = &binv_[static_cast<size_t>(r) * m_];
    for (int k = 0; k < m_; ++k) prow[k] *= inv;
    xb_[r] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || Num::zero(w[i])) continue;
      T* irow = &binv_[static_cast<size_t>(i) * m_];
      for (int k = 0; k < m_; ++k) irow[k] -= w[i] * prow[k];
      xb_[i] -= w[i] * xb_[r];
    }
    basis_[r] = e;
  }

  const LPInstance& lp_;
  int m_;
  int n_struct_ = 0, first_art_ = 0, n_total_ = 0;
  std::vector<int> row_sign_, slack_of_row_, art_of_row_;
  std::vector<Sense> sense_;
  std::vector<long> b_;
  std::vector<int> basis_;
  std::vector<T> binv_, xb_;
  int phase_ = 1;
  bool bland_ = false;
  int degenerate_run_ = 0;
  // With the lexicographic ratio test the fast pricing rule already cannot
  // cycle; Bland's rule stays as a backstop with a high trigger because its
  // full exact scans are very slow on wide instances.
  int degenerate_threshold_ = 5000;
};

}  // namespace detail

// Maximizes the objective column. Exact mode certifies the optimum with
// rational arithmetic; float mode is advisory only.
inline SolveResult solve_max(const LPInstance& lp,
                             SolveMode mode = SolveMode::Exact) {
  lp.validate();
  if (mode == SolveMode::Exact) {
    detail::Simplex<detail::ExactNum> s(lp);
    SolveResult res = s.run();
    res.certified = res.status == SolveResult::Status::Optimal;
    return res;
  }
  detail::Simplex<detail::FloatNum> s(lp);
  SolveResult res = s.run();
  res.certified = false;
  return res;
}

// Independent re-evaluation of every row at the certificate.
inline bool check_certificate(const LPInstance& lp, const SolveResult& result) {
  if (result.status != SolveResult::Status::Optimal) return false;
  std::vector<Rational> x(lp.num_vars);
  for (const auto& [j, v] : result.certificate) {
    if (j < 0 || j >= lp.num_vars) return false;
    if (v < 0) return false;
    x[j] = v;
  }
  for (int r = 0; r < lp.num_rows; ++r) {
    Rational lhs;
    for (int j = 0; j < lp.num_vars; ++j)
      if (lp.at(j, r) != 0 && x[j] != 0) lhs += x[j] * lp.at(j, r);
    switch (lp.sense[r]) {
      case Sense::LessEq:
        if (lhs > lp.rhs[r]) return false;
        break;
      case Sense::Eq:
        if (lhs != lp.rhs[r]) return false;
        break;
      case Sense::GreaterEq:
        if (lhs < lp.rhs[r]) return false;
        break;
    }
  }
  return x[lp.objective_col] == result.optimum;
}

}  // namespace ncg

#endif  // NCG_LP_SOLVER_HPP
