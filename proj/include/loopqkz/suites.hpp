#pragma once

// Verification suites shared by the command-line tool and the acceptance
// binary. Every check is labelled by the identity it tests; failures carry
// the error text when a check threw.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "loopqkz/baxter.hpp"
#include "loopqkz/chars.hpp"
#include "loopqkz/groundstate.hpp"
#include "loopqkz/linkpat.hpp"
#include "loopqkz/random.hpp"
#include "loopqkz/transfer.hpp"

namespace loopqkz {

struct CheckTally {
  std::string identity;
  int passed = 0;
  int total = 0;
  std::string first_failure;

  bool ok() const { return total > 0 && passed == total; }
};

class SuiteReport {
 public:
  void record(const std::string& identity, bool ok, const std::string& detail = {}) {
    auto [it, inserted] = index_.try_emplace(identity, tallies_.size());
    if (inserted) tallies_.push_back(CheckTally{identity});
    CheckTally& t = tallies_[it->second];
    ++t.total;
    if (ok)
      ++t.passed;
    else if (t.first_failure.empty())
      t.first_failure = detail.empty() ? "identity does not hold" : detail;
  }

  // Runs f, recording an exception as a failure with its message.
  void check(const std::string& identity, const std::function<bool()>& f, const std::string& where = {}) {
    try {
      const bool ok = f();
      record(identity, ok, ok ? std::string() : where);
    } catch (const std::exception& e) {
      record(identity, false, (where.empty() ? std::string() : where + ": ") + e.what());
    }
  }

  void merge(const SuiteReport& other) {
    for (const auto& t : other.tallies_) {
      auto [it, inserted] = index_.try_emplace(t.identity, tallies_.size());
      if (inserted) {
        tallies_.push_back(t);
        continue;
      }
      CheckTally& mine = tallies_[it->second];
      mine.passed += t.passed;
      mine.total += t.total;
      if (mine.first_failure.empty()) mine.first_failure = t.first_failure;
    }
  }

  const std::vector<CheckTally>& tallies() const { return tallies_; }
  bool ok() const {
    for (const auto& t : tallies_)
      if (!t.ok()) return false;
    return !tallies_.empty();
  }

 private:
  std::vector<CheckTally> tallies_;
  std::map<std::string, std::size_t> index_;
};

struct SuiteConfig {
  int length = 3;
  int trials = 5;
  std::uint64_t seed = 1;
};

namespace detail {

inline std::string at_point(int length, int trial) {
  return "L=" + std::to_string(length) + " trial " + std::to_string(trial);
}

// Redraws until the specialised point is still generic for T.
inline SpectralPoint specialised(PointSampler& ps, int length, const Scalar& s,
                                 const std::function<void(SpectralPoint&)>& impose) {
  for (;;) {
    SpectralPoint pt = ps.point(length, s);
    impose(pt);
    if (is_generic(pt)) return pt;
  }
}

}  // namespace detail

// --- algebra ---------------------------------------------------------------

inline SuiteReport suite_algebra(const SuiteConfig& cfg) {
  SuiteReport rep;
  const int n = cfg.length;
  if (n < 1) return rep;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<SparseOperator> e;
  for (int i = 0; i <= n; ++i) e.push_back(generator_matrix(i, n));
  const std::string where = "L=" + std::to_string(n);
  for (int i = 0; i <= n; ++i) {
    rep.check("idempotent e_i^2 = e_i", [&] { return e[i] * e[i] == e[i]; }, where + " i=" + std::to_string(i));
    rep.check("one unit entry per column of e_i", [&] {
      for (std::size_t c = 0; c < dim; ++c) {
        const auto& col = e[i].column(c);
        if (col.size() != 1 || col[0].second != Scalar(1L)) return false;
      }
      return true;
    }, where);
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j : {i - 1, i + 1})
      rep.check("braid e_i e_{i+-1} e_i = e_i", [&] { return e[i] * e[j] * e[i] == e[i]; },
                where + " i=" + std::to_string(i) + " j=" + std::to_string(j));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      rep.check("far generators commute", [&] { return e[i] * e[j] == e[j] * e[i]; },
                where + " i=" + std::to_string(i) + " j=" + std::to_string(j));
  const auto [i1, i2] = idempotents(n);
  rep.check("double quotient I1 I2 I1 = I1", [&] { return i1 * i2 * i1 == i1; }, where);
  rep.check("double quotient I2 I1 I2 = I2", [&] { return i2 * i1 * i2 == i2; }, where);
  rep.check("Hamiltonian has zero column sums", [&] {
    for (const auto& x : hamiltonian(n, scalar_from_rational(2, 3), scalar_from_rational(5, 7)).column_sums())
      if (!x.is_zero()) return false;
    return true;
  }, where);
  return rep;
}

// --- local identities ------------------------------------------------------

inline SuiteReport suite_local(const SuiteConfig& cfg) {
  SuiteReport rep;
  PointSampler ps(cfg.seed);
  const Scalar& q = q_root();
  const int n = std::max(cfg.length, 3);
  for (int t = 0; t < cfg.trials; ++t) {
    ps.reset();
    const Scalar z = ps.draw_scalar(), w = ps.draw_scalar(), zeta = ps.draw_scalar();
    const std::string where = "trial " + std::to_string(t);
    const SparseOperator id = SparseOperator::identity(std::size_t{1} << n);
    rep.check("unitarity R(z) R(1/z) = 1", [&] {
      bool ok = true;
      for (int i = 1; i < n; ++i) ok = ok && rcheck(i, z, n) * rcheck(i, z.inverse(), n) == id;
      return ok;
    }, where);
    rep.check("unitarity K_0(z) K_0(1/z) = 1",
              [&] { return kcheck0(z, zeta, n) * kcheck0(z.inverse(), zeta, n) == id; }, where);
    rep.check("unitarity K_L(z) K_L(1/z) = 1",
              [&] { return kcheckL(z, zeta, n) * kcheckL(z.inverse(), zeta, n) == id; }, where);
    rep.check("Yang-Baxter equation", [&] {
      bool ok = true;
      for (int i = 1; i + 1 < n; ++i)
        ok = ok && rcheck(i, z, n) * rcheck(i + 1, z * w, n) * rcheck(i, w, n) ==
                       rcheck(i + 1, w, n) * rcheck(i, z * w, n) * rcheck(i + 1, z, n);
      return ok;
    }, where);
    rep.check("left reflection equation", [&] {
      return kcheck0(z, zeta, n) * rcheck(1, z * w, n) * kcheck0(w, zeta, n) * rcheck(1, w / z, n) ==
             rcheck(1, w / z, n) * kcheck0(w, zeta, n) * rcheck(1, z * w, n) * kcheck0(z, zeta, n);
    }, where);
    rep.check("right reflection equation", [&] {
      return kcheckL(z, zeta, n) * rcheck(n - 1, z * w, n) * kcheckL(w, zeta, n) * rcheck(n - 1, w / z, n) ==
             rcheck(n - 1, w / z, n) * kcheckL(w, zeta, n) * rcheck(n - 1, z * w, n) * kcheckL(z, zeta, n);
    }, where);
    // a quarter turn exchanges the identity and cup-cap pictures
    rep.check("crossing R(z,w) = R(qw,z)", [&] {
      const FaceWeights a = face_weights_R(z, w), b = face_weights_R(q * w, z);
      return a.identity == b.cup && a.cup == b.identity;
    }, where);
    rep.check("face weight scalar identity", [&] {
      const Scalar u = z / w;
      const FaceWeights f1 = bulk_weights(q * u), f0 = bulk_weights(u);
      return (f1.identity * f0.identity + f1.cup * f0.cup - (q + q.inverse()) * f1.identity * f0.cup).is_zero();
    }, where);
    rep.check("boundary tiles reproduce K_0 and K_L on one site", [&] {
      return two_term_operator(face_weights_K0(w, zeta), 0, 1) == kcheck0(q * w, zeta, 1) &&
             two_term_operator(face_weights_KL(w, zeta), 1, 1) == kcheckL(w, zeta, 1);
    }, where);
  }
  return rep;
}

// --- transfer matrix -------------------------------------------------------

inline SuiteReport suite_transfer(const SuiteConfig& cfg) {
  SuiteReport rep;
  PointSampler ps(cfg.seed);
  const int n = cfg.length;
  const Scalar& q = q_root();
  for (int t = 0; t < cfg.trials; ++t) {
    const SpectralPoint pt = ps.point(n);
    const std::string where = detail::at_point(n, t);
    if (n <= 4)
      rep.check("threaded contraction equals naive expansion",
                [&] { return transfer_matrix(pt) == transfer_matrix_naive(pt); }, where);
    rep.check("commuting family [T(v),T(w)] = 0", [&] { return check_commuting(pt, ps.draw_scalar()); }, where);
    rep.check("column sums of T equal 1", [&] { return check_column_sums(pt); }, where);
    if (n >= 1) {
      rep.check("interlacing with K_0", [&] { return check_interlace(pt, 0); }, where);
      rep.check("interlacing with K_L", [&] { return check_interlace(pt, n); }, where);
    }
    for (int i = 1; i < n; ++i)
      rep.check("interlacing with R_i", [&] { return check_interlace(pt, i); }, where + " i=" + std::to_string(i));
    for (int i = 1; i < n; ++i) {
      const SpectralPoint sp = detail::specialised(ps, n, Scalar(1L), [&](SpectralPoint& p) {
        p.z[static_cast<std::size_t>(i)] = q * p.z[static_cast<std::size_t>(i - 1)];
      });
      rep.check("bulk recursion of T with unit factor", [&] {
        return bulk_recursion_factor(sp.zi(i), sp.w) == Scalar(1L) && check_T_recursion(sp, i);
      }, where + " i=" + std::to_string(i));
    }
    if (n >= 1) {
      const SpectralPoint lp = detail::specialised(ps, n, Scalar(1L), [&](SpectralPoint& p) { p.z[0] = q * p.zeta1; });
      rep.check("left boundary recursion of T", [&] { return check_T_boundary_recursion_left(lp); }, where);
      const SpectralPoint rp = detail::specialised(ps, n, Scalar(1L), [&](SpectralPoint& p) {
        p.z[static_cast<std::size_t>(n - 1)] = p.zeta2 / q;
      });
      rep.check("right boundary recursion of T", [&] { return check_T_boundary_recursion_right(rp); }, where);
    }
  }
  return rep;
}

// --- qKZ -------------------------------------------------------------------

inline SuiteReport suite_qkz(const SuiteConfig& cfg) {
  SuiteReport rep;
  PointSampler ps(cfg.seed);
  const int n = cfg.length;
  if (n < 1) return rep;
  for (int k = 0; k < 4; ++k) {
    const Scalar s = fourth_root(k);
    const std::string sname = " s=i^" + std::to_string(k);
    for (int t = 0; t < cfg.trials; ++t) {
      const SpectralPoint pt = ps.point(n, s);
      const std::string where = detail::at_point(n, t) + sname;
      for (int i = 1; i < n; ++i)
        rep.check("qKZ exchange R_i Psi = pi_i Psi", [&] { return check_qkz_exchange(pt, i); },
                  where + " i=" + std::to_string(i));
      rep.check("qKZ boundary relations K_0, K_L", [&] { return check_qkz_boundary(pt); }, where);
      rep.check("extremal closed forms share one scale", [&] {
        const GroundstateVector gs = solve(pt);
        return gs.components.front() == closed_form_all_open(pt) &&
               gs.components.back() == closed_form_all_close(pt);
      }, where);
    }
  }
  return rep;
}

// --- recursions ------------------------------------------------------------

inline SuiteReport suite_recursion(const SuiteConfig& cfg) {
  SuiteReport rep;
  PointSampler ps(cfg.seed);
  const int n = cfg.length;
  const Scalar& q = q_root();
  for (int t = 0; t < cfg.trials; ++t) {
    const std::string where = detail::at_point(n, t);
    for (int i = 1; i < n; ++i) {
      const SpectralPoint sp = detail::specialised(ps, n, Scalar(1L), [&](SpectralPoint& p) {
        p.z[static_cast<std::size_t>(i)] = q * p.z[static_cast<std::size_t>(i - 1)];
      });
      rep.check("groundstate bulk recursion with factor p", [&] { return check_bulk_recursion(sp, i); },
                where + " i=" + std::to_string(i));
    }
    if (n >= 1) {
      const SpectralPoint lp = detail::specialised(ps, n, Scalar(1L), [&](SpectralPoint& p) { p.z[0] = q * p.zeta1; });
      rep.check("groundstate left recursion with factor r_0",
                [&] { return check_boundary_recursion(lp, Side::left); }, where);
      for (int k = 0; k < 4; ++k) {
        const SpectralPoint rp = detail::specialised(ps, n, fourth_root(k), [&](SpectralPoint& p) {
          p.z[static_cast<std::size_t>(n - 1)] = p.zeta2 / q;
        });
        rep.check("groundstate right recursion with factor r_L",
                  [&] { return check_boundary_recursion(rp, Side::right); },
                  where + " s=i^" + std::to_string(k));
      }
    }
    if (n >= 4) {
      // same p whichever pair of neighbours is specialised
      const SpectralPoint base = ps.point(n);
      rep.check("bulk factor p independent of i", [&] {
        std::vector<Scalar> factors;
        for (int i = 1; i < n; ++i) {
          SpectralPoint p = base;
          // z_i = x, z_{i+1} = q x, the others in fixed order
          std::vector<Scalar> others(base.z.begin() + 2, base.z.end());
          p.z.clear();
          for (int j = 1, o = 0; j <= n; ++j) {
            if (j == i)
              p.z.push_back(base.z[0]);
            else if (j == i + 1)
              p.z.push_back(q * base.z[0]);
            else
              p.z.push_back(others[static_cast<std::size_t>(o++)]);
          }
          factors.push_back(bulk_recursion(p, i).factor);
        }
        for (const auto& f : factors)
          if (f != factors.front()) return false;
        return true;
      }, where);
    }
  }
  return rep;
}

// --- sum rule --------------------------------------------------------------

inline SuiteReport suite_sumrule(const SuiteConfig& cfg) {
  SuiteReport rep;
  PointSampler ps(cfg.seed);
  const int n = cfg.length;
  for (int t = 0; t < cfg.trials; ++t) {
    const SpectralPoint pt = ps.point(n);
    const std::string where = detail::at_point(n, t);
    rep.check("sum of components equals four-character product", [&] { return check_sum_rule(pt); }, where);
    rep.check("Z symmetric and reflection invariant", [&] {
      const Scalar z = z_product(pt);
      bool ok = z_product(pt.with_z(1, pt.zi(1).inverse())) == z;
      for (int i = 1; i < n; ++i) ok = ok && z_product(pt.swapped(i)) == z;
      return ok;
    }, where);
    ps.reset();
    const Scalar zeta1 = ps.draw_scalar(), zeta2 = ps.draw_scalar();
    rep.check("homogeneous sum rule with confluent characters",
              [&] { return check_homogeneous_sum_rule(n, zeta1, zeta2); }, where);
    if (n >= 1)
      rep.check("Hamiltonian annihilates homogeneous groundstate",
                [&] { return check_hamiltonian(n, zeta1, zeta2); }, where);
  }
  return rep;
}

// --- degree and factor structure -------------------------------------------

inline SuiteReport suite_degree(const SuiteConfig& cfg) {
  SuiteReport rep;
  PointSampler ps(cfg.seed);
  const int n = cfg.length;
  if (n < 1) return rep;
  for (int t = 0; t < cfg.trials; ++t) {
    const SpectralPoint pt = ps.point(n);
    const std::string where = detail::at_point(n, t);
    for (int v = 1; v <= n; ++v)
      rep.check("degree in each z_i^2 at most 2L-1", [&] {
        for (const auto& ip : interpolate_state(pt, v, default_samples(n)))
          if (ip.degree() > 2 * n - 1) return false;
        return true;
      }, where + " variable z_" + std::to_string(v));
    rep.check("left factor k(z_1, zeta1) condition", [&] { return check_left_factor(pt); }, where);
    rep.check("right factor k(1/s z_L, s zeta2) condition", [&] { return check_right_factor(pt); }, where);
    for (int i = 1; i < n; ++i)
      rep.check("bulk factor [q z_i/z_{i+1}] condition", [&] { return check_bulk_factor(pt, i); },
                where + " i=" + std::to_string(i));
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "local",     "transfer", "qkz",
                                                  "recursion", "sumrule", "degree"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "algebra") return suite_algebra(cfg);
  if (name == "local") return suite_local(cfg);
  if (name == "transfer") return suite_transfer(cfg);
  if (name == "qkz") return suite_qkz(cfg);
  if (name == "recursion") return suite_recursion(cfg);
  if (name == "sumrule") return suite_sumrule(cfg);
  if (name == "degree") return suite_degree(cfg);
  if (name == "all") {
    SuiteReport all;
    for (const auto& s : suite_names()) all.merge(run_suite(s, cfg));
    return all;
  }
  throw invalid_argument("unknown suite '" + name + "'");
}

}  // namespace loopqkz
