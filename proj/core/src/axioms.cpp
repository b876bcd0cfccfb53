#include "grassmetric/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

namespace grassmetric::axioms {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json j{{"axiom", axiom},
                   {"verdict", to_string(verdict)},
                   {"trials", trials},
                   {"max_residual", max_residual}};
  if (witness) j["witness"] = *witness;
  if (note) j["note"] = *note;
  return j;
}

namespace {

class Sampler {
 public:
  explicit Sampler(const SampleConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Scalar entry() { return unit_(rng_); }

  Vector vector(std::size_t m) {
    Vector v(m);
    for (Scalar& x : v) x = entry();
    return v;
  }

  std::vector<Vector> raw_tuple(std::size_t n, std::size_t m) {
    std::vector<Vector> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(vector(m));
    return vs;
  }

  VectorTuple tuple() { return VectorTuple(raw_tuple(cfg_.n, cfg_.m)); }

  // rejection-sampled full-rank tuple
  VectorTuple independent_tuple(std::size_t n, std::size_t m) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      VectorTuple t{raw_tuple(n, m)};
      if (numerical_rank(t.as_matrix()) == n) return t;
    }
    throw Error("could not sample an independent tuple");
  }

  VectorTuple independent_tuple() { return independent_tuple(cfg_.n, cfg_.m); }

  // one slot forced to a random combination of the others
  VectorTuple dependent_tuple() {
    std::vector<Vector> vs = raw_tuple(cfg_.n, cfg_.m);
    if (cfg_.n == 1) {
      vs[0] = Vector(cfg_.m, 0.0);
      return VectorTuple(std::move(vs));
    }
    const std::size_t slot = index(cfg_.n);
    Vector combo(cfg_.m, 0.0);
    for (std::size_t j = 0; j < cfg_.n; ++j) {
      if (j == slot) continue;
      combo = add(combo, scaled(vs[j], entry()));
    }
    vs[slot] = std::move(combo);
    return VectorTuple(std::move(vs));
  }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

 private:
  SampleConfig cfg_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<Scalar> unit_{-1.0, 1.0};
};

nlohmann::json tuple_json(const VectorTuple& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Vector& v : t.vectors()) rows.push_back(v);
  return rows;
}

std::string identity_witness(const VectorTuple& a, const VectorTuple& b,
                             Scalar lhs, Scalar rhs) {
  return nlohmann::json{{"left", tuple_json(a)},
                        {"right", tuple_json(b)},
                        {"lhs", lhs},
                        {"rhs", rhs}}
      .dump();
}

Scalar rel_residual(Scalar lhs, Scalar rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Scalar norm_product(const VectorTuple& t) {
  Scalar s = 1.0;
  for (const Vector& v : t.vectors()) s *= std::max(norm(v), 1e-30);
  return std::max(s, 1.0);
}

void record(AxiomReport& r, Scalar residual, Scalar tol, std::string witness) {
  r.max_residual = std::max(r.max_residual, residual);
  if (residual > tol && r.verdict == Verdict::pass) {
    r.verdict = Verdict::fail;
    r.witness = std::move(witness);
  }
}

}  // namespace

AxiomReport check_axiom_positivity(const NInnerForm& form, const SampleConfig& cfg) {
  AxiomReport r{.axiom = "D21-i'"};
  Sampler s(cfg);
  for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
    ++r.trials;
    const VectorTuple ind = s.independent_tuple();
    const Scalar vi = n_inner(form, ind, ind);
    if (vi <= 0.0) {
      r.verdict = Verdict::fail;
      r.witness = identity_witness(ind, ind, vi, 0.0);
      break;
    }
    const VectorTuple dep = s.dependent_tuple();
    const Scalar vd = n_inner(form, dep, dep);
    const Scalar scale = norm_product(dep) * norm_product(dep);
    record(r, std::abs(vd) / scale, cfg.tol, identity_witness(dep, dep, vd, 0.0));
  }
  return r;
}

AxiomReport check_axiom_symmetry(const NInnerForm& form, const SampleConfig& cfg) {
  AxiomReport r{.axiom = "D21-ii"};
  Sampler s(cfg);
  for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
    ++r.trials;
    const VectorTuple a = s.tuple(), b = s.tuple();
    const Scalar lhs = n_inner(form, a, b), rhs = n_inner(form, b, a);
    record(r, rel_residual(lhs, rhs), cfg.tol, identity_witness(a, b, lhs, rhs));
  }
  return r;
}

AxiomReport check_axiom_homogeneity(const NInnerForm& form, const SampleConfig& cfg) {
  static constexpr Scalar kLambdas[] = {-2.0, 0.0, 0.5, 3.0};
  AxiomReport r{.axiom = "D21-iii"};
  Sampler s(cfg);
  for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
    ++r.trials;
    const VectorTuple a = s.tuple(), b = s.tuple();
    const Scalar lambda = kLambdas[t % 4];
    const VectorTuple scaled_a = a.with_slot(0, scaled(a[0], lambda));
    const Scalar lhs = n_inner(form, scaled_a, b);
    const Scalar rhs = lambda * n_inner(form, a, b);
    record(r, rel_residual(lhs, rhs), cfg.tol, identity_witness(scaled_a, b, lhs, rhs));
  }
  return r;
}

AxiomReport check_axiom_alternating(const NInnerForm& form, const SampleConfig& cfg) {
  AxiomReport r{.axiom = "D21-iv"};
  if (cfg.n < 2) {
    r.note = "vacuous for n = 1";
    return r;
  }
  Sampler s(cfg);
  for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
    ++r.trials;
    const VectorTuple a = s.tuple(), b = s.tuple();
    std::size_t i = s.index(cfg.n), j = s.index(cfg.n);
    if (i == j) j = (j + 1) % cfg.n;
    VectorTuple swapped = a.with_slot(i, a[j]).with_slot(j, a[i]);
    const Scalar lhs = n_inner(form, a, b);
    const Scalar rhs = -n_inner(form, swapped, b);
    record(r, rel_residual(lhs, rhs), cfg.tol, identity_witness(a, b, lhs, rhs));
    // equal slots force a zero value
    const VectorTuple repeated = a.with_slot(j, a[i]);
    const Scalar vz = n_inner(form, repeated, b);
    const Scalar scale = norm_product(repeated) * norm_product(b);
    record(r, std::abs(vz) / scale, cfg.tol, identity_witness(repeated, b, vz, 0.0));
  }
  return r;
}

AxiomReport check_axiom_additivity(const NInnerForm& form, const SampleConfig& cfg) {
  AxiomReport r{.axiom = "D21-v"};
  Sampler s(cfg);
  for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
    ++r.trials;
    const VectorTuple a = s.tuple(), b = s.tuple();
    const Vector c = s.vector(cfg.m);
    const Scalar lhs = n_inner(form, a.with_slot(0, add(a[0], c)), b);
    const Scalar rhs = n_inner(form, a, b) + n_inner(form, a.with_slot(0, c), b);
    record(r, rel_residual(lhs, rhs), cfg.tol, identity_witness(a, b, lhs, rhs));
  }
  return r;
}

AxiomReport check_axiom_vi(const NInnerForm& form, const SampleConfig& cfg) {
  AxiomReport r{.axiom = "D21-vi"};
  if (cfg.m <= cfg.n) {
    r.note = "vacuous for m <= n";
    return r;
  }
  Sampler s(cfg);
  for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
    ++r.trials;
    const VectorTuple b = s.independent_tuple();
    // the n replacement products are linear in a1; solve for the nullspace
    Matrix conditions(cfg.n, cfg.m);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      std::vector<Vector> left;
      left.push_back(Vector(cfg.m, 0.0));
      for (std::size_t j = 0; j < cfg.n; ++j)
        if (j != i) left.push_back(b[j]);
      for (std::size_t k = 0; k < cfg.m; ++k) {
        Vector ek(cfg.m, 0.0);
        ek[k] = 1.0;
        left[0] = ek;
        conditions(i, k) = n_inner(form, VectorTuple(left), b);
      }
    }
    Vector a1;
    try {
      a1 = nullspace(conditions).row(0);
    } catch (const RankDeficient&) {
      r.verdict = Verdict::undecided;
      r.note = "no orthogonal vector found (empty nullspace)";
      break;
    }
    std::vector<Vector> left{a1};
    for (std::size_t j = 1; j < cfg.n; ++j) left.push_back(s.vector(cfg.m));
    const VectorTuple lt(std::move(left));
    const Scalar v = n_inner(form, lt, b);
    const Scalar scale = norm_product(lt) * norm_product(b);
    record(r, std::abs(v) / scale, cfg.tol, identity_witness(lt, b, v, 0.0));
  }
  return r;
}

namespace {

std::vector<Vector> tail(const std::vector<Vector>& vs, std::size_t skip1,
                         std::size_t skip2 = static_cast<std::size_t>(-1)) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i != skip1 && i != skip2) out.push_back(vs[i]);
  return out;
}

}  // namespace

std::vector<AxiomReport> check_definition_1_1(const NInnerForm& form,
                                              const SampleConfig& cfg) {
  std::vector<AxiomReport> out;
  const std::size_t n = cfg.n, m = cfg.m;
  Sampler s(cfg);

  // D11-i: (x1,x1|X) >= 0, zero iff {x1} u X dependent
  {
    AxiomReport r{.axiom = "D11-i"};
    for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
      ++r.trials;
      const VectorTuple ind = s.independent_tuple();
      const Scalar vi = misiak_reduce(form, ind[0], ind[0], tail(ind.vectors(), 0));
      if (vi <= 0.0) {
        r.verdict = Verdict::fail;
        r.witness = identity_witness(ind, ind, vi, 0.0);
        break;
      }
      const VectorTuple dep = s.dependent_tuple();
      const Scalar vd = misiak_reduce(form, dep[0], dep[0], tail(dep.vectors(), 0));
      const Scalar scale = norm_product(dep) * norm_product(dep);
      record(r, std::abs(vd) / scale, cfg.tol, identity_witness(dep, dep, vd, 0.0));
    }
    out.push_back(std::move(r));
  }

  // D11-ii: invariance under bijections of the shared slots and of {a, b}
  {
    AxiomReport r{.axiom = "D11-ii"};
    for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
      ++r.trials;
      const Vector a = s.vector(m), b = s.vector(m);
      std::vector<Vector> x = s.raw_tuple(n - 1, m);
      std::vector<Vector> permuted;
      for (std::size_t i : s.permutation(n - 1)) permuted.push_back(x[i]);
      const bool swap_ab = t % 2 == 1;
      const Scalar lhs = misiak_reduce(form, a, b, x);
      const Scalar rhs = swap_ab ? misiak_reduce(form, b, a, permuted)
                                 : misiak_reduce(form, a, b, permuted);
      record(r, rel_residual(lhs, rhs), cfg.tol,
             identity_witness(VectorTuple({a, b}), VectorTuple({a, b}), lhs, rhs));
    }
    out.push_back(std::move(r));
  }

  // D11-iii: (x1,x1|x2,...) = (x2,x2|x1,x3,...)
  {
    AxiomReport r{.axiom = "D11-iii"};
    if (n < 2) {
      r.note = "vacuous for n = 1";
    } else {
      for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
        ++r.trials;
        const std::vector<Vector> x = s.raw_tuple(n, m);
        const std::vector<Vector> shared_l = tail(x, 0);
        std::vector<Vector> shared_r = tail(x, 0, 1);
        shared_r.insert(shared_r.begin(), x[0]);
        const Scalar lhs = misiak_reduce(form, x[0], x[0], shared_l);
        const Scalar rhs = misiak_reduce(form, x[1], x[1], shared_r);
        record(r, rel_residual(lhs, rhs), cfg.tol,
               identity_witness(VectorTuple(x), VectorTuple(x), lhs, rhs));
      }
    }
    out.push_back(std::move(r));
  }

  // D11-iv: homogeneity in the first slot
  {
    static constexpr Scalar kLambdas[] = {-2.0, 0.0, 0.5, 3.0};
    AxiomReport r{.axiom = "D11-iv"};
    for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
      ++r.trials;
      const Vector a = s.vector(m), b = s.vector(m);
      const std::vector<Vector> x = s.raw_tuple(n - 1, m);
      const Scalar lambda = kLambdas[t % 4];
      const Scalar lhs = misiak_reduce(form, scaled(a, lambda), b, x);
      const Scalar rhs = lambda * misiak_reduce(form, a, b, x);
      record(r, rel_residual(lhs, rhs), cfg.tol,
             identity_witness(VectorTuple({a, b}), VectorTuple({a, b}), lhs, rhs));
    }
    out.push_back(std::move(r));
  }

  // D11-v: additivity in the first slot
  {
    AxiomReport r{.axiom = "D11-v"};
    for (long t = 0; t < cfg.trials && r.verdict == Verdict::pass; ++t) {
      ++r.trials;
      const Vector a = s.vector(m), a1 = s.vector(m), b = s.vector(m);
      const std::vector<Vector> x = s.raw_tuple(n - 1, m);
      const Scalar lhs = misiak_reduce(form, add(a, a1), b, x);
      const Scalar rhs = misiak_reduce(form, a, b, x) + misiak_reduce(form, a1, b, x);
      record(r, rel_residual(lhs, rhs), cfg.tol,
             identity_witness(VectorTuple({a, a1}), VectorTuple({b, b}), lhs, rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<AxiomReport> check_all(const NInnerForm& form, const SampleConfig& cfg) {
  std::vector<AxiomReport> out;
  out.push_back(check_axiom_positivity(form, cfg));
  out.push_back(check_axiom_symmetry(form, cfg));
  out.push_back(check_axiom_homogeneity(form, cfg));
  out.push_back(check_axiom_alternating(form, cfg));
  out.push_back(check_axiom_additivity(form, cfg));
  out.push_back(check_axiom_vi(form, cfg));
  for (auto& r : check_definition_1_1(form, cfg)) out.push_back(std::move(r));
  return out;
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.verdict == Verdict::pass; });
}

}  // namespace grassmetric::axioms
