#include "polyopt/optimize.hpp"

#include <algorithm>
#include <chrono>

namespace polyopt {

namespace {

std::mt19937_64 attempt_rng(std::uint64_t seed, int attempt, unsigned salt) {
  std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(attempt), salt};
  return std::mt19937_64(ss);
}

const RationalParametrization& source_param(const ExtremaSets& sets, const ValueSource& s) {
  return s.kind == ValueSource::Kind::SamplePoint ? sets.lsp : sets.lcp.at(static_cast<std::size_t>(s.level - 1));
}

// Smaller is preferred: critical levels in increasing order, then sample points.
int source_rank(const ValueSource& s) {
  switch (s.kind) {
    case ValueSource::Kind::CriticalLevel:
      return s.level;
    case ValueSource::Kind::SamplePoint:
      return 1 << 20;
    default:
      return 1 << 30;
  }
}

// Index of the value among `values` (pairwise disjoint isolating intervals,
// refined in place) taken by f at the real point of p over `root`. f is
// evaluated through its univariate image num / den.
std::size_t match_value(const UPoly& num, const UPoly& den, const AlgebraicNumber& root,
                        std::vector<AlgebraicNumber>& values) {
  if (values.size() == 1) return 0;
  AlgebraicNumber r = root;
  for (long bits = 16; bits < (1L << 20); bits *= 2) {
    const Rational w = pow2(-bits);
    r = r.refined(w);
    const Interval d = evaluate(den, r.interval());
    if (d.strict_sign() == 0) continue;
    const Interval fv = evaluate(num, r.interval()) / d;
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (values[j].interval().intersects(fv)) hits.push_back(j);
    if (hits.size() == 1) return hits[0];
    for (auto j : hits) values[j] = values[j].refined(w);
  }
  throw std::logic_error("real point value matches no root of the image annihilator");
}

MPoly minus_constant(const MPoly& f, const Rational& c) { return f - MPoly::constant(f.ring(), c); }

// Enclosure of width <= width with dyadic endpoints.
std::vector<Interval> minimizer_box(const RationalParametrization& p, const AlgebraicNumber& root, const Rational& width) {
  const Rational grid = pow2(ceil_log2(width) - 4);
  std::vector<Interval> box = point_box(p, root, width / 2);
  for (auto& c : box) {
    Integer lo, hi;
    const Rational a = c.lo / grid, b = c.hi / grid;
    mpz_fdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    c = Interval(Rational(lo) * grid, Rational(hi) * grid);
  }
  return box;
}

Rational random_offset(std::mt19937_64& rng) { return Rational(static_cast<long>(rng() % 16)) / 16; }

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Attained:
      return "attained";
    case Status::Unattained:
      return "not_attained";
    case Status::RealEmpty:
      return "empty";
    case Status::UnboundedBelow:
      return "unbounded";
  }
  return "?";
}

bool CandidateValue::has_point() const {
  return std::any_of(sources.begin(), sources.end(),
                     [](const ValueSource& s) { return s.kind != ValueSource::Kind::NonProperness; });
}

AssumptionDiagnostics check_assumptions(const RingPtr& ring, const std::vector<MPoly>& F) {
  AssumptionDiagnostics out;
  auto g = ProblemGeometry::make(MPoly(ring), F);
  out.d = g.d;
  if (g.d < 0) {
    out.warnings.push_back("V(F) is empty over the complex numbers");
    return out;
  }
  out.dim_sing = dimension(singular_ideal(g));
  out.warnings.push_back("radicality of <F> is assumed, not verified");
  out.warnings.push_back("equidimensionality of V(F) is assumed, not verified");
  if (g.d == 0) out.warnings.push_back("V(F) is finite; solved directly from its parametrization");
  if (out.dim_sing > 0) out.warnings.push_back("singular locus has dimension " + std::to_string(out.dim_sing));
  return out;
}

CoordinateChange random_coordinate_change(std::size_t n, std::uint64_t seed, int attempt) {
  CoordinateChange::Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  if (attempt > 0) {
    auto rng = attempt_rng(seed, attempt, 0);
    const long b = 2L * attempt;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        m[i][j] = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * b + 1)) - b;
  }
  return CoordinateChange(std::move(m));
}

PolarData polar_data(const ProblemGeometry& g) {
  PolarData data;
  for (int i = 1; i <= g.d; ++i) {
    data.curves.push_back(polar_curve(g, i));
    data.vpc.push_back(vpc_ideal(g, data.curves.back()));
  }
  return data;
}

bool verify_genericity(const ProblemGeometry& g, const PolarData& data, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  if (!noether_position_check(Ideal(g.ring, g.F), g.d)) return fail("constraints are not in Noether position");
  for (const auto& c : data.curves) {
    if (c.dim == 1 && !is_noether_position(c.ideal, {static_cast<std::size_t>(c.level - 1)}))
      return fail("polar curve at level " + std::to_string(c.level) + " is not finite over its coordinate");
  }
  for (std::size_t i = 0; i < data.vpc.size(); ++i) {
    if (dimension(data.vpc[i]) > 0)
      return fail("critical points of the polar curve at level " + std::to_string(i + 1) + " are not finite");
  }
  return true;
}

bool verify_genericity(const ProblemGeometry& g, std::string* reason) {
  try {
    return verify_genericity(g, polar_data(g), reason);
  } catch (const GenericityFailure& e) {
    if (reason) *reason = e.what();
    return false;
  }
}

ExtremaSets set_containing_local_extrema(const ProblemGeometry& g, const PolarData& data, std::mt19937_64& rng) {
  ExtremaSets out;
  out.lsp = real_sample_points(g.ring, g.F, g.d, rng);
  UPoly p_np = UPoly::constant(Rational(1));
  for (std::size_t i = 0; i < data.curves.size(); ++i) {
    p_np = p_np * set_of_non_properness(g, data.curves[i]);
    out.lcp.push_back(rur(data.vpc[i], rng));
  }
  out.p_np = p_np.degree() < 1 ? UPoly::constant(Rational(1)) : squarefree_part(p_np).normalized();
  return out;
}

ExtremaSets set_containing_local_extrema(const ProblemGeometry& g, std::mt19937_64& rng) {
  return set_containing_local_extrema(g, polar_data(g), rng);
}

std::vector<CandidateValue> collect_candidates(const MPoly& f, const ExtremaSets& sets) {
  struct Group {
    const RationalParametrization* p;
    ValueSource::Kind kind;
    int level;
    std::vector<AlgebraicNumber> values;
  };
  std::vector<Group> groups;
  if (!sets.lsp.is_empty()) groups.push_back({&sets.lsp, ValueSource::Kind::SamplePoint, 0, {}});
  for (std::size_t i = 0; i < sets.lcp.size(); ++i)
    if (!sets.lcp[i].is_empty())
      groups.push_back({&sets.lcp[i], ValueSource::Kind::CriticalLevel, static_cast<int>(i + 1), {}});

  std::vector<CandidateValue> out;
  auto slot = [&](const AlgebraicNumber& v) -> CandidateValue& {
    auto it = out.begin();
    for (; it != out.end(); ++it) {
      Ordering o = alg_compare(v, it->value);
      if (o == Ordering::Equal) return *it;
      if (o == Ordering::Less) break;
    }
    return *out.insert(it, CandidateValue{v.simplified(), {}});
  };

  for (auto& grp : groups) {
    const auto roots = AlgebraicNumber::real_roots(grp.p->q);
    if (roots.empty()) continue;
    grp.values = AlgebraicNumber::real_roots(image_annihilator(f, *grp.p));
    const UPoly num = substitute_parametrization(f, *grp.p);
    const UPoly den = pow(grp.p->q0, static_cast<unsigned>(std::max(0, f.total_degree())));
    for (std::size_t r = 0; r < roots.size(); ++r) {
      std::size_t j = match_value(num, den, roots[r], grp.values);
      slot(grp.values[j]).sources.push_back({grp.kind, grp.level, r});
    }
  }
  if (sets.p_np.degree() >= 1)
    for (const auto& v : AlgebraicNumber::real_roots(sets.p_np))
      slot(v).sources.push_back({ValueSource::Kind::NonProperness, 0, 0});
  return out;
}

OptimizationResult find_infimum(const ProblemGeometry& g, const ExtremaSets& sets,
                                const std::vector<CandidateValue>& candidates, std::mt19937_64& rng,
                                const SolveConfig& config) {
  auto fiber_empty = [&](const Rational& q) {
    std::vector<MPoly> gens{minus_constant(g.f, q)};
    gens.insert(gens.end(), g.F.begin(), g.F.end());
    return is_empty(g.ring, gens, rng);
  };
  // Two distinct rationals drawn from the same open interval must agree.
  auto probe = [&](auto draw, Rational& used) {
    for (int k = 0; k < config.max_value_retries; ++k) {
      Rational a = draw(), b = draw();
      for (int t = 0; t < 8 && a == b; ++t) b = draw();
      const bool ea = fiber_empty(a);
      if (a == b || fiber_empty(b) == ea) {
        used = a;
        return ea;
      }
    }
    throw ProbeDisagreement("emptiness probes disagree on one interval of values");
  };

  OptimizationResult res;
  Rational prev;
  if (candidates.empty()) {
    if (!probe([&]() -> Rational { return Rational(0) - random_offset(rng); }, prev)) res.status = Status::UnboundedBelow;
    return res;
  }
  if (!probe([&]() -> Rational { return rational_below(candidates[0].value, rng) - random_offset(rng); }, prev)) {
    res.status = Status::UnboundedBelow;
    return res;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const CandidateValue& c = candidates[i];
    if (c.has_point()) {
      const ValueSource* best = nullptr;
      for (const auto& s : c.sources)
        if (s.kind != ValueSource::Kind::NonProperness && (!best || source_rank(s) < source_rank(*best))) best = &s;
      const RationalParametrization& p = source_param(sets, *best);
      AlgebraicNumber root = AlgebraicNumber::real_roots(p.q).at(best->root_index);
      res.status = Status::Attained;
      res.value = c.value;
      res.minimizer = Minimizer{p, root, minimizer_box(p, root, config.width)};
      return res;
    }
    Rational q;
    bool empty;
    if (i + 1 < candidates.size()) {
      empty = probe([&]() -> Rational { return rational_between(c.value, candidates[i + 1].value, rng); }, q);
    } else {
      empty = probe([&]() -> Rational { return rational_above(c.value, rng); }, q);
    }
    if (!empty) {
      res.status = Status::Unattained;
      res.value = c.value;
      res.p_np = sets.p_np;
      res.bracketing = Interval(prev, q);
      return res;
    }
    prev = q;
  }
  res.status = Status::RealEmpty;
  return res;
}

Integer bezout_bound(std::size_t n, int d, int D) {
  const long dd = std::max(D, 2);
  const long codim = static_cast<long>(n) - d;
  Integer a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(dd), static_cast<unsigned long>(std::max(codim, 0L)));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>((codim + 1) * (dd - 1)),
                static_cast<unsigned long>(std::max(d, 0) + 1));
  return a * b;
}

RationalParametrization minimizer_in_original_coordinates(const RationalParametrization& p, const CoordinateChange& a) {
  const std::size_t n = a.size();
  if (p.nvars() != n || p.separating.size() != n)
    throw std::invalid_argument("parametrization and coordinate change differ in dimension");
  RationalParametrization out = p;
  for (std::size_t i = 0; i < n; ++i) {
    UPoly c;
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.matrix()[i][j] != 0) c += p.q_coords[j] * a.matrix()[i][j];
      s += p.separating[j] * a.inverse()[j][i];
    }
    out.q_coords[i] = c;
    out.separating[i] = s;
  }
  return out;
}

OptimizationResult optimize(const MPoly& f, const std::vector<MPoly>& F, const SolveConfig& config) {
  if (config.max_coord_retries < 1 || config.max_value_retries < 1 || config.width <= 0)
    throw std::invalid_argument("retry budgets must be positive and the width must be positive");
  const auto start = std::chrono::steady_clock::now();
  const RingPtr ring = f.ring();
  const std::size_t n = ring->size();

  SolveMetadata meta;
  meta.seed = config.seed;
  meta.matrix = CoordinateChange::identity(n).matrix();
  AssumptionDiagnostics diag;
  if (config.check_assumptions) {
    diag = check_assumptions(ring, F);
    if (diag.d > 0 && diag.dim_sing > 0)
      throw AssumptionFailure("singular locus of V(F) has dimension " + std::to_string(diag.dim_sing));
  } else {
    diag.d = dimension(Ideal(ring, F));
  }
  meta.warnings = diag.warnings;
  auto finish = [&](OptimizationResult r) {
    r.meta = meta;
    r.meta.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  auto check_bezout = [&](const ExtremaSets& sets, std::size_t ncand) {
    meta.max_rur_degree = sets.lsp.degree();
    for (const auto& p : sets.lcp) meta.max_rur_degree = std::max(meta.max_rur_degree, p.degree());
    meta.candidate_count = ncand;
    if (Integer(static_cast<unsigned long>(meta.max_rur_degree)) > meta.bezout_bound ||
        Integer(static_cast<unsigned long>(ncand)) > meta.bezout_bound)
      throw std::logic_error("degree bound exceeded: " + std::to_string(meta.max_rur_degree) + " / " +
                             std::to_string(ncand) + " > " + meta.bezout_bound.get_str());
  };

  int D = f.total_degree();
  for (const auto& p : F) D = std::max(D, p.total_degree());
  meta.bezout_bound = bezout_bound(n, std::max(diag.d, 0), D);

  if (diag.d < 0) return finish(OptimizationResult{});

  if (diag.d == 0) {
    meta.zero_dimensional_path = true;
    auto rng = attempt_rng(config.seed, 0, 1);
    ExtremaSets sets;
    sets.lsp = rur(Ideal(ring, F), rng);
    auto cands = collect_candidates(f, sets);
    check_bezout(sets, cands.size());
    OptimizationResult r;
    if (!cands.empty()) {
      const auto& s = cands[0].sources.front();
      AlgebraicNumber root = AlgebraicNumber::real_roots(sets.lsp.q).at(s.root_index);
      r.status = Status::Attained;
      r.value = cands[0].value;
      r.minimizer = Minimizer{sets.lsp, root, minimizer_box(sets.lsp, root, config.width)};
    }
    return finish(r);
  }

  std::string last = "no attempt made";
  for (int attempt = 0; attempt < config.max_coord_retries; ++attempt) {
    CoordinateChange a = random_coordinate_change(n, config.seed, attempt);
    meta.matrix = a.matrix();
    meta.retries = attempt;
    std::vector<MPoly> FA;
    for (const auto& p : F) FA.push_back(p.change_coordinates(a));
    auto g = ProblemGeometry::make(f.change_coordinates(a), FA);
    auto rng = attempt_rng(config.seed, attempt, 1);
    try {
      PolarData data = polar_data(g);
      std::string why;
      if (config.check_genericity && !verify_genericity(g, data, &why)) {
        last = why;
        meta.retry_reasons.push_back(why);
        continue;
      }
      ExtremaSets sets = set_containing_local_extrema(g, data, rng);
      auto cands = collect_candidates(g.f, sets);
      check_bezout(sets, cands.size());
      OptimizationResult r = find_infimum(g, sets, cands, rng, config);
      if (r.minimizer) {
        r.minimizer->param = minimizer_in_original_coordinates(r.minimizer->param, a);
        r.minimizer->coords = minimizer_box(r.minimizer->param, r.minimizer->root, config.width);
      }
      return finish(std::move(r));
    } catch (const GenericityFailure& e) {
      last = e.what();
    } catch (const SampleFailure& e) {
      last = e.what();
    } catch (const RurFailure& e) {
      last = e.what();
    } catch (const ProbeDisagreement& e) {
      last = e.what();
    }
    meta.retry_reasons.push_back(last);
  }
  throw RetryExhausted("no usable coordinates after " + std::to_string(config.max_coord_retries) +
                       " attempts: " + last);
}

}  // namespace polyopt
