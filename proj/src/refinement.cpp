#include "ffgcd/refinement.hpp"

#include <algorithm>

namespace ffgcd {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!r.fits_slong_p()) throw std::overflow_error("binom: value does not fit");
  return r.get_si();
}

std::vector<Exponent> monomials_up_to(size_t nvars, int m) {
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  // depth-first enumeration, then canonical graded-lex sort
  struct Rec {
    std::vector<Exponent>& out;
    Exponent& cur;
    int m;
    size_t n;
    void go(size_t v, int left) {
      if (v == n) {
        out.push_back(cur);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        cur[v] = e;
        go(v + 1, left - e);
      }
      cur[v] = 0;
    }
  } rec{out, cur, m, nvars};
  rec.go(0, m);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

RefinementParams refinement_params(int n, int d, int m) {
  RefinementParams p;
  p.n = n;
  p.d = d;
  p.m = m;
  p.M = 2 * binom(m + n - d, n) - binom(m + n - 2 * d, n);
  p.Mprime = binom(m + n, n) - p.M;
  return p;
}

IdealBasis build_ideal_basis(const MvPoly& F1, const MvPoly& F2, int m) {
  if (F1.is_zero() || F2.is_zero()) throw std::invalid_argument("build_ideal_basis: zero input");
  if (F1.arity() != F2.arity()) throw std::invalid_argument("build_ideal_basis: arity mismatch");
  int n = static_cast<int>(F1.arity());
  if (n < 1) throw std::invalid_argument("build_ideal_basis: need at least one variable");
  long d = F1.degree();
  if (d < 1 || F2.degree() != d)
    throw std::invalid_argument("build_ideal_basis: polynomials must share a positive degree");
  if (m < 2 * d) throw std::invalid_argument("build_ideal_basis: m < 2d");
  if (F1.leading_coeff() != K(1) || F2.leading_coeff() != K(1))
    throw std::invalid_argument("build_ideal_basis: inputs must be monic");
  if (!is_coprime(F1, F2)) throw std::invalid_argument("build_ideal_basis: inputs share a factor");

  IdealBasis ib;
  ib.params = refinement_params(n, static_cast<int>(d), m);
  ib.F1 = F1;
  ib.F2 = F2;
  ib.monomials = monomials_up_to(static_cast<size_t>(n), m);
  std::map<Exponent, size_t, GrlexLess> col;
  for (size_t i = 0; i < ib.monomials.size(); ++i) col[ib.monomials[i]] = i;

  KEchelon ech;
  auto shift_exps = monomials_up_to(static_cast<size_t>(n), m - static_cast<int>(d));
  for (const Exponent& i : shift_exps) {
    for (int j = 1; j <= 2; ++j) {
      MvPoly p = MvPoly::monomial(static_cast<size_t>(n), i, K(1)) * (j == 1 ? F1 : F2);
      std::vector<K> row(ib.monomials.size());
      for (const auto& [e, c] : p.terms()) row[col.at(e)] = c;
      if (ech.insert(row) && static_cast<long>(ib.phi.size()) < ib.params.M) {
        ib.shifts.emplace_back(i, j);
        ib.phi.push_back(std::move(p));
        ib.phi_rows.push_back(std::move(row));
      }
    }
  }
  if (static_cast<long>(ech.rank()) != ib.params.M)
    throw DimensionMismatch(ib.params.M, static_cast<long>(ech.rank()));
  std::vector<bool> is_pivot(ib.monomials.size(), false);
  for (size_t p : ech.pivots()) is_pivot[p] = true;
  for (size_t i = 0; i < ib.monomials.size(); ++i)
    if (!is_pivot[i]) ib.transversal.push_back(ib.monomials[i]);
  return ib;
}

PointBasis build_point_basis(const IdealBasis& ib, const UnitTuple& g, const ClosedPoint& p) {
  size_t n = ib.F1.arity();
  if (g.size() != n) throw std::invalid_argument("build_point_basis: arity mismatch");
  std::vector<long> vg(n);
  for (size_t j = 0; j < n; ++j) vg[j] = *valuation(g.entries[j], p);
  auto value_of = [&](const Exponent& e) {
    long s = 0;
    for (size_t j = 0; j < n; ++j) s += e[j] * vg[j];
    return s;
  };
  std::vector<size_t> order(ib.monomials.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    long va = value_of(ib.monomials[a]), vb = value_of(ib.monomials[b]);
    if (va != vb) return va > vb;
    return grlex_cmp(ib.monomials[a], ib.monomials[b]) < 0;  // ties: graded-lex least first
  });

  KEchelon ech;
  for (const auto& row : ib.phi_rows) ech.insert(row);
  PointBasis pb;
  pb.p = p;
  size_t mprime = static_cast<size_t>(ib.params.Mprime);
  std::vector<bool> chosen(ib.monomials.size(), false);
  for (size_t oi : order) {
    if (pb.selected.size() == mprime) break;
    std::vector<K> unit(ib.monomials.size());
    unit[oi] = K(1);
    if (ech.insert(std::move(unit))) {
      pb.selected.push_back(ib.monomials[oi]);
      pb.selected_val.push_back(value_of(ib.monomials[oi]));
      chosen[oi] = true;
    }
  }
  if (pb.selected.size() != mprime)
    throw std::logic_error("build_point_basis: quotient basis too small");
  for (size_t i = 0; i < pb.selected_val.size(); ++i)
    if (i > 0 && pb.selected_val[i] > pb.selected_val[i - 1])
      throw std::logic_error("build_point_basis: greedy values not monotone");
  for (size_t i = 0; i < ib.monomials.size(); ++i)
    if (!chosen[i]) {
      pb.complement.push_back(ib.monomials[i]);
      pb.complement_val.push_back(value_of(ib.monomials[i]));
    }
  return pb;
}

LinearFormSystem build_linear_forms(const IdealBasis& ib, const PointBasis& pb) {
  size_t M = static_cast<size_t>(ib.params.M);
  size_t Mp = static_cast<size_t>(ib.params.Mprime);
  std::map<Exponent, size_t, GrlexLess> comp_col, sel_col;
  for (size_t s = 0; s < pb.complement.size(); ++s) comp_col[pb.complement[s]] = s;
  for (size_t j = 0; j < pb.selected.size(); ++j) sel_col[pb.selected[j]] = j;

  std::vector<std::vector<K>> A(M, std::vector<K>(M));   // alpha on complement monomials
  std::vector<std::vector<K>> T(M, std::vector<K>(Mp));  // alpha on selected monomials
  for (size_t l = 0; l < M; ++l) {
    for (const auto& [e, c] : ib.phi[l].terms()) {
      auto it = comp_col.find(e);
      if (it != comp_col.end())
        A[l][it->second] = c;
      else
        T[l][sel_col.at(e)] = c;
    }
  }
  LinearFormSystem sys;
  sys.p = pb.p;
  sys.c_p = k_det(A);
  if (sys.c_p.is_zero())
    throw std::domain_error("build_linear_forms: singular coefficient matrix");
  auto Ainv = k_inverse(A);
  sys.b.assign(M, std::vector<K>(M));
  sys.c_red.assign(M, std::vector<K>(Mp));
  for (size_t i = 0; i < M; ++i)
    for (size_t l = 0; l < M; ++l) sys.b[i][l] = sys.c_p * Ainv[i][l];
  for (size_t i = 0; i < M; ++i)
    for (size_t j = 0; j < Mp; ++j) {
      K acc;
      for (size_t l = 0; l < M; ++l)
        if (!Ainv[i][l].is_zero() && !T[l][j].is_zero()) acc = acc + Ainv[i][l] * T[l][j];
      sys.c_red[i][j] = acc;
    }

  // support-restricted dominance: the reduction of a complement monomial only
  // involves picks made no later than its rejection, whose values dominate
  for (size_t i = 0; i < M; ++i)
    for (size_t j = 0; j < Mp; ++j)
      if (!sys.c_red[i][j].is_zero() && pb.selected_val[j] < pb.complement_val[i])
        throw std::logic_error("build_linear_forms: valuation chain violated");

  // exact spot-check of the defining identity at a fixed rational point
  {
    std::vector<K> xs(ib.F1.arity());
    for (size_t v = 0; v < xs.size(); ++v) xs[v] = K(Rat(static_cast<long>(v) + 2));
    std::vector<K> phival(M);
    for (size_t l = 0; l < M; ++l) phival[l] = ib.phi[l].eval(xs);
    auto mono_val = [&](const Exponent& e) {
      K r(1);
      for (size_t v = 0; v < xs.size(); ++v)
        if (e[v]) r = r * xs[v].pow(e[v]);
      return r;
    };
    for (size_t i = 0; i < M; ++i) {
      K lhs;
      for (size_t l = 0; l < M; ++l)
        if (!sys.b[i][l].is_zero()) lhs = lhs + sys.b[i][l] * phival[l];
      K rhs = mono_val(pb.complement[i]);
      for (size_t j = 0; j < Mp; ++j)
        if (!sys.c_red[i][j].is_zero()) rhs = rhs + sys.c_red[i][j] * mono_val(pb.selected[j]);
      if (lhs != sys.c_p * rhs)
        throw std::logic_error("build_linear_forms: defining identity failed");
    }
  }
  return sys;
}

long weil_function(const std::vector<K>& form_coeffs, const std::vector<K>& point,
                   const ClosedPoint& p) {
  if (form_coeffs.size() != point.size())
    throw std::invalid_argument("weil_function: dimension mismatch");
  K val;
  bool any = false;
  long vpoint = 0, vform = 0;
  for (size_t i = 0; i < point.size(); ++i) {
    if (!form_coeffs[i].is_zero()) {
      long v = *valuation(form_coeffs[i], p);
      vform = !any || v < vform ? v : vform;
      any = true;
    }
    val = val + form_coeffs[i] * point[i];
  }
  if (!any) throw std::invalid_argument("weil_function: zero form");
  if (val.is_zero()) throw std::domain_error("weil_function: the form vanishes at the point");
  bool anyp = false;
  for (const K& a : point) {
    if (a.is_zero()) continue;
    long v = *valuation(a, p);
    vpoint = !anyp || v < vpoint ? v : vpoint;
    anyp = true;
  }
  if (!anyp) throw std::invalid_argument("weil_function: zero point");
  return *valuation(val, p) - vpoint - vform;
}

CoefficientSpace coefficient_space(const std::vector<K>& elements, long r, long product_cap) {
  if (r < 1) throw std::invalid_argument("coefficient_space: r must be >= 1");
  CoefficientSpace cs;
  for (const K& e : elements) {
    if (e.is_zero()) throw std::invalid_argument("coefficient_space: zero element");
    bool dup = false;
    for (const K& have : cs.generators) dup = dup || have == e;
    if (!dup) cs.generators.push_back(e);
  }
  if (cs.generators.empty()) throw std::invalid_argument("coefficient_space: no elements");
  bool all_const = true;
  for (const K& e : cs.generators) all_const = all_const && e.is_constant();
  if (all_const) {
    // V(j) = k for every j
    for (long j = 1; j <= r; ++j) {
      cs.level_basis.push_back({K(1)});
      cs.dims.push_back(1);
    }
    return cs;
  }
  long produced = 0;
  std::vector<K> prev = {K(1)};
  for (long j = 1; j <= r; ++j) {
    std::vector<K> candidates;
    candidates.reserve(prev.size() * cs.generators.size());
    for (const K& b : prev)
      for (const K& e : cs.generators) {
        if (++produced > product_cap)
          throw CapExceeded("coefficient_space: product cap exceeded at level " +
                            std::to_string(j));
        candidates.push_back(b * e);
      }
    std::vector<K> basis = q_span_basis(candidates);
    long dim = static_cast<long>(basis.size());
    if (!cs.dims.empty() && dim < cs.dims.back())
      throw std::logic_error("coefficient_space: dimension not monotone");
    cs.level_basis.push_back(basis);
    cs.dims.push_back(dim);
    prev = std::move(basis);
  }
  return cs;
}

bool nondegenerate_over(const std::vector<K>& space_basis, const std::vector<K>& ys,
                        long ambient_guard) {
  std::vector<K> products;
  products.reserve(space_basis.size() * ys.size());
  for (const K& pi : space_basis)
    for (const K& y : ys) {
      if (y.is_zero()) return false;
      products.push_back(pi * y);
    }
  if (static_cast<long>(products.size()) > ambient_guard)
    throw CapExceeded("nondegenerate_over: product guard exceeded");
  {
    // pairwise-distinct infinity valuations make the family triangular
    std::vector<long> degs;
    degs.reserve(products.size());
    for (const K& e : products) degs.push_back(e.num().deg() - e.den().deg());
    std::sort(degs.begin(), degs.end());
    if (std::adjacent_find(degs.begin(), degs.end()) == degs.end()) return true;
  }
  auto vecs = elements_as_vectors(products);
  // more vectors than the ambient dimension forces a relation
  if (!vecs.empty() && vecs.size() > vecs[0].size()) return false;
  QEchelon ech;
  for (auto& row : vecs)
    if (!ech.insert(std::move(row))) return false;
  return true;
}

namespace {

long sum_v_outside_S(const MvPoly& F, const PlaceSet& S) {
  // sum over p not in S of -v_p(F) = h(F) + sum over p in S of v_p(F)
  long s = mv_height(F);
  for (const auto& p : S.points()) s += gauss_valuation(F, p) * p.degree();
  return s;
}

}  // namespace

KeyInequalityReport key_inequality_check(const MvPoly& F1, const MvPoly& F2, const UnitTuple& g,
                                         const PlaceSet& S, int m, int r, const FieldContext& ctx,
                                         long product_cap) {
  if (r < 1) throw std::invalid_argument("key_inequality_check: r must be >= 1");
  KeyInequalityReport rep;
  rep.r = r;
  for (const K& gi : g.entries)
    if (!is_S_unit(gi, S)) {
      rep.branch = "precondition-unmet";
      rep.note = "an entry of g is not an S-unit";
      return rep;
    }
  IdealBasis ib = build_ideal_basis(F1, F2, m);  // DimensionMismatch propagates
  rep.params = ib.params;
  const long M = ib.params.M, Mp = ib.params.Mprime;
  const int n = ib.params.n;

  std::vector<K> phival(static_cast<size_t>(M));
  for (size_t l = 0; l < phival.size(); ++l) phival[l] = ib.phi[l].eval(g.entries);
  bool anyphi = false;
  for (const K& v : phival) anyphi = anyphi || !v.is_zero();
  if (!anyphi) {
    rep.branch = "precondition-unmet";
    rep.note = "Phi(g) is the zero vector";
    return rep;
  }
  K F1g = F1.eval(g.entries), F2g = F2.eval(g.entries);
  if (F1g.is_zero() || F2g.is_zero()) {
    rep.branch = "precondition-unmet";
    rep.note = "F_i(g) vanishes";
    return rep;
  }

  long maxh = 0;
  for (const K& gi : g.entries) maxh = std::max(maxh, height(gi));
  long hF1 = mv_height(F1), hF2 = mv_height(F2);
  long excess = std::max(0L, 2L * ctx.genus - 2 + S.weighted_size());

  // V_{F1,F2} levels up to Mr + 1
  std::vector<K> gens;
  for (const MvPoly* F : {&F1, &F2})
    for (const K& c : F->coefficients()) gens.push_back(c);
  CoefficientSpace cs = coefficient_space(gens, M * r + 1, product_cap);
  long w = cs.dim(M * r), u = cs.dim(M * (r - 1));

  // membership of every b_{p,i,l} in V(M-1) is asserted below via this basis
  const std::vector<K>& vm1 = cs.basis(M - 1);

  rep.relation = find_relation(g, 2L * m);

  // monomial values g^i
  std::vector<K> gmono;
  gmono.reserve(ib.monomials.size());
  for (const Exponent& e : ib.monomials) {
    std::vector<long> exps(e.begin(), e.end());
    gmono.push_back(g.power_product(exps));
  }
  std::map<Exponent, size_t, GrlexLess> mono_idx;
  for (size_t i = 0; i < ib.monomials.size(); ++i) mono_idx[ib.monomials[i]] = i;

  Rat lambda_sum(0);
  Rat main_term_sum(0);
  Rat min_key_margin;
  bool have_key = false;
  std::vector<K> b_values;

  for (const auto& p : S.points()) {
    PointBasis pb = build_point_basis(ib, g, p);
    LinearFormSystem sys = build_linear_forms(ib, pb);
    long vF1 = gauss_valuation(F1, p), vF2 = gauss_valuation(F2, p);
    long vPhi = 0;
    bool first = true;
    for (const K& v : phival) {
      if (v.is_zero()) continue;
      long w0 = *valuation(v, p);
      vPhi = first || w0 < vPhi ? w0 : vPhi;
      first = false;
    }
    std::vector<long> vg(g.size());
    for (size_t j = 0; j < g.size(); ++j) vg[j] = *valuation(g.entries[j], p);
    auto vmono = [&](const Exponent& e) {
      long s = 0;
      for (size_t j = 0; j < g.size(); ++j) s += e[j] * vg[j];
      return s;
    };
    for (long i = 0; i < M; ++i) {
      // L_{p,i}(Phi(g)) with the defining identity re-verified at g
      K lphig;
      for (long l = 0; l < M; ++l)
        if (!sys.b[static_cast<size_t>(i)][static_cast<size_t>(l)].is_zero())
          lphig = lphig + sys.b[static_cast<size_t>(i)][static_cast<size_t>(l)] *
                              phival[static_cast<size_t>(l)];
      K rhs_val = gmono[mono_idx.at(pb.complement[static_cast<size_t>(i)])];
      for (long j = 0; j < Mp; ++j) {
        const K& c = sys.c_red[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (!c.is_zero()) rhs_val = rhs_val + c * gmono[mono_idx.at(pb.selected[static_cast<size_t>(j)])];
      }
      if (lphig != sys.c_p * rhs_val)
        throw std::logic_error("key_inequality_check: evaluated identity failed");
      if (lphig.is_zero()) {
        rep.branch = "precondition-unmet";
        rep.note = "L_{p,i}(Phi(g)) vanishes at " + p.str();
        return rep;
      }
      long vL = 0;
      bool firstb = true;
      for (long l = 0; l < M; ++l) {
        const K& bv = sys.b[static_cast<size_t>(i)][static_cast<size_t>(l)];
        if (bv.is_zero()) continue;
        b_values.push_back(bv);
        long v0 = *valuation(bv, p);
        vL = firstb || v0 < vL ? v0 : vL;
        firstb = false;
      }
      long vLphig = *valuation(lphig, p);
      long key_lhs = vLphig - vL;
      long key_rhs = vmono(pb.complement[static_cast<size_t>(i)]) + vF1 + vF2;
      Rat margin = Rat(key_lhs - key_rhs);
      rep.key_margins.push_back(
          {"key[" + p.str() + "," + std::to_string(i) + "]", Rat(key_lhs), Rat(key_rhs), margin});
      if (!have_key || margin < min_key_margin) min_key_margin = margin;
      have_key = true;
      lambda_sum += Rat(vLphig - vPhi - vL);
      main_term_sum += Rat(vmono(pb.complement[static_cast<size_t>(i)]));
    }
  }

  // Cramer's rule places every b_{p,i,l} in V_{F1,F2}(M-1)
  std::sort(b_values.begin(), b_values.end(),
            [](const K& a, const K& b) { return a.cmp(b) < 0; });
  b_values.erase(std::unique(b_values.begin(), b_values.end()), b_values.end());
  if (!q_all_in_span(vm1, b_values))
    throw std::logic_error("key_inequality_check: b coefficient outside V(M-1)");

  long hphig = projective_height(phival);
  long nsgcd = gcd_counting(F1g, F2g, S, GcdCountMode::OutsideS);

  rep.checks.push_back({"key-inequality-min", min_key_margin, Rat(0), min_key_margin});
  {
    Rat lhs = main_term_sum;
    Rat rhs = Rat(-Mp * static_cast<long>(m) * n * maxh);
    rep.checks.push_back({"main-term", lhs, rhs, lhs - rhs});
  }
  {
    Rat lhs(hphig);
    Rat rhs(static_cast<long>(m) * n * maxh + hF1 + hF2);
    rep.checks.push_back({"phi-height", lhs, rhs, rhs - lhs});
  }
  {
    long s_in = 0;
    for (const auto& p : S.points()) {
      long vp = 0;
      bool first = true;
      for (const K& v : phival) {
        if (v.is_zero()) continue;
        long w0 = *valuation(v, p);
        vp = first || w0 < vp ? w0 : vp;
        first = false;
      }
      s_in += vp * p.degree();
    }
    Rat rhs = Rat(-hphig - s_in + sum_v_outside_S(F1, S) + sum_v_outside_S(F2, S));
    Rat lhs(nsgcd);
    rep.checks.push_back({"gcd-chain", lhs, rhs, rhs - lhs});
  }

  rep.msmt_nondegenerate = nondegenerate_over(cs.basis(M * r), phival);
  {
    std::vector<K> ys = gmono;
    rep.thm_nondegenerate = nondegenerate_over(cs.basis(M * r + 1), ys);
  }
  if (rep.msmt_nondegenerate) {
    Rat lhs = lambda_sum;
    Rat rhs = Rat(w) * Rat(M) / Rat(u) *
              (Rat(hphig) + Rat(r + 1) * Rat(M) * Rat(hF1 + hF2) +
               Rat(M * w - 1) / Rat(2) * Rat(excess));
    rep.checks.push_back({"msmt", lhs, rhs, rhs - lhs});
  }
  if (rep.thm_nondegenerate) {
    Rat c = Rat(w) / Rat(u) * Rat(1 + M * (r + 1));
    Rat cp = Rat(w) * Rat(w) * Rat(M) / (Rat(2) * Rat(u));
    Rat rhs = (Rat(Mp) + Rat(w) / Rat(u) * Rat(M) - Rat(M)) * Rat(static_cast<long>(m) * n * maxh) +
              c * Rat(M) * Rat(hF1 + hF2) + cp * Rat(M) * Rat(excess);
    Rat lhs = Rat(M) * Rat(nsgcd);
    rep.checks.push_back({"main-gcd-bound", lhs, rhs, rhs - lhs});
  }
  rep.branch = rep.relation ? "relation"
                            : (rep.thm_nondegenerate ? "gcd-bound" : "precondition-unmet");
  return rep;
}

SPartReport s_part_check(const MvPoly& F, const UnitTuple& g, const PlaceSet& S, int r,
                         const FieldContext& ctx, long product_cap) {
  if (r < 1) throw std::invalid_argument("s_part_check: r must be >= 1");
  SPartReport rep;
  long d = F.degree();
  if (F.is_zero() || d < 1) throw std::invalid_argument("s_part_check: nonconstant F required");
  if (F.coeff(Exponent(F.arity(), 0)).is_zero())
    throw std::invalid_argument("s_part_check: F vanishes at the origin");
  bool has_unit_coeff = false;
  for (const K& c : F.coefficients()) has_unit_coeff = has_unit_coeff || c == K(1);
  if (!has_unit_coeff) throw std::invalid_argument("s_part_check: some coefficient must be 1");
  size_t n = F.arity();
  if (g.size() != n) throw std::invalid_argument("s_part_check: arity mismatch");
  for (const K& gi : g.entries)
    if (!is_S_unit(gi, S)) {
      rep.branch = "precondition-unmet";
      rep.note = "an entry of g is not an S-unit";
      return rep;
    }
  rep.N = binom(static_cast<long>(n) + d, static_cast<long>(n)) - 1;

  CoefficientSpace cs = coefficient_space(F.coefficients(), r, product_cap);
  rep.w = cs.dim(r);
  rep.u = cs.dim(r - 1);

  K Fg = F.eval(g.entries);
  if (Fg.is_zero()) {
    rep.branch = "precondition-unmet";
    rep.note = "F(g) = 0";
    return rep;
  }
  long lhs = 0;
  for (const auto& p : S.points()) lhs += v_zero(Fg, p) * p.degree();
  long maxh = 0;
  for (const K& gi : g.entries) maxh = std::max(maxh, height(gi));
  long excess = std::max(0L, 2L * ctx.genus - 2 + S.weighted_size());
  long hF = mv_height(F);

  Rat w(rep.w), u(rep.u), N(rep.N);
  rep.lhs = Rat(lhs);
  rep.rhs = (w / u - 1) * (N + 1) * Rat(d * static_cast<long>(n) * maxh) +
            w * (N + 1) / u * Rat(r + 1) * Rat(hF) +
            w * (N + 1) * (N * w + w - 1) / (Rat(2) * u) * Rat(excess);
  rep.margin = rep.rhs - rep.lhs;

  std::vector<K> ys;
  for (const Exponent& e : monomials_up_to(n, static_cast<int>(d))) {
    std::vector<long> exps(e.begin(), e.end());
    ys.push_back(g.power_product(exps));
  }
  rep.nondegenerate = nondegenerate_over(cs.basis(r), ys);
  rep.branch = rep.nondegenerate ? "s-part-bound" : "precondition-unmet";
  if (!rep.nondegenerate) rep.note = "monomial values are linearly degenerate over V_F(r)";
  return rep;
}

}  // namespace ffgcd
