#include "ffgcd/divlattice.hpp"

#include <algorithm>

namespace ffgcd {

CoprimeBasis refine_coprime_basis(const std::vector<K>& fs) {
  std::vector<Poly> basis;
  auto add = [&](const Poly& p) {
    if (p.deg() < 1) return;
    Poly m = p.monic();
    for (const Poly& b : basis)
      if (b == m) return;
    basis.push_back(std::move(m));
  };
  for (const K& f : fs) {
    if (f.is_zero()) throw std::invalid_argument("refine_coprime_basis: zero element");
    add(f.num());
    add(f.den());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size() && !changed; ++i)
      for (size_t j = i + 1; j < basis.size() && !changed; ++j) {
        Poly g = gcd(basis[i], basis[j]);
        if (g.deg() < 1) continue;
        Poly a = basis[i] / g, b = basis[j] / g;
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        add(g);
        add(a);
        add(b);
        changed = true;
      }
  }
  std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; });
  return CoprimeBasis{std::move(basis)};
}

ExponentVector exponent_vector(const K& f, const CoprimeBasis& basis) {
  if (f.is_zero()) throw std::invalid_argument("exponent_vector: zero element");
  ExponentVector out;
  out.exponents.assign(basis.elements.size(), 0);
  out.v_infinity = f.v_infinity();
  Poly rn = f.num(), rd = f.den();
  for (size_t j = 0; j < basis.elements.size(); ++j) {
    const Poly& b = basis.elements[j];
    for (Poly* part : {&rn, &rd}) {
      long count = 0;
      while (part->deg() >= b.deg()) {
        auto [q, rem] = part->divrem(b);
        if (!rem.is_zero()) break;
        *part = std::move(q);
        ++count;
      }
      if (part == &rn)
        out.exponents[j] += count;
      else
        out.exponents[j] -= count;
    }
  }
  if (!rn.is_constant() || !rd.is_constant())
    throw std::domain_error("exponent_vector: unsupported factor " +
                            (rn.is_constant() ? rd : rn).str());
  out.constant = rn.constant_value() / rd.constant_value();
  return out;
}

UnitTuple UnitTuple::build(std::vector<K> entries) {
  UnitTuple t;
  t.basis = refine_coprime_basis(entries);
  for (const K& f : entries) {
    ExponentVector ev = exponent_vector(f, t.basis);
    std::vector<Int> row;
    row.reserve(ev.exponents.size() + 1);
    for (long e : ev.exponents) row.emplace_back(e);
    row.emplace_back(ev.v_infinity);
    t.exponent_matrix.push_back(std::move(row));
    t.constants.push_back(ev.constant);
  }
  t.entries = std::move(entries);
  return t;
}

K UnitTuple::power_product(const std::vector<long>& m) const {
  if (m.size() != entries.size()) throw std::invalid_argument("power_product: arity mismatch");
  K r(1);
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) r = r * entries[i].pow(m[i]);
  return r;
}

namespace {

// candidate ordering: l1 first, then lexicographic on the entries
bool better(const std::vector<long>& a, long la, const std::vector<long>& b, long lb) {
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

std::optional<MultiplicativeRelation> find_relation(const UnitTuple& g, long l1_bound) {
  if (g.entries.empty() || l1_bound < 1) return std::nullopt;
  KernelBasis ker = integer_row_kernel(g.exponent_matrix);
  if (ker.vectors.empty()) return std::nullopt;
  size_t n = g.entries.size();
  size_t kdim = ker.vectors.size();
  // Any integer kernel vector with l1 <= bound has its free coordinates in
  // [-bound, bound]; walking the box and keeping integral combinations covers
  // every candidate.
  std::vector<long> w(kdim, -l1_bound);
  double box = 1;
  for (size_t i = 0; i < kdim; ++i) box *= 2.0 * static_cast<double>(l1_bound) + 1;
  if (box > 5e6) throw std::runtime_error("find_relation: enumeration cap exceeded");
  std::optional<std::vector<long>> best;
  long best_l1 = 0;
  while (true) {
    bool all_zero = std::all_of(w.begin(), w.end(), [](long x) { return x == 0; });
    if (!all_zero) {
      std::vector<Rat> cand(n, Rat(0));
      for (size_t kv = 0; kv < kdim; ++kv) {
        if (w[kv] == 0) continue;
        Rat scale = Rat(w[kv]) / Rat(ker.vectors[kv][ker.free_index[kv]]);
        for (size_t i = 0; i < n; ++i) cand[i] += scale * Rat(ker.vectors[kv][i]);
      }
      bool integral = true;
      long l1 = 0;
      std::vector<long> m(n, 0);
      for (size_t i = 0; i < n && integral; ++i) {
        if (cand[i].get_den() != 1) {
          integral = false;
          break;
        }
        if (!cand[i].get_num().fits_slong_p()) {
          integral = false;
          break;
        }
        m[i] = cand[i].get_num().get_si();
        l1 += std::abs(m[i]);
      }
      if (integral && l1 >= 1 && l1 <= l1_bound) {
        // sign normalization: first nonzero entry positive
        for (long x : m) {
          if (x == 0) continue;
          if (x < 0)
            for (auto& y : m) y = -y;
          break;
        }
        if (!best || better(m, l1, *best, best_l1)) {
          best = m;
          best_l1 = l1;
        }
      }
    }
    size_t k = 0;
    while (k < kdim && w[k] == l1_bound) {
      w[k] = -l1_bound;
      ++k;
    }
    if (k == kdim) break;
    ++w[k];
  }
  if (!best) return std::nullopt;
  K witness = g.power_product(*best);
  if (!witness.is_constant())
    throw std::logic_error("find_relation: kernel vector did not evaluate to a constant");
  return MultiplicativeRelation{*best, best_l1, witness};
}

bool is_multiplicatively_independent_mod_k(const UnitTuple& g) {
  for (const K& f : g.entries)
    if (f.is_zero()) throw std::invalid_argument("independence: zero entry");
  return integer_row_kernel(g.exponent_matrix).vectors.empty();
}

}  // namespace ffgcd
