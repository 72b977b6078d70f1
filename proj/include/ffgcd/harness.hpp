#ifndef FFGCD_HARNESS_HPP
#define FFGCD_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "ffgcd/derivation.hpp"
#include "ffgcd/pisot.hpp"
#include "ffgcd/refinement.hpp"

namespace ffgcd {

using Json = nlohmann::json;

// Deterministic generator state: the seed fully determines every instance.
class SplitMix {
 public:
  explicit SplitMix(uint64_t seed) : s_(seed) {}
  uint64_t next();
  long range(long lo, long hi);  // inclusive bounds

 private:
  uint64_t s_;
};

struct InstanceSpec {
  std::string suite;
  uint64_t seed = 1;
  long count = -1;  // negative = suite default; 0 = empty run
  int n = 2;
  long d = 2;
  Rat epsilon = Rat(0);  // 0 = per-suite default
  long ell_min = 1;
  long ell_max = 50;
  long m_cap = 8;
  long r_cap = 3;
  long product_cap = 5000;
  long pisot_m_cap = 120;
};

struct Verdict {
  std::string id;
  std::string statement;
  std::string branch;  // pass | relation | precondition-unmet | cap-exceeded | finding
  Rat lhs = Rat(0), rhs = Rat(0), margin = Rat(0);
  Json payload = Json::object();

  bool finding() const { return branch == "finding"; }
  Json to_json() const;
};

// Brownawell-Masser bound for S-unit identities f_1 + ... + f_n = 1
Verdict verify_brownawell_masser(const std::vector<K>& fs, const PlaceSet& S,
                                 const FieldContext& ctx = {});

// Green-style constancy: a_1 f_1^l + ... + a_n f_n^l = 0 forces constant ratios for large l
Verdict verify_green(const std::vector<K>& as, const std::vector<K>& fs, long ell,
                     const FieldContext& ctx = {});

// twisted-derivative height bound in the explicit form
//   h~(D_u F) <= |S| + (2|I_F|+1) h~(F) + 3g
Verdict verify_prop33(const MvPoly& F, const UnitTuple& u, const PlaceSet& S,
                      const FieldContext& ctx = {});

// d-th-power counting disjunction for F = prod P_i^{e_i} with F(u) a d-th power
Verdict verify_lemma36(const FactoredForm& factors, const UnitTuple& u, const PlaceSet& S, long d,
                       const Rat& eps, const InstanceSpec& caps, const FieldContext& ctx = {});

// gcd trichotomies: general coefficients, constant coefficients (n = 2),
// and powered arguments
Verdict verify_thm15(const MvPoly& F, const MvPoly& G, const UnitTuple& g, const PlaceSet& S,
                     const Rat& eps, const InstanceSpec& caps, const FieldContext& ctx = {});
Verdict verify_thm16(const MvPoly& F, const MvPoly& G, const UnitTuple& g, const PlaceSet& S,
                     const Rat& eps, const InstanceSpec& caps, const FieldContext& ctx = {});
Verdict verify_thm17(const MvPoly& F, const MvPoly& G, const UnitTuple& g, long ell,
                     const Rat& eps, const InstanceSpec& caps, const FieldContext& ctx = {});

struct SuiteResult {
  Json report;
  long findings = 0;
};

// Deterministic given the spec (incl. seed); byte-identical reports.
SuiteResult run_suite(const InstanceSpec& spec);

std::string report_to_csv(const Json& report);

std::vector<std::string> suite_names();

}  // namespace ffgcd

#endif
