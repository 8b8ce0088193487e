#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace multistruct {

/// Graded dimension vectors of the three filtrations; each sums to dim_k B.
struct StructureType {
  std::vector<std::size_t> dims_B;
  std::vector<std::size_t> dims_A;
  std::vector<std::size_t> dims_M;
};

/// Ranks of the canonical maps B_l -> A_l -> M_l at one index.
struct MorphismInfo {
  std::size_t ell = 0;
  std::size_t rank_b_to_a = 0;
  std::size_t rank_a_to_m = 0;
  bool b_to_a_bijective = false;
  bool a_to_m_bijective = false;
};

/// The duality pairing A_l -> Hom(M_{m-l}, M_m) at one index.
struct PairingInfo {
  std::size_t ell = 0;
  std::size_t dim_a = 0;
  std::size_t dim_hom = 0;
  std::size_t rank = 0;
  bool bijective = false;
};

struct TheoremVerdict {
  bool cond_a = false;
  std::size_t dim_a_top = 0;
  std::size_t dim_m_top = 0;
  bool cond_b = false;
  bool cond_c = false;
  bool criterion_gorenstein = false;
  bool oracle_gorenstein = false;
  std::size_t socle_dim = 0;
  bool agrees = false;
};

/// One row of the property battery.  `applicable` is false when the
/// property's hypothesis (e.g. Gorenstein) does not hold for this input; a
/// non-applicable row never counts as a failure.
struct PropertyResult {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string details;
};

}  // namespace multistruct
