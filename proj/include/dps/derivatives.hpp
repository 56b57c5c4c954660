#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dps/character.hpp"
#include "dps/reducibility.hpp"

namespace dps {

/// Partition of n with r blocks of size 2 and n - 2r blocks of size 1,
/// written 2^r 1^{n-2r}. Tracks the nilpotent orbit attached to a rank-r
/// subquotient; block sizes always sum to n.
struct PartitionTwoOne {
  int n = 0;
  int r = 0;
};

inline PartitionTwoOne make_partition_two_one(int n, int r) {
  if (n < 0 || r < 0 || 2 * r > n)
    throw validation_error("partition: need 0 <= 2r <= n, got n=" + std::to_string(n) +
                           ", r=" + std::to_string(r));
  return PartitionTwoOne{n, r};
}

inline std::string to_string(const PartitionTwoOne& p) {
  return "2^" + std::to_string(p.r) + " 1^" + std::to_string(p.n - 2 * p.r);
}

/// Dimension of the nilpotent orbit with Jordan type 2^rank 1^{n-2rank}.
inline long long orbit_dimension(int n, int rank) {
  if (n < 1) throw validation_error("n: need n >= 1");
  if (rank < 0 || 2 * rank > n)
    throw validation_error("rank: need 0 <= rank <= n/2, got rank=" + std::to_string(rank) +
                           " with n=" + std::to_string(n));
  return 2LL * rank * (n - rank);
}

/// One application of the derivative functor either lands on a smaller
/// descriptor or collapses to a bare character.
using PhiNode = std::variant<InducedRepDesc, Character>;

inline int rank_of(const PhiNode& node) {
  if (const auto* rep = std::get_if<InducedRepDesc>(&node)) return rank_of_full(*rep);
  return 0;  // finite-dimensional by convention
}

/// Derivative functor on descriptors: chi1 x chi2 on GL_n goes to
/// chi1' x chi2' on GL_{n-2}. When one side shrinks to GL_0 the result is
/// just the other restricted character (possibly the empty one).
inline PhiNode phi(const InducedRepDesc& rep) {
  if (rep.n < 2) throw precondition_error("phi: need n >= 2");
  const Character c1 = restrict_character(rep.chi1);
  const Character c2 = restrict_character(rep.chi2);
  if (rep.p1 - 1 == 0 && rep.p2 - 1 == 0) {
    Character empty = c2;  // exponents of the second factor, p = 0
    return empty;
  }
  if (rep.p1 - 1 == 0) return c2;
  if (rep.p2 - 1 == 0) return c1;
  return make_induced(rep.field, rep.n - 2, rep.p1 - 1, rep.p2 - 1, c1, c2);
}

/// The chain rep, phi(rep), phi^2(rep), ... ending at the first bare
/// character. Its length minus one equals min(p1, p2).
inline std::vector<PhiNode> phi_tower(const PhiNode& start) {
  std::vector<PhiNode> chain;
  chain.push_back(start);
  while (const auto* rep = std::get_if<InducedRepDesc>(&chain.back()))
    chain.push_back(phi(*rep));
  return chain;
}

inline std::vector<PhiNode> phi_tower(const InducedRepDesc& rep) {
  return phi_tower(PhiNode{rep});
}

// ---------------------------------------------------------------------------
// Composition profiles
// ---------------------------------------------------------------------------

enum class RankDirection { DescendingRank, AscendingRank, NotApplicable };

inline std::string to_string(RankDirection d) {
  switch (d) {
    case RankDirection::DescendingRank: return "descending_rank";
    case RankDirection::AscendingRank: return "ascending_rank";
    case RankDirection::NotApplicable: return "not_applicable";
  }
  return "?";
}

struct FiniteDimConstituent {
  FiniteDimWitness::Side side = FiniteDimWitness::Side::Submodule;
  std::optional<Character> character;  // known exactly only in the 1-dim case
};

/// Structural summary of the composition series of chi x 1: which way ranks
/// run, how long the series can be, and where the (unique, when present)
/// finite-dimensional constituent sits.
struct CompositionProfile {
  bool reducible = false;
  RankDirection direction = RankDirection::NotApplicable;
  int rank_of_parent = 0;
  std::optional<int> length_exact;  // non-archimedean only
  int length_bound = 1;
  std::optional<FiniteDimConstituent> finite_dim_constituent;
  std::string intertwining_image_note;
};

inline CompositionProfile composition_profile(FieldKind field, int n, int p1,
                                              const Character& chi) {
  const ReducibilityVerdict verdict = is_reducible_closed(field, n, p1, chi);
  const int p2 = n - p1;
  const Rat s = s_of(chi);

  CompositionProfile prof;
  prof.reducible = verdict.reducible;
  prof.rank_of_parent = std::min(p1, p2);
  prof.length_bound = length_upper_bound(field, n, p1, chi);
  if (verdict.reducible)
    prof.direction = s > 0 ? RankDirection::DescendingRank : RankDirection::AscendingRank;

  if (field == FieldKind::NonArchimedean) {
    prof.length_exact = verdict.reducible ? 2 : 1;
    // A one-dimensional constituent exists only at chi = nu^{+-n/2}, where it
    // is pinned exactly.
    if (is_real_nu_power(chi)) {
      if (chi.nu_exp.re == Rat(n, 2)) {
        prof.finite_dim_constituent = FiniteDimConstituent{
            FiniteDimWitness::Side::Quotient, nu_power(field, n, Rat(p1, 2))};
      } else if (chi.nu_exp.re == Rat(-n, 2)) {
        prof.finite_dim_constituent = FiniteDimConstituent{
            FiniteDimWitness::Side::Submodule, nu_power(field, n, Rat(-p2, 2))};
      }
    }
  } else {
    if (auto sub = finite_dim_submodule(field, n, p1, chi)) {
      prof.finite_dim_constituent = FiniteDimConstituent{sub->side, sub->character_of_psi};
    } else if (auto quot = finite_dim_quotient(field, n, p1, chi)) {
      prof.finite_dim_constituent = FiniteDimConstituent{quot->side, quot->character_of_psi};
    }
  }

  prof.intertwining_image_note =
      "the image of the standard intertwining operator chi x 1 -> 1 x chi is the unique "
      "irreducible quotient of chi x 1 and the unique irreducible submodule of 1 x chi";
  return prof;
}

}  // namespace dps
