#ifndef DIVDMT_GROUPS_HPP
#define DIVDMT_GROUPS_HPP

// The three Lie groups carrying the reduced-norm-one units of the order, and
// their restricted-root data.

#include "divdmt/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace divdmt {

enum class Group {
  SLnC,  // imaginary quadratic center
  SLnR,  // center Q, split at the real place
  SLnH,  // center Q, ramified at the real place (SL_{n/2}(H))
};

inline std::string_view to_string(Group g) {
  switch (g) {
    case Group::SLnC: return "slnc";
    case Group::SLnR: return "slnr";
    case Group::SLnH: return "slnh";
  }
  return "?";
}

inline Group parse_group(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (key == "slnc") return Group::SLnC;
  if (key == "slnr") return Group::SLnR;
  if (key == "slnh") return Group::SLnH;
  throw UsageError("unknown group '" + std::string(name) + "' (expected slnc, slnr or slnh)");
}

/// Group tag with the matrix size n and the number p of free diagonal
/// entries of the Cartan subalgebra (p = n/2 for SL_{n/2}(H)).
struct GroupKind {
  Group tag = Group::SLnC;
  int n = 0;

  GroupKind() = default;
  GroupKind(Group g, int size) : tag(g), n(size) {
    if (n < 1) throw UsageError("matrix size n must be positive");
    if (g == Group::SLnH && n % 2 != 0) {
      throw UnsupportedError("SL_{n/2}(H) needs an even n");
    }
  }

  int p() const { return tag == Group::SLnH ? n / 2 : n; }

  /// Z-rank k of the order: 2n^2 for an imaginary quadratic center, n^2 otherwise.
  int lattice_rank() const { return tag == Group::SLnC ? 2 * n * n : n * n; }
};

/// Positive restricted roots are e_i - e_k (i < k <= p) with a common
/// multiplicity; on the Weyl chamber the highest weight is
/// beta(alpha) = -c sum_i i alpha_i, c = 2 * multiplicity.
struct LieData {
  int root_multiplicity = 0;
  int beta_coefficient = 0;
  /// Each free diagonal entry appears this many times on the full diagonal.
  int diagonal_repeat = 1;
};

inline LieData lie_data(Group g) {
  switch (g) {
    case Group::SLnC: return {2, 4, 1};
    case Group::SLnR: return {1, 2, 1};
    case Group::SLnH: return {4, 8, 2};
  }
  return {};
}

}  // namespace divdmt

#endif  // DIVDMT_GROUPS_HPP
