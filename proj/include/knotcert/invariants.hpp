#pragma once

#include <string>

#include "knotcert/laurent.hpp"
#include "knotcert/pd.hpp"

namespace knotcert {

inline constexpr int kDefaultMaxCrossings = 16;

/// Kauffman bracket by direct state sum over all 2^k smoothings:
///   sum A^(#A - #B) * delta^(loops - 1),  delta = -A^2 - A^-2.
/// The A-smoothing joins the two regions swept when the over strand is
/// turned counterclockwise. Throws BoundExceeded past `max_crossings`.
LaurentPoly kauffman_bracket(const ComponentPD& pd, int max_crossings = kDefaultMaxCrossings);

/// Same bracket by recursive skein expansion <D> = A<D_A> + A^-1<D_B>,
/// splicing segment labels as each crossing is removed. Shares no code
/// with the state sum; the two are used to check each other.
LaurentPoly kauffman_bracket_skein(const ComponentPD& pd, int max_crossings = kDefaultMaxCrossings);

/// +1 for a right-handed crossing, -1 for a left-handed one.
int crossing_sign(const PdCrossing& c);

int writhe(const ComponentPD& pd);

/// (-A)^(-3 w) <D>; equals 1 on every unknot diagram.
LaurentPoly jones_normalized(const ComponentPD& pd, int max_crossings = kDefaultMaxCrossings);

enum class VerdictKind { Unknot, Knotted, Inconclusive };

const char* to_string(VerdictKind kind);

struct UnknotVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  LaurentPoly polynomial;  // normalized Jones polynomial when computed
  std::string reason;
};

/// Unknot when the normalized Jones polynomial is 1 and the diagram has at
/// most `max_certified_crossings` crossings (no nontrivial knot with a
/// diagram that small has trivial Jones polynomial). Knotted whenever the
/// polynomial differs from 1. Inconclusive otherwise.
///
/// Diagrams above the bound are still evaluated; the state sum is capped
/// at `evaluation_limit` crossings, beyond which the verdict is
/// Inconclusive without a polynomial.
UnknotVerdict classify_knot(const ComponentPD& pd, int max_certified_crossings = kDefaultMaxCrossings,
                            int evaluation_limit = 24);

/// Half the signed count of crossings between the two components.
int linking_number(const ComponentPD& pd);

}  // namespace knotcert
