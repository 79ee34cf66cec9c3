#pragma once

#include "prelieder/cochain.hpp"

namespace prelieder {

/// P o Q for P of arity p+1 and Q of arity q+1 on the same space; the result
/// has arity p+q+1. Uses ungraded unshuffle signatures.
GradedCochain circ(const GradedCochain& p, const GradedCochain& q);

/// [P,Q] = P o Q - (-1)^{pq} Q o P, where p = arity(P) - 1 and q = arity(Q) - 1.
GradedCochain mn_bracket(const GradedCochain& p, const GradedCochain& q);

}  // namespace prelieder
