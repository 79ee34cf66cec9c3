#include "prelieder/mn_bracket.hpp"

#include <stdexcept>

namespace prelieder {

GradedCochain circ(const GradedCochain& outer, const GradedCochain& inner) {
  if (!(outer.dims() == inner.dims())) throw std::invalid_argument("circ: cochains live on different spaces");
  const int p = outer.degree();
  const int q = inner.degree();
  const int n = p + q + 1;
  GradedCochain out(outer.dims(), n);
  if (outer.is_zero() || inner.is_zero()) return out;

  const int dim = outer.space_dim();
  const auto first = p >= 1 ? unshuffles({q, 1, p - 1}) : std::vector<SignedPermutation>{};
  const auto second = unshuffles({p, q});
  const Scalar second_sign = (p * q) % 2 == 0 ? 1 : -1;
  const auto zero = zero_vector(static_cast<std::size_t>(dim));

  std::vector<Arg> inner_wedge(static_cast<std::size_t>(q));
  std::vector<Arg> outer_wedge(static_cast<std::size_t>(p));
  for (const auto& wedge : combinations(dim, n - 1)) {
    for (int tail = 0; tail < dim; ++tail) {
      Vector value = zero;
      // x_1..x_{n-1} are the wedge entries, x_n is the tail
      auto x = [&](int pos) { return wedge[static_cast<std::size_t>(pos)]; };

      for (const auto& s : first) {
        const auto& m = s.mapping;
        for (int i = 0; i < q; ++i) inner_wedge[static_cast<std::size_t>(i)] = Arg::of(x(m[static_cast<std::size_t>(i)]));
        Vector iv = zero;
        inner.accumulate(iv, Scalar(1), inner_wedge, Arg::of(x(m[static_cast<std::size_t>(q)])));
        if (is_zero(iv)) continue;
        outer_wedge[0] = Arg::of(iv);
        for (int i = 1; i < p; ++i)
          outer_wedge[static_cast<std::size_t>(i)] = Arg::of(x(m[static_cast<std::size_t>(q + i)]));
        outer.accumulate(value, Scalar(s.sign), outer_wedge, Arg::of(tail));
      }

      for (const auto& s : second) {
        const auto& m = s.mapping;
        for (int i = 0; i < q; ++i)
          inner_wedge[static_cast<std::size_t>(i)] = Arg::of(x(m[static_cast<std::size_t>(p + i)]));
        Vector iv = zero;
        inner.accumulate(iv, Scalar(1), inner_wedge, Arg::of(tail));
        if (is_zero(iv)) continue;
        for (int i = 0; i < p; ++i) outer_wedge[static_cast<std::size_t>(i)] = Arg::of(x(m[static_cast<std::size_t>(i)]));
        outer.accumulate(value, second_sign * s.sign, outer_wedge, Arg::of(iv));
      }

      out.add(WedgeIndex{wedge, tail}, value);
    }
  }
  return out;
}

GradedCochain mn_bracket(const GradedCochain& p, const GradedCochain& q) {
  GradedCochain pq = circ(p, q);
  const GradedCochain qp = circ(q, p);
  if ((p.degree() * q.degree()) % 2 == 0)
    pq -= qp;
  else
    pq += qp;
  return pq;
}

}  // namespace prelieder
