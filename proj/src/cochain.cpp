#include "prelieder/cochain.hpp"

#include <stdexcept>

namespace prelieder {

namespace {

std::vector<Arg> as_args(std::span<const Vector> vs) {
  std::vector<Arg> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(Arg::of(v));
  return out;
}

int offset_of(Factor f, const Dims& d) { return f == Factor::G ? 0 : d.g; }

WedgeIndex to_total(const MixedIndex& m, const Dims& d) {
  WedgeIndex w;
  w.wedge = m.g_wedge;
  for (int v : m.v_wedge) w.wedge.push_back(v + d.g);
  w.tail = m.tail + offset_of(m.tail_factor, d);
  return w;
}

}  // namespace

// ---------------------------------------------------------------- ComponentMap

ComponentMap::ComponentMap(Shape shape, Factor target, Dims dims)
    : shape_(shape), target_(target), dims_(dims) {
  if (shape.g_wedge < 0 || shape.v_wedge < 0 || dims.g < 0 || dims.v < 0)
    throw std::invalid_argument("ComponentMap: negative shape or dimension");
  coeffs_.assign(basis_size(shape, dims) * static_cast<std::size_t>(dims.of(target)), Scalar(0));
}

bool ComponentMap::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Vector ComponentMap::at(const MixedIndex& index) const {
  const auto td = static_cast<std::size_t>(target_dim());
  const auto pos = basis_position(index.g_wedge, index.v_wedge, index.tail, shape_, dims_);
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(pos * td),
                coeffs_.begin() + static_cast<std::ptrdiff_t>((pos + 1) * td));
}

void ComponentMap::set(const MixedIndex& index, const Vector& value) {
  const auto td = static_cast<std::size_t>(target_dim());
  if (value.size() != td) throw std::invalid_argument("ComponentMap::set: value has wrong length");
  const auto pos = basis_position(index.g_wedge, index.v_wedge, index.tail, shape_, dims_);
  for (std::size_t o = 0; o < td; ++o) coeffs_[pos * td + o] = value[o];
}

void ComponentMap::accumulate_basis(Vector& out, const Scalar& c, std::vector<int>& g, std::vector<int>& v,
                                    int tail) const {
  auto ng = normalize_wedge(g);
  if (!ng) return;
  auto nv = normalize_wedge(v);
  if (!nv) return;
  const auto td = static_cast<std::size_t>(target_dim());
  const auto pos = basis_position(ng->first, nv->first, tail, shape_, dims_);
  const Scalar k = (ng->second * nv->second == 1) ? c : Scalar(-c);
  for (std::size_t o = 0; o < td; ++o) {
    const auto& coef = coeffs_[pos * td + o];
    if (coef != 0) out[o] += k * coef;
  }
}

void ComponentMap::expand(Vector& out, const Scalar& c, std::span<const Arg> args, std::size_t slot,
                          std::vector<int>& picked) const {
  if (slot == args.size()) {
    const auto a = static_cast<std::size_t>(shape_.g_wedge);
    const auto b = static_cast<std::size_t>(shape_.v_wedge);
    std::vector<int> g(picked.begin(), picked.begin() + static_cast<std::ptrdiff_t>(a));
    std::vector<int> v(picked.begin() + static_cast<std::ptrdiff_t>(a),
                       picked.begin() + static_cast<std::ptrdiff_t>(a + b));
    accumulate_basis(out, c, g, v, picked.back());
    return;
  }
  const Arg& arg = args[slot];
  if (arg.basis >= 0) {
    picked.push_back(arg.basis);
    expand(out, c, args, slot + 1, picked);
    picked.pop_back();
    return;
  }
  const Vector& vec = *arg.vec;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (vec[i] == 0) continue;
    picked.push_back(static_cast<int>(i));
    expand(out, c * vec[i], args, slot + 1, picked);
    picked.pop_back();
  }
}

void ComponentMap::accumulate(Vector& out, const Scalar& c, std::span<const Arg> g_args,
                              std::span<const Arg> v_args, Arg tail) const {
  if (g_args.size() != static_cast<std::size_t>(shape_.g_wedge) ||
      v_args.size() != static_cast<std::size_t>(shape_.v_wedge))
    throw std::invalid_argument("ComponentMap: wrong number of arguments");
  if (out.size() != static_cast<std::size_t>(target_dim()))
    throw std::invalid_argument("ComponentMap: output has wrong length");
  if (c == 0) return;
  std::vector<Arg> args(g_args.begin(), g_args.end());
  args.insert(args.end(), v_args.begin(), v_args.end());
  args.push_back(tail);
  std::vector<int> picked;
  picked.reserve(args.size());
  expand(out, c, args, 0, picked);
}

Vector ComponentMap::evaluate(std::span<const Arg> g_args, std::span<const Arg> v_args, Arg tail) const {
  Vector out = zero_vector(static_cast<std::size_t>(target_dim()));
  accumulate(out, Scalar(1), g_args, v_args, tail);
  return out;
}

void ComponentMap::check_compatible(const ComponentMap& other) const {
  if (!(shape_ == other.shape_) || target_ != other.target_ || !(dims_ == other.dims_))
    throw std::invalid_argument("ComponentMap: incompatible operands");
}

ComponentMap& ComponentMap::operator+=(const ComponentMap& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ComponentMap& ComponentMap::operator-=(const ComponentMap& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ComponentMap operator*(const Scalar& s, ComponentMap a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

bool operator==(const ComponentMap& a, const ComponentMap& b) {
  return a.shape_ == b.shape_ && a.target_ == b.target_ && a.dims_ == b.dims_ && a.coeffs_ == b.coeffs_;
}

// --------------------------------------------------------------- GradedCochain

GradedCochain::GradedCochain(Dims dims, int arity) : dims_(dims), arity_(arity) {
  if (arity < 1) throw std::invalid_argument("GradedCochain: arity must be at least 1");
}

Vector GradedCochain::at(const WedgeIndex& index) const {
  auto it = entries_.find(index);
  if (it == entries_.end()) return zero_vector(static_cast<std::size_t>(space_dim()));
  return it->second;
}

void GradedCochain::add(const WedgeIndex& index, const Vector& value) {
  if (value.size() != static_cast<std::size_t>(space_dim()))
    throw std::invalid_argument("GradedCochain::add: value has wrong length");
  if (index.wedge.size() + 1 != static_cast<std::size_t>(arity_))
    throw std::invalid_argument("GradedCochain::add: index has wrong arity");
  if (prelieder::is_zero(value)) return;
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    for (std::size_t i = 0; i < value.size(); ++i) it->second[i] += value[i];
    if (prelieder::is_zero(it->second)) entries_.erase(it);
  }
}

void GradedCochain::expand(Vector& out, const Scalar& c, std::span<const Arg> args, std::size_t slot,
                           std::vector<int>& picked) const {
  if (slot == args.size()) {
    std::vector<int> wedge(picked.begin(), picked.end() - 1);
    auto norm = normalize_wedge(std::move(wedge));
    if (!norm) return;
    auto it = entries_.find(WedgeIndex{std::move(norm->first), picked.back()});
    if (it == entries_.end()) return;
    const Scalar k = norm->second == 1 ? c : Scalar(-c);
    for (std::size_t o = 0; o < out.size(); ++o)
      if (it->second[o] != 0) out[o] += k * it->second[o];
    return;
  }
  const Arg& arg = args[slot];
  if (arg.basis >= 0) {
    picked.push_back(arg.basis);
    expand(out, c, args, slot + 1, picked);
    picked.pop_back();
    return;
  }
  const Vector& vec = *arg.vec;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (vec[i] == 0) continue;
    picked.push_back(static_cast<int>(i));
    expand(out, c * vec[i], args, slot + 1, picked);
    picked.pop_back();
  }
}

void GradedCochain::accumulate(Vector& out, const Scalar& c, std::span<const Arg> wedge, Arg tail) const {
  if (wedge.size() + 1 != static_cast<std::size_t>(arity_))
    throw std::invalid_argument("GradedCochain: wrong number of arguments");
  if (c == 0 || entries_.empty()) return;
  std::vector<Arg> args(wedge.begin(), wedge.end());
  args.push_back(tail);
  std::vector<int> picked;
  picked.reserve(args.size());
  expand(out, c, args, 0, picked);
}

Vector GradedCochain::evaluate(std::span<const Vector> args) const {
  if (args.size() != static_cast<std::size_t>(arity_))
    throw std::invalid_argument("GradedCochain::evaluate: wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != static_cast<std::size_t>(space_dim()))
      throw std::invalid_argument("GradedCochain::evaluate: argument has wrong length");
  auto wrapped = as_args(args);
  Vector out = zero_vector(static_cast<std::size_t>(space_dim()));
  accumulate(out, Scalar(1), std::span<const Arg>(wrapped).first(wrapped.size() - 1), wrapped.back());
  return out;
}

void GradedCochain::check_compatible(const GradedCochain& other) const {
  if (!(dims_ == other.dims_) || arity_ != other.arity_)
    throw std::invalid_argument("GradedCochain: incompatible operands");
}

GradedCochain& GradedCochain::operator+=(const GradedCochain& other) {
  check_compatible(other);
  for (const auto& [idx, val] : other.entries_) add(idx, val);
  return *this;
}

GradedCochain& GradedCochain::operator-=(const GradedCochain& other) {
  check_compatible(other);
  for (const auto& [idx, val] : other.entries_) add(idx, Scalar(-1) * val);
  return *this;
}

GradedCochain operator*(const Scalar& s, const GradedCochain& a) {
  GradedCochain out(a.dims_, a.arity_);
  if (s == 0) return out;
  for (const auto& [idx, val] : a.entries_) out.entries_.emplace(idx, s * val);
  return out;
}

bool operator==(const GradedCochain& a, const GradedCochain& b) {
  return a.dims_ == b.dims_ && a.arity_ == b.arity_ && a.entries_ == b.entries_;
}

// ------------------------------------------------------------ lift / restrict

GradedCochain lift(const ComponentMap& f) {
  GradedCochain out(f.dims(), f.arity());
  const auto& d = f.dims();
  const auto off = static_cast<std::size_t>(offset_of(f.target(), d));
  const auto td = static_cast<std::size_t>(f.target_dim());
  std::size_t pos = 0;
  for (const auto& idx : enumerate_basis(f.shape(), d)) {
    Vector value = zero_vector(static_cast<std::size_t>(d.total()));
    bool any = false;
    for (std::size_t o = 0; o < td; ++o) {
      const auto& c = f.coeffs()[pos * td + o];
      if (c != 0) {
        value[off + o] = c;
        any = true;
      }
    }
    ++pos;
    if (any) out.add(to_total(idx, d), value);
  }
  return out;
}

GradedCochain lift(std::span<const ComponentMap> components) {
  if (components.empty()) throw std::invalid_argument("lift: no components");
  GradedCochain out(components.front().dims(), components.front().arity());
  for (const auto& c : components) out += lift(c);
  return out;
}

ComponentMap restrict_to(const GradedCochain& f, Shape shape, Factor target) {
  ComponentMap out(shape, target, f.dims());
  if (shape.g_wedge + shape.v_wedge + 1 != f.arity())
    throw std::invalid_argument("restrict_to: shape arity differs from cochain arity");
  const auto& d = f.dims();
  const auto off = static_cast<std::size_t>(offset_of(target, d));
  const auto td = static_cast<std::size_t>(out.target_dim());
  std::size_t pos = 0;
  for (const auto& idx : enumerate_basis(shape, d)) {
    auto it = f.entries().find(to_total(idx, d));
    if (it != f.entries().end())
      for (std::size_t o = 0; o < td; ++o) out.coeffs()[pos * td + o] = it->second[off + o];
    ++pos;
  }
  return out;
}

// ------------------------------------------------------------------ bidegree

namespace {

int count_g(const WedgeIndex& idx, int dg) {
  int a = idx.tail < dg ? 1 : 0;
  for (int w : idx.wedge)
    if (w < dg) ++a;
  return a;
}

bool part_nonzero(const Vector& v, int from, int to) {
  for (int i = from; i < to; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) return true;
  return false;
}

}  // namespace

bool has_bidegree(const GradedCochain& f, Bidegree b) {
  if (b.k + b.l + 1 != f.arity()) return false;
  const int dg = f.dims().g;
  const int dt = f.dims().total();
  for (const auto& [idx, val] : f.entries()) {
    const int a = count_g(idx, dg);
    if (part_nonzero(val, 0, dg) && a != b.k + 1) return false;
    if (part_nonzero(val, dg, dt) && a != b.k) return false;
  }
  return true;
}

std::optional<Bidegree> bidegree_of(const GradedCochain& f) {
  if (f.is_zero()) return std::nullopt;
  const auto& [idx, val] = *f.entries().begin();
  const int a = count_g(idx, f.dims().g);
  const int k = part_nonzero(val, 0, f.dims().g) ? a - 1 : a;
  Bidegree b{k, f.arity() - 1 - k};
  if (!has_bidegree(f, b)) return std::nullopt;
  return b;
}

K0Components decompose_k0(const GradedCochain& f) {
  const int k = f.arity() - 1;
  if (!has_bidegree(f, {k, 0})) throw std::invalid_argument("decompose_k0: cochain is not of bidegree k|0");
  K0Components out;
  out.g = restrict_to(f, Shape{k, 0, Factor::G}, Factor::G);
  out.rho = restrict_to(f, Shape{k, 0, Factor::V}, Factor::V);
  if (k >= 1) out.mu = restrict_to(f, Shape{k - 1, 1, Factor::G}, Factor::V);
  return out;
}

GradedCochain project_h(const GradedCochain& f) {
  GradedCochain out(f.dims(), f.arity());
  const int dg = f.dims().g;
  const int dt = f.dims().total();
  for (const auto& [idx, val] : f.entries()) {
    if (count_g(idx, dg) != f.arity()) continue;
    Vector v = zero_vector(static_cast<std::size_t>(dt));
    for (int i = dg; i < dt; ++i) v[static_cast<std::size_t>(i)] = val[static_cast<std::size_t>(i)];
    out.add(idx, v);
  }
  return out;
}

}  // namespace prelieder
