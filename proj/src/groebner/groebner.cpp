/*
   Copyright 2026 The tanvar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <type_traits>
#include <variant>

#include "kernel.hpp"
#include "tanvar/groebner/ideal.hpp"

namespace tanvar {

namespace {

template <class A>
Ideal run_buchberger(const A& ar, const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts) {
  std::vector<detail::KPoly<A>> input;
  input.reserve(ideal.size());
  for (const auto& g : ideal.generators()) input.push_back(detail::to_kernel(ar, g, order));
  detail::Buchberger<A> engine(ar, order, opts.degree_cap, opts.work_budget);
  auto basis = engine.run(std::move(input));
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(detail::from_kernel(ar, b, ideal.ring()));
  return Ideal(ideal.ring(), std::move(out));
}

// Groebner basis of `ideal` under a block order eliminating every variable
// not in `keep`, restricted to `target` (registry == keep).
Ideal eliminate_into(const Ideal& ideal, const std::vector<std::string>& keep, const RingPtr& target,
                     const GbOptions& opts) {
  const Ring& src = *ideal.ring();
  for (const auto& k : keep) src.index_of(k);
  std::vector<std::string> names;
  for (const auto& n : src.names()) {
    if (std::find(keep.begin(), keep.end(), n) == keep.end()) names.push_back(n);
  }
  const std::size_t block = names.size();
  names.insert(names.end(), keep.begin(), keep.end());
  RingPtr work = make_ring(names, src.field());
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(rename_into(g, work));
  Ideal gb = groebner_basis(Ideal(work, std::move(gens)), MonomialOrder::block(block), opts);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool pure = true;
    for (const auto& t : g.terms()) {
      if (t.monomial.degree(0, block) != 0) {
        pure = false;
        break;
      }
    }
    if (pure) out.push_back(restrict_into(g, target));
  }
  return Ideal(target, std::move(out));
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) add(std::move(g));
}

Ideal Ideal::homogeneous_ideal(RingPtr ring, std::vector<Polynomial> generators) {
  Ideal i(std::move(ring), std::move(generators));
  if (!i.homogeneous()) throw Error(ErrorKind::NotHomogeneous, "ideal has a non-homogeneous generator");
  return i;
}

bool Ideal::has_unit_generator() const {
  for (const auto& g : gens_) {
    if (g.is_constant()) return true;
  }
  return false;
}

void Ideal::add(Polynomial p) {
  require_same_ring(ring_, p.ring());
  if (p.is_zero()) return;
  if (!p.is_homogeneous()) homogeneous_ = false;
  gens_.push_back(std::move(p));
}

Ideal Ideal::operator+(const Ideal& o) const {
  Ideal r = *this;
  for (const auto& g : o.gens_) r.add(g);
  return r;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::DimensionMismatch, "leading monomial of zero");
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms()) {
    if (order.compare(t.monomial, *best) > 0) best = &t.monomial;
  }
  return *best;
}

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts) {
  for (const auto& g : ideal.generators()) require_same_ring(ideal.ring(), g.ring());
  const Field& f = ideal.ring()->field();
  if (f.is_prime()) return run_buchberger(detail::ModArith{f}, ideal, order, opts);
  return run_buchberger(detail::RatArith{f}, ideal, order, opts);
}

struct Reducer::Impl {
  RingPtr ring;
  MonomialOrder order;
  std::variant<detail::Buchberger<detail::ModArith>, detail::Buchberger<detail::RatArith>> engine;
};

namespace {

template <class A>
detail::Buchberger<A> loaded_engine(const A& ar, const Ideal& gb, const MonomialOrder& order) {
  detail::Buchberger<A> engine(ar, order, ~0u);
  std::vector<detail::KPoly<A>> basis;
  for (const auto& g : gb.generators()) basis.push_back(detail::to_kernel(ar, g, order));
  engine.load_basis(std::move(basis));
  return engine;
}

}  // namespace

Reducer::Reducer(const Ideal& gb, const MonomialOrder& order) {
  const Field& f = gb.ring()->field();
  if (f.is_prime()) {
    impl_ = std::make_unique<Impl>(Impl{gb.ring(), order, loaded_engine(detail::ModArith{f}, gb, order)});
  } else {
    impl_ = std::make_unique<Impl>(Impl{gb.ring(), order, loaded_engine(detail::RatArith{f}, gb, order)});
  }
}

Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

Polynomial Reducer::normal_form(const Polynomial& f) const {
  require_same_ring(impl_->ring, f.ring());
  const Field& field = impl_->ring->field();
  return std::visit(
      [&](const auto& engine) -> Polynomial {
        using E = std::decay_t<decltype(engine)>;
        if constexpr (std::is_same_v<E, detail::Buchberger<detail::ModArith>>) {
          detail::ModArith ar{field};
          return detail::from_kernel(ar, engine.reduce(detail::to_kernel(ar, f, impl_->order), true),
                                     impl_->ring);
        } else {
          detail::RatArith ar{field};
          return detail::from_kernel(ar, engine.reduce(detail::to_kernel(ar, f, impl_->order), true),
                                     impl_->ring);
        }
      },
      impl_->engine);
}

Polynomial normal_form(const Polynomial& f, const Ideal& gb, const MonomialOrder& order) {
  return Reducer(gb, order).normal_form(f);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const GbOptions& opts) {
  return eliminate_into(ideal, keep, make_ring(keep, ideal.ring()->field()), opts);
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, const GbOptions& opts) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw Error(ErrorKind::DimensionMismatch, "saturation by the zero polynomial");
  if (f.is_constant()) return groebner_basis(ideal, MonomialOrder::grevlex(), opts);
  const Ring& src = *ideal.ring();
  std::string fresh = "_sat";
  while (src.find(fresh)) fresh += "_";
  std::vector<std::string> names{fresh};
  names.insert(names.end(), src.names().begin(), src.names().end());
  RingPtr work = make_ring(names, src.field());
  Ideal ext(work);
  for (const auto& g : ideal.generators()) ext.add(rename_into(g, work));
  Polynomial t = Polynomial::variable(work, std::size_t{0});
  ext.add(Polynomial::constant(work, 1) - t * rename_into(f, work));
  return eliminate_into(ext, src.names(), ideal.ring(), opts);
}

bool ideal_contains(const Ideal& super, const Ideal& sub, const GbOptions& opts) {
  require_same_ring(super.ring(), sub.ring());
  auto order = MonomialOrder::grevlex();
  Reducer red(groebner_basis(super, order, opts), order);
  for (const auto& g : sub.generators()) {
    if (!red.reduces_to_zero(g)) return false;
  }
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b, const GbOptions& opts) {
  return ideal_contains(a, b, opts) && ideal_contains(b, a, opts);
}

}  // namespace tanvar
