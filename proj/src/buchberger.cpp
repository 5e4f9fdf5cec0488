#include <algorithm>
#include <cstdint>
#include <vector>

#include "grlab/module.hpp"

namespace grlab {

namespace {

struct Element {
  ModuleVector vec;
  std::uint64_t sugar = 0;
  bool active = true;

  const Monomial& lead() const { return vec.terms.front().mono; }
  std::uint32_t comp() const { return vec.terms.front().comp; }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
  bool coprime;
};

class Engine {
 public:
  Engine(const FreeModule& module, const Budget& budget)
      : module_(module), field_(module.ring().field()), budget_(budget), product_criterion_(module.rank() == 1) {}

  std::vector<ModuleVector> run(std::span<const ModuleVector> gens) {
    std::vector<ModuleVector> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(module_.make_monic(g));
    std::sort(input.begin(), input.end(), [this](const ModuleVector& a, const ModuleVector& b) {
      return module_.compare(a.leading_term(), b.leading_term()) < 0;
    });
    for (auto& g : input) {
      std::uint64_t sugar = sugar_of(g);
      if (insert(std::move(g), sugar)) return unit_basis();
    }

    while (!pairs_.empty()) {
      budget_.check_time();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (before(pairs_[k], pairs_[best])) best = k;
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();

      ModuleVector s = s_vector(p);
      ModuleVector h = reduce(std::move(s));
      if (h.is_zero()) continue;
      h = module_.make_monic(h);
      if (insert(std::move(h), p.sugar)) return unit_basis();
    }
    return interreduce();
  }

  ModuleVector reduce(ModuleVector v) const {
    ModuleVector done;
    std::size_t head = 0;
    while (head < v.terms.size()) {
      const VectorTerm& lt = v.terms[head];
      const Element* divisor = find_divisor(lt.mono, lt.comp);
      if (divisor == nullptr) {
        done.terms.push_back(v.terms[head]);
        ++head;
        continue;
      }
      // v <- v - lc * (lt / lead(g)) * g, g monic; the head cancels exactly.
      Monomial q = lt.mono / divisor->lead();
      Rational c = lt.coeff;
      v = subtract_multiple(v, head + 1, *divisor, c, q);
      head = 0;
    }
    return done;
  }

 private:
  std::uint64_t sugar_of(const ModuleVector& v) const {
    std::uint64_t s = 0;
    for (const auto& t : v.terms) s = std::max(s, module_.degree(t.mono, t.comp));
    return s;
  }

  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = module_.compare(a.lcm, elements_[a.i].comp(), b.lcm, elements_[b.i].comp());
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  const Element* find_divisor(const Monomial& m, std::uint32_t comp) const {
    for (std::size_t idx : active_) {
      const Element& e = elements_[idx];
      if (e.comp() == comp && e.lead().divides(m)) return &e;
    }
    return nullptr;
  }

  // Terms v[from..] minus c * q * g with g's leading term dropped.
  ModuleVector subtract_multiple(const ModuleVector& v, std::size_t from, const Element& g, const Rational& c,
                                 const Monomial& q) const {
    ModuleVector out;
    out.terms.reserve(v.terms.size() - from + g.vec.terms.size());
    auto i = v.terms.begin() + static_cast<std::ptrdiff_t>(from);
    auto j = g.vec.terms.begin() + 1;
    const Rational neg_c = field_.neg(c);
    while (i != v.terms.end() && j != g.vec.terms.end()) {
      Monomial m = j->mono * q;
      int cmp = module_.compare(i->mono, i->comp, m, j->comp);
      if (cmp > 0) {
        out.terms.push_back(*i++);
      } else if (cmp < 0) {
        out.terms.push_back({field_.mul(neg_c, j->coeff), std::move(m), j->comp});
        ++j;
      } else {
        Rational s = field_.add(i->coeff, field_.mul(neg_c, j->coeff));
        if (!s.is_zero()) out.terms.push_back({std::move(s), std::move(m), i->comp});
        ++i;
        ++j;
      }
    }
    out.terms.insert(out.terms.end(), i, v.terms.end());
    for (; j != g.vec.terms.end(); ++j) out.terms.push_back({field_.mul(neg_c, j->coeff), j->mono * q, j->comp});
    return out;
  }

  ModuleVector s_vector(const Pair& p) const {
    const Element& a = elements_[p.i];
    const Element& b = elements_[p.j];
    ModuleVector left = module_.mul_term(a.vec, Rational(1), p.lcm / a.lead());
    ModuleVector right = module_.mul_term(b.vec, Rational(1), p.lcm / b.lead());
    return module_.sub(left, right);
  }

  // Gebauer-Moeller update. Returns true when h is a unit in rank one.
  bool insert(ModuleVector h, std::uint64_t sugar) {
    std::uint64_t degree = 0;
    for (const auto& t : h.terms) degree = std::max(degree, t.mono.total_degree());
    budget_.check_degree(degree);

    if (product_criterion_ && h.terms.front().mono.is_one()) return true;

    const std::size_t hi = elements_.size();
    elements_.push_back({std::move(h), sugar, true});
    budget_.check_basis_size(elements_.size());
    const Element& he = elements_[hi];

    std::vector<Pair> fresh;
    for (std::size_t g : active_) {
      const Element& ge = elements_[g];
      if (ge.comp() != he.comp()) continue;
      Monomial l = lcm(ge.lead(), he.lead());
      std::uint64_t s = std::max(ge.sugar + module_.ring().weighted_degree(l / ge.lead()),
                                 he.sugar + module_.ring().weighted_degree(l / he.lead()));
      bool coprime = product_criterion_ && ge.lead().coprime(he.lead());
      fresh.push_back({g, hi, std::move(l), s, coprime});
    }

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      Pair& p = fresh[k];
      bool dominated = false;
      if (!p.coprime) {
        for (std::size_t r = k + 1; r < fresh.size() && !dominated; ++r)
          dominated = fresh[r].lcm.divides(p.lcm);
        for (std::size_t r = 0; r < kept.size() && !dominated; ++r) dominated = kept[r].lcm.divides(p.lcm);
      }
      if (!dominated) kept.push_back(std::move(p));
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (elements_[p.i].comp() != he.comp()) return false;
      if (!he.lead().divides(p.lcm)) return false;
      return lcm(elements_[p.i].lead(), he.lead()) != p.lcm && lcm(elements_[p.j].lead(), he.lead()) != p.lcm;
    });
    for (auto& p : kept)
      if (!p.coprime) pairs_.push_back(std::move(p));

    std::erase_if(active_, [&](std::size_t g) {
      const Element& ge = elements_[g];
      return ge.comp() == he.comp() && he.lead().divides(ge.lead());
    });
    active_.push_back(hi);
    return false;
  }

  std::vector<ModuleVector> unit_basis() const {
    return {module_.from_polynomial(module_.ring().one(), 0)};
  }

  std::vector<ModuleVector> interreduce() {
    std::vector<std::size_t> order = active_;
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
      return module_.compare(elements_[a].vec.leading_term(), elements_[b].vec.leading_term()) < 0;
    });
    std::vector<std::size_t> minimal;
    for (std::size_t idx : order) {
      const Element& e = elements_[idx];
      bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](std::size_t m) {
        return elements_[m].comp() == e.comp() && elements_[m].lead().divides(e.lead());
      });
      if (!redundant) minimal.push_back(idx);
    }
    active_ = minimal;

    std::vector<ModuleVector> out;
    out.reserve(minimal.size());
    for (std::size_t idx : minimal) {
      ModuleVector v = elements_[idx].vec;
      ModuleVector tail;
      tail.terms.assign(v.terms.begin() + 1, v.terms.end());
      ModuleVector reduced = reduce(std::move(tail));
      reduced.terms.insert(reduced.terms.begin(), v.terms.front());
      out.push_back(module_.make_monic(reduced));
    }
    return out;
  }

  const FreeModule& module_;
  const Field& field_;
  const Budget& budget_;
  const bool product_criterion_;
  std::vector<Element> elements_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<ModuleVector> module_groebner(const FreeModule& module, std::span<const ModuleVector> gens,
                                          const Budget& budget) {
  return Engine(module, budget).run(gens);
}

ModuleVector module_normal_form(const FreeModule& module, const ModuleVector& v, std::span<const ModuleVector> basis) {
  ModuleVector rem;
  ModuleVector cur = v;
  const Field& k = module.ring().field();
  while (!cur.is_zero()) {
    const VectorTerm& lt = cur.terms.front();
    const ModuleVector* divisor = nullptr;
    for (const auto& g : basis) {
      const VectorTerm& gl = g.leading_term();
      if (gl.comp == lt.comp && gl.mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.terms.push_back(lt);
      cur.terms.erase(cur.terms.begin());
      continue;
    }
    const VectorTerm& gl = divisor->leading_term();
    Rational c = k.div(lt.coeff, gl.coeff);
    cur = module.sub(cur, module.mul_term(*divisor, c, lt.mono / gl.mono));
  }
  return rem;
}

}  // namespace grlab
