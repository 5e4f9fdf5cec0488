#include "grlab/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace grlab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceCapError("Hilbert series coefficient overflow");
  return r;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p += sign * t^shift * q
void add_shifted(IntPoly& p, const IntPoly& q, std::size_t shift, int sign) {
  if (q.empty()) return;
  if (p.size() < q.size() + shift) p.resize(q.size() + shift, 0);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] = checked_add(p[i + shift], sign * q[i]);
  trim(p);
}

IntPoly one_minus_t_power(std::uint64_t d) {
  IntPoly p(d + 1, 0);
  p[0] = 1;
  p[d] -= 1;
  trim(p);
  return p;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::int64_t prod;
      if (__builtin_mul_overflow(a[i], b[j], &prod)) throw ResourceCapError("Hilbert series coefficient overflow");
      out[i + j] = checked_add(out[i + j], prod);
    }
  }
  trim(out);
  return out;
}

std::uint64_t degree_of(const Monomial& m, const std::vector<std::uint32_t>& weights) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += std::uint64_t{m[i]} * weights[i];
  return d;
}

class NumeratorRecursion {
 public:
  NumeratorRecursion(const std::vector<std::uint32_t>& weights, const Budget& budget)
      : weights_(weights), budget_(budget) {}

  IntPoly run(const MonomialIdeal& m) {
    if ((++calls_ & 0xff) == 0) budget_.check_time();
    const auto& gens = m.generators();
    if (gens.empty()) return {1};
    if (m.is_unit()) return {};

    const std::size_t n = m.nvars();
    std::vector<std::size_t> count(n, 0);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0) ++count[i];
    std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());

    if (count[pivot] <= 1) {
      // Pairwise coprime generators form a regular sequence.
      IntPoly p{1};
      for (const auto& g : gens) p = multiply(p, one_minus_t_power(degree_of(g, weights_)));
      return p;
    }

    Exponent e = 0;
    for (const auto& g : gens)
      if (g[pivot] > 0 && (e == 0 || g[pivot] < e)) e = g[pivot];
    Monomial u = Monomial::variable(n, pivot, e);
    // N(M) = N(M + (u)) + t^deg(u) N(M : u)
    IntPoly out = run(m.plus(u));
    add_shifted(out, run(m.quotient(u)), degree_of(u, weights_), 1);
    return out;
  }

 private:
  const std::vector<std::uint32_t>& weights_;
  const Budget& budget_;
  std::uint64_t calls_ = 0;
};

std::string format_int_poly(const IntPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t c = p[i];
    if (c == 0) continue;
    std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

void require_homogeneous(const PolyRing& ring, const std::vector<Polynomial>& fs, const char* what) {
  for (const auto& f : fs) {
    if (!ring.is_homogeneous(f))
      throw InvalidInputError(std::string(what) + " is not graded: " + ring.format(f) + " is not homogeneous");
    if (f.is_constant()) throw InvalidInputError(std::string(what) + " is not contained in the maximal ideal");
  }
}

std::vector<Polynomial> nonzero(std::vector<Polynomial> fs) {
  std::erase_if(fs, [](const Polynomial& f) { return f.is_zero(); });
  return fs;
}

// Solves the Vandermonde system for the polynomial through (x_i, y_i).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Rational p(1);
    for (std::size_t j = 0; j < m; ++j) {
      a[i][j] = p;
      p *= xs[i];
    }
    a[i][m] = ys[i];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col].is_zero()) ++piv;
    std::swap(a[piv], a[col]);
    Rational inv = a[col][col].inverse();
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i][m];
  return out;
}

}  // namespace

std::vector<std::int64_t> HilbertSeries::coefficients(std::size_t max_degree) const {
  std::vector<std::int64_t> s(max_degree + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i <= max_degree; ++i) s[i] = numerator[i];
  for (auto w : denominator_weights)
    for (std::size_t k = w; k <= max_degree; ++k) s[k] = checked_add(s[k], s[k - w]);
  return s;
}

int HilbertSeries::pole_order() const {
  if (numerator.empty()) return -1;
  IntPoly p = numerator;
  int order = 0;
  // Divide by (1 - t) while t = 1 is a root: quotient coefficients are prefix sums.
  for (;;) {
    std::int64_t sum = 0;
    for (auto c : p) sum = checked_add(sum, c);
    if (sum != 0) break;
    IntPoly q(p.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) q[i] = acc = checked_add(acc, p[i]);
    p = std::move(q);
    trim(p);
    ++order;
  }
  return static_cast<int>(denominator_weights.size()) - order;
}

std::optional<IntPoly> HilbertSeries::as_polynomial() const {
  if (pole_order() > 0) return std::nullopt;
  IntPoly p = numerator;
  for (auto w : denominator_weights) {
    if (p.empty()) break;
    // p = (1 - t^w) q, so q_k = p_k + q_{k-w}.
    if (p.size() <= w) return std::nullopt;
    IntPoly q(p.size() - w, 0);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = checked_add(p[k], k >= w ? q[k - w] : 0);
    // The top w coefficients of (1 - t^w) q must reproduce p.
    for (std::size_t k = q.size(); k < p.size(); ++k)
      if ((k >= w ? -q[k - w] : 0) != p[k]) return std::nullopt;
    p = std::move(q);
    trim(p);
  }
  return p;
}

std::string HilbertSeries::numerator_string() const { return format_int_poly(numerator, "t"); }

std::string HilbertSeries::denominator_string() const {
  std::map<std::uint32_t, int> counts;
  for (auto w : denominator_weights) ++counts[w];
  std::string out;
  for (const auto& [w, k] : counts) {
    if (!out.empty()) out += "*";
    out += w == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(w) + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

IntPoly hilbert_numerator(const MonomialIdeal& ideal, const std::vector<std::uint32_t>& weights,
                          const Budget& budget) {
  if (weights.size() != ideal.nvars()) throw InvalidInputError("weight vector has the wrong length");
  return NumeratorRecursion(weights, budget).run(ideal);
}

HilbertSeries hilbert_series(const GradedRingPresentation& a, const Budget& budget) {
  return {hilbert_numerator(a.leading_ideal(), a.ring().weights(), budget), a.ring().weights()};
}

int krull_dim(const GradedRingPresentation& a) { return independent_set_dimension(a.leading_ideal()); }

int krull_dim(const Ideal& ideal, const Budget& budget) {
  const auto& gb = ideal.basis(budget);
  return independent_set_dimension(MonomialIdeal(ideal.ring().nvars(), gb.leading_monomials()));
}

std::optional<std::uint64_t> vector_space_dimension(const Ideal& ideal, const Budget& budget) {
  const auto& gb = ideal.basis(budget);
  MonomialIdeal lt(ideal.ring().nvars(), gb.leading_monomials());
  if (independent_set_dimension(lt) > 0) return std::nullopt;
  HilbertSeries h{hilbert_numerator(lt, ideal.ring().weights(), budget), ideal.ring().weights()};
  auto p = h.as_polynomial();
  if (!p) throw InconsistencyError("finite-length quotient with a non-polynomial Hilbert series");
  std::uint64_t total = 0;
  for (auto c : *p) total += static_cast<std::uint64_t>(c);
  return total;
}

int CharPoly::degree() const {
  for (std::size_t i = coefficients.size(); i-- > 0;)
    if (!coefficients[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Rational CharPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * t + coefficients[i];
  return acc;
}

std::string CharPoly::to_string() const {
  // Clear denominators and content: chi = (num/den) * p with p primitive.
  BigInt den = 1;
  for (const auto& c : coefficients) den = lcm(den, c.denominator());
  std::vector<BigInt> p;
  for (const auto& c : coefficients) p.push_back(c.numerator() * (den / c.denominator()));
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return "0";
  BigInt content = 0;
  for (const auto& c : p) content = gcd(content, c);
  if (p.back() < 0) content = -content;
  for (auto& c : p) c /= content;

  // Linear factors (q t - r) with their multiplicities, roots descending.
  std::vector<std::pair<Rational, int>> roots;
  int zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);

  auto divisors = [](BigInt v) {
    std::vector<BigInt> out;
    v = abs(v);
    for (BigInt d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    return out;
  };
  const BigInt limit = 1000000;
  if (p.size() > 1 && abs(p.front()) <= limit && abs(p.back()) <= limit) {
    std::vector<Rational> candidates;
    for (const auto& a : divisors(p.front()))
      for (const auto& q : divisors(p.back())) {
        candidates.push_back(Rational::normalize(a, q));
        candidates.push_back(-Rational::normalize(a, q));
      }
    std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) { return y < x; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      for (;;) {
        if (p.size() < 2) break;
        // Synthetic division by (t - r); the root test is a zero remainder.
        std::vector<Rational> q(p.size() - 1);
        Rational acc;
        for (std::size_t i = p.size(); i-- > 1;) {
          acc = acc * r + Rational(p[i]);
          q[i - 1] = acc;
        }
        if (!(acc * r + Rational(p[0])).is_zero()) break;
        // Rescale the quotient to a primitive integer polynomial.
        BigInt qd = 1;
        for (const auto& c : q) qd = lcm(qd, c.denominator());
        std::vector<BigInt> next;
        for (const auto& c : q) next.push_back(c.numerator() * (qd / c.denominator()));
        BigInt g = 0;
        for (const auto& c : next) g = gcd(g, c);
        if (next.back() < 0) g = -g;
        for (auto& c : next) c /= g;
        p = std::move(next);
        ++mult;
      }
      if (mult) roots.emplace_back(r, mult);
    }
  }
  // The zero root stays first; the others are ordered by descending value.
  std::sort(roots.begin() + (zero_mult ? 1 : 0), roots.end(),
            [](const auto& x, const auto& y) { return y.first < x.first; });

  auto with_power = [](std::string base, int mult) {
    return mult > 1 ? base + "^" + std::to_string(mult) : base;
  };
  std::vector<std::string> factors;
  for (const auto& [r, mult] : roots) {
    if (r.is_zero()) {
      factors.push_back(with_power("t", mult));
      continue;
    }
    BigInt q = r.denominator(), a = r.numerator();
    std::string lin = (q == 1 ? std::string("t") : q.get_str() + "*t") + (a > 0 ? "-" : "+") + BigInt(abs(a)).get_str();
    factors.push_back(with_power("(" + lin + ")", mult));
  }
  if (p.size() > 1) {
    std::string rest;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] == 0) continue;
      BigInt mag = abs(p[i]);
      if (!rest.empty() || p[i] < 0) rest += p[i] < 0 ? "-" : "+";
      if (i == 0) {
        rest += mag.get_str();
        continue;
      }
      if (mag != 1) rest += mag.get_str() + "*";
      rest += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    factors.push_back("(" + rest + ")");
  } else {
    content *= p.front();
  }

  Rational scalar = Rational::normalize(content, den);
  if (factors.empty()) return scalar.to_string();
  std::string body;
  for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
  BigInt num = scalar.numerator(), d = scalar.denominator();
  std::string prefix = num == 1 ? "" : num == -1 ? "-" : num.get_str() + "*";
  return prefix + body + (d == 1 ? "" : "/" + d.get_str());
}

CharPoly char_poly(const GradedRingPresentation& a, const std::vector<Polynomial>& q_in, const Budget& budget) {
  const PolyRing& ring = a.ring();
  auto q = nonzero(q_in);
  require_homogeneous(ring, q, "ideal Q");
  Ideal current = a.ideal().with(q);
  if (krull_dim(current, budget) > 0) throw InvalidInputError("ideal Q is not primary to the maximal ideal");

  const int d = krull_dim(a);
  constexpr unsigned kMaxN = 40;
  // values[n] = l(A/Q^n)
  std::vector<Rational> values(1);
  auto length = [&](const Ideal& j) {
    auto v = vector_space_dimension(j, budget);
    if (!v) throw InconsistencyError("A/Q^n has infinite length for an m-primary Q");
    return Rational(BigInt(static_cast<unsigned long>(*v)));
  };
  values.push_back(length(current));
  auto extend = [&] {
    std::vector<Polynomial> gens = a.basis().basis;
    for (const auto& g : current.basis(budget).basis)
      for (const auto& f : q) {
        Polynomial h = a.reduce(ring.mul(g, f));
        if (!h.is_zero()) gens.push_back(ring.make_monic(h));
      }
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& x, const Polynomial& y) {
      std::size_t k = 0;
      for (; k < x.size() && k < y.size(); ++k) {
        int c = ring.compare(x.terms()[k].mono, y.terms()[k].mono);
        if (c != 0) return c < 0;
        if (x.terms()[k].coeff != y.terms()[k].coeff) return x.terms()[k].coeff < y.terms()[k].coeff;
      }
      return x.size() < y.size();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    current = Ideal(ring, std::move(gens));
    values.push_back(length(current));
  };

  for (unsigned n0 = 1;; ++n0) {
    const unsigned last = n0 + static_cast<unsigned>(d) + 2;
    if (last > kMaxN) throw ResourceCapError("characteristic polynomial did not stabilize by n = 40");
    while (values.size() <= last) extend();
    std::vector<Rational> xs, ys;
    for (unsigned n = n0; n <= n0 + static_cast<unsigned>(d); ++n) {
      xs.emplace_back(static_cast<long>(n));
      ys.push_back(values[n]);
    }
    CharPoly chi{interpolate(xs, ys), n0};
    if (chi.evaluate(Rational(static_cast<long>(last - 1))) != values[last - 1] ||
        chi.evaluate(Rational(static_cast<long>(last))) != values[last])
      continue;
    while (chi.threshold > 1 &&
           chi.evaluate(Rational(static_cast<long>(chi.threshold - 1))) == values[chi.threshold - 1])
      --chi.threshold;
    while (!chi.coefficients.empty() && chi.coefficients.back().is_zero()) chi.coefficients.pop_back();
    return chi;
  }
}

LinearPart linear_part(const GradedRingPresentation& a) {
  const PolyRing& ring = a.ring();
  const Field& k = ring.field();
  const std::size_t n = ring.nvars();
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : a.generators()) {
    std::vector<Rational> row(n);
    bool any = false;
    for (const Term& t : g.terms()) {
      if (t.mono.total_degree() != 1) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (t.mono[i] == 1) row[i] = t.coeff;
      any = true;
    }
    if (any) rows.push_back(std::move(row));
  }

  LinearPart out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rational inv = k.inv(rows[r][col]);
    for (auto& v : rows[r]) v = k.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (std::size_t c = col; c < n; ++c) rows[i][c] = k.sub(rows[i][c], k.mul(f, rows[r][c]));
    }
    out.pivot_variables.push_back(col);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(out.pivot_variables.begin(), out.pivot_variables.end(), i) == out.pivot_variables.end())
      out.free_variables.push_back(i);
  return out;
}

std::size_t min_gens_rank(const GradedRingPresentation& a) { return a.nvars() - linear_part(a).rank; }

bool is_torsion_cyclic(const GradedRingPresentation& a, const std::vector<Polynomial>& j, const Budget& budget) {
  auto gens = nonzero(j);
  for (const auto& f : gens)
    if (!a.ring().is_homogeneous(f)) throw InvalidInputError("ideal J is not graded: " + a.ring().format(f));
  return krull_dim(a.ideal().with(gens), budget) <= 0;
}

}  // namespace grlab
