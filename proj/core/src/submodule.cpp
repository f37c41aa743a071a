#include "qnss/submodule.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qnss {

namespace {

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::pair<int, int>> out;
  auto it = a.exps().begin();
  auto jt = b.exps().begin();
  while (it != a.exps().end() || jt != b.exps().end()) {
    if (jt == b.exps().end() || (it != a.exps().end() && it->first < jt->first)) {
      out.push_back(*it++);
    } else if (it == a.exps().end() || jt->first < it->first) {
      out.push_back(*jt++);
    } else {
      out.emplace_back(it->first, std::max(it->second, jt->second));
      ++it;
      ++jt;
    }
  }
  return Monomial(std::move(out));
}

PRow prow_mul_term(const PRow& f, const Monomial& m, const Rat& c) {
  PRow out;
  out.reserve(f.size());
  for (const Poly& p : f) out.push_back(p.mul_term(m, c));
  return out;
}

void prow_sub_inplace(PRow& f, const PRow& g) {
  for (std::size_t t = 0; t < f.size(); ++t) f[t] -= g[t];
}

bool prow_is_zero(const PRow& f) {
  for (const Poly& p : f)
    if (!p.is_zero()) return false;
  return true;
}

// Scales the row to coprime integer coefficients. Content growth, not
// the basis size, is what makes exact Buchberger runs explode.
PRow prow_primitive(const PRow& f) {
  mpz_class num_gcd(0), den_lcm(1);
  for (const Poly& p : f) {
    for (const auto& [m, c] : p.terms()) {
      num_gcd = gcd(num_gcd, c.get_num());
      den_lcm = lcm(den_lcm, c.get_den());
    }
  }
  if (num_gcd == 0) return f;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return f;
  PRow out;
  out.reserve(f.size());
  for (const Poly& p : f) out.push_back(p * scale);
  return out;
}

}  // namespace

PModule::PModule(int nvars, int rank, std::vector<PRow> generators, ModuleOrder order)
    : nvars_(nvars), rank_(rank), order_(order) {
  if (rank <= 0) throw std::invalid_argument("module rank must be positive");
  for (const PRow& g : generators) {
    if (static_cast<int>(g.size()) != rank) throw std::invalid_argument("generator rank mismatch");
    for (const Poly& p : g)
      if (p.nvars() != nvars) throw std::invalid_argument("generator variable count mismatch");
    if (!prow_is_zero(g)) gens_.push_back(g);
  }

  // Buchberger for modules. S-vectors are formed only for equal leading
  // positions; the product (coprimality) shortcut is not valid here, but
  // the chain criterion is, since the relevant syzygies live in a single
  // position. Rows are kept primitive-integer to control coefficient
  // growth.
  std::vector<PRow> g;
  std::vector<Lead> leads;
  std::vector<bool> active;  // inactive rows still reduce, but form no new pairs
  std::vector<std::vector<std::size_t>> by_pos(rank_);

  struct Pair {
    std::size_t s, t;
    Monomial lcm;
  };
  std::vector<Pair> pairs;

  // Gebauer-Moller style update: queue pairs of the new element against
  // the active same-position elements, then retire any element whose
  // leading term the new one divides (its pair with the new element
  // reduces its tail back into the module).
  auto insert_row = [&](PRow row) {
    std::size_t idx = g.size();
    g.push_back(std::move(row));
    leads.push_back(lead_of(g.back()));
    active.push_back(true);
    const Lead& ln = leads.back();
    for (std::size_t s = 0; s < idx; ++s) {
      if (!active[s] || leads[s].term.pos != ln.term.pos) continue;
      pairs.push_back({s, idx, mono_lcm(leads[s].term.mon, ln.term.mon)});
      if (ln.term.mon.divides(leads[s].term.mon)) active[s] = false;
    }
    by_pos[ln.term.pos].push_back(idx);
  };
  for (const PRow& row : gens_) insert_row(prow_primitive(row));

  const bool debug = std::getenv("QNSS_GB_DEBUG") != nullptr;
  long processed = 0;
  while (!pairs.empty()) {
    if (debug && ++processed % 200 == 0) {
      std::fprintf(stderr, "gb: basis=%zu pairs=%zu processed=%ld\n", g.size(), pairs.size(),
                   processed);
    }
    // Normal selection: smallest (position, lcm) first.
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      if (cmp_terms({static_cast<int>(leads[pairs[p].s].term.pos), pairs[p].lcm},
                    {static_cast<int>(leads[pairs[best].s].term.pos), pairs[best].lcm}) < 0)
        best = p;
    }
    Pair pair = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    // Chain criterion (history-free form): a third element whose leading
    // monomial divides the lcm strictly, in the sense that both connecting
    // lcms are proper, splits this syzygy into the two connecting ones.
    bool skip = false;
    const int pos = leads[pair.s].term.pos;
    for (std::size_t k : by_pos[pos]) {
      if (k == pair.s || k == pair.t) continue;
      if (!leads[k].term.mon.divides(pair.lcm)) continue;
      Monomial lcm_sk = mono_lcm(leads[pair.s].term.mon, leads[k].term.mon);
      Monomial lcm_tk = mono_lcm(leads[pair.t].term.mon, leads[k].term.mon);
      if (!(lcm_sk == pair.lcm) && !(lcm_tk == pair.lcm)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    const Rat& cs = leads[pair.s].coeff;
    const Rat& ct = leads[pair.t].coeff;
    PRow spair = prow_mul_term(g[pair.s], pair.lcm.divide(leads[pair.s].term.mon), ct);
    prow_sub_inplace(spair, prow_mul_term(g[pair.t], pair.lcm.divide(leads[pair.t].term.mon), cs));
    PRow h = prow_primitive(reduce_indexed(prow_primitive(spair), g, leads, by_pos));
    if (!prow_is_zero(h)) insert_row(std::move(h));
  }

  // Minimalize: drop elements whose leading term another element divides.
  std::vector<PRow> minimal;
  for (std::size_t t = 0; t < g.size(); ++t) {
    bool redundant = false;
    for (std::size_t s = 0; s < g.size() && !redundant; ++s) {
      if (s == t) continue;
      if (leads[s].term.pos != leads[t].term.pos || !leads[s].term.mon.divides(leads[t].term.mon))
        continue;
      // Break ties between equal leading terms by keeping the earlier.
      if (leads[s].term.mon == leads[t].term.mon && s > t) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(g[t]);
  }
  basis_ = std::move(minimal);

  // Tail-reduce each element against the others and normalize to monic.
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    std::vector<PRow> others;
    std::vector<Lead> other_leads;
    std::vector<std::vector<std::size_t>> other_by_pos(rank_);
    for (std::size_t s = 0; s < basis_.size(); ++s) {
      if (s == t) continue;
      others.push_back(basis_[s]);
      other_leads.push_back(lead_of(basis_[s]));
      other_by_pos[other_leads.back().term.pos].push_back(others.size() - 1);
    }
    PRow reduced = reduce_indexed(basis_[t], others, other_leads, other_by_pos);
    Lead lead = lead_of(reduced);
    basis_[t] = prow_mul_term(reduced, Monomial(), 1 / lead.coeff);
  }

  std::sort(basis_.begin(), basis_.end(), [this](const PRow& x, const PRow& y) {
    return cmp_terms(lead_of(x).term, lead_of(y).term) > 0;
  });
  for (const PRow& row : basis_) {
    basis_leads_.push_back(lead_of(row));
    basis_by_pos_.resize(rank_);
    basis_by_pos_[basis_leads_.back().term.pos].push_back(basis_leads_.size() - 1);
  }
  basis_by_pos_.resize(rank_);
}

int PModule::cmp_terms(const ModTerm& a, const ModTerm& b) const {
  int split = order_.elim_split >= 0 ? order_.elim_split : nvars_;
  if (order_.elim_split >= 0) {
    int c = mono_cmp(a.mon, b.mon, MonoOrderKind::DegRevLex, split, nvars_);
    if (c != 0) return c;
  }
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;  // lower index first
  return mono_cmp(a.mon, b.mon, order_.term_order, 0, split);
}

std::optional<ModTerm> PModule::leading_term(const PRow& f) const {
  std::optional<ModTerm> best;
  for (int pos = 0; pos < rank_; ++pos) {
    for (const auto& [m, c] : f[pos].terms()) {
      ModTerm t{pos, m};
      if (!best || cmp_terms(t, *best) > 0) best = t;
    }
  }
  return best;
}

PModule::Lead PModule::lead_of(const PRow& f) const {
  auto term = leading_term(f);
  if (!term) throw std::logic_error("lead_of on a zero row");
  return Lead{*term, f[term->pos].coeff(term->mon)};
}

PRow PModule::reduce_indexed(const PRow& f, const std::vector<PRow>& rows,
                             const std::vector<Lead>& leads,
                             const std::vector<std::vector<std::size_t>>& by_pos) const {
  PRow work = f;
  PRow rem = prow_zero(nvars_, rank_);
  // The pair (work, rem) is rescaled jointly when contents grow; the
  // accumulated factor is divided back out at the end, so the returned
  // remainder is the exact normal form of f.
  Rat scale_acc(1);
  int steps_since_rescale = 0;
  auto rescale = [&]() {
    mpz_class num_gcd(0), den_lcm(1);
    for (const PRow* part : {&work, &rem}) {
      for (const Poly& p : *part) {
        for (const auto& [m, c] : p.terms()) {
          num_gcd = gcd(num_gcd, c.get_num());
          den_lcm = lcm(den_lcm, c.get_den());
        }
      }
    }
    if (num_gcd == 0) return;
    Rat sigma(den_lcm, num_gcd);
    sigma.canonicalize();
    if (sigma == 1) return;
    for (Poly& p : work) p = p * sigma;
    for (Poly& p : rem) p = p * sigma;
    scale_acc *= sigma;
  };
  auto row_terms = [](const PRow& row) {
    std::size_t n = 0;
    for (const Poly& p : row) n += p.terms().size();
    return n;
  };
  while (true) {
    auto lead = leading_term(work);
    if (!lead) break;
    const Rat lc = work[lead->pos].coeff(lead->mon);
    // Among the dividing reducers prefer the sparsest row; ties go to the
    // earliest, keeping reductions deterministic.
    std::size_t chosen = rows.size();
    std::size_t chosen_terms = 0;
    for (std::size_t idx : by_pos[lead->pos]) {
      const Lead& lg = leads[idx];
      if (!lg.term.mon.divides(lead->mon)) continue;
      std::size_t nterms = row_terms(rows[idx]);
      if (chosen == rows.size() || nterms < chosen_terms) {
        chosen = idx;
        chosen_terms = nterms;
      }
    }
    if (chosen != rows.size()) {
      const Lead& lg = leads[chosen];
      prow_sub_inplace(work,
                       prow_mul_term(rows[chosen], lead->mon.divide(lg.term.mon), lc / lg.coeff));
    } else {
      rem[lead->pos].add_term(lead->mon, lc);
      work[lead->pos].add_term(lead->mon, -lc);
    }
    if (++steps_since_rescale >= 8) {
      rescale();
      steps_since_rescale = 0;
    }
  }
  if (scale_acc != 1) {
    Rat inv = 1 / scale_acc;
    for (Poly& p : rem) p = p * inv;
  }
  return rem;
}

PRow PModule::normal_form(const PRow& f) const {
  if (static_cast<int>(f.size()) != rank_) throw std::invalid_argument("row rank mismatch");
  for (const Poly& p : f)
    if (p.nvars() != nvars_) throw std::invalid_argument("row variable count mismatch");
  return reduce_indexed(f, basis_, basis_leads_, basis_by_pos_);
}

bool PModule::member(const PRow& f) const { return prow_is_zero(normal_form(f)); }

bool PModule::is_full() const {
  for (int t = 0; t < rank_; ++t) {
    PRow e = prow_zero(nvars_, rank_);
    e[t] = Poly::constant(nvars_, Rat(1));
    if (!member(e)) return false;
  }
  return true;
}

PModule intersect(const PModule& a, const PModule& b) {
  if (a.nvars() != b.nvars() || a.rank() != b.rank())
    throw std::invalid_argument("module shape mismatch");
  const int nv = a.nvars();
  const int rank = a.rank();
  // Tagged sum: t A + (1 - t) B with a fresh dominant variable t;
  // elements free of t generate the intersection.
  const int tv = nv;
  std::vector<PRow> gens;
  Poly t = Poly::variable(nv + 1, tv);
  Poly one_minus_t = Poly::constant(nv + 1, Rat(1)) - t;
  for (const PRow& g : a.basis()) {
    PRow row;
    for (const Poly& p : g) row.push_back(p.with_nvars(nv + 1) * t);
    gens.push_back(std::move(row));
  }
  for (const PRow& g : b.basis()) {
    PRow row;
    for (const Poly& p : g) row.push_back(p.with_nvars(nv + 1) * one_minus_t);
    gens.push_back(std::move(row));
  }
  ModuleOrder elim{a.order().term_order, nv};
  PModule sum(nv + 1, rank, std::move(gens), elim);
  std::vector<PRow> result;
  for (const PRow& g : sum.basis()) {
    bool free_of_t = true;
    for (const Poly& p : g) {
      for (const auto& [m, c] : p.terms()) {
        if (m.exponent(tv) > 0) free_of_t = false;
      }
    }
    if (!free_of_t) continue;
    PRow row;
    for (const Poly& p : g) row.push_back(p.with_nvars(nv));
    result.push_back(std::move(row));
  }
  return PModule(nv, rank, std::move(result), a.order());
}

namespace {

// {a in R : a e_pos in N} via intersecting N with the free row R e_pos.
PModule colon_by_unit(const PModule& n, int pos) {
  PRow e = prow_zero(n.nvars(), n.rank());
  e[pos] = Poly::constant(n.nvars(), Rat(1));
  PModule line(n.nvars(), n.rank(), {e}, n.order());
  PModule meet = intersect(n, line);
  std::vector<PRow> gens;
  for (const PRow& g : meet.basis()) gens.push_back({g[pos]});
  return PModule(n.nvars(), 1, std::move(gens), n.order());
}

}  // namespace

PModule colon_module_ideal(const PModule& n) {
  PModule acc = colon_by_unit(n, 0);
  for (int pos = 1; pos < n.rank(); ++pos) {
    if (acc.is_zero_module()) break;
    acc = intersect(acc, colon_by_unit(n, pos));
  }
  return acc;
}

PRow prow_zero(int nvars, int rank) { return PRow(rank, Poly(nvars)); }

QRow qrow_zero(int nvars, int rank) { return QRow(rank, QPoly(nvars)); }

bool qrow_is_zero(const QRow& f) {
  for (const QPoly& p : f)
    if (!p.is_zero()) return false;
  return true;
}

QRow qrow_add(QRow a, const QRow& b) {
  if (a.size() != b.size()) throw std::invalid_argument("row rank mismatch");
  for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
  return a;
}

QRow qrow_sub(QRow a, const QRow& b) {
  if (a.size() != b.size()) throw std::invalid_argument("row rank mismatch");
  for (std::size_t t = 0; t < a.size(); ++t) a[t] -= b[t];
  return a;
}

QRow qrow_left_mul(const QPoly& c, const QRow& f) {
  QRow out;
  out.reserve(f.size());
  for (const QPoly& p : f) out.push_back(c * p);
  return out;
}

QuatVec qrow_evaluate(const QRow& f, std::span<const Rat> point) {
  QuatVec out;
  out.reserve(f.size());
  for (const QPoly& p : f) out.push_back(p.evaluate(point));
  return out;
}

QRow qrow_from_prow(const PRow& f) {
  QRow out;
  out.reserve(f.size());
  for (const Poly& p : f) out.push_back(QPoly::from_poly(p));
  return out;
}

Quaternion pairing_at(const QRow& f, std::span<const Rat> point, const QuatVec& v) {
  if (f.size() != v.size()) throw std::invalid_argument("pairing rank mismatch");
  Quaternion acc;
  for (std::size_t t = 0; t < f.size(); ++t) acc += f[t].evaluate(point) * v[t];
  return acc;
}

PRow unfold_qrow(const QRow& f) {
  PRow out;
  out.reserve(4 * f.size());
  for (const QPoly& p : f)
    for (int s = 1; s <= 4; ++s) out.push_back(p.comp(s));
  return out;
}

QRow fold_prow(const PRow& f) {
  if (f.size() % 4 != 0) throw std::invalid_argument("rank is not a multiple of 4");
  QRow out;
  out.reserve(f.size() / 4);
  for (std::size_t t = 0; t < f.size(); t += 4)
    out.push_back(QPoly(f[t], f[t + 1], f[t + 2], f[t + 3]));
  return out;
}

std::vector<QRow> hermitian_row_combinations(const std::vector<QRow>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  const std::size_t rank = tuple.front().size();
  const int nvars = tuple.front().empty() ? 0 : tuple.front().front().nvars();
  std::vector<QRow> out;
  out.reserve(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    QRow acc = qrow_zero(nvars, static_cast<int>(rank));
    for (const QRow& f : tuple) {
      if (f.size() != rank) throw std::invalid_argument("tuple rank mismatch");
      acc = qrow_add(std::move(acc), qrow_left_mul(f[j].involute(), f));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

std::vector<PRow> restrict_generators(RingTag ring, int rank, const std::vector<QRow>& gens) {
  std::vector<PRow> out;
  if (ring == RingTag::Rational) {
    for (const QRow& g : gens) {
      PRow row;
      row.reserve(rank);
      for (const QPoly& p : g) row.push_back(p.comp(1));
      out.push_back(std::move(row));
    }
    return out;
  }
  // Close under left multiplication by 1, i, j, k, then unfold.
  for (const QRow& g : gens) {
    for (int u = 1; u <= 4; ++u) {
      QPoly unit = QPoly::constant(g.empty() ? 0 : g.front().nvars(),
                                   Quaternion::unit(u));
      out.push_back(unfold_qrow(qrow_left_mul(unit, g)));
    }
  }
  return out;
}

}  // namespace

Submodule::Submodule(RingTag ring, int nvars, int rank, std::vector<QRow> generators,
                     MonoOrderKind term_order)
    : ring_(ring),
      nvars_(nvars),
      rank_(rank),
      term_order_(term_order),
      gens_(std::move(generators)),
      restricted_(nvars, ring == RingTag::Rational ? rank : 4 * rank,
                  restrict_generators(ring, rank, validate(gens_, ring, nvars, rank)),
                  ModuleOrder{term_order, -1}) {}

const std::vector<QRow>& Submodule::validate(const std::vector<QRow>& gens, RingTag ring,
                                             int nvars, int rank) {
  for (const QRow& g : gens) {
    if (static_cast<int>(g.size()) != rank) throw std::invalid_argument("generator rank mismatch");
    for (const QPoly& p : g) {
      if (p.nvars() != nvars) throw std::invalid_argument("generator variable count mismatch");
      if (ring == RingTag::Rational && !p.is_rational())
        throw std::invalid_argument("quaternionic generator in a rational module");
    }
  }
  return gens;
}

Submodule Submodule::full(RingTag ring, int nvars, int rank, MonoOrderKind term_order) {
  std::vector<QRow> gens;
  for (int t = 0; t < rank; ++t) {
    QRow e = qrow_zero(nvars, rank);
    e[t] = QPoly::constant(nvars, Quaternion::one());
    gens.push_back(std::move(e));
  }
  return Submodule(ring, nvars, rank, std::move(gens), term_order);
}

bool Submodule::member(const QRow& f) const {
  if (static_cast<int>(f.size()) != rank_) throw std::invalid_argument("row rank mismatch");
  for (const QPoly& p : f) {
    if (p.nvars() != nvars_) throw std::invalid_argument("row variable count mismatch");
    if (ring_ == RingTag::Rational && !p.is_rational())
      throw std::invalid_argument("quaternionic row tested against a rational module");
  }
  if (ring_ == RingTag::Rational) {
    PRow row;
    row.reserve(rank_);
    for (const QPoly& p : f) row.push_back(p.comp(1));
    return restricted_.member(row);
  }
  return restricted_.member(unfold_qrow(f));
}

std::vector<QRow> Submodule::canonical_basis() const {
  std::vector<QRow> out;
  for (const PRow& g : restricted_.basis()) {
    out.push_back(ring_ == RingTag::Rational ? qrow_from_prow(g) : fold_prow(g));
  }
  return out;
}

Submodule Submodule::extended(const std::vector<QRow>& extra) const {
  std::vector<QRow> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Submodule(ring_, nvars_, rank_, std::move(gens), term_order_);
}

bool Submodule::contains(const Submodule& other) const {
  for (const QRow& g : other.canonical_basis())
    if (!member(g)) return false;
  return true;
}

bool Submodule::same_module(const Submodule& other) const {
  return contains(other) && other.contains(*this);
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.ring() != b.ring() || a.nvars() != b.nvars() || a.rank() != b.rank())
    throw std::invalid_argument("module shape mismatch");
  PModule meet = intersect(a.restricted(), b.restricted());
  std::vector<QRow> gens;
  for (const PRow& g : meet.basis())
    gens.push_back(a.ring() == RingTag::Rational ? qrow_from_prow(g) : fold_prow(g));
  return Submodule(a.ring(), a.nvars(), a.rank(), std::move(gens), a.term_order());
}

Submodule colon_module(const Submodule& n) {
  PModule ideal = colon_module_ideal(n.restricted());
  std::vector<QRow> gens;
  for (const PRow& g : ideal.basis()) gens.push_back(qrow_from_prow(g));
  return Submodule(n.ring(), n.nvars(), 1, std::move(gens), n.term_order());
}

Submodule c_module(RingTag ring, int nvars, int rank, const PointedFiber& fiber,
                   MonoOrderKind term_order) {
  if (static_cast<int>(fiber.point.size()) != nvars)
    throw std::invalid_argument("point dimension mismatch");
  if (static_cast<int>(fiber.vec.size()) != rank)
    throw std::invalid_argument("pairing vector rank mismatch");
  bool all_zero = true;
  for (const Quaternion& q : fiber.vec) {
    if (!q.is_zero()) all_zero = false;
    if (ring == RingTag::Rational && !q.is_real())
      throw std::invalid_argument("quaternionic pairing vector over a rational ring");
  }
  if (all_zero) throw std::invalid_argument("pairing vector must be nonzero");

  std::vector<QRow> gens;
  for (int i = 0; i < nvars; ++i) {
    QPoly shifted = QPoly::variable(nvars, i) -
                    QPoly::constant(nvars, Quaternion(fiber.point[i]));
    for (int j = 0; j < rank; ++j) {
      QRow row = qrow_zero(nvars, rank);
      row[j] = shifted;
      gens.push_back(std::move(row));
    }
  }
  // Constant rows w with <w, v> = 0: the left annihilator of the column.
  QuatSubspace vline(Side::Right, rank, {fiber.vec});
  QuatSubspace ann = annihilator(vline);
  for (const QuatVec& w : ann.basis()) {
    QRow row;
    row.reserve(rank);
    for (const Quaternion& q : w) row.push_back(QPoly::constant(nvars, q));
    gens.push_back(std::move(row));
  }
  return Submodule(ring, nvars, rank, std::move(gens), term_order);
}

Submodule k_module(const Submodule& n, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != n.nvars())
    throw std::invalid_argument("point dimension mismatch");
  // Evaluate the generators; their left span is the fiber image of N.
  std::vector<QuatVec> evals;
  for (const QRow& g : n.generators()) evals.push_back(qrow_evaluate(g, point));
  QuatSubspace span(Side::Left, n.rank(), evals);

  std::vector<QRow> gens;
  if (span.dim() == static_cast<std::size_t>(n.rank())) {
    return Submodule::full(n.ring(), n.nvars(), n.rank(), n.term_order());
  }
  for (int i = 0; i < n.nvars(); ++i) {
    QPoly shifted = QPoly::variable(n.nvars(), i) -
                    QPoly::constant(n.nvars(), Quaternion(Rat(point[i])));
    for (int j = 0; j < n.rank(); ++j) {
      QRow row = qrow_zero(n.nvars(), n.rank());
      row[j] = shifted;
      gens.push_back(std::move(row));
    }
  }
  for (const QuatVec& w : span.basis()) {
    QRow row;
    row.reserve(n.rank());
    for (const Quaternion& q : w) row.push_back(QPoly::constant(n.nvars(), q));
    gens.push_back(std::move(row));
  }
  return Submodule(n.ring(), n.nvars(), n.rank(), std::move(gens), n.term_order());
}

const PModule& restrict_scalars(const Submodule& n) { return n.restricted(); }

WitnessReport realness_witness_check(const std::vector<QRow>& tuple, const Submodule& n) {
  WitnessReport report;
  std::vector<QRow> herms = hermitian_row_combinations(tuple);
  bool hypothesis = true;
  for (const QRow& h : herms) {
    bool in = n.member(h);
    report.hermitian_in_module.push_back(in);
    hypothesis = hypothesis && in;
  }
  bool all_in = true;
  for (const QRow& f : tuple) {
    bool in = n.member(f);
    report.tuple_in_module.push_back(in);
    all_in = all_in && in;
  }
  if (!hypothesis) {
    report.verdict = WitnessVerdict::Inapplicable;
  } else {
    report.verdict = all_in ? WitnessVerdict::Consistent : WitnessVerdict::RealViolated;
  }
  return report;
}

}  // namespace qnss
