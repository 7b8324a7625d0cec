#include "autoeq/cover.hpp"

#include <algorithm>
#include <sstream>

#include "autoeq/errors.hpp"

namespace autoeq {

namespace {

GradedDims sum(const GradedDims& a, const GradedDims& b) {
  return GradedDims::from_series(a.series() + b.series());
}

std::string tau_prefix(int power) { return power == 0 ? "" : "tau_*"; }

std::string shift_suffix(int shift) { return shift == 0 ? "" : "[" + std::to_string(shift) + "]"; }

}  // namespace

void CoverDeclarations::add_generator(FormalGenerator g, bool tau_invariant) {
  const auto name = g.name();
  if (!generators_.emplace(name, std::move(g)).second)
    throw DomainError("cover generator " + name + " declared twice");
  if (has_quotient_object(name)) throw DomainError(name + " is already a quotient companion");
  if (tau_invariant) tau_invariant_.insert(name);
}

void CoverDeclarations::declare_orthogonal(const std::string& e, const std::string& f) {
  if (!has(e)) throw DomainError("unknown cover generator " + e);
  if (!has(f)) throw DomainError("unknown cover generator " + f);
  if (e == f) throw DomainError("a simple object cannot lie in its own orthogonal: " + e);
  orthogonal_.insert(std::minmax(e, f));
}

void CoverDeclarations::declare_tau_orthogonal(const std::string& g) {
  if (!has(g)) throw DomainError("unknown cover generator " + g);
  if (is_tau_invariant(g))
    throw DomainError(g + " is tau-invariant, so tau_* " + g + " cannot be orthogonal to it");
  tau_orthogonal_.insert(g);
}

void CoverDeclarations::declare_quotient_companion(const std::string& c, const std::string& e) {
  if (!has(e)) throw DomainError("unknown cover generator " + e);
  if (has(c)) throw DomainError(c + " is a cover generator, not a quotient object");
  quotient_companions_.emplace(c, e);
}

const FormalGenerator& CoverDeclarations::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw DomainError("unknown cover generator " + name);
  return it->second;
}

std::vector<std::string> CoverDeclarations::generator_names() const {
  std::vector<std::string> out;
  for (const auto& [name, g] : generators_) out.push_back(name);
  return out;
}

bool CoverDeclarations::is_orthogonal(const std::string& e, const std::string& f) const {
  return orthogonal_.count(std::minmax(e, f)) > 0;
}

bool CoverDeclarations::is_quotient_companion(const std::string& c, const std::string& e) const {
  return quotient_companions_.count({c, e}) > 0;
}

std::vector<std::string> CoverDeclarations::orthogonal_companions(const std::string& e) const {
  std::vector<std::string> out;
  for (const auto& [a, b] : orthogonal_) {
    if (a == e) out.push_back(b);
    if (b == e) out.push_back(a);
  }
  return out;
}

std::vector<std::string> CoverDeclarations::quotient_companions(const std::string& e) const {
  std::vector<std::string> out;
  for (const auto& [c, of] : quotient_companions_)
    if (of == e) out.push_back(c);
  return out;
}

bool CoverDeclarations::has_quotient_object(const std::string& c) const {
  return std::any_of(quotient_companions_.begin(), quotient_companions_.end(),
                     [&](const auto& p) { return p.first == c; });
}

CoverDeclarations CoverDeclarations::standard() {
  CoverDeclarations d;
  d.add_generator(FormalGenerator::spherical("E~"), true);
  d.add_generator(FormalGenerator::spherical("F~"), false);
  d.declare_orthogonal("E~", "F~");
  d.declare_tau_orthogonal("F~");
  d.declare_quotient_companion("C", "E~");
  return d;
}

std::string CoverSummand::to_string() const { return tau_prefix(tau_power) + gen + shift_suffix(shift); }

CoverObject::CoverObject(const CoverDeclarations& decls, std::vector<CoverSummand> summands)
    : summands_(std::move(summands)) {
  for (auto& s : summands_) {
    decls.generator(s.gen);
    s.tau_power = ((s.tau_power % 2) + 2) % 2;
    if (decls.is_tau_invariant(s.gen)) s.tau_power = 0;
  }
  std::sort(summands_.begin(), summands_.end());
}

CoverObject CoverObject::single(const CoverDeclarations& decls, const std::string& gen, int tau_power,
                                int shift) {
  return CoverObject(decls, {{gen, tau_power, shift}});
}

CoverObject CoverObject::tau(const CoverDeclarations& decls) const {
  auto out = summands_;
  for (auto& s : out) s.tau_power += 1;
  return CoverObject(decls, std::move(out));
}

CoverObject CoverObject::operator+(const CoverObject& other) const {
  CoverObject out = *this;
  out.summands_.insert(out.summands_.end(), other.summands_.begin(), other.summands_.end());
  std::sort(out.summands_.begin(), out.summands_.end());
  return out;
}

std::string CoverObject::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) out += (i ? " + " : "") + summands_[i].to_string();
  return out;
}

std::string QuotientSummand::to_string() const {
  if (kind == Kind::push) return "pi_*" + name + shift_suffix(shift);
  return name + (omega_power ? "(x)w" : "") + shift_suffix(shift);
}

QuotientObject::QuotientObject(std::vector<QuotientSummand> summands) : summands_(std::move(summands)) {
  for (auto& s : summands_) {
    s.omega_power = s.kind == QuotientSummand::Kind::push ? 0 : (((s.omega_power % 2) + 2) % 2);
  }
  std::sort(summands_.begin(), summands_.end());
}

QuotientObject QuotientObject::pushforward(const CoverObject& a) {
  std::vector<QuotientSummand> out;
  for (const auto& s : a.summands()) out.push_back(QuotientSummand::push(s.gen, s.shift));
  return QuotientObject(std::move(out));
}

QuotientObject QuotientObject::companion_pair(const std::string& c, int shift) {
  return QuotientObject({QuotientSummand::free(c, 0, shift), QuotientSummand::free(c, 1, shift)});
}

bool QuotientObject::is_pushforward() const {
  return std::all_of(summands_.begin(), summands_.end(),
                     [](const auto& s) { return s.kind == QuotientSummand::Kind::push; });
}

QuotientObject QuotientObject::twist_by_omega() const {
  auto out = summands_;
  for (auto& s : out)
    if (s.kind == QuotientSummand::Kind::free) s.omega_power ^= 1;
  return QuotientObject(std::move(out));
}

QuotientObject QuotientObject::shifted(int k) const {
  auto out = summands_;
  for (auto& s : out) s.shift += k;
  return QuotientObject(std::move(out));
}

std::string QuotientObject::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) out += (i ? " + " : "") + summands_[i].to_string();
  return out;
}

CoverObject pullback_pushforward(const CoverDeclarations& decls, const CoverObject& a) {
  return a + a.tau(decls);
}

GradedDims cover_hom(const CoverDeclarations& decls, const CoverSummand& a, const CoverSummand& b) {
  decls.generator(a.gen);
  decls.generator(b.gen);
  // Hom(tau^i a, tau^j b) = Hom(a, tau^{j-i} b).
  int t = (((b.tau_power - a.tau_power) % 2) + 2) % 2;
  if (decls.is_tau_invariant(b.gen)) t = 0;
  if (a.gen == b.gen) {
    if (t == 0) return shift(decls.generator(a.gen).endo(), b.shift - a.shift);
    if (decls.is_tau_orthogonal(a.gen)) return {};
    throw ClosureError("Hom(" + a.to_string() + ", " + b.to_string() + "): relation of " + a.gen +
                       " and its tau-translate not declared");
  }
  if (decls.is_orthogonal(a.gen, b.gen)) {
    if (t == 0 || decls.is_tau_invariant(a.gen)) return {};
  }
  throw ClosureError("Hom(" + a.to_string() + ", " + b.to_string() + ") between undeclared generators");
}

GradedDims cover_hom(const CoverDeclarations& decls, const CoverObject& a, const CoverObject& b) {
  GradedDims out;
  for (const auto& x : a.summands())
    for (const auto& y : b.summands()) out = sum(out, cover_hom(decls, x, y));
  return out;
}

GradedDims hom_on_quotient(const CoverDeclarations& decls, const QuotientObject& a,
                           const QuotientObject& b) {
  if (!a.is_pushforward() || !b.is_pushforward())
    throw ClosureError("Hom(" + a.to_string() + ", " + b.to_string() +
                       ") needs both arguments to be pushforwards");
  std::vector<CoverSummand> lifted_a;
  std::vector<CoverSummand> lifted_b;
  for (const auto& s : a.summands()) lifted_a.push_back({s.name, 0, s.shift});
  for (const auto& s : b.summands()) lifted_b.push_back({s.name, 0, s.shift});
  return cover_hom(decls, pullback_pushforward(decls, CoverObject(decls, lifted_a)),
                   CoverObject(decls, lifted_b));
}

std::string CoverFunctor::to_string() const {
  switch (kind) {
    case Kind::identity: return "Id";
    case Kind::twist: return "T[" + gen + "]";
    case Kind::deck: return "tau_*";
  }
  return "?";
}

std::string DescendedFunctor::to_string() const {
  const bool twist = base.kind == CoverFunctor::Kind::twist;
  const std::string phi = twist ? "Phi(" + base.to_string() + ")" : "Id";
  if (omega_power == 0) return phi;
  return twist ? phi + " o M_w" : "M_w";
}

DescentPair descend(const CoverDeclarations& decls, const CoverFunctor& functor) {
  CoverFunctor base = functor;
  switch (functor.kind) {
    case CoverFunctor::Kind::identity:
      break;
    case CoverFunctor::Kind::deck:
      // pi_* tau_* = pi_*
      base = CoverFunctor::identity();
      break;
    case CoverFunctor::Kind::twist:
      decls.generator(functor.gen);
      // tau_* T_E tau_*^{-1} = T_{tau_* E}; equivariant exactly when tau_* E = E.
      if (!decls.is_tau_invariant(functor.gen))
        throw DomainError(functor.to_string() + " is not equivariant: " + functor.gen +
                          " is not tau-invariant");
      break;
  }
  return {functor, base, {base, 0}, {base, 1}};
}

DescendedImage apply_descended(const CoverDeclarations& decls, const DescendedFunctor& phi,
                               const QuotientObject& a) {
  // Phi o M_w: the omega twist acts first.
  const QuotientObject input = phi.omega_power ? a.twist_by_omega() : a;
  DescendedImage image;
  if (phi.base.kind != CoverFunctor::Kind::twist) {
    image.object = input;
    return image;
  }
  const auto& e = phi.base.gen;
  const int value = 1 - decls.generator(e).dim();
  std::vector<QuotientSummand> out;
  const auto& summands = input.summands();
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    if (s.kind == QuotientSummand::Kind::push) {
      if (s.name == e) {
        out.push_back(QuotientSummand::push(s.name, s.shift + value));
      } else if (decls.is_orthogonal(e, s.name)) {
        out.push_back(s);
      } else {
        throw ClosureError(phi.to_string() + " on " + s.to_string() + ": " + s.name +
                           " is neither " + e + " nor declared in its orthogonal");
      }
      continue;
    }
    if (!decls.is_quotient_companion(s.name, e))
      throw ClosureError(phi.to_string() + " on " + s.to_string() + ": " + s.name +
                         " is not declared in (pi_*" + e + ")^perp");
    const auto partner = QuotientSummand::free(s.name, s.omega_power ^ 1, s.shift);
    const bool paired = i + 1 < summands.size() && summands[i + 1] == partner && s.omega_power == 0;
    if (!paired)
      throw ClosureError(phi.to_string() + " on " + s.to_string() + ": only C (+) C(x)w lies in pi_*(" +
                         e + "^perp)");
    out.push_back(s);
    out.push_back(partner);
    image.ambiguities.push_back(phi.to_string() + "(" + s.name + shift_suffix(s.shift) + ") = " + s.name +
                                " or " + s.name + "(x)w");
    ++i;
  }
  image.object = QuotientObject(std::move(out));
  return image;
}

int descended_box_shift(const CoverDeclarations& decls, const DescendedFunctor& phi,
                        const QuotientObject& factor, int n) {
  if (n < 1) throw DomainError("box power must be >= 1");
  const auto image = apply_descended(decls, phi, factor);
  // Single summand or companion pair: every summand moves by the same amount.
  const auto& before = factor.summands();
  const auto& after = image.object.summands();
  if (before.empty()) throw DomainError("box power of the zero object");
  int delta = after.front().shift - before.front().shift;
  for (std::size_t i = 0; i < before.size(); ++i)
    if (after[i].shift - before[i].shift != delta)
      throw ClosureError(phi.to_string() + " shifts the summands of " + factor.to_string() +
                         " by different amounts");
  return n * delta;
}

bool LiftDescendTable::k_to_one() const {
  auto all_k = [&](const std::vector<std::size_t>& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](std::size_t s) { return s == static_cast<std::size_t>(order); });
  };
  return all_k(lift_fibre_sizes) && all_k(descend_fibre_sizes) && lift_descend_loses_deck_orbit &&
         descend_lift_loses_omega_orbit;
}

namespace {

std::string power_label(const std::string& base, const std::string& generator, int power) {
  std::string g;
  if (power == 1) g = generator;
  if (power > 1) g = generator + "^" + std::to_string(power);
  if (base == "Id") return g.empty() ? "Id" : g;
  return g.empty() ? base : base + " o " + g;
}

}  // namespace

LiftDescendTable lift_descend_bookkeeping(int order) {
  if (order < 1) throw DomainError("order of omega must be >= 1");
  LiftDescendTable t;
  t.order = order;
  const std::vector<std::string> bases{"Id", "Phi"};
  const std::vector<std::string> lifted{"Id", "Phi~"};

  // Downstairs elements (b, M_w^i), upstairs elements (b, tau_*^j). Lifting
  // forgets i and remembers the coset of <tau_*>; descending forgets j and
  // remembers the coset of <M_w>.
  using Element = std::pair<std::size_t, int>;
  std::map<std::size_t, std::vector<Element>> lift_fibres;
  std::map<std::size_t, std::vector<Element>> descend_fibres;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    for (int i = 0; i < order; ++i) {
      lift_fibres[b].push_back({b, i});
      LiftRow row;
      row.functor = power_label(bases[b], "M_w", i);
      for (int j = 0; j < order; ++j) row.lifts.push_back(power_label(lifted[b], "tau_*", j));
      t.rows.push_back(std::move(row));
    }
    for (int j = 0; j < order; ++j) descend_fibres[b].push_back({b, j});
  }
  for (const auto& [b, f] : lift_fibres) t.lift_fibre_sizes.push_back(f.size());
  for (const auto& [b, f] : descend_fibres) t.descend_fibre_sizes.push_back(f.size());

  // lift o descend sends (b, tau^j) to the coset {(b, tau^j') : j'}, which is
  // exactly its <tau_*>-orbit; likewise descend o lift on <M_w>-orbits.
  t.lift_descend_loses_deck_orbit = true;
  t.descend_lift_loses_omega_orbit = true;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    for (int j = 0; j < order; ++j) {
      std::set<Element> orbit;
      for (int g = 0; g < order; ++g) orbit.insert({b, (j + g) % order});
      std::set<Element> roundtrip(descend_fibres[b].begin(), descend_fibres[b].end());
      t.lift_descend_loses_deck_orbit = t.lift_descend_loses_deck_orbit && orbit == roundtrip;
      std::set<Element> down(lift_fibres[b].begin(), lift_fibres[b].end());
      t.descend_lift_loses_omega_orbit = t.descend_lift_loses_omega_orbit && orbit == down;
    }
  }
  const std::string k = std::to_string(order);
  t.summary = {"Aut D(Z) --lift--> Aut_eq D(Z~) / G,  G = <tau_*>,  " + k + ":1",
               "Aut_eq D(Z~) --descend--> Aut D(Z) / G,  G = <M_w>,  " + k + ":1"};
  return t;
}

}  // namespace autoeq
